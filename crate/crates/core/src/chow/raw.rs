use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A monomial `x1^e1 * x2^e2` in the two Picard generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub e1: u32,
    pub e2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial::new(0, 0);

    pub const fn new(e1: u32, e2: u32) -> Self {
        Monomial { e1, e2 }
    }

    pub fn codimension(self) -> usize {
        (self.e1 + self.e2) as usize
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.e1 + other.e1, self.e2 + other.e2)
    }

    /// Renders the monomial with the given generator names, e.g. `h1^2*h2`.
    pub fn render(self, names: [&str; 2]) -> String {
        let mut parts = Vec::new();
        for (exp, name) in [(self.e1, names[0]), (self.e2, names[1])] {
            match exp {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A formal integer combination of monomials, before any relation is applied.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl RawPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    /// The generator `x1` (`index = 1`) or `x2` (`index = 2`).
    pub fn generator(index: u8) -> Self {
        match index {
            1 => Self::term(Monomial::new(1, 0), 1),
            2 => Self::term(Monomial::new(0, 1), 1),
            _ => panic!("generator index must be 1 or 2, got {index}"),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        RawPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product, discarding every monomial of total degree above `max_degree`.
    ///
    /// On a variety of dimension `n` all monomials of degree `> n` lie in the
    /// relation ideal, so truncating at `n` never changes the normal form.
    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let m = a.times(b);
                if m.codimension() <= max_degree {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn pow_truncated(&self, exp: u32, max_degree: usize) -> Self {
        let mut result = Self::constant(BigInt::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_truncated(&base, max_degree);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_truncated(&base, max_degree);
            }
        }
        result
    }
}

impl fmt::Display for RawPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| format!("{c}*{}", m.render(["x1", "x2"])))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let x = RawPolynomial::generator(1);
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn binomial_power() {
        let s = RawPolynomial::generator(1).add(&RawPolynomial::generator(2));
        let cube = s.pow_truncated(3, 10);
        let coeffs: Vec<i64> = [(3, 0), (2, 1), (1, 2), (0, 3)]
            .iter()
            .map(|&(a, b)| {
                cube.terms()
                    .find(|(m, _)| *m == Monomial::new(a, b))
                    .map(|(_, c)| i64::try_from(c.clone()).unwrap())
                    .unwrap()
            })
            .collect();
        assert_eq!(coeffs, vec![1, 3, 3, 1]);
    }

    #[test]
    fn truncation_drops_high_degree() {
        let x = RawPolynomial::generator(1);
        assert!(x.pow_truncated(4, 3).is_zero());
        assert!(!x.pow_truncated(3, 3).is_zero());
    }

    #[test]
    fn renders_monomials() {
        assert_eq!(Monomial::new(2, 1).render(["h1", "h2"]), "h1^2*h2");
        assert_eq!(Monomial::ONE.render(["h1", "h2"]), "1");
        assert_eq!(Monomial::new(0, 1).render(["eta1", "eta2"]), "eta2");
    }
}
