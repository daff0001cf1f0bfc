//! Exact arithmetic in the Chow rings
//!
//! ```text
//! A(F)   = Z[h1,h2]  / (h1^2 - h1*h2 + h2^2, h1^3, h2^3)
//! A(Phi) = Z[eta1,eta2] / (eta1^3, eta2^3)
//! ```
//!
//! Classes are stored densely over a fixed monomial basis per variety. On `F`
//! the basis of `A^2` is `{h1^2, h2^2}`: the product `h1*h2` is always
//! rewritten as `h1^2 + h2^2`, and the point class is `h1^2*h2`.

mod parse;
mod raw;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

pub use parse::{parse_class, parse_raw};
pub use raw::{Monomial, RawPolynomial};

use crate::json::Big;
use crate::variety::Variety;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("cannot combine a class on {left} with a class on {right}")]
    VarietyMismatch { left: Variety, right: Variety },
    #[error("degree needs a class of codimension {expected} on {variety}, got `{class}`")]
    NotTopCodimension {
        variety: Variety,
        expected: usize,
        class: String,
    },
    #[error("restriction maps classes on Phi to F, got a class on {0}")]
    RestrictionSource(Variety),
    #[error("codimension-4 classes on Phi have no image on F")]
    RestrictionCodimension,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

const F_BASIS: [Monomial; 6] = [
    Monomial::new(0, 0),
    Monomial::new(1, 0),
    Monomial::new(0, 1),
    Monomial::new(2, 0),
    Monomial::new(0, 2),
    Monomial::new(2, 1),
];

const PHI_BASIS: [Monomial; 9] = [
    Monomial::new(0, 0),
    Monomial::new(1, 0),
    Monomial::new(0, 1),
    Monomial::new(2, 0),
    Monomial::new(1, 1),
    Monomial::new(0, 2),
    Monomial::new(2, 1),
    Monomial::new(1, 2),
    Monomial::new(2, 2),
];

/// The canonical monomial basis, graded by codimension and ordered
/// lexicographically (first generator first) inside each degree.
pub fn basis(variety: Variety) -> &'static [Monomial] {
    match variety {
        Variety::F => &F_BASIS,
        Variety::Phi => &PHI_BASIS,
    }
}

fn basis_index(variety: Variety, m: Monomial) -> Option<usize> {
    basis(variety).iter().position(|b| *b == m)
}

/// Normal form of a single monomial as `(basis index, coefficient)` pairs.
fn reduce_monomial(variety: Variety, m: Monomial) -> Vec<(usize, i64)> {
    match variety {
        Variety::Phi => {
            if m.e1 <= 2 && m.e2 <= 2 {
                vec![(basis_index(variety, m).expect("PHI_BASIS is the full box"), 1)]
            } else {
                Vec::new()
            }
        }
        Variety::F => match (m.e1, m.e2) {
            (_, _) if m.codimension() <= 1 => vec![(basis_index(variety, m).unwrap(), 1)],
            (2, 0) => vec![(3, 1)],
            (0, 2) => vec![(4, 1)],
            // h1*h2 = h1^2 + h2^2
            (1, 1) => vec![(3, 1), (4, 1)],
            // h1^2*h2 = h1*h2^2 = [pt]; h1^3 = h2^3 = 0
            (2, 1) | (1, 2) => vec![(5, 1)],
            _ => Vec::new(),
        },
    }
}

/// Reduces a formal polynomial modulo the relation ideal of `variety`.
pub fn normalize(raw: &RawPolynomial, variety: Variety) -> ChowClass {
    let mut out = ChowClass::zero(variety);
    for (m, c) in raw.terms() {
        for (idx, k) in reduce_monomial(variety, m) {
            out.coeffs[idx] += c * k;
        }
    }
    out
}

/// A cycle class with integer coefficients over the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    variety: Variety,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub fn zero(variety: Variety) -> Self {
        ChowClass {
            variety,
            coeffs: vec![BigInt::zero(); basis(variety).len()],
        }
    }

    pub fn one(variety: Variety) -> Self {
        Self::monomial(variety, Monomial::ONE, 1)
    }

    /// `h1`/`h2` on F, `eta1`/`eta2` on Phi.
    pub fn generator(variety: Variety, index: u8) -> Self {
        normalize(&RawPolynomial::generator(index), variety)
    }

    pub fn hyperplane(variety: Variety) -> Self {
        Self::generator(variety, 1) + Self::generator(variety, 2)
    }

    pub fn point(variety: Variety) -> Self {
        let top = *basis(variety).last().unwrap();
        Self::monomial(variety, top, 1)
    }

    /// `c * m`, reduced to normal form.
    pub fn monomial(variety: Variety, m: Monomial, c: impl Into<BigInt>) -> Self {
        normalize(&RawPolynomial::term(m, c), variety)
    }

    pub fn from_terms<C: Into<BigInt>>(variety: Variety, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut raw = RawPolynomial::zero();
        for (m, c) in terms {
            raw.add_term(m, c.into());
        }
        normalize(&raw, variety)
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient of a basis monomial; `None` when `m` is not in the basis.
    pub fn coefficient(&self, m: Monomial) -> Option<&BigInt> {
        basis_index(self.variety, m).map(|i| &self.coeffs[i])
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        basis(self.variety)
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c))
    }

    /// True when every nonzero term has codimension `d` (the zero class is
    /// homogeneous of every codimension).
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms().all(|(m, _)| m.codimension() == d)
    }

    /// The common codimension of all terms, `None` for zero or mixed classes.
    pub fn codimension(&self) -> Option<usize> {
        let mut it = self.terms().map(|(m, _)| m.codimension());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn check_same(&self, other: &Self) -> Result<(), ChowError> {
        if self.variety == other.variety {
            Ok(())
        } else {
            Err(ChowError::VarietyMismatch {
                left: self.variety,
                right: other.variety,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ChowError> {
        self.check_same(other)?;
        Ok(ChowClass {
            variety: self.variety,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ChowError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ChowError> {
        self.check_same(other)?;
        let basis = basis(self.variety);
        let mut out = ChowClass::zero(self.variety);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let prod = a * b;
                for (k, mult) in reduce_monomial(self.variety, basis[i].times(basis[j])) {
                    out.coeffs[k] += &prod * mult;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> Self {
        let factor = factor.into();
        ChowClass {
            variety: self.variety,
            coeffs: self.coeffs.iter().map(|c| c * &factor).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(ChowClass::one(self.variety), |acc, _| &acc * self)
    }

    /// Evaluation against the point class. Only classes of top codimension
    /// have a degree.
    pub fn degree(&self) -> Result<BigInt, ChowError> {
        let dim = self.variety.dimension();
        if !self.is_homogeneous_of(dim) {
            return Err(ChowError::NotTopCodimension {
                variety: self.variety,
                expected: dim,
                class: self.to_string(),
            });
        }
        Ok(self.coeffs.last().unwrap().clone())
    }

    /// Degree of a product of classes; panics unless the product is of top
    /// codimension. Internal shorthand for intersection numbers.
    pub(crate) fn intersect(factors: &[&ChowClass]) -> BigInt {
        let (first, rest) = factors.split_first().expect("at least one factor");
        let prod = rest.iter().fold((*first).clone(), |acc, f| &acc * *f);
        prod.degree().expect("intersection number of a top-codimension product")
    }

    /// Pullback along `F -> Phi`: `eta_i` goes to `h_i`.
    pub fn restrict(&self) -> Result<ChowClass, ChowError> {
        if self.variety != Variety::Phi {
            return Err(ChowError::RestrictionSource(self.variety));
        }
        if self.terms().any(|(m, _)| m.codimension() > Variety::F.dimension()) {
            return Err(ChowError::RestrictionCodimension);
        }
        Ok(ChowClass::from_terms(
            Variety::F,
            self.terms().map(|(m, c)| (m, c.clone())),
        ))
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass {
            variety: self.variety,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ChowClass> for &ChowClass {
            type Output = ChowClass;
            /// Panics on a variety mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &ChowClass) -> ChowClass {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<ChowClass> for ChowClass {
            type Output = ChowClass;
            fn $method(self, rhs: ChowClass) -> ChowClass {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ChowClass> for ChowClass {
            type Output = ChowClass;
            fn $method(self, rhs: &ChowClass) -> ChowClass {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.variety.generator_names();
        let mut first = true;
        for (m, c) in self.terms() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&m.render(names))?;
            } else {
                write!(f, "{abs}*{}", m.render(names))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct Terms<'a>(&'a ChowClass);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let names = self.0.variety.generator_names();
        let terms: Vec<_> = self.0.terms().collect();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (m, c) in terms {
            seq.serialize_element(&Term {
                monomial: m.render(names),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

struct Term<'a> {
    monomial: String,
    coeff: &'a BigInt,
}

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 2)?;
        st.serialize_field("monomial", &self.monomial)?;
        st.serialize_field("coeff", &Big(self.coeff))?;
        st.end()
    }
}

/// `{"variety": "F", "terms": [{"monomial": "h1^2", "coeff": 3}, ...]}`
impl Serialize for ChowClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ChowClass", 2)?;
        st.serialize_field("variety", &self.variety)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

/// The class as a flat `{monomial: coeff}` object in basis order.
pub struct TermMap<'a>(pub &'a ChowClass);

impl Serialize for TermMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let names = self.0.variety.generator_names();
        let terms: Vec<_> = self.0.terms().collect();
        let mut map = serializer.serialize_map(Some(terms.len()))?;
        for (m, c) in terms {
            map.serialize_entry(&m.render(names), &Big(c))?;
        }
        map.end()
    }
}

/// A divisor class `a1*x1 + a2*x2` in the Picard group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub variety: Variety,
    pub a1: i64,
    pub a2: i64,
}

impl DivisorClass {
    pub fn new(variety: Variety, a1: i64, a2: i64) -> Self {
        DivisorClass { variety, a1, a2 }
    }

    pub fn zero(variety: Variety) -> Self {
        Self::new(variety, 0, 0)
    }

    pub fn hyperplane(variety: Variety) -> Self {
        Self::new(variety, 1, 1)
    }

    pub fn coefficients(self) -> (i64, i64) {
        (self.a1, self.a2)
    }

    pub fn to_class(self) -> ChowClass {
        ChowClass::from_terms(
            self.variety,
            [(Monomial::new(1, 0), self.a1), (Monomial::new(0, 1), self.a2)],
        )
    }

    /// Effective (equivalently globally generated) on both varieties iff both
    /// coefficients are non-negative.
    pub fn is_effective(self) -> bool {
        self.a1 >= 0 && self.a2 >= 0
    }

    /// Exchanges the two factors.
    pub fn swapped(self) -> Self {
        Self::new(self.variety, self.a2, self.a1)
    }

    pub fn restrict(self) -> Result<DivisorClass, ChowError> {
        match self.variety {
            Variety::Phi => Ok(Self::new(Variety::F, self.a1, self.a2)),
            v => Err(ChowError::RestrictionSource(v)),
        }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        assert_eq!(self.variety, rhs.variety, "divisor classes on different varieties");
        DivisorClass::new(self.variety, self.a1 + rhs.a1, self.a2 + rhs.a2)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(self.variety, -self.a1, -self.a2)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_class().fmt(f)
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.a1, self.a2].serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(i: u8) -> ChowClass {
        ChowClass::generator(Variety::F, i)
    }

    fn eta(i: u8) -> ChowClass {
        ChowClass::generator(Variety::Phi, i)
    }

    fn deg(x: &ChowClass) -> i64 {
        i64::try_from(x.degree().unwrap()).unwrap()
    }

    #[test]
    fn h1h2_rewrites_to_squares() {
        assert_eq!(&h(1) * &h(2), &(&h(1) * &h(1)) + &(&h(2) * &h(2)));
    }

    #[test]
    fn hyperplane_cube_is_six_points() {
        let hyp = ChowClass::hyperplane(Variety::F);
        assert_eq!(hyp.pow(3), ChowClass::point(Variety::F).scale(6));
        let hyp = ChowClass::hyperplane(Variety::Phi);
        assert_eq!(hyp.pow(4), ChowClass::point(Variety::Phi).scale(6));
    }

    #[test]
    fn multiplication_examples() {
        let hyp = ChowClass::hyperplane(Variety::F);
        let sq = &hyp * &hyp;
        assert_eq!(sq, (&h(1) * &h(1)).scale(3) + (&h(2) * &h(2)).scale(3));
        assert_eq!(&(&h(1) * &h(1)) * &h(2), ChowClass::point(Variety::F));
        assert!((&(&h(2) * &h(2)) * &h(2)).is_zero());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(deg(&ChowClass::point(Variety::F).scale(6)), 6);
        let c2 = (&h(1) * &h(1)).scale(4) + (&h(2) * &h(2)).scale(4);
        assert_eq!(deg(&(&ChowClass::hyperplane(Variety::F) * &c2)), 8);
        assert_eq!(deg(&(&(&eta(1) * &eta(1)) * &(&eta(2) * &eta(2)))), 1);
    }

    #[test]
    fn degree_rejects_lower_codimension() {
        assert!(matches!(
            h(1).degree(),
            Err(ChowError::NotTopCodimension { expected: 3, .. })
        ));
        assert_eq!(ChowClass::zero(Variety::F).degree().unwrap(), BigInt::zero());
    }

    #[test]
    fn mismatched_varieties_are_rejected() {
        assert!(matches!(h(1).try_mul(&eta(1)), Err(ChowError::VarietyMismatch { .. })));
    }

    #[test]
    fn both_codim_three_monomials_are_the_point() {
        let a = &(&h(1) * &h(1)) * &h(2);
        let b = &(&h(2) * &h(2)) * &h(1);
        assert_eq!(a, b);
        assert!((&(&h(1) * &h(1)) * &h(1)).is_zero());
    }

    #[test]
    fn relation_ideal_maps_to_zero() {
        // Every multiple of a generator of the relation ideal must vanish.
        let x = RawPolynomial::generator(1);
        let y = RawPolynomial::generator(2);
        let rel = x
            .mul_truncated(&x, 9)
            .sub(&x.mul_truncated(&y, 9))
            .add(&y.mul_truncated(&y, 9));
        let cubes = [x.pow_truncated(3, 9), y.pow_truncated(3, 9)];
        for e1 in 0..4 {
            for e2 in 0..4 {
                let m = RawPolynomial::term(Monomial::new(e1, e2), 1);
                assert!(normalize(&rel.mul_truncated(&m, 9), Variety::F).is_zero());
                for c in &cubes {
                    assert!(normalize(&c.mul_truncated(&m, 9), Variety::F).is_zero());
                    assert!(normalize(&c.mul_truncated(&m, 9), Variety::Phi).is_zero());
                }
            }
        }
    }

    #[test]
    fn normalize_is_idempotent_on_basis() {
        for v in Variety::ALL {
            for m in basis(v) {
                let c = ChowClass::monomial(v, *m, 7);
                let again = ChowClass::from_terms(v, c.terms().map(|(m, c)| (m, c.clone())));
                assert_eq!(c, again);
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let mu = |a: i64, b: i64, c: i64| {
            ChowClass::from_terms(
                Variety::Phi,
                [
                    (Monomial::new(0, 2), a),
                    (Monomial::new(2, 0), b),
                    (Monomial::new(1, 1), c),
                ],
            )
        };
        let f = |b1: i64, b2: i64| {
            ChowClass::from_terms(Variety::F, [(Monomial::new(0, 2), b1), (Monomial::new(2, 0), b2)])
        };
        assert_eq!(mu(1, 3, 2).restrict().unwrap(), f(3, 5));
        assert_eq!(mu(4, 7, 2).restrict().unwrap(), f(6, 9));
        assert_eq!(
            ChowClass::hyperplane(Variety::Phi).restrict().unwrap(),
            ChowClass::hyperplane(Variety::F)
        );
        assert_eq!(
            ChowClass::point(Variety::Phi).restrict(),
            Err(ChowError::RestrictionCodimension)
        );
        assert_eq!(h(1).restrict(), Err(ChowError::RestrictionSource(Variety::F)));
    }

    #[test]
    fn display_and_json() {
        let x = (&h(2) * &h(2)) - (&h(1) * &h(1));
        assert_eq!(x.to_string(), "-h1^2 + h2^2");
        assert_eq!(ChowClass::zero(Variety::F).to_string(), "0");
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"variety":"F","terms":[{"monomial":"h1^2","coeff":-1},{"monomial":"h2^2","coeff":1}]}"#
        );
    }

    #[test]
    fn closed_form_intersection_numbers() {
        let hyp = ChowClass::hyperplane(Variety::F);
        let omega2 = (&h(1) * &h(2)).scale(6);
        for a1 in -10i64..=10 {
            for a2 in -10i64..=10 {
                let c1 = DivisorClass::new(Variety::F, a1, a2).to_class();
                assert_eq!(deg(&c1.pow(3)), 3 * (a1 * a1 * a2 + a1 * a2 * a2));
                assert_eq!(deg(&(&c1.pow(2) * &hyp)), a1 * a1 + 4 * a1 * a2 + a2 * a2);
                assert_eq!(deg(&(&c1 * &hyp.pow(2))), 3 * (a1 + a2));
                assert_eq!(deg(&(&omega2 * &c1)), 6 * (a1 + a2));
            }
        }
    }

    fn arb_class(v: Variety) -> impl Strategy<Value = ChowClass> {
        prop::collection::vec(-20i64..=20, basis(v).len())
            .prop_map(move |cs| ChowClass::from_terms(v, basis(v).iter().copied().zip(cs)))
    }

    fn arb_pair() -> impl Strategy<Value = (ChowClass, ChowClass, ChowClass)> {
        prop_oneof![Just(Variety::F), Just(Variety::Phi)].prop_flat_map(|v| (arb_class(v), arb_class(v), arb_class(v)))
    }

    proptest! {
        #[test]
        fn ring_axioms((x, y, z) in arb_pair()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }
    }

    #[test]
    fn ring_axioms_on_basis_pairs() {
        for v in Variety::ALL {
            let b: Vec<ChowClass> = basis(v).iter().map(|m| ChowClass::monomial(v, *m, 1)).collect();
            for x in &b {
                for y in &b {
                    assert_eq!(x * y, y * x);
                    for z in &b {
                        assert_eq!(&(x * y) * z, x * &(y * z));
                    }
                }
            }
        }
    }
}
