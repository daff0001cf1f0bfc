//! Parser for class expressions such as `(h1+h2)^3` or `2*eta1^2*eta2 - eta`.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Names are `h1`, `h2`, `h` on F and `eta1`, `eta2`, `eta` on Phi.

use num_bigint::BigInt;

use super::raw::RawPolynomial;
use super::{normalize, ChowClass, ChowError};
use crate::variety::Variety;

/// Parses and normalizes an expression on `variety`.
pub fn parse_class(input: &str, variety: Variety) -> Result<ChowClass, ChowError> {
    Ok(normalize(&parse_raw(input, variety)?, variety))
}

/// Parses an expression into a formal polynomial, truncated above the
/// dimension of `variety`.
pub fn parse_raw(input: &str, variety: Variety) -> Result<RawPolynomial, ChowError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        variety,
        max_degree: variety.dimension(),
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    variety: Variety,
    max_degree: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ChowError {
        ChowError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RawPolynomial, ChowError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RawPolynomial, ChowError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.mul_truncated(&self.unary()?, self.max_degree);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RawPolynomial, ChowError> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RawPolynomial, ChowError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected an exponent"));
            }
            let exp: u32 = digits.parse().map_err(|_| self.error("exponent out of range"))?;
            Ok(base.pow_truncated(exp, self.max_degree))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RawPolynomial, ChowError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().expect("ascii digits");
                Ok(RawPolynomial::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.name(name).ok_or_else(|| {
                    self.pos = start;
                    self.error(&format!("unknown generator `{name}` on {}", self.variety))
                })
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn name(&self, name: &str) -> Option<RawPolynomial> {
        let [g1, g2] = self.variety.generator_names();
        if name == g1 {
            Some(RawPolynomial::generator(1))
        } else if name == g2 {
            Some(RawPolynomial::generator(2))
        } else if name == self.variety.hyperplane_name() {
            Some(RawPolynomial::generator(1).add(&RawPolynomial::generator(2)))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::Monomial;

    #[test]
    fn hyperplane_powers() {
        let x = parse_class("(h1+h2)^3", Variety::F).unwrap();
        assert_eq!(x, ChowClass::point(Variety::F).scale(6));
        let y = parse_class("eta^4", Variety::Phi).unwrap();
        assert_eq!(y, ChowClass::point(Variety::Phi).scale(6));
    }

    #[test]
    fn precedence_and_unary_minus() {
        let x = parse_class("-2*h1^2 + 3 * h2^2 - -h1", Variety::F).unwrap();
        let expected = ChowClass::from_terms(
            Variety::F,
            [
                (Monomial::new(2, 0), -2),
                (Monomial::new(0, 2), 3),
                (Monomial::new(1, 0), 1),
            ],
        );
        assert_eq!(x, expected);
    }

    #[test]
    fn truncation_is_harmless_for_high_powers() {
        let x = parse_class("h1^5 * 0 + h^7", Variety::F).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn rejects_foreign_generators_and_garbage() {
        assert!(matches!(
            parse_class("eta1", Variety::F),
            Err(ChowError::Parse { position: 0, .. })
        ));
        assert!(parse_class("h1 +", Variety::F).is_err());
        assert!(parse_class("(h1", Variety::F).is_err());
        assert!(parse_class("h1 h2", Variety::F).is_err());
        assert!(parse_class("h1^", Variety::F).is_err());
    }
}
