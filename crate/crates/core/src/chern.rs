//! Chern data of rank-2 bundles on F and Phi.
//!
//! A rank-2 bundle is represented only by its Chern classes. On F we write
//! `c2 = beta1*h2^2 + beta2*h1^2` and on Phi
//! `c2 = mu1*eta2^2 + mu2*eta1^2 + mu3*eta1*eta2`; the accessors below
//! recover those coefficients as intersection numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chow::{ChowClass, ChowError, DivisorClass, Monomial, TermMap};
use crate::json::Big;
use crate::variety::Variety;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChernError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error("operation is defined on {expected} only, got data on {got}")]
    WrongVariety { expected: Variety, got: Variety },
    #[error("c2 must have codimension 2, got `{0}`")]
    NotCodimensionTwo(String),
    #[error("{quantity} is not an integer: {numerator}/{denominator}")]
    NonIntegral {
        quantity: &'static str,
        numerator: BigInt,
        denominator: u32,
    },
}

/// First and second Chern classes of a rank-2 bundle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rank2Chern {
    pub c1: DivisorClass,
    pub c2: ChowClass,
}

fn exact_div(quantity: &'static str, numerator: BigInt, denominator: u32) -> Result<BigInt, ChernError> {
    let (q, r) = numerator.div_rem(&BigInt::from(denominator));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ChernError::NonIntegral {
            quantity,
            numerator,
            denominator,
        })
    }
}

fn expect_variety(got: Variety, expected: Variety) -> Result<(), ChernError> {
    if got == expected {
        Ok(())
    } else {
        Err(ChernError::WrongVariety { expected, got })
    }
}

impl Rank2Chern {
    pub fn new(c1: DivisorClass, c2: ChowClass) -> Result<Self, ChernError> {
        if c1.variety != c2.variety() {
            return Err(ChowError::VarietyMismatch {
                left: c1.variety,
                right: c2.variety(),
            }
            .into());
        }
        if !c2.is_homogeneous_of(2) {
            return Err(ChernError::NotCodimensionTwo(c2.to_string()));
        }
        Ok(Rank2Chern { c1, c2 })
    }

    pub fn variety(&self) -> Variety {
        self.c1.variety
    }

    /// Trivial bundle `O + O`.
    pub fn trivial(variety: Variety) -> Self {
        Rank2Chern {
            c1: DivisorClass::zero(variety),
            c2: ChowClass::zero(variety),
        }
    }

    /// `O(a) + O(b)`.
    pub fn split(a: DivisorClass, b: DivisorClass) -> Self {
        Rank2Chern {
            c1: a + b,
            c2: &a.to_class() * &b.to_class(),
        }
    }

    /// On F: `c1 = a1*h1 + a2*h2`, `c2 = beta1*h2^2 + beta2*h1^2`.
    pub fn from_beta(alpha: (i64, i64), beta: (i64, i64)) -> Self {
        Rank2Chern {
            c1: DivisorClass::new(Variety::F, alpha.0, alpha.1),
            c2: ChowClass::from_terms(
                Variety::F,
                [(Monomial::new(0, 2), beta.0), (Monomial::new(2, 0), beta.1)],
            ),
        }
    }

    /// On Phi: `c2 = mu1*eta2^2 + mu2*eta1^2 + mu3*eta1*eta2`.
    pub fn from_mu(alpha: (i64, i64), mu: (i64, i64, i64)) -> Self {
        Rank2Chern {
            c1: DivisorClass::new(Variety::Phi, alpha.0, alpha.1),
            c2: mu_class(mu),
        }
    }

    /// Pullback of `Omega_P2(2)` along the projection to factor `i`:
    /// `c1 = x_i`, `c2 = x_i^2`.
    pub fn cotangent_pullback(variety: Variety, factor: u8) -> Self {
        let x = ChowClass::generator(variety, factor);
        let c1 = match factor {
            1 => DivisorClass::new(variety, 1, 0),
            _ => DivisorClass::new(variety, 0, 1),
        };
        Rank2Chern { c1, c2: &x * &x }
    }

    /// `E(L)`: `c1 + 2L`, `c2 + c1*L + L^2`.
    pub fn twist(&self, l: DivisorClass) -> Self {
        let lc = l.to_class();
        let c2 = &(&self.c2 + &(&self.c1.to_class() * &lc)) + &(&lc * &lc);
        Rank2Chern {
            c1: self.c1 + l + l,
            c2,
        }
    }

    pub fn twist_by_hyperplane(&self, t: i64) -> Self {
        self.twist(DivisorClass::new(self.variety(), t, t))
    }

    pub fn dual(&self) -> Self {
        Rank2Chern {
            c1: -self.c1,
            c2: self.c2.clone(),
        }
    }

    /// `E^v(h)` on F.
    pub fn dual_twist_h(&self) -> Result<Self, ChernError> {
        expect_variety(self.variety(), Variety::F)?;
        Ok(self.dual().twist_by_hyperplane(1))
    }

    /// `G^v(eta)` on Phi.
    pub fn dual_twist_eta(&self) -> Result<Self, ChernError> {
        expect_variety(self.variety(), Variety::Phi)?;
        Ok(self.dual().twist_by_hyperplane(1))
    }

    pub fn restrict(&self) -> Result<Self, ChernError> {
        Ok(Rank2Chern {
            c1: self.c1.restrict()?,
            c2: self.c2.restrict()?,
        })
    }

    /// `(beta1, beta2) = (deg(h1*c2), deg(h2*c2))` on F.
    pub fn beta(&self) -> Result<(BigInt, BigInt), ChernError> {
        expect_variety(self.variety(), Variety::F)?;
        let h = |i| ChowClass::generator(Variety::F, i);
        Ok((
            ChowClass::intersect(&[&h(1), &self.c2]),
            ChowClass::intersect(&[&h(2), &self.c2]),
        ))
    }

    /// `(mu1, mu2, mu3) = (deg(eta1^2*c2), deg(eta2^2*c2), deg(eta1*eta2*c2))`
    /// on Phi.
    pub fn mu(&self) -> Result<(BigInt, BigInt, BigInt), ChernError> {
        expect_variety(self.variety(), Variety::Phi)?;
        let e = |i| ChowClass::generator(Variety::Phi, i);
        let (e1, e2) = (e(1), e(2));
        Ok((
            ChowClass::intersect(&[&e1, &e1, &self.c2]),
            ChowClass::intersect(&[&e2, &e2, &self.c2]),
            ChowClass::intersect(&[&e1, &e2, &self.c2]),
        ))
    }

    /// `deg(c1*c2)` on F.
    pub fn c1c2(&self) -> Result<BigInt, ChernError> {
        expect_variety(self.variety(), Variety::F)?;
        Ok(ChowClass::intersect(&[&self.c1.to_class(), &self.c2]))
    }

    /// `deg(h*c2)` on F, `deg(eta^2*c2)` on Phi.
    pub fn hc2(&self) -> BigInt {
        let v = self.variety();
        let h = ChowClass::hyperplane(v);
        match v {
            Variety::F => ChowClass::intersect(&[&h, &self.c2]),
            Variety::Phi => ChowClass::intersect(&[&h, &h, &self.c2]),
        }
    }

    /// Euler characteristic on F by Riemann-Roch with the quadratic term
    /// taken with the sign `sign` (`+1` is the correct one).
    pub fn chi_f_signed(&self, sign: i64) -> Result<BigInt, ChernError> {
        expect_variety(self.variety(), Variety::F)?;
        let v = Variety::F;
        let h = ChowClass::hyperplane(v);
        let c1 = self.c1.to_class();
        let c2 = &self.c2;
        let omega2 = (&ChowClass::generator(v, 1) * &ChowClass::generator(v, 2)).scale(6);
        let deg = |x: ChowClass| x.degree().map_err(ChernError::from);

        let cubic = deg(&c1.pow(3) - &(&c1 * c2).scale(3))?;
        let quadratic = deg(&(&c1.pow(2) * &h) - &(c2 * &h).scale(2))?;
        let linear = deg(&(&c1 * &h.pow(2)).scale(4) + &(&omega2 * &c1))?;
        let twelve_chi = BigInt::from(24) + cubic * 2 + quadratic * (6 * sign) + linear;
        exact_div("chi", twelve_chi, 12)
    }

    pub fn chi_f(&self) -> Result<BigInt, ChernError> {
        self.chi_f_signed(1)
    }

    pub fn zero_locus_invariants(&self) -> Result<ZeroLocusInvariants, ChernError> {
        let arithmetic_genus = match self.variety() {
            Variety::F => Some(self.arithmetic_genus()?),
            Variety::Phi => None,
        };
        Ok(ZeroLocusInvariants {
            degree: self.hc2(),
            arithmetic_genus,
        })
    }

    /// `p_a = c1c2/2 - hc2 + 1` for the zero locus of a section on F.
    pub fn arithmetic_genus(&self) -> Result<BigInt, ChernError> {
        let half = exact_div("c1c2/2", self.c1c2()?, 2)?;
        Ok(half - self.hc2() + 1)
    }
}

/// `mu1*eta2^2 + mu2*eta1^2 + mu3*eta1*eta2`.
pub fn mu_class(mu: (i64, i64, i64)) -> ChowClass {
    ChowClass::from_terms(
        Variety::Phi,
        [
            (Monomial::new(0, 2), mu.0),
            (Monomial::new(2, 0), mu.1),
            (Monomial::new(1, 1), mu.2),
        ],
    )
}

/// `c1 = (2-a1, 2-a2)` and `c2 = (b2-2a1-a2+3)*h1^2 + (b1-a1-2a2+3)*h2^2`,
/// i.e. `E^v(h)` written out by hand.
pub fn dual_twist_h_closed_form(alpha: (i64, i64), beta: (i64, i64)) -> ((i64, i64), (i64, i64)) {
    let (a1, a2) = alpha;
    let (b1, b2) = beta;
    ((2 - a1, 2 - a2), (b1 - a1 - 2 * a2 + 3, b2 - 2 * a1 - a2 + 3))
}

/// Euler characteristic on F from the numerical data `(alpha, c1c2, hc2)`.
pub fn chi_f_numerical(alpha: (i64, i64), c1c2: i64, hc2: i64) -> Result<BigInt, ChernError> {
    let (a1, a2) = (BigInt::from(alpha.0), BigInt::from(alpha.1));
    let c1_cubed = (&a1 * &a1 * &a2 + &a1 * &a2 * &a2) * 3;
    let c1_sq_h = &a1 * &a1 + &a1 * &a2 * 4 + &a2 * &a2;
    let s = &a1 + &a2;
    let twelve_chi = BigInt::from(24) + (c1_cubed - c1c2 * 3) * 2 + (c1_sq_h - hc2 * 2) * 6 + &s * 12 + &s * 6;
    exact_div("chi", twelve_chi, 12)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroLocusInvariants {
    pub degree: BigInt,
    /// Only defined for curves on F.
    pub arithmetic_genus: Option<BigInt>,
}

impl Serialize for ZeroLocusInvariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ZeroLocusInvariants", 2)?;
        st.serialize_field("degree", &Big(&self.degree))?;
        st.serialize_field("arithmetic_genus", &self.arithmetic_genus.as_ref().map(Big))?;
        st.end()
    }
}

impl Serialize for Rank2Chern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rank2Chern", 3)?;
        st.serialize_field("variety", &self.variety())?;
        st.serialize_field("c1", &self.c1)?;
        st.serialize_field("c2", &TermMap(&self.c2))?;
        st.end()
    }
}

/// Right-hand side of the `c1c2` identity: `a1^2*a2 + a1*a2^2`.
pub fn c1c2_rhs(alpha: (i64, i64)) -> BigInt {
    let (a1, a2) = (BigInt::from(alpha.0), BigInt::from(alpha.1));
    &a1 * &a1 * &a2 + &a1 * &a2 * &a2
}

/// Right-hand side of the `hc2` identity:
/// `2 + (a1^2 + 4*a1*a2 + a2^2 - 3*a1 - 3*a2)/2 - e`. The bracket is always
/// even.
pub fn hc2_rhs(alpha: (i64, i64), e: bool) -> BigInt {
    let (a1, a2) = (BigInt::from(alpha.0), BigInt::from(alpha.1));
    let bracket = &a1 * &a1 + &a1 * &a2 * 4 + &a2 * &a2 - &a1 * 3 - &a2 * 3;
    BigInt::from(2) + bracket / 2 - if e { BigInt::one() } else { BigInt::zero() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResiduals {
    pub c1c2: BigInt,
    pub hc2: BigInt,
}

impl IdentityResiduals {
    pub fn is_zero(&self) -> bool {
        self.c1c2.is_zero() && self.hc2.is_zero()
    }
}

impl Serialize for IdentityResiduals {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IdentityResiduals", 2)?;
        st.serialize_field("c1c2", &Big(&self.c1c2))?;
        st.serialize_field("hc2", &Big(&self.hc2))?;
        st.end()
    }
}

/// Residuals `lhs - rhs` of the two identities satisfied by the Chern data of
/// an initialized aCM rank-2 bundle on F with a section vanishing along a
/// curve plus the divisor `D` (`e` is true iff `D = c1`). The left-hand sides
/// are intersection numbers computed in the Chow ring.
pub fn identity_ledger(alpha: (i64, i64), beta: (i64, i64), e: bool) -> IdentityResiduals {
    let x = Rank2Chern::from_beta(alpha, beta);
    IdentityResiduals {
        c1c2: x.c1c2().expect("data on F") - c1c2_rhs(alpha),
        hc2: x.hc2() - hc2_rhs(alpha, e),
    }
}
