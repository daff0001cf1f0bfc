//! Explicit bundles realizing a given pair of Chern classes.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chern::Rank2Chern;
use crate::chow::{ChowClass, DivisorClass};
use crate::cohomology::{cohom, initial_twist, is_acm};
use crate::variety::Variety;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    NonSplitExtension,
    CotangentPullback,
    Cokernel,
    SurfaceEmbedding,
    Restriction,
    CompleteIntersection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub description: String,
    pub evidence: String,
}

/// Half-width of the box searched for line bundle pairs `(A, B)`.
pub(crate) const PAIR_WINDOW: i64 = 6;

pub(crate) fn line(v: Variety, a: (i64, i64)) -> String {
    if a == (0, 0) {
        "O".to_string()
    } else {
        format!("O({})", DivisorClass::new(v, a.0, a.1))
    }
}

fn h(v: Variety, a: (i64, i64), i: usize) -> num_bigint::BigInt {
    cohom(v, a.0, a.1).h[i].clone()
}

fn pairs(x: &Rank2Chern) -> impl Iterator<Item = ((i64, i64), (i64, i64))> + '_ {
    let v = x.variety();
    let (c1, c2) = x.c1.coefficients();
    (-PAIR_WINDOW..=PAIR_WINDOW)
        .flat_map(|a1| (-PAIR_WINDOW..=PAIR_WINDOW).map(move |a2| (a1, a2)))
        .map(move |a| (a, (c1 - a.0, c2 - a.1)))
        .filter(move |&(a, b)| {
            let prod = &DivisorClass::new(v, a.0, a.1).to_class() * &DivisorClass::new(v, b.0, b.1).to_class();
            prod == x.c2
        })
}

/// Non-split extensions `0 -> O(A) -> E -> O(B) -> 0` with the given Chern
/// classes such that `O(A)` and `O(B)` are aCM (so `E` is aCM) and `E` is
/// initialized.
pub fn extension_witnesses(x: &Rank2Chern) -> Vec<Witness> {
    let v = x.variety();
    pairs(x)
        .filter_map(|(a, b)| {
            let ext = h(v, (a.0 - b.0, a.1 - b.1), 1);
            if ext.is_zero() || !is_acm(a.0, a.1) || !is_acm(b.0, b.1) {
                return None;
            }
            let below = h(v, (a.0 - 1, a.1 - 1), 0).is_zero() && h(v, (b.0 - 1, b.1 - 1), 0).is_zero();
            let sections = h(v, a, 0).is_positive() || (h(v, b, 0).is_positive() && h(v, a, 1).is_zero());
            if !(below && sections) {
                return None;
            }
            Some(Witness {
                kind: WitnessKind::NonSplitExtension,
                description: format!("0 -> {} -> E -> {} -> 0", line(v, a), line(v, b)),
                evidence: format!(
                    "h^1({}) = {ext}; both line bundles aCM; h^0(E(-1)) = 0 and h^0(E) > 0",
                    line(v, (a.0 - b.0, a.1 - b.1))
                ),
            })
        })
        .collect()
}

/// `O(A) + O(B)` with the given Chern classes, both summands aCM, the sum
/// initialized, and both summands with sections so that a general section
/// vanishes in codimension 2. Returned with `A <= B`.
pub fn split_witness(x: &Rank2Chern) -> Option<((i64, i64), (i64, i64))> {
    let v = x.variety();
    pairs(x).find(|&(a, b)| {
        a <= b
            && is_acm(a.0, a.1)
            && is_acm(b.0, b.1)
            && initial_twist(a.0, a.1).min(initial_twist(b.0, b.1)) == 0
            && h(v, a, 0).is_positive()
            && h(v, b, 0).is_positive()
    })
}

pub(crate) fn split_name(v: Variety, (a, b): ((i64, i64), (i64, i64))) -> String {
    format!("{} + {}", line(v, a), line(v, b))
}

/// Pullbacks of `Omega_P2(2)` along either projection, twisted by a line
/// bundle of small degree.
pub fn cotangent_witness(x: &Rank2Chern) -> Option<Witness> {
    let v = x.variety();
    for factor in [1u8, 2] {
        for l1 in -1..=1 {
            for l2 in -1..=1 {
                let base = Rank2Chern::cotangent_pullback(v, factor);
                let t = DivisorClass::new(v, l1, l2);
                if &base.twist(t) != x {
                    continue;
                }
                let hyper = match factor {
                    1 => DivisorClass::new(v, 2 + l1, l2),
                    _ => DivisorClass::new(v, l1, 2 + l2),
                };
                let proj = match v {
                    Variety::F => "p",
                    Variety::Phi => "pi",
                };
                return Some(Witness {
                    kind: WitnessKind::CotangentPullback,
                    description: format!("{proj}{factor}^*Omega_P2({hyper})"),
                    evidence: format!("c1 = {}, c2 = {} agree", x.c1, x.c2),
                });
            }
        }
    }
    None
}

/// Chern classes of the cokernel of `O(-x_j) -> O + pr_j^*Omega_P2(1)`,
/// computed from total Chern classes.
pub fn cokernel_chern(v: Variety, factor: u8) -> Rank2Chern {
    let x = ChowClass::generator(v, factor);
    let one = ChowClass::one(v);
    let middle = &(&one - &x) + &(&x * &x);
    // c(O(-x))^{-1} = 1 + x + x^2 + ...
    let mut inverse = one.clone();
    for k in 1..=v.dimension() as u32 {
        inverse = &inverse + &x.pow(k);
    }
    let total = &middle * &inverse;
    let part = |d: usize| {
        ChowClass::from_terms(
            v,
            total
                .terms()
                .filter(|(m, _)| m.codimension() == d)
                .map(|(m, c)| (m, c.clone())),
        )
    };
    for d in 3..=v.dimension() {
        assert!(
            part(d).is_zero(),
            "rank-2 total Chern class has no part in codimension {d}"
        );
    }
    let c1 = part(1);
    let a1 = c1
        .coefficient(crate::chow::Monomial::new(1, 0))
        .cloned()
        .unwrap_or_default();
    let a2 = c1
        .coefficient(crate::chow::Monomial::new(0, 1))
        .cloned()
        .unwrap_or_default();
    let c1 = DivisorClass::new(v, i64::try_from(a1).unwrap(), i64::try_from(a2).unwrap());
    Rank2Chern::new(c1, part(2)).expect("codimension 2")
}

pub fn cokernel_witness(x: &Rank2Chern) -> Option<Witness> {
    let v = x.variety();
    [1u8, 2].into_iter().find(|&j| &cokernel_chern(v, j) == x).map(|j| {
        let g = v.generator_names()[usize::from(j) - 1];
        let proj = match v {
            Variety::F => "p",
            Variety::Phi => "pi",
        };
        Witness {
            kind: WitnessKind::Cokernel,
            description: format!("coker(O(-{g}) -> O + {proj}{j}^*Omega_P2(1))"),
            evidence: format!("total Chern class 1 + {} agrees", x.c2),
        }
    })
}

/// Explicit witnesses for `x`, in a fixed order.
pub fn find_witnesses(x: &Rank2Chern) -> Vec<Witness> {
    let mut out = Vec::new();
    out.extend(cotangent_witness(x));
    out.extend(cokernel_witness(x));
    out.extend(extension_witnesses(x));
    out
}
