//! Candidates with a nonzero divisorial part in the zero locus on F.

use num_traits::Zero;

use super::{to_i64, C2Coefficients, ClassificationRow, ClassifyError, NamedValue, Rule, Status};
use crate::chern::{c1c2_rhs, hc2_rhs, Rank2Chern};
use crate::chow::{ChowClass, DivisorClass};
use crate::cohomology::cohom;
use crate::variety::Variety;

/// Divisorial parts `D` of the zero locus allowed for an initialized aCM
/// bundle with `0 <= c1 <= 2h`.
pub const ADMISSIBLE_DELTAS: [(i64, i64); 5] = [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)];

/// First Chern classes considered below `2h`, up to swapping the factors.
pub(crate) const SMALL_ALPHAS: [(i64, i64); 4] = [(0, 1), (0, 2), (1, 1), (1, 2)];

/// All non-negative `(beta1, beta2)` solving
/// `a1*beta1 + a2*beta2 = c1c2` and `beta1 + beta2 = hc2`, where the
/// right-hand sides come from the identities and `e = 1` iff `delta = alpha`.
pub fn solve_beta(alpha: (i64, i64), delta: (i64, i64)) -> Result<Vec<(i64, i64)>, ClassifyError> {
    if !ADMISSIBLE_DELTAS.contains(&delta) {
        return Err(ClassifyError::InvalidDelta(delta.0, delta.1));
    }
    let e = delta == alpha;
    let c1c2 = to_i64(c1c2_rhs(alpha));
    let hc2 = to_i64(hc2_rhs(alpha, e));
    Ok((0..=hc2.max(-1))
        .map(|b1| (b1, hc2 - b1))
        .filter(|&(b1, b2)| alpha.0 * b1 + alpha.1 * b2 == c1c2)
        .collect())
}

/// `[E] = c2 - c1*D + D^2`.
pub fn e_class(alpha: (i64, i64), beta: (i64, i64), delta: (i64, i64)) -> ChowClass {
    let x = Rank2Chern::from_beta(alpha, beta);
    let d = DivisorClass::new(Variety::F, delta.0, delta.1).to_class();
    &(&x.c2 - &(&x.c1.to_class() * &d)) + &(&d * &d)
}

fn h1_of(d: (i64, i64)) -> bool {
    cohom(Variety::F, d.0, d.1).h[1].is_zero()
}

fn resolve(alpha: (i64, i64), delta: (i64, i64), class: &ChowClass) -> Status {
    let h = |i| ChowClass::generator(Variety::F, i);
    let negative: Vec<NamedValue> = [1u8, 2]
        .into_iter()
        .filter_map(|i| {
            let v = to_i64(ChowClass::intersect(&[&h(i), class]));
            (v < 0).then(|| NamedValue {
                name: format!("deg(h{i}*[E])"),
                value: v,
            })
        })
        .collect();
    if !negative.is_empty() {
        return Status::EliminatedNegativeIntersection { values: negative };
    }

    let d = DivisorClass::new(Variety::F, delta.0, delta.1);
    let rest = DivisorClass::new(Variety::F, alpha.0, alpha.1) - d;
    let vanishing = h1_of(delta);
    if class.is_zero() && d.is_effective() && rest.is_effective() && vanishing {
        return Status::by_rule(Rule::EmptyZeroLocusGlobalGeneration);
    }
    for j in [1u8, 2] {
        let hj = match j {
            1 => DivisorClass::new(Variety::F, 1, 0),
            _ => DivisorClass::new(Variety::F, 0, 1),
        };
        if *class == &h(j) * &h(j) && (rest - hj).is_effective() && vanishing {
            return Status::by_rule(Rule::KoszulGlobalGeneration);
        }
    }
    Status::Unresolved
}

/// Every candidate `(alpha, delta, beta)` with `delta != 0` and `c1 - D`
/// effective, resolved.
pub fn section4_table() -> Vec<ClassificationRow> {
    let mut rows = Vec::new();
    for alpha in SMALL_ALPHAS {
        for delta in ADMISSIBLE_DELTAS.into_iter().skip(1) {
            if alpha.0 == alpha.1 && delta.0 > delta.1 {
                continue;
            }
            if alpha.0 < delta.0 || alpha.1 < delta.1 {
                continue;
            }
            let e = delta == alpha;
            for beta in solve_beta(alpha, delta).expect("admissible delta") {
                let x = Rank2Chern::from_beta(alpha, beta);
                let class = e_class(alpha, beta, delta);
                let status = resolve(alpha, delta, &class);
                rows.push(ClassificationRow {
                    variety: Variety::F,
                    case: None,
                    alpha,
                    delta: Some(delta),
                    e: u8::from(e),
                    hc2: to_i64(x.hc2()),
                    c1c2: Some(to_i64(x.c1c2().expect("on F"))),
                    c2: C2Coefficients::Beta(beta),
                    e_class: Some(class),
                    zero_locus: x.zero_locus_invariants().expect("on F"),
                    status,
                });
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_beta_examples() {
        assert_eq!(solve_beta((1, 1), (0, 1)).unwrap(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(solve_beta((1, 2), (0, 0)).unwrap(), vec![(2, 2)]);
        assert_eq!(solve_beta((0, 1), (0, 1)).unwrap(), vec![(0, 0)]);
        assert!(solve_beta((1, 3), (0, 0)).unwrap().is_empty());
        assert_eq!(solve_beta((0, 1), (1, 1)), Err(ClassifyError::InvalidDelta(1, 1)));
    }

    #[test]
    fn nine_rows_none_unresolved() {
        let rows = section4_table();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.status != Status::Unresolved));
        let neg = rows
            .iter()
            .filter(|r| matches!(r.status, Status::EliminatedNegativeIntersection { .. }))
            .count();
        assert_eq!(neg, 2);
        let koszul: Vec<_> = rows
            .iter()
            .filter(|r| r.status == Status::by_rule(Rule::KoszulGlobalGeneration))
            .collect();
        assert_eq!(koszul.len(), 1);
        assert_eq!(koszul[0].alpha, (1, 2));
        assert_eq!(koszul[0].delta, Some((0, 1)));
    }

    #[test]
    fn e_class_of_the_koszul_row() {
        let c = e_class((1, 2), (2, 2), (0, 1));
        assert_eq!(
            c,
            &ChowClass::generator(Variety::F, 1) * &ChowClass::generator(Variety::F, 1)
        );
    }
}
