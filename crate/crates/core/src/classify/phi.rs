//! Candidates on Phi, lifted from the admissible cases on F.
//!
//! A bundle `G` on Phi restricts to an initialized aCM bundle on F with
//! `c1 = gamma1` and `beta = (mu1 + mu3, mu2 + mu3)`, so every admissible
//! `beta` on F splits into finitely many `mu` with `mu3` between `0` and
//! `min(beta)`.

use super::embedding::{del_pezzo_embeddings, Surface};
use super::intermediate::{intermediate_table_f, ulrich_betas, zero_c1_f};
use super::{resolve_bundle, to_i64, C2Coefficients, ClassificationRow, NamedValue, Rule, Status};
use crate::chern::Rank2Chern;
use crate::variety::Variety;

type Mu = (i64, i64, i64);

const PHI_CASE_NAMES: [((i64, i64), Mu, &str); 4] = [
    ((0, 1), (1, 0, 0), "L"),
    ((1, 2), (1, 1, 1), "Q"),
    ((1, 2), (2, 2, 0), "Q'"),
    ((1, 2), (0, 0, 2), "Q''"),
];

/// Rules under which the candidate pair of maps does not give a surface
/// in Phi at all.
const NO_SURFACE: [Rule; 3] = [
    Rule::BasePointFailure,
    Rule::DegenerateFactorMap,
    Rule::RestrictionNotUlrich,
];

/// Twists `t` with `0 <= 2t - alpha_i <= 2` for both `i`.
pub fn initializing_twists(alpha: (i64, i64)) -> Vec<i64> {
    (-2..=4)
        .filter(|t| [alpha.0, alpha.1].iter().all(|a| (0..=2).contains(&(2 * t - a))))
        .collect()
}

fn negative_dual_twist(x: &Rank2Chern) -> Vec<NamedValue> {
    let y = x.dual_twist_eta().expect("on Phi");
    let (m1, m2, m3) = y.mu().expect("on Phi");
    [("mu1", m1), ("mu2", m2), ("mu3", m3)]
        .into_iter()
        .map(|(n, v)| (n, to_i64(v)))
        .filter(|(_, v)| *v < 0)
        .map(|(n, value)| NamedValue {
            name: format!("{n} of G^v(eta)"),
            value,
        })
        .collect()
}

fn resolve(alpha: (i64, i64), mu: (i64, i64, i64)) -> Status {
    let x = Rank2Chern::from_mu(alpha, mu);
    if alpha == (2, 2) {
        let found = Surface::ALL
            .into_iter()
            .flat_map(del_pezzo_embeddings)
            .filter(|c| c.mu == mu)
            .find(|c| !matches!(c.status, Status::EliminatedByRule { rule, .. } if NO_SURFACE.contains(&rule)));
        return match found {
            Some(c) => c.status,
            None => Status::by_rule(Rule::NoDelPezzoEmbedding),
        };
    }
    if initializing_twists(alpha) == [1] {
        let negative = negative_dual_twist(&x);
        if !negative.is_empty() {
            return Status::EliminatedNegativeIntersection { values: negative };
        }
    }
    resolve_bundle(&x, Vec::new())
}

fn phi_row(alpha: (i64, i64), mu: (i64, i64, i64)) -> ClassificationRow {
    let x = Rank2Chern::from_mu(alpha, mu);
    ClassificationRow {
        variety: Variety::Phi,
        case: PHI_CASE_NAMES
            .iter()
            .find(|(a, m, _)| *a == alpha && *m == mu)
            .map(|(_, _, n)| n.to_string()),
        alpha,
        delta: None,
        e: 0,
        hc2: to_i64(x.hc2()),
        c1c2: None,
        c2: C2Coefficients::Mu(mu),
        e_class: None,
        zero_locus: x.zero_locus_invariants().expect("always defined"),
        status: resolve(alpha, mu),
    }
}

fn lifts(beta: (i64, i64)) -> impl Iterator<Item = (i64, i64, i64)> {
    (0..=beta.0.min(beta.1)).map(move |m3| (beta.0 - m3, beta.1 - m3, m3))
}

/// Every lift of an admissible case on F, resolved. Cases with `c1 = 2h`
/// use `beta1 <= beta2`.
pub fn classify_phi() -> Vec<ClassificationRow> {
    let mut sources: Vec<((i64, i64), (i64, i64))> = Vec::new();
    for row in zero_c1_f().into_iter().chain(intermediate_table_f()) {
        if let (true, C2Coefficients::Beta(beta)) = (row.status.is_admissible(), row.c2) {
            sources.push((row.alpha, beta));
        }
    }
    sources.extend(ulrich_betas().into_iter().filter(|b| b.0 <= b.1).map(|b| ((2, 2), b)));
    sources
        .into_iter()
        .flat_map(|(alpha, beta)| lifts(beta).map(move |mu| (alpha, mu)))
        .map(|(alpha, mu)| phi_row(alpha, mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(rows: &[ClassificationRow], alpha: (i64, i64), mu: (i64, i64, i64)) -> Status {
        rows.iter()
            .find(|r| r.alpha == alpha && r.c2 == C2Coefficients::Mu(mu))
            .unwrap()
            .status
            .clone()
    }

    #[test]
    fn twist_sets() {
        assert_eq!(initializing_twists((0, 1)), vec![1]);
        assert_eq!(initializing_twists((1, 2)), vec![1]);
        assert_eq!(initializing_twists((0, 0)), vec![0, 1]);
        assert_eq!(initializing_twists((2, 2)), vec![1, 2]);
    }

    #[test]
    fn intermediate_cases_on_phi() {
        let rows = classify_phi();
        assert!(find(&rows, (0, 0), (1, 0, 0)).is_admissible());
        assert!(find(&rows, (0, 1), (1, 0, 0)).is_admissible());
        assert!(find(&rows, (1, 2), (1, 1, 1)).is_admissible());
        assert_eq!(
            find(&rows, (1, 2), (2, 2, 0)),
            Status::EliminatedNegativeIntersection {
                values: vec![NamedValue {
                    name: "mu3 of G^v(eta)".into(),
                    value: -1
                }]
            }
        );
        assert_eq!(
            find(&rows, (1, 2), (0, 0, 2)),
            Status::EliminatedNegativeIntersection {
                values: vec![NamedValue {
                    name: "mu1 of G^v(eta)".into(),
                    value: -1
                }]
            }
        );
    }

    #[test]
    fn ulrich_cases_on_phi() {
        let rows = classify_phi();
        let ulrich: Vec<_> = rows.iter().filter(|r| r.alpha == (2, 2)).collect();
        assert_eq!(ulrich.len(), 9);
        let admissible: Vec<_> = ulrich
            .iter()
            .filter(|r| r.status.is_admissible())
            .map(|r| r.c2)
            .collect();
        assert_eq!(admissible, vec![C2Coefficients::Mu((1, 3, 2))]);
        assert!(matches!(find(&rows, (2, 2), (0, 0, 4)), Status::Decomposable { .. }));
        assert_eq!(
            find(&rows, (2, 2), (2, 2, 2)),
            Status::by_rule(Rule::ProjectionHyperplane)
        );
        assert_eq!(
            find(&rows, (2, 2), (3, 5, 0)),
            Status::by_rule(Rule::NoDelPezzoEmbedding)
        );
        assert!(rows.iter().all(|r| r.status != Status::Unresolved));
    }
}
