//! Candidates on F whose zero locus is a curve: `c1` strictly between `0`
//! and `2h`, `c1 = 0`, and the Ulrich case `c1 = 2h`.

use super::embedding::{del_pezzo_embeddings, Surface};
use super::section4::{solve_beta, SMALL_ALPHAS};
use super::witness::{split_name, split_witness};
use super::{resolve_bundle, to_i64, C2Coefficients, ClassificationRow, Status, Witness, WitnessKind};
use crate::chern::Rank2Chern;
use crate::variety::Variety;

/// Names used for the intermediate cases.
type Pair = (i64, i64);

const CASE_NAMES: [(Pair, Pair, &str); 5] = [
    ((0, 1), (1, 0), "L"),
    ((0, 2), (1, 0), "M"),
    ((1, 1), (2, 0), "N"),
    ((1, 1), (1, 1), "P"),
    ((1, 2), (2, 2), "Q"),
];

/// A degree-`d` line bundle on an elliptic curve has `d` sections once
/// `d >= 1`, and each factor map must see a net, so `beta_i >= 3`.
pub const ELLIPTIC_MIN_BETA: i64 = 3;

pub(crate) fn case_name(alpha: (i64, i64), beta: (i64, i64)) -> Option<String> {
    CASE_NAMES
        .iter()
        .find(|(a, b, _)| *a == alpha && *b == beta)
        .map(|(_, _, n)| n.to_string())
}

pub(crate) fn f_row(alpha: (i64, i64), beta: (i64, i64), e: bool, status: Status) -> ClassificationRow {
    let x = Rank2Chern::from_beta(alpha, beta);
    ClassificationRow {
        variety: Variety::F,
        case: case_name(alpha, beta),
        alpha,
        delta: Some((0, 0)),
        e: u8::from(e),
        hc2: to_i64(x.hc2()),
        c1c2: Some(to_i64(x.c1c2().expect("on F"))),
        c2: C2Coefficients::Beta(beta),
        e_class: Some(x.c2.clone()),
        zero_locus: x.zero_locus_invariants().expect("on F"),
        status,
    }
}

/// Solutions for `alpha` with `D = 0`, keeping `beta1 >= beta2` when the two
/// factors play symmetric roles.
fn betas(alpha: (i64, i64)) -> Vec<(i64, i64)> {
    solve_beta(alpha, (0, 0))
        .expect("zero is admissible")
        .into_iter()
        .filter(|b| alpha.0 != alpha.1 || b.0 >= b.1)
        .rev()
        .collect()
}

/// The cases L, M, N, P, Q.
pub fn intermediate_table_f() -> Vec<ClassificationRow> {
    SMALL_ALPHAS
        .into_iter()
        .flat_map(|alpha| betas(alpha).into_iter().map(move |beta| (alpha, beta)))
        .map(|(alpha, beta)| {
            let status = resolve_bundle(&Rank2Chern::from_beta(alpha, beta), Vec::new());
            f_row(alpha, beta, false, status)
        })
        .collect()
}

/// `c1 = 0`: the zero locus is a line in a fibre.
pub fn zero_c1_f() -> Vec<ClassificationRow> {
    let alpha = (0, 0);
    solve_beta(alpha, alpha)
        .expect("zero is admissible")
        .into_iter()
        .filter(|b| b.0 >= b.1)
        .map(|beta| {
            f_row(
                alpha,
                beta,
                true,
                resolve_bundle(&Rank2Chern::from_beta(alpha, beta), Vec::new()),
            )
        })
        .collect()
}

/// `beta` for `c1 = 2h` allowed by the identities and the elliptic bound.
pub(crate) fn ulrich_betas() -> Vec<(i64, i64)> {
    solve_beta((2, 2), (0, 0))
        .expect("zero is admissible")
        .into_iter()
        .filter(|b| b.0 >= ELLIPTIC_MIN_BETA && b.1 >= ELLIPTIC_MIN_BETA)
        .collect()
}

/// Ulrich candidates on F with every witness found for them.
pub fn ulrich_beta_f() -> Vec<ClassificationRow> {
    let surfaces: Vec<_> = Surface::ALL.into_iter().flat_map(del_pezzo_embeddings).collect();
    ulrich_betas()
        .into_iter()
        .map(|beta| {
            let x = Rank2Chern::from_beta((2, 2), beta);
            let mut extra = Vec::new();
            if let Some(pair) = split_witness(&x) {
                extra.push(Witness {
                    kind: WitnessKind::CompleteIntersection,
                    description: split_name(Variety::F, pair),
                    evidence: "decomposable; its sections vanish on complete intersections of two divisors".to_string(),
                });
            }
            for c in surfaces
                .iter()
                .filter(|c| c.status.is_admissible() && c.restricted_beta == beta)
            {
                let g = Rank2Chern::from_mu((2, 2), c.mu);
                assert_eq!(g.restrict().expect("from Phi"), x);
                extra.push(Witness {
                    kind: WitnessKind::Restriction,
                    description: format!("restriction of G on Phi with mu = ({},{},{})", c.mu.0, c.mu.1, c.mu.2),
                    evidence: format!("restricted Chern classes agree; G vanishes on {}", c.describe()),
                });
            }
            f_row((2, 2), beta, false, resolve_bundle(&x, extra))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Rule;
    use num_bigint::BigInt;

    fn by_case(rows: &[ClassificationRow], name: &str) -> ClassificationRow {
        rows.iter().find(|r| r.case.as_deref() == Some(name)).unwrap().clone()
    }

    #[test]
    fn intermediate_cases() {
        let rows = intermediate_table_f();
        let names: Vec<_> = rows.iter().map(|r| r.case.clone().unwrap()).collect();
        assert_eq!(names, ["L", "M", "N", "P", "Q"]);
        assert!(by_case(&rows, "L").status.is_admissible());
        assert!(by_case(&rows, "Q").status.is_admissible());
        assert_eq!(by_case(&rows, "N").status, Status::by_rule(Rule::DoubleLineConormal));
        match by_case(&rows, "M").status {
            Status::Decomposable { splitting, .. } => assert_eq!(splitting, "O(h2) + O(h2)"),
            s => panic!("{s:?}"),
        }
        match by_case(&rows, "P").status {
            Status::Decomposable { splitting, .. } => assert_eq!(splitting, "O(h2) + O(h1)"),
            s => panic!("{s:?}"),
        }
        let genus: Vec<_> = rows
            .iter()
            .map(|r| r.zero_locus.arithmetic_genus.clone().unwrap())
            .collect();
        assert!(genus.iter().all(|g| *g == BigInt::from(0)));
    }

    #[test]
    fn line_and_quartic_are_exchanged() {
        let l = Rank2Chern::from_beta((0, 1), (1, 0)).dual_twist_h().unwrap();
        assert_eq!(l.c1.coefficients(), (2, 1));
        assert_eq!(l.beta().unwrap(), (BigInt::from(2), BigInt::from(2)));
    }

    #[test]
    fn ulrich_candidates() {
        let rows = ulrich_beta_f();
        let betas: Vec<_> = rows.iter().map(|r| r.c2).collect();
        assert_eq!(betas, [(3, 5), (4, 4), (5, 3)].map(C2Coefficients::Beta).to_vec());
        assert!(rows.iter().all(|r| r.status.is_admissible()));
        let Status::Admissible { witnesses } = &rows[1].status else {
            unreachable!()
        };
        let kinds: Vec<_> = witnesses.iter().map(|w| w.kind).collect();
        assert!(kinds.contains(&WitnessKind::NonSplitExtension));
        assert!(kinds.contains(&WitnessKind::CompleteIntersection));
        let inv = &rows[1].zero_locus;
        assert_eq!(inv.degree, BigInt::from(8));
        assert_eq!(inv.arithmetic_genus, Some(BigInt::from(1)));
    }

    #[test]
    fn zero_c1_is_a_line() {
        let rows = zero_c1_f();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].c2, C2Coefficients::Beta((1, 0)));
        assert!(rows[0].status.is_admissible());
    }
}
