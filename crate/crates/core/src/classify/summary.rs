//! The final lists on F and Phi, and the elimination of large `c1`.

use num_bigint::BigInt;
use serde::Serialize;

use super::intermediate::{intermediate_table_f, ulrich_beta_f, zero_c1_f};
use super::phi::classify_phi;
use super::rules::curve_rule;
use super::section4::solve_beta;
use super::{to_i64, C2Coefficients, ClassificationRow, Rule, Status, WitnessKind};
use crate::chern::{c1c2_rhs, chi_f_numerical, hc2_rhs, Rank2Chern, ZeroLocusInvariants};
use crate::chow::{ChowClass, DivisorClass};
use crate::variety::Variety;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremEntry {
    pub alpha: (i64, i64),
    pub c2: Vec<C2Coefficients>,
    pub zero_locus: ZeroLocusInvariants,
    pub description: String,
    pub ulrich: bool,
    /// `chi(E)`, on F only.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_big")]
    pub chi: Option<BigInt>,
}

fn ser_opt_big<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(n) => crate::json::serialize_bigint(n, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremB {
    pub variety: Variety,
    pub entries: Vec<TheoremEntry>,
    /// First Chern classes in `[0, 2]^2` with no admissible case.
    pub excluded: Vec<(i64, i64)>,
}

fn degree_word(d: i64) -> String {
    match d {
        2 => "conic".into(),
        3 => "cubic".into(),
        4 => "quartic".into(),
        _ => format!("degree {d}"),
    }
}

fn describe(row: &ClassificationRow) -> String {
    let d = to_i64(row.zero_locus.degree.clone());
    match (row.variety, row.zero_locus.arithmetic_genus.clone()) {
        (Variety::F, Some(g)) => match (d, to_i64(g)) {
            (1, _) => "line".into(),
            (_, 1) => format!("elliptic normal curve of degree {d}"),
            (_, g) => format!("{} curve of arithmetic genus {g}", degree_word(d)),
        },
        _ => {
            let from_f1 = matches!(&row.status, Status::Admissible { witnesses }
                if witnesses.iter().any(|w| w.kind == WitnessKind::SurfaceEmbedding && w.description.contains("F1")));
            if d == 1 {
                "plane".into()
            } else if from_f1 {
                format!("del Pezzo surface of degree {d} isomorphic to F1")
            } else {
                format!("{} surface", degree_word(d))
            }
        }
    }
}

fn canonical(alpha: (i64, i64)) -> bool {
    alpha.0 <= alpha.1
}

fn excluded(entries: &[TheoremEntry]) -> Vec<(i64, i64)> {
    (0..=2)
        .flat_map(|a1| (a1..=2).map(move |a2| (a1, a2)))
        .filter(|a| entries.iter().all(|e| e.alpha != *a))
        .collect()
}

fn collect(rows: Vec<ClassificationRow>, ulrich: impl Fn(&ClassificationRow) -> bool) -> Vec<TheoremEntry> {
    let mut entries: Vec<TheoremEntry> = Vec::new();
    for row in rows
        .into_iter()
        .filter(|r| r.status.is_admissible() && canonical(r.alpha))
    {
        if let Some(e) = entries.iter_mut().find(|e| e.alpha == row.alpha) {
            e.c2.push(row.c2);
            continue;
        }
        let chi = match row.c2 {
            C2Coefficients::Beta(b) => Some(Rank2Chern::from_beta(row.alpha, b).chi_f().expect("on F")),
            C2Coefficients::Mu(_) => None,
        };
        entries.push(TheoremEntry {
            alpha: row.alpha,
            c2: vec![row.c2],
            zero_locus: row.zero_locus.clone(),
            description: describe(&row),
            ulrich: ulrich(&row),
            chi,
        });
    }
    entries
}

/// Admissible cases with `c1` between `0` and `2h`, up to swapping factors.
pub fn theorem_b(variety: Variety) -> TheoremB {
    let rank_times_degree = BigInt::from(2 * variety.degree());
    let entries = match variety {
        Variety::F => {
            let rows: Vec<_> = zero_c1_f()
                .into_iter()
                .chain(intermediate_table_f())
                .chain(ulrich_beta_f())
                .collect();
            collect(rows, |r| match r.c2 {
                C2Coefficients::Beta(b) => {
                    Rank2Chern::from_beta(r.alpha, b).chi_f().ok() == Some(rank_times_degree.clone())
                }
                C2Coefficients::Mu(_) => false,
            })
        }
        Variety::Phi => {
            let f_ulrich: Vec<(i64, i64)> = theorem_b(Variety::F)
                .entries
                .iter()
                .filter(|e| e.ulrich)
                .map(|e| e.alpha)
                .collect();
            collect(classify_phi(), |r| f_ulrich.contains(&r.alpha))
        }
    };
    TheoremB {
        variety,
        excluded: excluded(&entries),
        entries,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBoundRow {
    pub alpha: (i64, i64),
    pub hc2: i64,
    pub c1c2: i64,
    /// Every non-negative solution of the identities.
    pub betas: Vec<(i64, i64)>,
    /// `chi(E^v(h))` from the numerical data.
    pub chi_dual_twist_h: i64,
    /// `None` when the candidate survives.
    pub elimination: Option<Status>,
}

/// `chi(E^v(h))` from `(alpha, c1c2, hc2)` of `E`, using
/// `c1' = 2h - c1` and `c2' = c2 - c1*h + h^2`.
pub fn chi_dual_twist_h_numerical(alpha: (i64, i64), c1c2: i64, hc2: i64) -> i64 {
    let v = Variety::F;
    let h = ChowClass::hyperplane(v);
    let c1 = DivisorClass::new(v, alpha.0, alpha.1).to_class();
    let deg = |f: &[&ChowClass]| to_i64(ChowClass::intersect(f));
    let c1hh = deg(&[&c1, &h, &h]);
    let c1c1h = deg(&[&c1, &c1, &h]);
    let hhh = deg(&[&h, &h, &h]);
    let hc2_new = hc2 - c1hh + hhh;
    let c1c2_new = 2 * hc2 - 2 * c1hh + 2 * hhh - c1c2 + c1c1h - c1hh;
    to_i64(chi_f_numerical((2 - alpha.0, 2 - alpha.1), c1c2_new, hc2_new).expect("integral"))
}

/// First Chern classes with `a2` in `{3, 4}`, together with `2h` for
/// comparison.
pub fn upper_bound_elimination() -> Vec<UpperBoundRow> {
    let alphas = std::iter::once((2, 2)).chain((3..=4).flat_map(|a2| (0..=2).map(move |a1| (a1, a2))));
    alphas
        .map(|alpha| {
            let c1c2 = to_i64(c1c2_rhs(alpha));
            let hc2 = to_i64(hc2_rhs(alpha, false));
            let sols = solve_beta(alpha, (0, 0)).expect("zero is admissible");
            let chi = chi_dual_twist_h_numerical(alpha, c1c2, hc2);
            let elimination = if chi != 0 {
                Some(Status::by_rule(Rule::ChiDualTwistNonzero))
            } else if sols.is_empty() {
                Some(Status::EliminatedNoIntegerSolution {
                    detail: format!(
                        "{}*beta1 + {}*beta2 = {c1c2} and beta1 + beta2 = {hc2} have no integer solution",
                        alpha.0, alpha.1
                    ),
                })
            } else {
                sols.iter()
                    .find_map(|&b| curve_rule(&Rank2Chern::from_beta(alpha, b)))
                    .map(Status::by_rule)
            };
            UpperBoundRow {
                alpha,
                hc2,
                c1c2,
                betas: sols,
                chi_dual_twist_h: chi,
                elimination,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_dual_twist_matches_the_ring() {
        for (alpha, beta) in [((1, 2), (2, 2)), ((0, 3), (2, 0)), ((2, 4), (14, 5)), ((2, 2), (3, 5))] {
            let x = Rank2Chern::from_beta(alpha, beta);
            let ring = x.dual_twist_h().unwrap().chi_f().unwrap();
            let num = chi_dual_twist_h_numerical(alpha, to_i64(x.c1c2().unwrap()), to_i64(x.hc2()));
            assert_eq!(ring, BigInt::from(num));
        }
    }

    #[test]
    fn upper_bound() {
        let rows = upper_bound_elimination();
        assert_eq!(rows.len(), 7);
        for r in &rows {
            assert_eq!(r.chi_dual_twist_h, 12 - 3 * r.alpha.0 - 3 * r.alpha.1);
        }
        let get = |a| rows.iter().find(|r| r.alpha == a).unwrap();
        assert_eq!(get((2, 2)).elimination, None);
        assert!(matches!(
            get((1, 3)).elimination,
            Some(Status::EliminatedNoIntegerSolution { .. })
        ));
        assert_eq!(
            get((0, 4)).elimination,
            Some(Status::by_rule(Rule::FourSkewLinesSplitting))
        );
        assert_eq!(get((0, 4)).betas, [(4, 0)]);
        assert_eq!(
            get((2, 3)).elimination,
            Some(Status::by_rule(Rule::ChiDualTwistNonzero))
        );
    }

    #[test]
    fn final_lists() {
        let f = theorem_b(Variety::F);
        let alphas: Vec<_> = f.entries.iter().map(|e| e.alpha).collect();
        assert_eq!(alphas, [(0, 0), (0, 1), (1, 2), (2, 2)]);
        assert_eq!(f.excluded, [(0, 2), (1, 1)]);
        let desc: Vec<_> = f.entries.iter().map(|e| e.description.as_str()).collect();
        assert_eq!(
            desc,
            [
                "line",
                "line",
                "quartic curve of arithmetic genus 0",
                "elliptic normal curve of degree 8"
            ]
        );
        assert_eq!(f.entries.iter().filter(|e| e.ulrich).count(), 1);
        assert!(f.entries[3].ulrich);
        assert_eq!(f.entries[3].c2, [(3, 5), (4, 4), (5, 3)].map(C2Coefficients::Beta));

        let p = theorem_b(Variety::Phi);
        let desc: Vec<_> = p.entries.iter().map(|e| e.description.as_str()).collect();
        assert_eq!(
            desc,
            [
                "plane",
                "plane",
                "quartic surface",
                "del Pezzo surface of degree 8 isomorphic to F1"
            ]
        );
        assert!(p.entries[3].ulrich);
        assert_eq!(p.excluded, [(0, 2), (1, 1)]);
    }
}
