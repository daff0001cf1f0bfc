//! Del Pezzo surfaces of degree 8 mapped into Phi by a pair of linear
//! systems whose sum is anticanonical.
//!
//! On F1 the classes are `a*l + b*m` with `l^2 = -1`, `l*m = 1`, `m^2 = 0`
//! (`l` the exceptional curve, `m` a fibre). On the quadric `P1 x P1` they are
//! `a*e + b*f` with `e^2 = f^2 = 0`, `e*f = 1`.

use serde::Serialize;

use super::intermediate::ulrich_betas;
use super::witness::{split_name, split_witness};
use super::{Rule, Status, Witness, WitnessKind};
use crate::chern::Rank2Chern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Surface {
    F1,
    Q,
}

impl Surface {
    pub const ALL: [Surface; 2] = [Surface::F1, Surface::Q];

    /// Coefficients `(a, b)` of the anticanonical class.
    pub fn anticanonical(self) -> (i64, i64) {
        match self {
            Surface::F1 => (2, 3),
            Surface::Q => (2, 2),
        }
    }

    pub fn intersect(self, x: (i64, i64), y: (i64, i64)) -> i64 {
        match self {
            Surface::F1 => -x.0 * y.0 + x.0 * y.1 + x.1 * y.0,
            Surface::Q => x.0 * y.1 + x.1 * y.0,
        }
    }

    /// `h^0(O(a, b))` for a class with no base points.
    pub fn h0(self, (a, b): (i64, i64)) -> Option<i64> {
        let c2 = |n: i64| if n < 2 { 0 } else { n * (n - 1) / 2 };
        match self {
            // plane curves of degree b with multiplicity b - a at a point
            Surface::F1 => (b >= a && a >= 0).then(|| c2(b + 2) - c2(b - a + 1)),
            Surface::Q => (a >= 0 && b >= 0).then(|| (a + 1) * (b + 1)),
        }
    }

    fn basis_names(self) -> [&'static str; 2] {
        match self {
            Surface::F1 => ["l", "m"],
            Surface::Q => ["e", "f"],
        }
    }
}

impl std::fmt::Display for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Surface::F1 => "F1",
            Surface::Q => "Q",
        })
    }
}

impl std::str::FromStr for Surface {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F1" | "f1" => Ok(Surface::F1),
            "Q" | "q" => Ok(Surface::Q),
            _ => Err(format!("unknown surface `{s}`, expected F1 or Q")),
        }
    }
}

/// Factor maps given by `eta_i -> a_i*x + b_i*y` in the surface basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingCandidate {
    pub surface: Surface,
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub mu: (i64, i64, i64),
    /// `h^0` of each factor system, when it has no base points.
    pub h0: (Option<i64>, Option<i64>),
    /// `(mu1 + mu3, mu2 + mu3)`, the `beta` of the restriction to F.
    pub restricted_beta: (i64, i64),
    pub status: Status,
}

impl EmbeddingCandidate {
    pub fn factor_class(&self, i: usize) -> (i64, i64) {
        match i {
            1 => (self.a.0, self.b.0),
            _ => (self.a.1, self.b.1),
        }
    }

    pub fn describe(&self) -> String {
        let [x, y] = self.surface.basis_names();
        let c = |i| {
            let (p, q) = self.factor_class(i);
            format!("{p}{x} + {q}{y}")
        };
        format!("{} with eta1 -> {}, eta2 -> {}", self.surface, c(1), c(2))
    }
}

fn resolve(
    surface: Surface,
    a: (i64, i64),
    b: (i64, i64),
    mu: (i64, i64, i64),
    h0: (Option<i64>, Option<i64>),
    beta: (i64, i64),
) -> Status {
    if h0.0.is_none() || h0.1.is_none() {
        return Status::by_rule(Rule::BasePointFailure);
    }
    if h0.0.unwrap() <= 2 || h0.1.unwrap() <= 2 {
        return Status::by_rule(Rule::DegenerateFactorMap);
    }
    let canonical = if beta.0 <= beta.1 { beta } else { (beta.1, beta.0) };
    if !ulrich_betas().contains(&canonical) {
        return Status::by_rule(Rule::RestrictionNotUlrich);
    }
    let x = Rank2Chern::from_mu((2, 2), mu);
    if let Some(pair) = split_witness(&x) {
        return Status::Decomposable {
            splitting: split_name(x.variety(), pair),
            evidence: "the surface is a complete intersection of divisors of classes 2*eta1 and 2*eta2".to_string(),
        };
    }
    if surface == Surface::Q && a == (1, 1) && b == (1, 1) {
        return Status::by_rule(Rule::ProjectionHyperplane);
    }
    Status::Admissible { witnesses: Vec::new() }
}

/// All candidates with non-negative coefficients summing to the
/// anticanonical class, resolved.
pub fn del_pezzo_embeddings(surface: Surface) -> Vec<EmbeddingCandidate> {
    let (ka, kb) = surface.anticanonical();
    let mut out = Vec::new();
    for a1 in 0..=ka {
        for b1 in 0..=kb {
            let (a, b) = ((a1, ka - a1), (b1, kb - b1));
            let d1 = (a.0, b.0);
            let d2 = (a.1, b.1);
            let mu = (
                surface.intersect(d1, d1),
                surface.intersect(d2, d2),
                surface.intersect(d1, d2),
            );
            let h0 = (surface.h0(d1), surface.h0(d2));
            let restricted_beta = (mu.0 + mu.2, mu.1 + mu.2);
            let status = resolve(surface, a, b, mu, h0, restricted_beta);
            let mut cand = EmbeddingCandidate {
                surface,
                a,
                b,
                mu,
                h0,
                restricted_beta,
                status,
            };
            let description = format!("zero locus {}", cand.describe());
            if let Status::Admissible { witnesses } = &mut cand.status {
                witnesses.push(Witness {
                    kind: WitnessKind::SurfaceEmbedding,
                    description,
                    evidence: format!(
                        "both systems base point free with {} and {} sections; degree {}",
                        h0.0.unwrap(),
                        h0.1.unwrap(),
                        surface.intersect((ka, kb), (ka, kb))
                    ),
                });
            }
            out.push(cand);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn admissible_mu(s: Surface) -> Vec<(i64, i64, i64)> {
        del_pezzo_embeddings(s)
            .into_iter()
            .filter(|c| c.status.is_admissible())
            .map(|c| c.mu)
            .collect()
    }

    #[test]
    fn counts_and_degree() {
        assert_eq!(del_pezzo_embeddings(Surface::F1).len(), 12);
        assert_eq!(del_pezzo_embeddings(Surface::Q).len(), 9);
        for s in Surface::ALL {
            let k = s.anticanonical();
            assert_eq!(s.intersect(k, k), 8);
        }
    }

    #[test]
    fn f1_gives_the_two_mixed_classes() {
        assert_eq!(admissible_mu(Surface::F1), vec![(1, 3, 2), (3, 1, 2)]);
    }

    #[test]
    fn quadric_gives_nothing_new() {
        assert!(admissible_mu(Surface::Q).is_empty());
        let q = del_pezzo_embeddings(Surface::Q);
        let proj: Vec<_> = q
            .iter()
            .filter(|c| c.status == Status::by_rule(Rule::ProjectionHyperplane))
            .collect();
        assert_eq!(proj.len(), 1);
        assert_eq!(proj[0].mu, (2, 2, 2));
        let split: Vec<_> = q
            .iter()
            .filter(|c| matches!(c.status, Status::Decomposable { .. }))
            .map(|c| c.mu)
            .collect();
        assert_eq!(split, vec![(0, 0, 4), (0, 0, 4)]);
    }

    #[test]
    fn base_point_example() {
        let c = del_pezzo_embeddings(Surface::F1)
            .into_iter()
            .find(|c| c.a == (0, 2) && c.b == (2, 1))
            .unwrap();
        assert_eq!(c.status, Status::by_rule(Rule::BasePointFailure));
    }

    #[test]
    fn h0_on_f1() {
        assert_eq!(Surface::F1.h0((0, 1)), Some(2));
        assert_eq!(Surface::F1.h0((1, 1)), Some(3));
        assert_eq!(Surface::F1.h0((1, 2)), Some(5));
        assert_eq!(Surface::F1.h0((2, 3)), Some(9));
        assert_eq!(Surface::F1.h0((2, 1)), None);
    }
}
