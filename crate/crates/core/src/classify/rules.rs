use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::chern::Rank2Chern;
use crate::chow::ChowClass;
use crate::variety::Variety;

/// Geometric arguments that exclude a candidate once its numerical
/// preconditions have been checked by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    EmptyZeroLocusGlobalGeneration,
    KoszulGlobalGeneration,
    DoubleLineConormal,
    FourSkewLinesSplitting,
    ChiDualTwistNonzero,
    ProjectionHyperplane,
    DegenerateFactorMap,
    BasePointFailure,
    RestrictionNotUlrich,
    NoDelPezzoEmbedding,
}

impl Rule {
    pub const ALL: [Rule; 10] = [
        Rule::EmptyZeroLocusGlobalGeneration,
        Rule::KoszulGlobalGeneration,
        Rule::DoubleLineConormal,
        Rule::FourSkewLinesSplitting,
        Rule::ChiDualTwistNonzero,
        Rule::ProjectionHyperplane,
        Rule::DegenerateFactorMap,
        Rule::BasePointFailure,
        Rule::RestrictionNotUlrich,
        Rule::NoDelPezzoEmbedding,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::EmptyZeroLocusGlobalGeneration => "empty-zero-locus-global-generation",
            Rule::KoszulGlobalGeneration => "koszul-global-generation",
            Rule::DoubleLineConormal => "double-line-conormal",
            Rule::FourSkewLinesSplitting => "four-skew-lines-splitting",
            Rule::ChiDualTwistNonzero => "chi-dual-twist-nonzero",
            Rule::ProjectionHyperplane => "projection-hyperplane",
            Rule::DegenerateFactorMap => "degenerate-factor-map",
            Rule::BasePointFailure => "base-point-failure",
            Rule::RestrictionNotUlrich => "restriction-not-ulrich",
            Rule::NoDelPezzoEmbedding => "no-del-pezzo-embedding",
        }
    }

    pub fn justification(self) -> &'static str {
        match self {
            Rule::EmptyZeroLocusGlobalGeneration => {
                "The curve part of the zero locus is empty, so I_Z(c1-D) = O(c1-D). \
                 With D and c1-D effective and h^1(O(D)) = 0 the twisted bundle E(-D) \
                 is globally generated and a general section has no zeros. Then \
                 E(-D) splits off a trivial summand, so E is decomposable."
            }
            Rule::KoszulGlobalGeneration => {
                "The curve part is h_j^2, a complete intersection of two divisors in |h_j|. \
                 Its ideal twisted by c1-D is globally generated when c1-D-h_j is effective, \
                 and h^1(O(D)) = 0 lifts the generation to E(-D). A general section then \
                 vanishes nowhere in the expected codimension, which forces D = 0."
            }
            Rule::DoubleLineConormal => {
                "A curve of degree 2 and arithmetic genus 0 in the class 2*h_j^2 that is \
                 not two disjoint lines is a double structure on a fibre line. The conormal \
                 bundle of that line is trivial, so it has no quotient of negative degree \
                 and the double structure cannot be the zero locus of a section."
            }
            Rule::FourSkewLinesSplitting => {
                "c2 = 4*h_j^2 with degree 4 and genus -3 means the zero locus is four \
                 disjoint fibre lines over four points of P2. Running through the \
                 configurations of four points shows the bundle is O(2h_j) + O(2h_j) or \
                 does not exist."
            }
            Rule::ChiDualTwistNonzero => {
                "For a regular initialized aCM bundle E^v(h) has no cohomology, so \
                 chi(E^v(h)) = 0. The numerical identities give 12 - 3*a1 - 3*a2 instead, \
                 which is nonzero here."
            }
            Rule::ProjectionHyperplane => {
                "Both factor maps come from O(l+m) on a quadric surface, i.e. from the \
                 projection of the quadric in P3 to P2. The resulting surface spans only \
                 a hyperplane of P8, so it is not the anticanonical model."
            }
            Rule::DegenerateFactorMap => {
                "One factor map is given by a linear system with at most two sections. \
                 Its image is a point or a line, so the surface lies in a divisor of \
                 class eta_i and is not the zero locus of a section of G."
            }
            Rule::BasePointFailure => {
                "The factor map needs a base point free system O(a*l + b*m) on F1. \
                 When b < a every section contains the exceptional curve l, so the \
                 system has base points."
            }
            Rule::RestrictionNotUlrich => {
                "The restriction of G to a hyperplane section must be one of the Ulrich \
                 bundles on F, and the restricted c2 is not one of them."
            }
            Rule::NoDelPezzoEmbedding => {
                "The zero locus must be an anticanonically embedded del Pezzo surface of \
                 degree 8 inside Phi. No base point free, nondegenerate pair of factor \
                 maps from F1 or P1 x P1 produces this c2."
            }
        }
    }
}

/// Rules about the zero-locus curve of a section on F that apply to `x`,
/// checked on the class of `c2`, its degree and arithmetic genus.
pub(crate) fn curve_rule(x: &Rank2Chern) -> Option<Rule> {
    let v = Variety::F;
    let inv = x.zero_locus_invariants().ok()?;
    let genus = inv.arithmetic_genus?;
    let fibre_multiple = |k: i64| {
        [1u8, 2].into_iter().any(|j| {
            let hj = ChowClass::generator(v, j);
            x.c2 == (&hj * &hj).scale(k)
        })
    };
    if fibre_multiple(2) && inv.degree == 2.into() && genus.is_zero() {
        return Some(Rule::DoubleLineConormal);
    }
    if fibre_multiple(4) && inv.degree == 4.into() && genus == (-3).into() {
        return Some(Rule::FourSkewLinesSplitting);
    }
    None
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_distinct_and_justified() {
        let ids: std::collections::BTreeSet<_> = Rule::ALL.iter().map(|r| r.id()).collect();
        assert_eq!(ids.len(), Rule::ALL.len());
        assert!(Rule::ALL.iter().all(|r| r.justification().len() > 40));
    }
}
