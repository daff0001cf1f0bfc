//! Enumeration of candidate Chern data for initialized, indecomposable aCM
//! rank-2 bundles on F and Phi, and their resolution into admissible,
//! decomposable or eliminated cases.
//!
//! Every candidate is produced by solving the numerical identities exactly
//! and is then resolved by the first check that applies: a negative
//! intersection number, an explicit witness bundle, a splitting, or a rule
//! whose arithmetic preconditions the engine verifies.

mod embedding;
mod intermediate;
mod lemma;
mod phi;
mod rules;
mod section4;
mod summary;
mod witness;

use serde::Serialize;

use crate::chern::ZeroLocusInvariants;
use crate::chow::ChowClass;
use crate::variety::Variety;

pub use embedding::{del_pezzo_embeddings, EmbeddingCandidate, Surface};
pub use intermediate::{intermediate_table_f, ulrich_beta_f, zero_c1_f, ELLIPTIC_MIN_BETA};
pub use lemma::{lemma_probe, lemma_vanishing_search, LemmaWindow};
pub use phi::{classify_phi, initializing_twists};
pub use rules::Rule;
pub use section4::{e_class, section4_table, solve_beta, ADMISSIBLE_DELTAS};
pub use summary::{
    chi_dual_twist_h_numerical, theorem_b, upper_bound_elimination, TheoremB, TheoremEntry, UpperBoundRow,
};
pub use witness::{
    cokernel_chern, cotangent_witness, extension_witnesses, find_witnesses, split_witness, Witness, WitnessKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("divisorial part ({0}, {1}) is not one of (0,0), (0,1), (0,2), (1,0), (2,0)")]
    InvalidDelta(i64, i64),
}

/// How a candidate was resolved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Status {
    /// Realized by at least one explicit bundle.
    Admissible { witnesses: Vec<Witness> },
    /// Some intersection number that must be non-negative is negative.
    EliminatedNegativeIntersection { values: Vec<NamedValue> },
    /// The numerical identities have no integer solution.
    EliminatedNoIntegerSolution { detail: String },
    /// Excluded by a geometric argument whose numerical preconditions hold.
    EliminatedByRule { rule: Rule, justification: String },
    /// Every bundle with these invariants splits.
    Decomposable { splitting: String, evidence: String },
    /// No check applied. Never expected in engine output.
    Unresolved,
}

impl Status {
    pub fn by_rule(rule: Rule) -> Self {
        Status::EliminatedByRule {
            rule,
            justification: rule.justification().to_string(),
        }
    }

    pub fn is_admissible(&self) -> bool {
        matches!(self, Status::Admissible { .. })
    }

    /// Short form used in CSV and Markdown output.
    pub fn summary(&self) -> String {
        match self {
            Status::Admissible { witnesses } => {
                let names: Vec<&str> = witnesses.iter().map(|w| w.description.as_str()).collect();
                format!("admissible: {}", names.join("; "))
            }
            Status::EliminatedNegativeIntersection { values } => {
                let vals: Vec<String> = values.iter().map(|v| format!("{} = {}", v.name, v.value)).collect();
                format!("eliminated: {}", vals.join(", "))
            }
            Status::EliminatedNoIntegerSolution { detail } => format!("eliminated: {detail}"),
            Status::EliminatedByRule { rule, .. } => format!("eliminated by rule {}", rule.id()),
            Status::Decomposable { splitting, .. } => format!("decomposable: {splitting}"),
            Status::Unresolved => "unresolved".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: i64,
}

/// Coefficients of `c2`: `(beta1, beta2)` on F, `(mu1, mu2, mu3)` on Phi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum C2Coefficients {
    Beta((i64, i64)),
    Mu((i64, i64, i64)),
}

impl std::fmt::Display for C2Coefficients {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            C2Coefficients::Beta((a, b)) => write!(f, "({a},{b})"),
            C2Coefficients::Mu((a, b, c)) => write!(f, "({a},{b},{c})"),
        }
    }
}

/// One candidate `(alpha, delta, e, hc2, c1c2, c2, [E])` with its resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub variety: Variety,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub alpha: (i64, i64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<(i64, i64)>,
    pub e: u8,
    pub hc2: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1c2: Option<i64>,
    pub c2: C2Coefficients,
    /// Class of the codimension-2 part of the zero locus, `c2 - c1*D + D^2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_class: Option<ChowClass>,
    pub zero_locus: ZeroLocusInvariants,
    pub status: Status,
}

fn to_i64(x: num_bigint::BigInt) -> i64 {
    i64::try_from(x).expect("classification quantities are small")
}

/// Resolution of a candidate with no divisorial part in the zero locus:
/// explicit witnesses first, then a splitting, then the curve rules on F.
pub(crate) fn resolve_bundle(x: &crate::chern::Rank2Chern, extra: Vec<Witness>) -> Status {
    let mut witnesses = witness::find_witnesses(x);
    witnesses.extend(extra);
    if !witnesses.is_empty() {
        return Status::Admissible { witnesses };
    }
    if let Some(pair) = witness::split_witness(x) {
        return Status::Decomposable {
            splitting: witness::split_name(x.variety(), pair),
            evidence: "Chern classes equal those of the sum of two initialized aCM line bundles, \
                       and no non-split extension of aCM line bundles has the same classes"
                .to_string(),
        };
    }
    if x.variety() == Variety::F {
        if let Some(rule) = rules::curve_rule(x) {
            return Status::by_rule(rule);
        }
    }
    Status::Unresolved
}
