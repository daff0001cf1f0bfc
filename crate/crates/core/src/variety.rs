use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// One of the two del Pezzo sextics handled by this crate.
///
/// `F` is the flag threefold of point-line pairs in P2, embedded in P7 as a
/// hyperplane section of the Segre fourfold `Phi = P2 x P2` in P8. Both have
/// Picard group Z^2, generated by the pullbacks of O(1) from the two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variety {
    F,
    Phi,
}

impl Variety {
    pub const ALL: [Variety; 2] = [Variety::F, Variety::Phi];

    pub fn dimension(self) -> usize {
        match self {
            Variety::F => 3,
            Variety::Phi => 4,
        }
    }

    /// The integer `k` with `omega = O(k * hyperplane)`.
    pub fn canonical_twist(self) -> i64 {
        match self {
            Variety::F => -2,
            Variety::Phi => -3,
        }
    }

    /// Top self-intersection of the hyperplane class.
    pub fn degree(self) -> u32 {
        6
    }

    pub fn name(self) -> &'static str {
        match self {
            Variety::F => "F",
            Variety::Phi => "Phi",
        }
    }

    /// ASCII names of the two Picard generators.
    pub fn generator_names(self) -> [&'static str; 2] {
        match self {
            Variety::F => ["h1", "h2"],
            Variety::Phi => ["eta1", "eta2"],
        }
    }

    pub fn hyperplane_name(self) -> &'static str {
        match self {
            Variety::F => "h",
            Variety::Phi => "eta",
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown variety `{0}` (expected `F` or `Phi`)")]
pub struct UnknownVariety(pub String);

impl FromStr for Variety {
    type Err = UnknownVariety;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F" => Ok(Variety::F),
            "Phi" => Ok(Variety::Phi),
            other => Err(UnknownVariety(other.to_string())),
        }
    }
}

impl Serialize for Variety {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_canonical_twists() {
        assert_eq!(Variety::F.dimension(), 3);
        assert_eq!(Variety::Phi.dimension(), 4);
        assert_eq!(Variety::F.canonical_twist(), -2);
        assert_eq!(Variety::Phi.canonical_twist(), -3);
    }

    #[test]
    fn parses_ascii_names() {
        assert_eq!("F".parse::<Variety>().unwrap(), Variety::F);
        assert_eq!("Phi".parse::<Variety>().unwrap(), Variety::Phi);
        assert!("phi".parse::<Variety>().is_err());
    }
}
