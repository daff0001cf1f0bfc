//! Finite search behind the vanishing `h^1(O(t+b1, t+b2-a2)) = 0` for
//! negative twists, used when bounding sections of rank-2 bundles on F.
//!
//! The only exception inside the hypotheses is `(a2, b1, b2, t) = (1, 2, 0, -1)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::cohomology::cohom;
use crate::variety::Variety;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaWindow {
    /// Smallest twist searched; the largest is always `-1`.
    pub min_twist: i64,
    /// Smallest value of `b1` and `b2`; the largest is always `2`.
    pub min_b: i64,
}

impl Default for LemmaWindow {
    fn default() -> Self {
        LemmaWindow {
            min_twist: -12,
            min_b: -12,
        }
    }
}

pub fn lemma_probe(a2: i64, b1: i64, b2: i64, t: i64) -> BigInt {
    cohom(Variety::F, t + b1, t + b2 - a2).h[1].clone()
}

/// All `(a2, b1, b2, t)` with `0 <= a2 <= 2`, `|b1 - b2| <= 2`,
/// `min(b1, b2) <= 0`, `b1, b2 <= 2`, `t <= -1` and a nonzero probe.
pub fn lemma_vanishing_search(window: LemmaWindow) -> BTreeSet<(i64, i64, i64, i64)> {
    let mut out = BTreeSet::new();
    for a2 in 0..=2 {
        for b1 in window.min_b..=2 {
            for b2 in window.min_b..=2 {
                if (b1 - b2).abs() > 2 || b1.min(b2) > 0 {
                    continue;
                }
                for t in window.min_twist..=-1 {
                    if !lemma_probe(a2, b1, b2, t).is_zero() {
                        out.insert((a2, b1, b2, t));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_exception() {
        let found = lemma_vanishing_search(LemmaWindow::default());
        assert_eq!(found.into_iter().collect::<Vec<_>>(), vec![(1, 2, 0, -1)]);
    }

    #[test]
    fn stable_under_a_wider_window() {
        let wide = LemmaWindow {
            min_twist: -40,
            min_b: -40,
        };
        assert_eq!(
            lemma_vanishing_search(wide),
            lemma_vanishing_search(LemmaWindow::default())
        );
    }
}
