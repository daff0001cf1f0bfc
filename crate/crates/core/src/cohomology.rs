//! Cohomology of line bundles on P2, F and Phi.
//!
//! On F the dimension is given by a closed cubic on one of four regions of the
//! `(a1, a2)` plane and vanishes elsewhere; on Phi it follows from Kuenneth.
//! Everything is exact. The scan-based functions at the bottom re-derive the
//! analytic decisions by brute force and exist for cross-checking.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::json::{serialize_bigint_slice, Big};
use crate::variety::Variety;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("intermediate cohomology index on {variety} must lie in 1..={max}, got {index}")]
    IndexOutOfRange { variety: Variety, index: usize, max: usize },
}

/// `C(n, 2)`, zero for `n < 2`.
fn choose2(n: i64) -> BigInt {
    if n < 2 {
        BigInt::zero()
    } else {
        BigInt::from(n) * BigInt::from(n - 1) / 2
    }
}

/// `(h0, h1, h2)` of `O(a)` on P2.
pub fn cohom_p2(a: i64) -> [BigInt; 3] {
    let h0 = if a >= 0 { choose2(a + 2) } else { BigInt::zero() };
    let h2 = if a <= -3 { choose2(-a - 1) } else { BigInt::zero() };
    [h0, BigInt::zero(), h2]
}

/// Cohomology dimensions `(h^0, ..., h^n)` of `O(a1, a2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomTable {
    pub variety: Variety,
    pub bundle: (i64, i64),
    pub h: Vec<BigInt>,
}

impl CohomTable {
    pub fn alternating_sum(&self) -> BigInt {
        self.h
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (i, x)| if i % 2 == 0 { acc + x } else { acc - x })
    }

    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.h.len()).filter(|&i| !self.h[i].is_zero()).collect()
    }
}

impl Serialize for CohomTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct H<'a>(&'a [BigInt]);
        impl Serialize for H<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                serialize_bigint_slice(self.0, s)
            }
        }
        let mut st = serializer.serialize_struct("CohomTable", 3)?;
        st.serialize_field("variety", &self.variety)?;
        st.serialize_field("bundle", &[self.bundle.0, self.bundle.1])?;
        st.serialize_field("h", &H(&self.h))?;
        st.end()
    }
}

/// The cubic `(a1+1)(a2+1)(a1+a2+2)/2`; the product is always even.
fn f_cubic(a1: i64, a2: i64) -> BigInt {
    BigInt::from(a1 + 1) * BigInt::from(a2 + 1) * BigInt::from(a1 + a2 + 2) / 2
}

/// The index `i` with `h^i(F, O(a1, a2)) != 0`, if any.
pub fn f_nonzero_index(a1: i64, a2: i64) -> Option<usize> {
    let (lo, hi) = (a1.min(a2), a1.max(a2));
    if lo >= 0 {
        Some(0)
    } else if lo <= -2 && lo + hi + 1 >= 0 {
        Some(1)
    } else if hi >= 0 && lo + hi + 3 <= 0 {
        Some(2)
    } else if hi <= -2 {
        Some(3)
    } else {
        None
    }
}

pub fn cohom_f(a1: i64, a2: i64) -> CohomTable {
    let mut h = vec![BigInt::zero(); 4];
    if let Some(i) = f_nonzero_index(a1, a2) {
        let v = f_cubic(a1, a2);
        h[i] = if i % 2 == 0 { v } else { -v };
    }
    CohomTable {
        variety: Variety::F,
        bundle: (a1, a2),
        h,
    }
}

pub fn cohom_phi(a1: i64, a2: i64) -> CohomTable {
    let x = cohom_p2(a1);
    let y = cohom_p2(a2);
    let mut h = vec![BigInt::zero(); 5];
    for p in 0..3 {
        for q in 0..3 {
            h[p + q] += &x[p] * &y[q];
        }
    }
    CohomTable {
        variety: Variety::Phi,
        bundle: (a1, a2),
        h,
    }
}

pub fn cohom(variety: Variety, a1: i64, a2: i64) -> CohomTable {
    match variety {
        Variety::F => cohom_f(a1, a2),
        Variety::Phi => cohom_phi(a1, a2),
    }
}

/// Euler characteristic of `O(a1, a2)` as a polynomial in the coefficients.
pub fn euler_line(variety: Variety, a1: i64, a2: i64) -> BigInt {
    match variety {
        Variety::F => f_cubic(a1, a2),
        Variety::Phi => {
            let p2 = |a: i64| BigInt::from(a + 1) * BigInt::from(a + 2) / 2;
            p2(a1) * p2(a2)
        }
    }
}

/// The cells of the cohomology picture for line bundles on F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    H0,
    H1Upper,
    H2Upper,
    H2Lower,
    H1Lower,
    H3,
    Zero,
}

impl Region {
    pub const ALL: [Region; 7] = [
        Region::H0,
        Region::H1Upper,
        Region::H2Upper,
        Region::H2Lower,
        Region::H1Lower,
        Region::H3,
        Region::Zero,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Region::H0 => "H0",
            Region::H1Upper => "H1_upper",
            Region::H2Upper => "H2_upper",
            Region::H2Lower => "H2_lower",
            Region::H1Lower => "H1_lower",
            Region::H3 => "H3",
            Region::Zero => "Zero",
        }
    }

    /// The nonvanishing cohomology index, `None` for the vanishing region.
    pub fn index(self) -> Option<usize> {
        match self {
            Region::H0 => Some(0),
            Region::H1Upper | Region::H1Lower => Some(1),
            Region::H2Upper | Region::H2Lower => Some(2),
            Region::H3 => Some(3),
            Region::Zero => None,
        }
    }

    /// Caption used in plots, e.g. `h^1 != 0`.
    pub fn caption(self) -> String {
        match self.index() {
            Some(i) => format!("h^{i} != 0"),
            None => "all h^i = 0".to_string(),
        }
    }

    /// Image under `(x1, x2) -> (x2, x1)`.
    pub fn swapped(self) -> Region {
        match self {
            Region::H1Upper => Region::H1Lower,
            Region::H1Lower => Region::H1Upper,
            Region::H2Upper => Region::H2Lower,
            Region::H2Lower => Region::H2Upper,
            r => r,
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Region of the unsorted lattice point `(x1, x2)`.
pub fn figure1_region(x1: i64, x2: i64) -> Region {
    let s = x1 + x2;
    if x1 >= 0 && x2 >= 0 {
        Region::H0
    } else if x1 <= -2 && s >= -1 {
        Region::H1Upper
    } else if x2 <= -2 && s >= -1 {
        Region::H1Lower
    } else if x2 >= 0 && s <= -3 {
        Region::H2Upper
    } else if x1 >= 0 && s <= -3 {
        Region::H2Lower
    } else if x1 <= -2 && x2 <= -2 {
        Region::H3
    } else {
        Region::Zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleReport {
    pub variety: Variety,
    pub bundle: (i64, i64),
    pub h0: BigInt,
    pub is_acm: bool,
    pub initial_twist: i64,
    pub is_initialized: bool,
    pub is_ulrich: bool,
}

impl Serialize for LineBundleReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LineBundleReport", 7)?;
        st.serialize_field("variety", &self.variety)?;
        st.serialize_field("bundle", &[self.bundle.0, self.bundle.1])?;
        st.serialize_field("h0", &Big(&self.h0))?;
        st.serialize_field("is_acm", &self.is_acm)?;
        st.serialize_field("initial_twist", &self.initial_twist)?;
        st.serialize_field("is_initialized", &self.is_initialized)?;
        st.serialize_field("is_ulrich", &self.is_ulrich)?;
        st.end()
    }
}

/// Coefficients of a divisor class.
pub type Pair = (i64, i64);

/// A line bundle has no intermediate cohomology in any twist iff its two
/// coefficients differ by at most 2, on F as well as on Phi.
pub fn is_acm(a1: i64, a2: i64) -> bool {
    a1.abs_diff(a2) <= 2
}

/// `h^0(O(a1+t, a2+t)) != 0` iff both entries are non-negative, on both
/// varieties, so the first twist with sections is `-min(a1, a2)`.
pub fn initial_twist(a1: i64, a2: i64) -> i64 {
    -a1.min(a2)
}

pub fn classify_line_bundle(variety: Variety, a1: i64, a2: i64) -> LineBundleReport {
    let h0 = cohom(variety, a1, a2).h[0].clone();
    let is_acm = is_acm(a1, a2);
    let initial_twist = initial_twist(a1, a2);
    let is_initialized = initial_twist == 0;
    let is_ulrich = is_acm && is_initialized && h0 == BigInt::from(variety.degree());
    LineBundleReport {
        variety,
        bundle: (a1, a2),
        h0,
        is_acm,
        initial_twist,
        is_initialized,
        is_ulrich,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Nonvanishing {
    pub nonzero: bool,
    /// The smallest twist `t` with `h^i(O(a1+t, a2+t)) != 0`.
    pub witness: Option<i64>,
}

fn check_index(variety: Variety, index: usize) -> Result<(), CohomologyError> {
    let max = variety.dimension() - 1;
    if (1..=max).contains(&index) {
        Ok(())
    } else {
        Err(CohomologyError::IndexOutOfRange { variety, index, max })
    }
}

fn div_ceil(n: i64, d: i64) -> i64 {
    -((-n).div_euclid(d))
}

/// Whether the graded module `H^i_*(O(a1, a2))` is nonzero.
pub fn module_nonvanishing(variety: Variety, a1: i64, a2: i64, index: usize) -> Result<Nonvanishing, CohomologyError> {
    check_index(variety, index)?;
    let (lo, hi) = (a1.min(a2), a1.max(a2));
    let witness = if hi - lo < 3 {
        None
    } else {
        match (variety, index) {
            // lo+t <= -2 and lo+hi+2t+1 >= 0
            (Variety::F, 1) => Some(div_ceil(-(lo + hi + 1), 2)),
            // hi+t >= 0 and lo+hi+2t+3 <= 0
            (Variety::F, 2) => Some(-hi),
            // h^0 on one factor, h^2 on the other
            (Variety::Phi, 2) => Some(-hi),
            _ => None,
        }
    };
    Ok(Nonvanishing {
        nonzero: witness.is_some(),
        witness,
    })
}

/// Symmetric twist window wide enough to contain every twist at which a line
/// bundle can have nonzero intermediate cohomology.
pub fn scan_window(a1: i64, a2: i64) -> std::ops::RangeInclusive<i64> {
    let w = a1.abs() + a2.abs() + 5;
    -w..=w
}

/// `module_nonvanishing` by direct search over `scan_window`.
pub fn module_nonvanishing_by_scan(
    variety: Variety,
    a1: i64,
    a2: i64,
    index: usize,
) -> Result<Nonvanishing, CohomologyError> {
    check_index(variety, index)?;
    let witness = scan_window(a1, a2).find(|t| !cohom(variety, a1 + t, a2 + t).h[index].is_zero());
    Ok(Nonvanishing {
        nonzero: witness.is_some(),
        witness,
    })
}

pub fn is_acm_by_scan(variety: Variety, a1: i64, a2: i64) -> bool {
    let n = variety.dimension();
    scan_window(a1, a2).all(|t| {
        let tab = cohom(variety, a1 + t, a2 + t);
        tab.h[1..n].iter().all(Zero::is_zero)
    })
}

pub fn initial_twist_by_scan(variety: Variety, a1: i64, a2: i64) -> Option<i64> {
    scan_window(a1, a2).find(|t| cohom(variety, a1 + t, a2 + t).h[0].is_positive())
}

/// Lattice points of `[-bound, bound]^2` (both coordinates) that are
/// initialized aCM, and those that are Ulrich, found by scanning.
pub fn line_bundle_census(variety: Variety, bound: i64) -> (Vec<Pair>, Vec<Pair>) {
    let mut acm = Vec::new();
    let mut ulrich = Vec::new();
    for a1 in -bound..=bound {
        for a2 in -bound..=bound {
            if !is_acm_by_scan(variety, a1, a2) || initial_twist_by_scan(variety, a1, a2) != Some(0) {
                continue;
            }
            acm.push((a1, a2));
            if cohom(variety, a1, a2).h[0] == BigInt::from(variety.degree()) {
                ulrich.push((a1, a2));
            }
        }
    }
    (acm, ulrich)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hs(t: &CohomTable) -> Vec<i64> {
        t.h.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect()
    }

    #[test]
    fn p2_examples() {
        let v = |a| cohom_p2(a).map(|x| i64::try_from(x).unwrap());
        assert_eq!(v(0), [1, 0, 0]);
        assert_eq!(v(2), [6, 0, 0]);
        assert_eq!(v(-3), [0, 0, 1]);
        assert_eq!(v(-1), [0, 0, 0]);
        assert_eq!(v(-2), [0, 0, 0]);
    }

    #[test]
    fn f_examples() {
        assert_eq!(hs(&cohom_f(1, 1)), [8, 0, 0, 0]);
        assert_eq!(hs(&cohom_f(-2, 2)), [0, 3, 0, 0]);
        assert_eq!(hs(&cohom_f(-2, 1)), [0, 1, 0, 0]);
        assert_eq!(hs(&cohom_f(-1, -1)), [0, 0, 0, 0]);
        assert_eq!(hs(&cohom_f(-2, -2)), [0, 0, 0, 1]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(hs(&cohom_phi(1, 1)), [9, 0, 0, 0, 0]);
        assert_eq!(hs(&cohom_phi(0, 2)), [6, 0, 0, 0, 0]);
        assert_eq!(hs(&cohom_phi(2, -3)), [0, 0, 6, 0, 0]);
        assert_eq!(hs(&cohom_phi(-3, -3)), [0, 0, 0, 0, 1]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_line(Variety::F, 0, 0), BigInt::from(1));
        assert_eq!(euler_line(Variety::F, 1, 0), BigInt::from(3));
        assert_eq!(euler_line(Variety::Phi, 2, 0), BigInt::from(6));
    }

    #[test]
    fn cubic_is_nonzero_exactly_on_regions() {
        for a1 in -30..=30 {
            for a2 in -30..=30 {
                let inside = f_nonzero_index(a1, a2).is_some();
                assert_eq!(inside, !f_cubic(a1, a2).is_zero(), "({a1},{a2})");
            }
        }
    }

    #[test]
    fn region_examples() {
        assert_eq!(figure1_region(0, 0), Region::H0);
        assert_eq!(figure1_region(-2, 2), Region::H1Upper);
        assert_eq!(figure1_region(-1, -1), Region::Zero);
        assert_eq!(figure1_region(3, 2), Region::H0);
        assert_eq!(figure1_region(-7, 2), Region::H2Upper);
        assert_eq!(figure1_region(-3, 0), Region::H2Upper);
    }

    #[test]
    fn regions_agree_with_cohomology() {
        for a1 in -30..=30 {
            for a2 in -30..=30 {
                let r = figure1_region(a1, a2);
                assert_eq!(r.index(), f_nonzero_index(a1, a2));
                assert_eq!(figure1_region(a2, a1), r.swapped());
            }
        }
    }

    #[test]
    fn line_bundle_examples() {
        let r = classify_line_bundle(Variety::F, 0, 2);
        assert!(r.is_acm && r.is_initialized && r.is_ulrich);
        assert_eq!(r.h0, BigInt::from(6));
        let r = classify_line_bundle(Variety::F, 0, 1);
        assert!(r.is_acm && r.is_initialized && !r.is_ulrich);
        assert!(!classify_line_bundle(Variety::F, 0, 3).is_acm);
        let r = classify_line_bundle(Variety::Phi, 0, 2);
        assert!(r.is_acm && r.is_initialized && r.is_ulrich);
    }

    #[test]
    fn nonvanishing_examples() {
        // (0,3) twisted by -2 is (-2,1), which carries h^1 = 1; twisting by -3
        // gives (-3,0), which sits in an h^2 region.
        let n = module_nonvanishing(Variety::F, 0, 3, 1).unwrap();
        assert_eq!(
            n,
            Nonvanishing {
                nonzero: true,
                witness: Some(-2)
            }
        );
        assert_eq!(hs(&cohom_f(-2, 1))[1], 1);
        assert_eq!(figure1_region(-3, 0), Region::H2Upper);
        assert!(!module_nonvanishing(Variety::F, 0, 2, 1).unwrap().nonzero);
        let n = module_nonvanishing(Variety::F, 0, 3, 2).unwrap();
        assert_eq!(n, module_nonvanishing_by_scan(Variety::F, 0, 3, 2).unwrap());
        assert!(module_nonvanishing(Variety::F, 0, 3, 3).is_err());
        assert!(module_nonvanishing(Variety::Phi, 0, 3, 0).is_err());
        assert!(module_nonvanishing(Variety::Phi, 0, 3, 3).is_ok());
    }

    #[test]
    fn analytic_decisions_match_scans() {
        for v in Variety::ALL {
            for a1 in -12..=12 {
                for a2 in -12..=12 {
                    assert_eq!(is_acm(a1, a2), is_acm_by_scan(v, a1, a2));
                    assert_eq!(Some(initial_twist(a1, a2)), initial_twist_by_scan(v, a1, a2));
                    for i in 1..v.dimension() {
                        assert_eq!(
                            module_nonvanishing(v, a1, a2, i).unwrap(),
                            module_nonvanishing_by_scan(v, a1, a2, i).unwrap(),
                            "{v} ({a1},{a2}) i={i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn census() {
        for v in Variety::ALL {
            let (acm, ulrich) = line_bundle_census(v, 6);
            assert_eq!(acm, vec![(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]);
            assert_eq!(ulrich, vec![(0, 2), (2, 0)]);
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            serde_json::to_string(&cohom_f(-2, 2)).unwrap(),
            r#"{"variety":"F","bundle":[-2,2],"h":[0,3,0,0]}"#
        );
    }

    proptest! {
        #[test]
        fn serre_duality(a1 in -200i64..200, a2 in -200i64..200) {
            let f = cohom_f(a1, a2);
            let fd = cohom_f(-2 - a1, -2 - a2);
            for i in 0..4 {
                prop_assert_eq!(&f.h[i], &fd.h[3 - i]);
            }
            let p = cohom_phi(a1, a2);
            let pd = cohom_phi(-3 - a1, -3 - a2);
            for i in 0..5 {
                prop_assert_eq!(&p.h[i], &pd.h[4 - i]);
            }
        }

        #[test]
        fn euler_matches_alternating_sum(a1 in -200i64..200, a2 in -200i64..200) {
            for v in Variety::ALL {
                prop_assert_eq!(cohom(v, a1, a2).alternating_sum(), euler_line(v, a1, a2));
            }
        }

        #[test]
        fn restriction_relation(a1 in -200i64..200, a2 in -200i64..200) {
            let f = cohom_f(a1, a2);
            let lhs = &f.h[1] - &f.h[2];
            let rhs = &cohom_phi(a1 - 1, a2 - 1).h[2] - &cohom_phi(a1, a2).h[2];
            prop_assert_eq!(lhs, rhs);
        }
    }
}
