//! Named consistency checks over the whole library.
//!
//! Checks are independent and run in parallel; the report lists them in a
//! fixed order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::chern::{dual_twist_h_closed_form, identity_ledger, Rank2Chern};
use crate::chow::{basis, ChowClass, DivisorClass};
use crate::classify::{
    classify_phi, del_pezzo_embeddings, intermediate_table_f, lemma_vanishing_search, section4_table, theorem_b,
    ulrich_beta_f, upper_bound_elimination, zero_c1_f, C2Coefficients, ClassificationRow, LemmaWindow, Rule, Status,
    Surface,
};
use crate::cohomology::{
    cohom, cohom_f, euler_line, figure1_region, is_acm, is_acm_by_scan, line_bundle_census, module_nonvanishing,
    module_nonvanishing_by_scan,
};
use crate::variety::Variety;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Cohomology,
    Chern,
    Classify,
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Scope::All),
            "cohomology" => Ok(Scope::Cohomology),
            "chern" => Ok(Scope::Chern),
            "classify" => Ok(Scope::Classify),
            _ => Err(format!("unknown scope `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "fail" };
            writeln!(f, "{}: {verdict} ({})", c.name, c.detail)?;
        }
        writeln!(f, "overall: {}", if self.overall { "pass" } else { "fail" })
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, fail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(fail())
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn square(r: i64) -> impl Iterator<Item = (i64, i64)> {
    (-r..=r).flat_map(move |a| (-r..=r).map(move |b| (a, b)))
}

// ---- cohomology ----

fn cohomology_formula() -> Outcome {
    for (a1, a2) in square(30) {
        let t = cohom_f(a1, a2);
        let region = figure1_region(a1, a2);
        let (lo, hi) = (a1.min(a2), a1.max(a2));
        let value = BigInt::from((lo + 1) * (hi + 1) * (lo + hi + 2) / 2);
        for (i, h) in t.h.iter().enumerate() {
            let expected = match region.index() {
                Some(j) if j == i => {
                    if i % 2 == 0 {
                        value.clone()
                    } else {
                        -value.clone()
                    }
                }
                _ => BigInt::zero(),
            };
            ensure(*h == expected, || {
                format!("h^{i}(O({a1},{a2})) = {h}, expected {expected}")
            })?;
        }
        if let Some(j) = region.index() {
            ensure(!t.h[j].is_zero(), || {
                format!("closed form vanishes inside region at ({a1},{a2})")
            })?;
        }
    }
    Ok("61^2 bundles match region and closed form".into())
}

fn bott_uniqueness() -> Outcome {
    for v in Variety::ALL {
        for (a1, a2) in square(30) {
            let n = cohom(v, a1, a2).nonzero_indices().len();
            ensure(n <= 1, || format!("{v}: O({a1},{a2}) has {n} nonzero entries"))?;
        }
    }
    Ok("at most one nonzero h^i for |a_i| <= 30 on F and Phi".into())
}

fn named_dimensions() -> Outcome {
    let a = cohom_f(-2, 2).h[1].clone();
    let b = cohom_f(-2, 1).h[1].clone();
    ensure(a == big(3) && b == big(1), || {
        format!("h^1(O(-2,2)) = {a}, h^1(O(-2,1)) = {b}")
    })?;
    Ok("h^1(O(-2,2)) = 3, h^1(O(-2,1)) = 1".into())
}

fn serre_duality() -> Outcome {
    for (a1, a2) in square(20) {
        for v in Variety::ALL {
            let n = v.dimension();
            let k = v.canonical_twist();
            let x = cohom(v, a1, a2);
            let y = cohom(v, k - a1, k - a2);
            for i in 0..=n {
                ensure(x.h[i] == y.h[n - i], || format!("{v}: ({a1},{a2}) index {i}"))?;
            }
        }
    }
    Ok("|a_i| <= 20 on F and Phi".into())
}

fn restriction_relation() -> Outcome {
    // 0 -> O_Phi(a - 1) -> O_Phi(a) -> O_F(a) -> 0
    for (a1, a2) in square(20) {
        let f = cohom(Variety::F, a1, a2);
        let lhs = &f.h[1] - &f.h[2];
        let rhs = &cohom(Variety::Phi, a1 - 1, a2 - 1).h[2] - &cohom(Variety::Phi, a1, a2).h[2];
        ensure(lhs == rhs, || format!("h^1 - h^2 at ({a1},{a2}): {lhs} != {rhs}"))?;
        let chi = euler_line(Variety::Phi, a1, a2) - euler_line(Variety::Phi, a1 - 1, a2 - 1);
        ensure(f.alternating_sum() == chi, || format!("chi at ({a1},{a2})"))?;
    }
    Ok("|a_i| <= 20".into())
}

fn euler_consistency() -> Outcome {
    for v in Variety::ALL {
        for (a1, a2) in square(30) {
            ensure(cohom(v, a1, a2).alternating_sum() == euler_line(v, a1, a2), || {
                format!("{v}: ({a1},{a2})")
            })?;
        }
    }
    Ok("|a_i| <= 30 on F and Phi".into())
}

fn factor_symmetry() -> Outcome {
    for v in Variety::ALL {
        for (a1, a2) in square(30) {
            ensure(cohom(v, a1, a2).h == cohom(v, a2, a1).h, || format!("{v}: ({a1},{a2})"))?;
        }
    }
    Ok("|a_i| <= 30 on F and Phi".into())
}

fn nonvanishing_equivalence() -> Outcome {
    for (a1, a2) in square(20) {
        let m1 = module_nonvanishing(Variety::F, a1, a2, 1).expect("index 1");
        let m2 = module_nonvanishing(Variety::F, a1, a2, 2).expect("index 2");
        ensure(m1.nonzero == m2.nonzero, || format!("({a1},{a2})"))?;
        ensure(m1.nonzero == !is_acm(a1, a2), || {
            format!("aCM criterion at ({a1},{a2})")
        })?;
        for v in Variety::ALL {
            for i in 1..v.dimension() {
                let a = module_nonvanishing(v, a1, a2, i).expect("in range");
                let s = module_nonvanishing_by_scan(v, a1, a2, i).expect("in range");
                ensure(a == s, || {
                    format!("{v}: ({a1},{a2}) index {i}: analytic {a:?}, scan {s:?}")
                })?;
            }
            ensure(is_acm(a1, a2) == is_acm_by_scan(v, a1, a2), || {
                format!("{v}: aCM scan at ({a1},{a2})")
            })?;
        }
    }
    Ok("analytic and scanned module tests agree for |a_i| <= 20".into())
}

fn line_bundle_census_check() -> Outcome {
    let acm: BTreeSet<_> = [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)].into();
    let ulrich: BTreeSet<_> = [(0, 2), (2, 0)].into();
    for v in Variety::ALL {
        let (a, u) = line_bundle_census(v, 6);
        let (a, u): (BTreeSet<_>, BTreeSet<_>) = (a.into_iter().collect(), u.into_iter().collect());
        ensure(a == acm && u == ulrich, || format!("{v}: aCM {a:?}, Ulrich {u:?}"))?;
    }
    Ok("5 initialized aCM and 2 Ulrich line bundles on F and Phi".into())
}

// ---- chern ----

fn chow_closed_forms() -> Outcome {
    let v = Variety::F;
    let h = ChowClass::hyperplane(v);
    let omega2 = (&ChowClass::generator(v, 1) * &ChowClass::generator(v, 2)).scale(6);
    let deg = |x: ChowClass| x.degree().expect("top codimension");
    for (a1, a2) in square(10) {
        let c = DivisorClass::new(v, a1, a2).to_class();
        let checks = [
            (deg(c.pow(3)), 3 * (a1 * a1 * a2 + a1 * a2 * a2), "c1^3"),
            (deg(&c.pow(2) * &h), a1 * a1 + 4 * a1 * a2 + a2 * a2, "c1^2*h"),
            (deg(&c * &h.pow(2)), 3 * (a1 + a2), "c1*h^2"),
            (deg(&omega2 * &c), 6 * (a1 + a2), "omega2*c1"),
        ];
        for (got, want, name) in checks {
            ensure(got == big(want), || format!("{name} at ({a1},{a2}): {got} != {want}"))?;
        }
    }
    let d_f = deg(h.pow(3));
    let d_phi = deg(ChowClass::hyperplane(Variety::Phi).pow(4));
    ensure(d_f == big(6) && d_phi == big(6), || {
        format!("deg F = {d_f}, deg Phi = {d_phi}")
    })?;
    Ok("four closed forms for |a_i| <= 10; deg F = deg Phi = 6".into())
}

fn chow_ring_axioms() -> Outcome {
    for v in Variety::ALL {
        let b: Vec<ChowClass> = basis(v).iter().map(|&m| ChowClass::monomial(v, m, 1)).collect();
        for x in &b {
            for y in &b {
                ensure(x * y == y * x, || format!("{v}: {x} * {y} not commutative"))?;
                for z in &b {
                    ensure(&(x * y) * z == x * &(y * z), || {
                        format!("{v}: associativity at {x}, {y}, {z}")
                    })?;
                    ensure(x * &(y + z) == &(x * y) + &(x * z), || {
                        format!("{v}: distributivity at {x}, {y}, {z}")
                    })?;
                }
            }
        }
    }
    Ok("commutative, associative, distributive on basis triples".into())
}

fn rr_decomposable_oracle() -> Outcome {
    let v = Variety::F;
    let mut n = 0;
    for (a1, a2) in square(6) {
        for (b1, b2) in square(6) {
            if (a1, a2) > (b1, b2) {
                continue;
            }
            let x = Rank2Chern::split(DivisorClass::new(v, a1, a2), DivisorClass::new(v, b1, b2));
            for t in -6..=6 {
                let chi = x.twist_by_hyperplane(t).chi_f().map_err(|e| e.to_string())?;
                let sum = euler_line(v, a1 + t, a2 + t) + euler_line(v, b1 + t, b2 + t);
                ensure(chi == sum, || {
                    format!("O({a1},{a2}) + O({b1},{b2}) twisted by {t}: {chi} != {sum}")
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} split bundles"))
}

fn admissible_f_rows() -> Vec<ClassificationRow> {
    zero_c1_f()
        .into_iter()
        .chain(intermediate_table_f())
        .chain(ulrich_beta_f())
        .filter(|r| r.status.is_admissible())
        .collect()
}

fn beta_of(r: &ClassificationRow) -> (i64, i64) {
    match r.c2 {
        C2Coefficients::Beta(b) => b,
        C2Coefficients::Mu(m) => (m.0 + m.2, m.1 + m.2),
    }
}

fn rr_admissible_identities() -> Outcome {
    let rows = admissible_f_rows();
    for r in &rows {
        let x = Rank2Chern::from_beta(r.alpha, beta_of(r));
        let dual = x.dual();
        let a = dual.twist_by_hyperplane(-1).chi_f().map_err(|e| e.to_string())?;
        let b = dual.chi_f().map_err(|e| e.to_string())?;
        ensure(a.is_zero(), || format!("chi(E^v(-h)) = {a} for {}", r.c2))?;
        ensure(b == big(r.e.into()), || {
            format!("chi(E^v) = {b}, e = {} for {}", r.e, r.c2)
        })?;
    }
    Ok(format!("{} admissible cases on F", rows.len()))
}

fn dual_twist_checks() -> Outcome {
    for (a1, a2) in square(5) {
        for beta in square(5) {
            let x = Rank2Chern::from_beta((a1, a2), beta);
            let y = x.dual_twist_h().map_err(|e| e.to_string())?;
            ensure(y.dual_twist_h().map_err(|e| e.to_string())? == x, || {
                format!("involution at {x:?}")
            })?;
            let (c1, b) = dual_twist_h_closed_form((a1, a2), beta);
            ensure(y == Rank2Chern::from_beta(c1, b), || {
                format!("closed form at ({a1},{a2}), {beta:?}")
            })?;
            let g = Rank2Chern::from_mu((a1, a2), (beta.0, beta.1, a1 - a2));
            let gg = g
                .dual_twist_eta()
                .and_then(|z| z.dual_twist_eta())
                .map_err(|e| e.to_string())?;
            ensure(gg == g, || format!("eta involution at {g:?}"))?;
        }
    }
    Ok("involutions and closed form on [-5,5]^4".into())
}

fn restriction_commutes() -> Outcome {
    for (a1, a2) in square(3) {
        for (m1, m2) in square(3) {
            for m3 in -3..=3 {
                let g = Rank2Chern::from_mu((a1, a2), (m1, m2, m3));
                for (l1, l2) in square(2) {
                    let l = DivisorClass::new(Variety::Phi, l1, l2);
                    let left = g.twist(l).restrict().map_err(|e| e.to_string())?;
                    let right = g
                        .restrict()
                        .map_err(|e| e.to_string())?
                        .twist(l.restrict().map_err(|e| e.to_string())?);
                    ensure(left == right, || format!("twist at {g:?} by ({l1},{l2})"))?;
                }
                let left = g.dual().restrict().map_err(|e| e.to_string())?;
                let right = g.restrict().map_err(|e| e.to_string())?.dual();
                ensure(left == right, || format!("dual at {g:?}"))?;
            }
        }
    }
    Ok("twist and dual commute with restriction".into())
}

// ---- classify ----

/// Expected divisorial rows `(alpha, delta, e, hc2, c1c2, beta, [E])`
/// with `[E]` as the coefficients of `(h1^2, h2^2)`.
type TableRow = ((i64, i64), (i64, i64), u8, i64, i64, (i64, i64), (i64, i64));

pub const EXPECTED_DIVISORIAL_TABLE: [TableRow; 9] = [
    ((0, 1), (0, 1), 1, 0, 0, (0, 0), (0, 0)),
    ((0, 2), (0, 1), 0, 1, 0, (1, 0), (0, 0)),
    ((0, 2), (0, 2), 1, 0, 0, (0, 0), (0, 0)),
    ((1, 1), (0, 1), 0, 2, 2, (1, 1), (0, 0)),
    ((1, 1), (0, 1), 0, 2, 2, (2, 0), (-1, 1)),
    ((1, 1), (0, 1), 0, 2, 2, (0, 2), (1, -1)),
    ((1, 2), (0, 1), 0, 4, 6, (2, 2), (1, 0)),
    ((1, 2), (0, 2), 0, 4, 6, (2, 2), (0, 0)),
    ((1, 2), (1, 0), 0, 4, 6, (2, 2), (0, 0)),
];

fn table_row(r: &ClassificationRow) -> TableRow {
    let e = r.e_class.as_ref().expect("F rows carry [E]");
    let coeff = |m| {
        e.coefficient(m)
            .map(|c| i64::try_from(c.clone()).expect("small"))
            .unwrap_or(0)
    };
    (
        r.alpha,
        r.delta.expect("F rows carry delta"),
        r.e,
        r.hc2,
        r.c1c2.expect("F rows carry c1c2"),
        beta_of(r),
        (
            coeff(crate::chow::Monomial::new(2, 0)),
            coeff(crate::chow::Monomial::new(0, 2)),
        ),
    )
}

fn section4_check() -> Outcome {
    let rows = section4_table();
    let mut got: Vec<TableRow> = rows.iter().map(table_row).collect();
    let mut want = EXPECTED_DIVISORIAL_TABLE.to_vec();
    got.sort();
    want.sort();
    ensure(got == want, || format!("rows differ: {got:?}"))?;
    for r in &rows {
        let negative = matches!(r.status, Status::EliminatedNegativeIntersection { .. });
        let expected = matches!(beta_of(r), (2, 0) | (0, 2)) && r.alpha == (1, 1);
        ensure(negative == expected, || {
            format!("negative-intersection status at {:?}", table_row(r))
        })?;
        ensure(r.status != Status::Unresolved, || {
            format!("unresolved row {:?}", table_row(r))
        })?;
    }
    Ok("9 rows; negative intersections exactly on beta = (2,0), (0,2)".into())
}

fn lemma_check() -> Outcome {
    let small = lemma_vanishing_search(LemmaWindow::default());
    let wide = lemma_vanishing_search(LemmaWindow {
        min_twist: -40,
        min_b: -40,
    });
    let expected: BTreeSet<_> = [(1, 2, 0, -1)].into();
    ensure(small == expected && wide == expected, || {
        format!("found {small:?} and {wide:?}")
    })?;
    Ok("exactly (1,2,0,-1), stable to t = -40".into())
}

fn intermediate_check() -> Outcome {
    let rows = intermediate_table_f();
    let summary: Vec<(String, i64, i64, &'static str)> = rows
        .iter()
        .map(|r| {
            let kind = match &r.status {
                Status::Admissible { .. } => "admissible",
                Status::Decomposable { .. } => "decomposable",
                Status::EliminatedByRule { .. } => "eliminated",
                _ => "other",
            };
            let g = r
                .zero_locus
                .arithmetic_genus
                .clone()
                .map(|g| i64::try_from(g).expect("small"));
            (r.case.clone().unwrap_or_default(), r.hc2, g.unwrap_or(i64::MIN), kind)
        })
        .collect();
    let want = vec![
        ("L".to_string(), 1, 0, "admissible"),
        ("M".to_string(), 1, 0, "decomposable"),
        ("N".to_string(), 2, 0, "eliminated"),
        ("P".to_string(), 2, 0, "decomposable"),
        ("Q".to_string(), 4, 0, "admissible"),
    ];
    ensure(summary == want, || format!("{summary:?}"))?;
    let splits: Vec<String> = rows
        .iter()
        .filter_map(|r| match &r.status {
            Status::Decomposable { splitting, .. } => Some(splitting.clone()),
            _ => None,
        })
        .collect();
    ensure(splits == ["O(h2) + O(h2)", "O(h2) + O(h1)"], || {
        format!("splittings {splits:?}")
    })?;
    let l = Rank2Chern::from_beta((0, 1), (1, 0))
        .dual_twist_h()
        .map_err(|e| e.to_string())?;
    let q_swapped = Rank2Chern::from_beta((2, 1), (2, 2));
    ensure(l == q_swapped, || format!("dual twist of L is {l:?}"))?;
    Ok("L, Q admissible; M, P split; N eliminated; L <-> Q".into())
}

fn ulrich_check() -> Outcome {
    let rows = ulrich_beta_f();
    let betas: Vec<_> = rows.iter().map(beta_of).collect();
    ensure(betas == [(3, 5), (4, 4), (5, 3)], || format!("{betas:?}"))?;
    let inv = Rank2Chern::from_beta((2, 2), (4, 4))
        .zero_locus_invariants()
        .map_err(|e| e.to_string())?;
    ensure(inv.degree == big(8) && inv.arithmetic_genus == Some(big(1)), || {
        format!("{inv:?}")
    })?;
    Ok("beta in {(3,5),(4,4),(5,3)}; (deg, p_a) = (8, 1)".into())
}

fn phi_check() -> Outcome {
    let rows = classify_phi();
    let survivors: Vec<((i64, i64), C2Coefficients)> = rows
        .iter()
        .filter(|r| r.status.is_admissible())
        .map(|r| (r.alpha, r.c2))
        .collect();
    let want = vec![
        ((0, 0), C2Coefficients::Mu((1, 0, 0))),
        ((0, 1), C2Coefficients::Mu((1, 0, 0))),
        ((1, 2), C2Coefficients::Mu((1, 1, 1))),
        ((2, 2), C2Coefficients::Mu((1, 3, 2))),
    ];
    ensure(survivors == want, || format!("survivors {survivors:?}"))?;
    for name in ["Q'", "Q''"] {
        let r = rows
            .iter()
            .find(|r| r.case.as_deref() == Some(name))
            .ok_or(format!("missing {name}"))?;
        ensure(
            matches!(r.status, Status::EliminatedNegativeIntersection { .. }),
            || format!("{name}: {:?}", r.status),
        )?;
    }
    let f1: Vec<_> = del_pezzo_embeddings(Surface::F1)
        .into_iter()
        .filter(|c| c.status.is_admissible())
        .map(|c| c.mu)
        .collect();
    ensure(f1 == [(1, 3, 2), (3, 1, 2)], || format!("F1 admissible {f1:?}"))?;
    let q = del_pezzo_embeddings(Surface::Q);
    ensure(
        q.iter()
            .all(|c| matches!(c.status, Status::Decomposable { .. } | Status::EliminatedByRule { .. })),
        || "quadric produced an admissible candidate".into(),
    )?;
    ensure(
        q.iter()
            .any(|c| c.status == Status::by_rule(Rule::ProjectionHyperplane)),
        || "quadric projection case missing".into(),
    )?;
    let f_entries = theorem_b(Variety::F).entries;
    for r in rows.iter().filter(|r| r.status.is_admissible()) {
        let C2Coefficients::Mu(mu) = r.c2 else { unreachable!() };
        let restricted = Rank2Chern::from_mu(r.alpha, mu).restrict().map_err(|e| e.to_string())?;
        let beta = restricted.beta().map_err(|e| e.to_string())?;
        let beta = (i64::try_from(beta.0).unwrap(), i64::try_from(beta.1).unwrap());
        ensure(
            f_entries
                .iter()
                .any(|e| e.alpha == r.alpha && e.c2.contains(&C2Coefficients::Beta(beta))),
            || format!("restriction of {:?} {mu:?} is not on the F list", r.alpha),
        )?;
    }
    Ok("survivors eta2^2 (twice), Q, (1,3,2); restrictions lie on the F list".into())
}

fn theorem_b_check() -> Outcome {
    let f = theorem_b(Variety::F);
    let p = theorem_b(Variety::Phi);
    let alphas = |t: &crate::classify::TheoremB| t.entries.iter().map(|e| e.alpha).collect::<Vec<_>>();
    let want = [(0, 0), (0, 1), (1, 2), (2, 2)];
    ensure(alphas(&f) == want && alphas(&p) == want, || {
        format!("{:?} / {:?}", alphas(&f), alphas(&p))
    })?;
    let c2f: Vec<Vec<C2Coefficients>> = f.entries.iter().map(|e| e.c2.clone()).collect();
    let b = C2Coefficients::Beta;
    ensure(
        c2f == vec![
            vec![b((1, 0))],
            vec![b((1, 0))],
            vec![b((2, 2))],
            vec![b((3, 5)), b((4, 4)), b((5, 3))],
        ],
        || format!("F c2 {c2f:?}"),
    )?;
    let c2p: Vec<Vec<C2Coefficients>> = p.entries.iter().map(|e| e.c2.clone()).collect();
    let m = C2Coefficients::Mu;
    ensure(
        c2p == vec![
            vec![m((1, 0, 0))],
            vec![m((1, 0, 0))],
            vec![m((1, 1, 1))],
            vec![m((1, 3, 2))],
        ],
        || format!("Phi c2 {c2p:?}"),
    )?;
    let df: Vec<&str> = f.entries.iter().map(|e| e.description.as_str()).collect();
    let dp: Vec<&str> = p.entries.iter().map(|e| e.description.as_str()).collect();
    ensure(
        df == [
            "line",
            "line",
            "quartic curve of arithmetic genus 0",
            "elliptic normal curve of degree 8",
        ],
        || format!("{df:?}"),
    )?;
    ensure(
        dp == [
            "plane",
            "plane",
            "quartic surface",
            "del Pezzo surface of degree 8 isomorphic to F1",
        ],
        || format!("{dp:?}"),
    )?;
    let ulrich_f: Vec<bool> = f.entries.iter().map(|e| e.ulrich).collect();
    ensure(ulrich_f == [false, false, false, true], || {
        format!("Ulrich flags {ulrich_f:?}")
    })?;
    Ok("four entries on each variety".into())
}

fn upper_bound_check() -> Outcome {
    for r in upper_bound_elimination() {
        let want = 12 - 3 * r.alpha.0 - 3 * r.alpha.1;
        ensure(r.chi_dual_twist_h == want, || {
            format!("{:?}: {} != {want}", r.alpha, r.chi_dual_twist_h)
        })?;
        let ok = match r.alpha {
            (2, 2) => r.elimination.is_none(),
            (1, 3) => matches!(r.elimination, Some(Status::EliminatedNoIntegerSolution { .. })),
            (0, 4) => r.elimination == Some(Status::by_rule(Rule::FourSkewLinesSplitting)),
            _ => r.elimination == Some(Status::by_rule(Rule::ChiDualTwistNonzero)),
        };
        ensure(ok, || format!("{:?}: {:?}", r.alpha, r.elimination))?;
    }
    Ok("only 2h survives among a2 in {3, 4}".into())
}

fn all_rows() -> Vec<ClassificationRow> {
    section4_table()
        .into_iter()
        .chain(zero_c1_f())
        .chain(intermediate_table_f())
        .chain(ulrich_beta_f())
        .chain(classify_phi())
        .collect()
}

fn identity_residuals() -> Outcome {
    let rows: Vec<_> = all_rows().into_iter().filter(|r| r.variety == Variety::F).collect();
    for r in &rows {
        let res = identity_ledger(r.alpha, beta_of(r), r.e == 1);
        ensure(res.is_zero(), || format!("{:?} {}: {res:?}", r.alpha, r.c2))?;
        let d = r.delta.unwrap_or((0, 0));
        ensure((r.e == 1) == (d == r.alpha), || format!("e at {:?}", r.alpha))?;
    }
    Ok(format!("{} rows on F", rows.len()))
}

fn positivity() -> Outcome {
    for r in all_rows().iter().filter(|r| r.status.is_admissible()) {
        match r.c2 {
            C2Coefficients::Beta(_) => {
                let e = r.e_class.as_ref().expect("F rows carry [E]");
                for i in [1u8, 2] {
                    let h = ChowClass::generator(Variety::F, i);
                    let d = (&h * e).degree().map_err(|e| e.to_string())?;
                    ensure(d >= BigInt::zero(), || format!("deg(h{i}*[E]) < 0 at {:?}", r.alpha))?;
                }
            }
            C2Coefficients::Mu((a, b, c)) => ensure(a >= 0 && b >= 0 && c >= 0, || format!("mu {:?}", r.c2))?,
        }
    }
    Ok("admissible rows have non-negative intersections".into())
}

fn no_unresolved() -> Outcome {
    let n = all_rows().iter().filter(|r| r.status == Status::Unresolved).count();
    ensure(n == 0, || format!("{n} unresolved rows"))?;
    let unjustified = all_rows()
        .iter()
        .filter(|r| matches!(&r.status, Status::EliminatedByRule { justification, .. } if justification.is_empty()))
        .count();
    ensure(unjustified == 0, || {
        format!("{unjustified} rules without justification")
    })?;
    Ok("every candidate resolved".into())
}

struct Check {
    scope: Scope,
    name: &'static str,
    run: fn() -> Outcome,
}

const CHECKS: &[Check] = &[
    Check {
        scope: Scope::Cohomology,
        name: "cohomology-formula",
        run: cohomology_formula,
    },
    Check {
        scope: Scope::Cohomology,
        name: "bott-uniqueness",
        run: bott_uniqueness,
    },
    Check {
        scope: Scope::Cohomology,
        name: "named-dimensions",
        run: named_dimensions,
    },
    Check {
        scope: Scope::Cohomology,
        name: "serre-duality",
        run: serre_duality,
    },
    Check {
        scope: Scope::Cohomology,
        name: "restriction-relation",
        run: restriction_relation,
    },
    Check {
        scope: Scope::Cohomology,
        name: "euler-consistency",
        run: euler_consistency,
    },
    Check {
        scope: Scope::Cohomology,
        name: "factor-symmetry",
        run: factor_symmetry,
    },
    Check {
        scope: Scope::Cohomology,
        name: "nonvanishing-equivalence",
        run: nonvanishing_equivalence,
    },
    Check {
        scope: Scope::Cohomology,
        name: "line-bundle-census",
        run: line_bundle_census_check,
    },
    Check {
        scope: Scope::Chern,
        name: "chow-closed-forms",
        run: chow_closed_forms,
    },
    Check {
        scope: Scope::Chern,
        name: "chow-ring-axioms",
        run: chow_ring_axioms,
    },
    Check {
        scope: Scope::Chern,
        name: "rr-decomposable-oracle",
        run: rr_decomposable_oracle,
    },
    Check {
        scope: Scope::Chern,
        name: "rr-admissible-identities",
        run: rr_admissible_identities,
    },
    Check {
        scope: Scope::Chern,
        name: "dual-twist",
        run: dual_twist_checks,
    },
    Check {
        scope: Scope::Chern,
        name: "restriction-commutes",
        run: restriction_commutes,
    },
    Check {
        scope: Scope::Classify,
        name: "divisorial-table",
        run: section4_check,
    },
    Check {
        scope: Scope::Classify,
        name: "lemma-lvanishing-unique",
        run: lemma_check,
    },
    Check {
        scope: Scope::Classify,
        name: "intermediate-cases",
        run: intermediate_check,
    },
    Check {
        scope: Scope::Classify,
        name: "ulrich-case",
        run: ulrich_check,
    },
    Check {
        scope: Scope::Classify,
        name: "phi-classification",
        run: phi_check,
    },
    Check {
        scope: Scope::Classify,
        name: "final-lists",
        run: theorem_b_check,
    },
    Check {
        scope: Scope::Classify,
        name: "upper-bound",
        run: upper_bound_check,
    },
    Check {
        scope: Scope::Classify,
        name: "identity-residuals",
        run: identity_residuals,
    },
    Check {
        scope: Scope::Classify,
        name: "positivity",
        run: positivity,
    },
    Check {
        scope: Scope::Classify,
        name: "no-unresolved",
        run: no_unresolved,
    },
];

pub fn check_names(scope: Scope) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|c| scope == Scope::All || c.scope == scope)
        .map(|c| c.name)
        .collect()
}

/// Runs one check by name.
pub fn run_check(name: &str) -> Option<CheckResult> {
    CHECKS.iter().find(|c| c.name == name).map(|c| {
        let out = (c.run)();
        CheckResult {
            name: c.name,
            passed: out.is_ok(),
            detail: out.unwrap_or_else(|e| e),
        }
    })
}

pub fn verify(scope: Scope) -> VerifyReport {
    let checks: Vec<CheckResult> = check_names(scope)
        .into_par_iter()
        .map(|n| run_check(n).expect("registered"))
        .collect();
    let overall = checks.iter().all(|c| c.passed);
    VerifyReport { scope, checks, overall }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let report = verify(Scope::All);
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(report.checks.len(), CHECKS.len());
    }

    #[test]
    fn scopes_partition_the_checks() {
        let n: usize = [Scope::Cohomology, Scope::Chern, Scope::Classify]
            .iter()
            .map(|&s| check_names(s).len())
            .sum();
        assert_eq!(n, check_names(Scope::All).len());
        assert!(check_names(Scope::Cohomology).contains(&"serre-duality"));
        assert!(check_names(Scope::Classify).contains(&"lemma-lvanishing-unique"));
    }

    #[test]
    fn unknown_check_is_none() {
        assert!(run_check("nope").is_none());
    }
}
