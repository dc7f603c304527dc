//! The four verification suites. Each builds its cases in canonical order,
//! runs them on the current rayon pool and assembles a report.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::cache::prepare_tables;
use super::report::{Case, Outcome, Report};
use crate::dyck::{cat_poly, cat_rise, cat_rise_table, enumerate_decorations, enumerate_paths, CatMethod, DecoratedPath, DyckPath, MultiPoly};
use crate::error::Result;
use crate::exact::RatFunc;
use crate::macdonald::identities::{
    cat_rise_coefficient, corollary42, e_of_b, htilde_pairing, kernel_expression, lemma44, lemma47, lemma48,
    main_recurrence, orthogonality, reciprocity, Sides,
};
use crate::macdonald::ops::degree_data;
use crate::macdonald::pieri::{eq13_sides, eq9_sides, gen_pieri_sum, lemma45_sides, partitions_up_to};
use crate::macdonald::{bc_relation_sides, pieri_sums, PieriSum};
use crate::symfunc::{compositions, partitions, Composition, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub timings: bool,
    pub cache_dir: Option<PathBuf>,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> Self {
        VerifyOptions { max_n, timings: true, cache_dir: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Main,
    Comb,
    Sf,
    Macdonald,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Comb => "comb",
            Suite::Sf => "sf",
            Suite::Macdonald => "macdonald",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Main => 6,
            Suite::Comb => 8,
            Suite::Sf => 5,
            Suite::Macdonald => 6,
        }
    }

    pub fn run(self, opts: &VerifyOptions) -> Result<Report> {
        match self {
            Suite::Main => verify_main(opts),
            Suite::Comb => verify_comb(opts),
            Suite::Sf => verify_sf(opts),
            Suite::Macdonald => verify_macdonald(opts),
        }
    }
}

fn run_cases(suite: Suite, opts: &VerifyOptions, cases: Vec<Case>, mut warnings: Vec<String>) -> Report {
    let results: Vec<_> = cases.par_iter().map(Case::execute).collect();
    let mut records = Vec::with_capacity(results.len());
    for (rec, w) in results {
        records.push(rec);
        warnings.extend(w);
    }
    let params = BTreeMap::from([("maxN".to_string(), serde_json::Value::from(opts.max_n))]);
    let mut report = Report::new(suite.name(), params, records, warnings);
    if !opts.timings {
        report.strip_timings();
    }
    report
}

fn tables_up_to(opts: &VerifyOptions, max: usize) -> Result<Vec<String>> {
    let outcome = prepare_tables(opts.cache_dir.as_deref(), max)?;
    (1..=max).into_par_iter().for_each(|n| {
        degree_data(n);
    });
    Ok(outcome.warnings)
}

fn sides(s: Sides) -> Outcome {
    Outcome::new(s.lhs.canonical(), s.rhs.canonical())
}

fn pair(p: (RatFunc, RatFunc)) -> Outcome {
    Outcome::new(p.0, p.1)
}

fn seq_text<T: ToString>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(","))
}

/// `t^a q^b · f`.
fn shift(f: &MultiPoly, q: usize, t: usize) -> MultiPoly {
    MultiPoly::monomial([q as u32, t as u32, 0, 0]).mul(f)
}

fn sum_rise(prefix: &Composition, tail_size: usize, k: i64, ell: i64) -> MultiPoly {
    compositions(tail_size).iter().fold(MultiPoly::zero(), |acc, g| acc.add(&cat_rise(&prefix.concat(g), k, ell)))
}

/// Compositions `(n)` ordered descending lexicographically.
fn compositions_of(n: usize) -> Vec<Composition> {
    compositions(n)
}

// ---------------------------------------------------------------- main

/// The combinatorial side against the hook coefficient of `Δ_{h_ℓ}∇C_α`.
pub fn main_case(alpha: &Composition, k: i64, ell: i64) -> Outcome {
    let comb = cat_rise(alpha, k, ell);
    let sf = cat_rise_coefficient(alpha, k, ell);
    let mut notes = Vec::new();
    if !comb.has_nonnegative_coefficients() {
        notes.push("combinatorial side has a negative coefficient".to_string());
    }
    let rhs = match sf.as_int_poly().filter(|p| p.is_ordinary_polynomial()) {
        Some(p) => {
            if p.terms().iter().any(|(_, c)| c.sign() == num_bigint::Sign::Minus) {
                notes.push("symmetric function side has a negative coefficient".to_string());
            }
            p.to_string()
        }
        None => {
            notes.push("symmetric function side is not a polynomial".to_string());
            format!("non-polynomial {sf}")
        }
    };
    let warning = (!notes.is_empty()).then(|| notes.join("; "));
    Outcome::new(comb, rhs).with_warning(warning)
}

pub fn verify_main(opts: &VerifyOptions) -> Result<Report> {
    let warnings = tables_up_to(opts, opts.max_n)?;
    (1..=opts.max_n).into_par_iter().for_each(|n| {
        cat_rise_table(n);
    });
    let mut cases = Vec::new();
    for n in 1..=opts.max_n {
        for ell in 0..n {
            for alpha in compositions_of(n - ell) {
                for k in 0..alpha.size() as i64 {
                    let id = format!("catrise alpha={alpha} k={k} ell={ell}");
                    let a = alpha.clone();
                    cases.push(Case::new(id, move || main_case(&a, k, ell as i64)));
                }
            }
        }
    }
    Ok(run_cases(Suite::Main, opts, cases, warnings))
}

// ---------------------------------------------------------------- comb

fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..n {
        c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
    }
    c
}

fn decorated_count(n: usize) -> BigInt {
    catalan(n) << (n.saturating_sub(1))
}

/// Rotation laws on one decorated path; `None` when all hold.
fn rotation_failure(dp: &DecoratedPath) -> Option<String> {
    let (rot, info) = match dp.rotate() {
        Ok(r) => r,
        Err(e) => return Some(format!("rotate failed: {e}")),
    };
    if rot.unrotate(info).ok().as_ref() != Some(dp) {
        return Some("roundtrip".into());
    }
    let (_, b) = dp.path.b_sequence();
    let (_, b_rot) = rot.path.b_sequence();
    if b_rot.as_slice() != &b[..b.len() - 1] {
        return Some("b-sequence".into());
    }
    let s = dp.stats();
    let r = rot.stats();
    let alpha = dp.rise_touch_composition();
    let first_peak = dp.is_decorated(0) && !dp.path.is_double_rise(0);
    let first_rise = dp.is_decorated(0) && dp.path.is_double_rise(0);
    let dinv_gain = if first_peak { 0 } else { alpha.len() as u32 - 1 };
    let ok = s.area_circ == r.area_circ + alpha.parts()[0] as u32 - 1
        && s.dinv_circ == r.dinv_circ + dinv_gain
        && s.peak_circ == r.peak_circ + first_peak as u32
        && s.rise_circ == r.rise_circ + first_rise as u32;
    (!ok).then(|| "statistics".into())
}

fn rotation_case(n: usize) -> Outcome {
    let mut good = BigInt::from(0);
    let mut first_bad = None;
    for path in enumerate_paths(n) {
        for dp in enumerate_decorations(&path) {
            match rotation_failure(&dp) {
                None => good += 1,
                Some(why) => {
                    first_bad.get_or_insert_with(|| format!("{} decorated {:?}: {why}", dp.path, dp.decorated_rows()));
                }
            }
        }
    }
    let lhs = match first_bad {
        None => good.to_string(),
        Some(b) => format!("{good} (first failure {b})"),
    };
    Outcome::new(lhs, decorated_count(n))
}

pub const WORKED_EXAMPLE: &str = "0,1,2,2,1,1,2,0,1,1,2,1,0,1,2";

fn worked_example_b() -> Outcome {
    let p = DyckPath::parse(WORKED_EXAMPLE).expect("valid path");
    let (_, b) = p.b_sequence();
    Outcome::new(format!("b={} area={}", seq_text(&b), p.area()), "b=(0,1,2,3,4,4,5,5,6,6,7,6,6,4,2) area=17")
}

fn worked_example_rotation() -> Outcome {
    let p = DyckPath::parse(WORKED_EXAMPLE).expect("valid path");
    let dp = DecoratedPath::undecorated(p);
    match dp.rotate() {
        Ok((rot, info)) => {
            let back = rot.unrotate(info).map(|d| d == dp).unwrap_or(false);
            Outcome::new(
                format!("{} area={} inverse={back}", rot.path, rot.path.area()),
                "(0,1,1,2,1,0,1,2,0,1,1,0,0,1) area=11 inverse=true",
            )
        }
        Err(e) => Outcome::new(format!("error {e}"), "(0,1,1,2,1,0,1,2,0,1,1,0,0,1) area=11 inverse=true"),
    }
}

fn decomposition(n: usize) -> Outcome {
    let mut sum = MultiPoly::zero();
    for ell in 0..=n {
        for ((alpha, k, l), poly) in cat_rise_table(n).iter() {
            if *l == ell && alpha.size() + ell == n {
                sum = sum.add(&MultiPoly::monomial([0, 0, *k as u32, ell as u32]).mul(poly));
            }
        }
    }
    Outcome::new(cat_poly(n, CatMethod::DecoratedSum), sum)
}

pub fn verify_comb(opts: &VerifyOptions) -> Result<Report> {
    let max = opts.max_n;
    (0..=max).into_par_iter().for_each(|n| {
        cat_rise_table(n);
    });
    let mut cases = vec![
        Case::new("worked-example b-sequence", worked_example_b),
        Case::new("worked-example rotation", worked_example_rotation),
    ];
    // (a+1, β) with a ≥ 0; a = 0 is the separate small-first-part recurrence
    for total in 1..=max {
        for ell in 0..total {
            for a in 0..(total - ell) {
                for beta in compositions_of(total - ell - a - 1) {
                    let alpha = beta.prepend(a + 1);
                    for k in 0..alpha.size() as i64 {
                        let (b, e) = (beta.clone(), ell as i64);
                        let lb = beta.len();
                        let lhs = move || cat_rise(&b.prepend(a + 1), k, e);
                        if a >= 1 {
                            let (lhs, b) = (lhs.clone(), beta.clone());
                            cases.push(Case::new(format!("rise-big-first a={a} beta={beta} k={k} ell={ell}"), move || {
                                let rhs = shift(&sum_rise(&b, a, k, e).add(&sum_rise(&b, a + 1, k, e - 1)), lb, a);
                                Outcome::new(lhs(), rhs)
                            }));
                        } else {
                            let (lhs, b) = (lhs.clone(), beta.clone());
                            cases.push(Case::new(format!("rise-unit-first beta={beta} k={k} ell={ell}"), move || {
                                let rhs = shift(&cat_rise(&b, k, e), lb, 0)
                                    .add(&cat_rise(&b, k - 1, e))
                                    .add(&shift(&cat_rise(&b.concat(&Composition::new(vec![1]).unwrap()), k, e - 1), lb, 0));
                                Outcome::new(lhs(), rhs)
                            }));
                        }
                        let b = beta.clone();
                        cases.push(Case::new(format!("rise-merged a={a} beta={beta} k={k} ell={ell}"), move || {
                            let mut rhs = shift(&sum_rise(&b, a, k, e).add(&sum_rise(&b, a + 1, k, e - 1)), lb, a);
                            if a == 0 {
                                rhs = rhs.add(&cat_rise(&b, k - 1, e));
                            }
                            Outcome::new(lhs(), rhs)
                        }));
                    }
                }
            }
        }
    }
    for n in 1..=max {
        cases.push(Case::new(format!("rotation n={n}"), move || rotation_case(n)));
    }
    for n in 1..=max {
        cases.push(Case::new(format!("specialization n={n}"), move || {
            let p = cat_poly(n, CatMethod::DecoratedSum);
            Outcome::new(
                format!("{} {}", p.eval([1, 1, 0, 0]), p.eval([1, 1, 1, 1])),
                format!("{} {}", catalan(n), decorated_count(n)),
            )
        }));
    }
    for n in 1..=max.min(7) {
        cases.push(Case::new(format!("decomposition n={n}"), move || decomposition(n)));
        cases.push(Case::new(format!("method-agreement n={n}"), move || {
            Outcome::new(cat_poly(n, CatMethod::DecoratedSum), cat_poly(n, CatMethod::ProductForm))
        }));
    }
    Ok(run_cases(Suite::Comb, opts, cases, Vec::new()))
}

// ---------------------------------------------------------------- sf

pub fn verify_sf(opts: &VerifyOptions) -> Result<Report> {
    let max = opts.max_n as i64;
    let warnings = tables_up_to(opts, opts.max_n)?;
    let mut cases = Vec::new();
    for k in 0..=3 {
        for d in 0..=2 {
            for r in 0..max {
                for m in 0..(max - r) {
                    cases.push(Case::new(format!("recurrence k={k} d={d} r={r} m={m}"), move || {
                        sides(main_recurrence(k, d, r, m))
                    }));
                }
            }
        }
    }
    for d in 0..=max {
        for r in 0..=(max - d) {
            for n in 0..=(max - d - r) {
                cases.push(Case::new(format!("kernel d={d} r={r} n={n}"), move || sides(kernel_expression(d, r, n))));
            }
        }
    }
    for nu in partitions_up_to(2) {
        for mu in partitions_up_to(3) {
            for d in 0..=2 {
                let (a, b) = (nu.clone(), mu.clone());
                cases.push(Case::new(format!("skew-kernel nu={nu} mu={mu} d={d}"), move || sides(lemma44(&a, &b, d))));
            }
        }
    }
    for gamma in partitions_up_to(3) {
        for c in 0..=3 {
            for m in -1..=3 {
                let g = gamma.clone();
                cases.push(Case::new(format!("dual-creation gamma={gamma} c={c} m={m}"), move || {
                    sides(lemma47(&g, c, m))
                }));
            }
        }
    }
    for m in 0..=2 {
        for r in 0..=2 {
            for n in 0..=2 {
                for d in 0..=1 {
                    cases.push(Case::new(format!("kernel-shift m={m} r={r} n={n} d={d}"), move || {
                        sides(lemma48(m, r, n, d))
                    }));
                }
            }
        }
    }
    for total in 1..=opts.max_n {
        for ell in 0..total {
            for a in 0..(total - ell) {
                for beta in compositions_of(total - ell - a - 1) {
                    for k in 0..=(beta.size() + a) as i64 {
                        let b = beta.clone();
                        cases.push(Case::new(format!("hook-recurrence a={a} beta={beta} k={k} ell={ell}"), move || {
                            sides(corollary42(&b, a, k, ell as i64))
                        }));
                    }
                }
            }
        }
    }
    Ok(run_cases(Suite::Sf, opts, cases, warnings))
}

// ---------------------------------------------------------------- macdonald

pub fn verify_macdonald(opts: &VerifyOptions) -> Result<Report> {
    let max = opts.max_n;
    let small = max.min(5);
    let mut warnings = tables_up_to(opts, max + 1)?;
    let mut cases = Vec::new();
    for n in 1..=max {
        let ps = Arc::new(partitions(n));
        for a in ps.iter() {
            for b in ps.iter() {
                let (x, y) = (a.clone(), b.clone());
                cases.push(Case::new(format!("orthogonality lambda={a} mu={b}"), move || sides(orthogonality(&x, &y))));
            }
        }
    }
    for mu in partitions_up_to(max) {
        let m = mu.clone();
        cases.push(Case::new(format!("e-of-b mu={mu}"), move || sides(e_of_b(&m))));
    }
    for mu in partitions_up_to(small) {
        for r in 0..=mu.size() {
            let m = mu.clone();
            cases.push(Case::new(format!("pairing mu={mu} r={r}"), move || sides(htilde_pairing(&m, r))));
        }
    }
    for mu in partitions_up_to(max.min(4)) {
        for nu in partitions_up_to(max.min(4)) {
            let (a, b) = (mu.clone(), nu.clone());
            cases.push(Case::new(format!("reciprocity mu={mu} nu={nu}"), move || sides(reciprocity(&a, &b))));
        }
    }
    for (tag, kind) in [("pieri-e-sum", PieriSum::E), ("pieri-h-sum", PieriSum::H)] {
        for gamma in partitions_up_to(max) {
            for s in 0..=gamma.size() + 2 {
                let g = gamma.clone();
                cases.push(Case::new(format!("{tag} gamma={gamma} s={s}"), move || pair(pieri_sums(&g, s, kind))));
            }
        }
    }
    for gamma in partitions_up_to(small) {
        for tau in gamma.remove_cell() {
            let (g, t) = (gamma.clone(), tau.clone());
            cases.push(Case::new(format!("pieri-down gamma={gamma} tau={tau}"), move || pair(eq9_sides(&g, &t))));
        }
    }
    for a in 0..=3i64 {
        for mu in partitions_up_to(small).into_iter().filter(|m| m.size() as i64 >= a) {
            for nu in partitions(mu.size() - a as usize) {
                let (x, y) = (mu.clone(), nu.clone());
                cases.push(Case::new(format!("perp-duality a={a} mu={mu} nu={nu}"), move || {
                    pair(eq13_sides(&SymFunc::e(a), &x, &y))
                }));
            }
        }
    }
    let mut omega_total = 0usize;
    let omega_agree: Vec<bool> = (0..=3i64)
        .flat_map(|a| partitions_up_to(small).into_iter().map(move |mu| (a, mu)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(a, mu)| {
            let s = gen_pieri_sum(&mu, &SymFunc::e(a), a, mu.size() as i64);
            s.lhs_omega == s.rhs
        })
        .collect();
    for a in 0..=3i64 {
        for mu in partitions_up_to(small) {
            omega_total += 1;
            let m = mu.clone();
            cases.push(Case::new(format!("perp-sum a={a} mu={mu}"), move || {
                let s = gen_pieri_sum(&m, &SymFunc::e(a), a, m.size() as i64);
                Outcome::new(s.lhs, s.rhs)
            }));
        }
    }
    let agree = omega_agree.iter().filter(|&&b| b).count();
    if agree != omega_total {
        warnings.push(format!(
            "perp-sum with omega applied to g inside the skewing agrees in {agree} of {omega_total} cases"
        ));
    }
    for n in 0..=3 {
        for alpha in compositions_of(n) {
            for m in 1..=3 {
                let a = alpha.clone();
                cases.push(Case::new(format!("creation-relation alpha={alpha} m={m}"), move || {
                    let (l, r) = bc_relation_sides(&a, m);
                    Outcome::new(l.to_s(), r.to_s())
                }));
            }
        }
    }
    for gamma in partitions_up_to(small) {
        for a in 0..=gamma.size() + 1 {
            let g = gamma.clone();
            cases.push(Case::new(format!("e-perp-sum gamma={gamma} a={a}"), move || pair(lemma45_sides(&g, a))));
        }
    }
    Ok(run_cases(Suite::Macdonald, opts, cases, warnings))
}
