//! The modified Macdonald basis, one degree at a time.
//!
//! Column `μ` is the unique symmetric function with `<H̃_μ, s_(n)> = 1` whose
//! image under `X -> X(1-q)` lies in the span of `s_λ` with `λ ≥ μ` and under
//! `X -> X(1-t)` in the span of `s_λ` with `λ ≥ μ'`. Entries are found by exact
//! solves at integer points, bivariate interpolation, and a final symbolic
//! check of the defining conditions.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::{solve_unique, RatMatrix};
use crate::exact::{IntPoly, Mono, RatFunc};
use crate::symfunc::tables::tables;
use crate::symfunc::{partitions, Basis, Partition, SymFunc};

#[derive(Clone, Debug, PartialEq)]
pub struct HtildeTable {
    pub degree: usize,
    pub parts: Vec<Partition>,
    /// `entries[λ][μ]` is the coefficient of `s_λ` in `H̃_μ`.
    pub entries: Vec<Vec<IntPoly>>,
}

impl HtildeTable {
    pub fn index(&self, p: &Partition) -> Option<usize> {
        self.parts.iter().position(|x| x == p)
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> RatFunc {
        match (self.index(lambda), self.index(mu)) {
            (Some(l), Some(m)) => RatFunc::from_int_poly(self.entries[l][m].clone()),
            _ => RatFunc::zero(),
        }
    }

    /// `H̃_μ` in the Schur basis.
    pub fn column(&self, mu: &Partition) -> SymFunc {
        let m = self.index(mu).expect("partition of the table degree");
        SymFunc::from_terms(
            Basis::S,
            self.parts.iter().zip(&self.entries).map(|(l, row)| (l.clone(), RatFunc::from_int_poly(row[m].clone()))),
        )
    }

    pub fn to_file(&self) -> HtildeFile {
        let columns = (0..self.parts.len())
            .map(|m| {
                self.entries
                    .iter()
                    .map(|row| row[m].terms().iter().map(|(mono, c)| (mono.q, mono.t, c.to_string())).collect())
                    .collect()
            })
            .collect();
        HtildeFile { format: FILE_FORMAT.to_string(), degree: self.degree, partitions: self.parts.clone(), columns }
    }

    /// Parses and structurally validates a stored table.
    pub fn from_file(f: &HtildeFile) -> Result<Self> {
        let bad = |msg: String| Error::Invalid(format!("stored H̃ table: {msg}"));
        if f.format != FILE_FORMAT {
            return Err(bad(format!("unknown format '{}'", f.format)));
        }
        let parts = partitions(f.degree);
        if f.partitions != parts || f.columns.len() != parts.len() {
            return Err(bad("partition list does not match the degree".into()));
        }
        let size = parts.len();
        let mut entries = vec![vec![IntPoly::zero(); size]; size];
        for (m, col) in f.columns.iter().enumerate() {
            if col.len() != size {
                return Err(bad("column length".into()));
            }
            for (l, terms) in col.iter().enumerate() {
                let mut parsed = Vec::with_capacity(terms.len());
                for (a, b, c) in terms {
                    let c: BigInt = c.parse().map_err(|_| bad(format!("bad integer '{c}'")))?;
                    parsed.push((Mono::new(*a, *b), c));
                }
                entries[l][m] = IntPoly::from_terms(parsed);
            }
            if !entries[0][m].is_one() {
                return Err(bad("leading Schur coefficient is not 1".into()));
            }
        }
        Ok(HtildeTable { degree: f.degree, parts, entries })
    }
}

pub const FILE_FORMAT: &str = "1";

/// On-disk form; `columns[μ][λ]` lists `(q exponent, t exponent, coefficient)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HtildeFile {
    pub format: String,
    pub degree: usize,
    pub partitions: Vec<Partition>,
    pub columns: Vec<Vec<Vec<(i32, i32, String)>>>,
}

fn primes(count: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut n = 2i64;
    while out.len() < count {
        if (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// `weights[ρ] = χ^λ(ρ) χ^κ(ρ) n!/z_ρ`, indexed `[λ][κ][ρ]`.
fn character_products(n: usize) -> Vec<Vec<Vec<BigInt>>> {
    let tab = tables(n);
    let size = tab.parts.len();
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    let scale: Vec<BigInt> = tab.z.iter().map(|z| &fact / z).collect();
    (0..size)
        .map(|l| {
            (0..size)
                .map(|k| (0..size).map(|r| BigInt::from(tab.chars[l][r] * tab.chars[k][r]) * &scale[r]).collect())
                .collect()
        })
        .collect()
}

/// `n!·<s_λ[X(1-x0)], s_κ>` at an integer point.
fn numeric_substitution(n: usize, prods: &[Vec<Vec<BigInt>>], x0: i64) -> RatMatrix {
    let tab = tables(n);
    let x = BigInt::from(x0);
    let factors: Vec<BigInt> = tab
        .parts
        .iter()
        .map(|rho| rho.parts().iter().map(|&k| BigInt::one() - num_traits::pow(x.clone(), k)).product())
        .collect();
    prods
        .iter()
        .map(|row| {
            row.iter()
                .map(|ws| {
                    let v: BigInt = ws.iter().zip(&factors).map(|(w, f)| w * f).sum();
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect()
}

/// `n!·<s_λ[X(1-v)], s_κ>` as polynomials, `v` being `q` or `t`.
fn symbolic_substitution(n: usize, prods: &[Vec<Vec<BigInt>>], in_q: bool) -> Vec<Vec<IntPoly>> {
    let tab = tables(n);
    let var = |k: usize| if in_q { IntPoly::monomial(k as i32, 0) } else { IntPoly::monomial(0, k as i32) };
    let factors: Vec<IntPoly> = tab
        .parts
        .iter()
        .map(|rho| rho.parts().iter().fold(IntPoly::one(), |acc, &k| acc.mul(&IntPoly::one().sub(&var(k)))))
        .collect();
    prods
        .iter()
        .map(|row| {
            row.iter()
                .map(|ws| {
                    IntPoly::from_terms(ws.iter().zip(&factors).filter(|(w, _)| !w.is_zero()).flat_map(|(w, f)| {
                        f.terms().iter().map(move |(m, c)| (*m, c * w)).collect::<Vec<_>>()
                    }))
                })
                .collect()
        })
        .collect()
}

/// Indices `κ` whose coefficient must vanish: those not dominating `bound`.
fn forbidden(parts: &[Partition], bound: &Partition) -> Vec<usize> {
    (0..parts.len()).filter(|&k| !parts[k].dominates(bound)).collect()
}

/// Coefficients (constant first) of the interpolating polynomial.
fn newton(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

fn solve_column(
    parts: &[Partition],
    mu_idx: usize,
    aq: &RatMatrix,
    at: &RatMatrix,
    forb_q: &[usize],
    forb_t: &[usize],
) -> Option<Vec<BigRational>> {
    let size = parts.len();
    let _ = mu_idx;
    let mut rows: RatMatrix = Vec::new();
    let mut rhs = Vec::new();
    let mut first = vec![BigRational::zero(); size];
    first[0] = BigRational::one();
    rows.push(first);
    rhs.push(BigRational::one());
    for (mat, forb) in [(aq, forb_q), (at, forb_t)] {
        for &k in forb {
            rows.push((0..size).map(|l| mat[l][k].clone()).collect());
            rhs.push(BigRational::zero());
        }
    }
    solve_unique(&rows, &rhs)
}

fn build(n: usize) -> Result<HtildeTable> {
    let parts = partitions(n);
    let size = parts.len();
    if n <= 1 {
        return Ok(HtildeTable { degree: n, parts, entries: vec![vec![IntPoly::one()]] });
    }
    let prods = character_products(n);
    let max_deg = parts.iter().map(|p| p.n_stat()).max().unwrap_or(0);
    for margin in [0usize, 2, 6] {
        let count = max_deg + 1 + margin;
        let ps = primes(2 * count + 2);
        let qs: Vec<i64> = ps.iter().step_by(2).copied().take(count).collect();
        let ts: Vec<i64> = ps.iter().skip(1).step_by(2).copied().take(count).collect();
        let aqs: Vec<RatMatrix> = qs.iter().map(|&x| numeric_substitution(n, &prods, x)).collect();
        let ats: Vec<RatMatrix> = ts.iter().map(|&x| numeric_substitution(n, &prods, x)).collect();
        let qr: Vec<BigRational> = qs.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let tr: Vec<BigRational> = ts.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let mut entries = vec![vec![IntPoly::zero(); size]; size];
        let mut ok = true;
        'columns: for (m, mu) in parts.iter().enumerate() {
            let conj = mu.conjugate();
            let dq = conj.n_stat() + margin;
            let dt = mu.n_stat() + margin;
            let forb_q = forbidden(&parts, mu);
            let forb_t = forbidden(&parts, &conj);
            // values[i][j][λ] at (qs[i], ts[j])
            let mut values: Vec<Vec<Vec<BigRational>>> = Vec::with_capacity(dq + 1);
            for aq in aqs.iter().take(dq + 1) {
                let mut row = Vec::with_capacity(dt + 1);
                for at in ats.iter().take(dt + 1) {
                    match solve_column(&parts, m, aq, at, &forb_q, &forb_t) {
                        Some(v) => row.push(v),
                        None => {
                            ok = false;
                            break 'columns;
                        }
                    }
                }
                values.push(row);
            }
            for l in 0..size {
                // interpolate in t for each q node, then each t-coefficient in q
                let by_q: Vec<Vec<BigRational>> = values
                    .iter()
                    .map(|row| newton(&tr[..=dt], &row.iter().map(|v| v[l].clone()).collect::<Vec<_>>()))
                    .collect();
                let mut terms = Vec::new();
                for b in 0..=dt {
                    let ys: Vec<BigRational> = by_q.iter().map(|c| c[b].clone()).collect();
                    for (a, c) in newton(&qr[..=dq], &ys).into_iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        if !c.is_integer() {
                            ok = false;
                            break 'columns;
                        }
                        terms.push((Mono::new(a as i32, b as i32), c.to_integer()));
                    }
                }
                entries[l][m] = IntPoly::from_terms(terms);
            }
        }
        if ok {
            let table = HtildeTable { degree: n, parts: parts.clone(), entries };
            if verify_conditions(&table, &prods) {
                return Ok(table);
            }
        }
        log::debug!("H̃ degree {n}: interpolation margin {margin} insufficient, retrying");
    }
    Err(Error::Construction(format!("H̃ table of degree {n}")))
}

fn verify_conditions(table: &HtildeTable, prods: &[Vec<Vec<BigInt>>]) -> bool {
    let n = table.degree;
    let aq = symbolic_substitution(n, prods, true);
    let at = symbolic_substitution(n, prods, false);
    let size = table.parts.len();
    table.parts.iter().enumerate().all(|(m, mu)| {
        if !table.entries[0][m].is_one() {
            return false;
        }
        let check = |mat: &Vec<Vec<IntPoly>>, forb: Vec<usize>| {
            forb.into_iter().all(|k| {
                let mut acc = IntPoly::zero();
                for l in 0..size {
                    if !table.entries[l][m].is_zero() {
                        acc = acc.add(&table.entries[l][m].mul(&mat[l][k]));
                    }
                }
                acc.is_zero()
            })
        };
        check(&aq, forbidden(&table.parts, mu)) && check(&at, forbidden(&table.parts, &mu.conjugate()))
    })
}

/// Checks a table against the defining conditions, e.g. after loading it from disk.
pub fn validate_table(table: &HtildeTable) -> bool {
    table.parts == partitions(table.degree)
        && table.entries.iter().flatten().all(|p| p.terms().iter().all(|(m, c)| m.q >= 0 && m.t >= 0 && !c.is_negative()))
        && verify_conditions(table, &character_products(table.degree))
}

type Slot = Arc<OnceLock<Arc<HtildeTable>>>;

fn slots() -> &'static RwLock<HashMap<usize, Slot>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Slot>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn slot(n: usize) -> Slot {
    if let Some(s) = slots().read().unwrap().get(&n) {
        return s.clone();
    }
    slots().write().unwrap().entry(n).or_default().clone()
}

/// The table for degree `n`, built on first use.
pub fn htilde_table(n: usize) -> Arc<HtildeTable> {
    try_htilde_table(n).unwrap_or_else(|e| panic!("internal error: {e}"))
}

pub fn try_htilde_table(n: usize) -> Result<Arc<HtildeTable>> {
    let s = slot(n);
    if let Some(t) = s.get() {
        return Ok(t.clone());
    }
    let built = Arc::new(build(n)?);
    Ok(s.get_or_init(|| built).clone())
}

/// Builds a table without consulting or filling the shared cache.
pub fn build_htilde_table(n: usize) -> Result<HtildeTable> {
    build(n)
}

/// Makes a precomputed table available; returns false if one was already present.
pub fn install_htilde_table(table: HtildeTable) -> bool {
    slot(table.degree).set(Arc::new(table)).is_ok()
}

pub fn is_table_loaded(n: usize) -> bool {
    slot(n).get().is_some()
}

/// `H̃_μ` in the Schur basis.
pub fn htilde(mu: &Partition) -> SymFunc {
    htilde_table(mu.size()).column(mu)
}
