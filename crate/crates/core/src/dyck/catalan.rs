use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::decorated::{enumerate_decorations, stats_circ};
use super::multipoly::MultiPoly;
use super::path::{enumerate_paths, DyckPath};
use crate::symfunc::Composition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatMethod {
    DecoratedSum,
    ProductForm,
}

/// `(rise-touch composition, peak count, rise count) -> Σ q^dinv° t^area°` over all decorated paths of size `n`.
pub type CatRiseTable = BTreeMap<(Composition, usize, usize), MultiPoly>;

fn table_for_path(path: &DyckPath) -> HashMap<(Composition, usize, usize), MultiPoly> {
    let mut out: HashMap<(Composition, usize, usize), MultiPoly> = HashMap::new();
    for dp in enumerate_decorations(path) {
        let s = stats_circ(&dp);
        let key = (dp.rise_touch_composition(), s.peak_circ as usize, s.rise_circ as usize);
        out.entry(key).or_default().add_term([s.dinv_circ, s.area_circ, 0, 0], BigInt::from(1));
    }
    out
}

fn build_table(n: usize) -> CatRiseTable {
    let paths: Vec<DyckPath> = enumerate_paths(n).collect();
    let parts: Vec<HashMap<(Composition, usize, usize), MultiPoly>> = paths.par_iter().map(table_for_path).collect();
    let mut table = CatRiseTable::new();
    for part in parts {
        for (k, v) in part {
            let e = table.entry(k).or_default();
            *e = e.add(&v);
        }
    }
    table
}

/// The table for size `n`, memoized.
pub fn cat_rise_table(n: usize) -> Arc<CatRiseTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CatRiseTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n).cloned() {
        return t;
    }
    let t = Arc::new(build_table(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

/// Generating polynomial of decorated paths of size `|α| + ℓ` with `k` decorated
/// peaks and rise-touch composition `α`. Negative `k` or `ℓ` give zero.
pub fn cat_rise(alpha: &Composition, k: i64, ell: i64) -> MultiPoly {
    if k < 0 || ell < 0 {
        return MultiPoly::zero();
    }
    let n = alpha.size() + ell as usize;
    cat_rise_table(n).get(&(alpha.clone(), k as usize, ell as usize)).cloned().unwrap_or_default()
}

fn product_form_term(path: &DyckPath) -> MultiPoly {
    let a = path.area_seq();
    let (_, b) = path.b_sequence();
    let dinv: u32 = b.iter().sum();
    let area = path.area();
    // expand ∏(1 + z q^{-b_i}) ∏(1 + w t^{-a_i}) times q^dinv t^area
    let mut acc: Vec<([i64; 4], i64)> = vec![([dinv as i64, area as i64, 0, 0], 1)];
    let mut factors: Vec<[i64; 4]> = Vec::new();
    for i in 1..b.len() {
        if b[i] > b[i - 1] {
            factors.push([-(b[i] as i64), 0, 1, 0]);
        }
    }
    for i in 1..a.len() {
        if a[i] > a[i - 1] {
            factors.push([0, -(a[i] as i64), 0, 1]);
        }
    }
    for f in factors {
        let extra: Vec<([i64; 4], i64)> =
            acc.iter().map(|(e, c)| ([e[0] + f[0], e[1] + f[1], e[2] + f[2], e[3] + f[3]], *c)).collect();
        acc.extend(extra);
    }
    let mut out = MultiPoly::zero();
    for (e, c) in acc {
        assert!(e.iter().all(|&x| x >= 0), "product form left a denominator");
        out.add_term([e[0] as u32, e[1] as u32, e[2] as u32, e[3] as u32], BigInt::from(c));
    }
    out
}

fn decorated_sum_term(path: &DyckPath) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for dp in enumerate_decorations(path) {
        let s = stats_circ(&dp);
        out.add_term([s.dinv_circ, s.area_circ, s.peak_circ, s.rise_circ], BigInt::from(1));
    }
    out
}

/// `Cat_n(q,t,z,w)` by either formula.
pub fn cat_poly(n: usize, method: CatMethod) -> MultiPoly {
    let paths: Vec<DyckPath> = enumerate_paths(n).collect();
    let f = match method {
        CatMethod::DecoratedSum => decorated_sum_term,
        CatMethod::ProductForm => product_form_term,
    };
    paths.par_iter().map(f).reduce(MultiPoly::zero, |a, b| a.add(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(cat_rise(&comp(&[1, 1]), 0, 0).to_string(), "q");
        assert_eq!(cat_rise(&comp(&[2]), 0, 0).to_string(), "t");
        for ell in 0..4 {
            assert_eq!(cat_rise(&comp(&[1]), 0, ell).to_string(), "1");
        }
        assert_eq!(cat_rise(&Composition::empty(), 0, 0).to_string(), "1");
        assert!(cat_rise(&Composition::empty(), 1, 0).is_zero());
        let c2 = cat_poly(2, CatMethod::DecoratedSum);
        assert_eq!(c2, cat_poly(2, CatMethod::ProductForm));
        assert_eq!(c2.eval([1, 1, 1, 1]), BigInt::from(4));
        assert_eq!(cat_poly(3, CatMethod::ProductForm).eval([1, 1, 1, 1]), BigInt::from(20));
    }
}
