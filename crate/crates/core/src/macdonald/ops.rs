//! The star scalar product, the change of basis to H̃, and the diagonal
//! operators ∇ and Δ_g.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use super::hook::{hook_data, HookData};
use super::htilde::htilde_table;
use crate::exact::{IntPoly, RatFunc};
use crate::symfunc::tables::tables;
use crate::symfunc::{pleth_eval, Basis, Partition, SymFunc};

/// Whether `<p_λ, p_λ>_*` carries the factor `z_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarVariant {
    WithZ,
    WithoutZ,
}

fn star_weight(rho: &Partition, variant: StarVariant) -> RatFunc {
    let one = IntPoly::one();
    let mut w = one.clone();
    for &k in rho.parts() {
        let k = k as i32;
        w = w.mul(&one.sub(&IntPoly::monomial(k, 0))).mul(&one.sub(&IntPoly::monomial(0, k)));
    }
    if (rho.size() + rho.len()) % 2 == 1 {
        w = w.neg();
    }
    let w = RatFunc::from_int_poly(w);
    match variant {
        StarVariant::WithZ => w.scale_int(&rho.z()),
        StarVariant::WithoutZ => w,
    }
}

fn star_with(f: &SymFunc, g: &SymFunc, variant: StarVariant) -> RatFunc {
    let (a, b) = (f.to_p(), g.to_p());
    let prods: Vec<RatFunc> = a
        .terms()
        .filter_map(|(p, c)| {
            let d = b.coeff(p);
            (!d.is_zero()).then(|| c.mul(&d).mul(&star_weight(p, variant)))
        })
        .collect();
    RatFunc::sum(prods.iter())
}

fn orthogonal_under(variant: StarVariant, max_n: usize) -> bool {
    (1..=max_n).all(|n| {
        let table = htilde_table(n);
        let cols: Vec<SymFunc> = table.parts.iter().map(|mu| table.column(mu)).collect();
        table.parts.iter().enumerate().all(|(i, lam)| {
            (0..cols.len()).all(|j| {
                let v = star_with(&cols[i], &cols[j], variant);
                if i == j {
                    v == hook_data(lam).w_rf()
                } else {
                    v.is_zero()
                }
            })
        })
    })
}

/// The variant under which `<H̃_λ, H̃_μ>_* = χ(λ=μ) w_λ` for all degrees up to 4.
/// Panics if neither variant qualifies.
pub fn star_variant() -> StarVariant {
    static CHOICE: OnceLock<StarVariant> = OnceLock::new();
    *CHOICE.get_or_init(|| {
        [StarVariant::WithZ, StarVariant::WithoutZ]
            .into_iter()
            .find(|&v| orthogonal_under(v, 4))
            .expect("no star product variant makes the H̃ basis orthogonal with norms w_μ")
    })
}

/// `<f, g>_*`.
pub fn star_inner(f: &SymFunc, g: &SymFunc) -> RatFunc {
    star_with(f, g, star_variant())
}

/// Per-degree data shared by all H̃ operations.
pub struct MacdonaldDegree {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub hooks: Vec<HookData>,
    /// `H̃_μ` in the Schur basis.
    pub columns: Vec<SymFunc>,
    /// `inverse[λ][μ]` is the coefficient of `H̃_μ` in `s_λ`.
    pub inverse: Vec<Vec<RatFunc>>,
}

impl MacdonaldDegree {
    fn build(n: usize) -> Self {
        let table = htilde_table(n);
        let parts = table.parts.clone();
        let hooks: Vec<HookData> = parts.iter().map(hook_data).collect();
        let columns: Vec<SymFunc> = parts.iter().map(|mu| table.column(mu)).collect();
        let variant = star_variant();
        let tab = tables(n);
        let col_p: Vec<SymFunc> = columns.iter().map(|c| c.to_p()).collect();
        let weights: Vec<RatFunc> = tab.parts.iter().map(|r| star_weight(r, variant)).collect();
        // <s_λ, H̃_μ>_* = Σ_ρ χ^λ(ρ)/z_ρ · [p_ρ]H̃_μ · weight_ρ
        let inverse = (0..parts.len())
            .map(|l| {
                (0..parts.len())
                    .map(|m| {
                        let terms: Vec<RatFunc> = tab
                            .parts
                            .iter()
                            .enumerate()
                            .filter(|&(r, _)| tab.chars[l][r] != 0)
                            .map(|(r, rho)| {
                                let c = num_rational::BigRational::new(BigInt::from(tab.chars[l][r]), tab.z[r].clone());
                                col_p[m].coeff(rho).mul(&weights[r]).scale_rational(&c)
                            })
                            .collect();
                        RatFunc::sum(terms.iter()).div(&hooks[m].w_rf()).expect("w_μ is nonzero")
                    })
                    .collect()
            })
            .collect();
        MacdonaldDegree { n, parts, hooks, columns, inverse }
    }

    pub fn index(&self, mu: &Partition) -> usize {
        self.parts.iter().position(|p| p == mu).expect("partition of this degree")
    }
}

pub fn degree_data(n: usize) -> Arc<MacdonaldDegree> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<OnceLock<Arc<MacdonaldDegree>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let found = cache.read().unwrap().get(&n).cloned();
    let slot = found.unwrap_or_else(|| cache.write().unwrap().entry(n).or_default().clone());
    slot.get_or_init(|| Arc::new(MacdonaldDegree::build(n))).clone()
}

fn by_degree(f: &SymFunc) -> BTreeMap<usize, SymFunc> {
    let mut out: BTreeMap<usize, Vec<(Partition, RatFunc)>> = BTreeMap::new();
    for (p, c) in f.terms() {
        out.entry(p.size()).or_default().push((p.clone(), c.clone()));
    }
    out.into_iter().map(|(d, t)| (d, SymFunc::from_terms(f.basis(), t))).collect()
}

/// Expansion in the H̃ basis.
pub fn to_htilde(f: &SymFunc) -> SymFunc {
    if f.basis() == Basis::Htilde {
        return f.clone();
    }
    let mut terms = Vec::new();
    for (d, part) in by_degree(f) {
        let data = degree_data(d);
        let s = part.to_s();
        for (m, mu) in data.parts.iter().enumerate() {
            let pairs: Vec<(&RatFunc, &RatFunc)> =
                s.terms().map(|(lam, c)| (c, &data.inverse[data.index(lam)][m])).collect();
            terms.push((mu.clone(), RatFunc::sum_products(pairs)));
        }
    }
    SymFunc::from_terms(Basis::Htilde, terms)
}

/// Converts an H̃ expansion back to the Schur basis.
pub fn from_htilde(f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis(), Basis::Htilde, "from_htilde expects an H̃ expansion");
    let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
    for (mu, c) in f.terms() {
        let data = degree_data(mu.size());
        for (lam, x) in data.columns[data.index(mu)].terms() {
            acc.entry(lam.clone()).or_default().push(c.mul(x));
        }
    }
    SymFunc::from_terms(Basis::S, acc.into_iter().flat_map(|(p, cs)| cs.into_iter().map(move |c| (p.clone(), c))))
}

/// Scales each `H̃_μ` by `eigen(μ)`; the result is in the Schur basis.
pub fn apply_diagonal<F: Fn(&HookData) -> RatFunc>(f: &SymFunc, eigen: F) -> SymFunc {
    let h = to_htilde(f);
    let mut cache: HashMap<Partition, RatFunc> = HashMap::new();
    let scaled = SymFunc::from_terms(
        Basis::Htilde,
        h.terms().map(|(mu, c)| {
            let e = cache.entry(mu.clone()).or_insert_with(|| eigen(&hook_data(mu))).clone();
            (mu.clone(), c.mul(&e))
        }),
    );
    from_htilde(&scaled)
}

/// `∇^power f` for `power` in {-1, 1} (any integer power works).
pub fn nabla(f: &SymFunc, power: i32) -> SymFunc {
    apply_diagonal(f, |h| h.t_rf().pow(power).expect("T_μ is a unit"))
}

/// `Δ_g f`, scaling `H̃_μ` by `g[B_μ]`.
pub fn delta(g: &SymFunc, f: &SymFunc) -> SymFunc {
    apply_diagonal(f, |h| pleth_eval(g, &h.b_rf()))
}

/// `Δ_{h_ℓ} f`; zero for negative `ℓ`.
pub fn delta_h(ell: i64, f: &SymFunc) -> SymFunc {
    if ell < 0 {
        return SymFunc::zero(Basis::S);
    }
    delta(&SymFunc::h(ell), f)
}

/// `Δ_{h_ℓ} ∇ f`.
pub fn delta_h_nabla(ell: i64, f: &SymFunc) -> SymFunc {
    if ell < 0 {
        return SymFunc::zero(Basis::S);
    }
    let h = SymFunc::h(ell);
    apply_diagonal(f, |hd| pleth_eval(&h, &hd.b_rf()).mul(&hd.t_rf()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn variant_is_standard() {
        assert_eq!(star_variant(), StarVariant::WithZ);
        assert_eq!(star_inner(&SymFunc::p(1), &SymFunc::p(1)), RatFunc::m_const());
    }

    #[test]
    fn small_expansions() {
        let h2 = to_htilde(&SymFunc::h(2));
        assert_eq!(h2.coeff(&p(&[2])).to_string(), RatFunc::t().div(&RatFunc::t().sub(&RatFunc::q())).unwrap().to_string());
        let e2 = to_htilde(&SymFunc::e(2));
        let inv = RatFunc::q().sub(&RatFunc::t()).inv().unwrap();
        assert_eq!(e2.coeff(&p(&[2])), inv);
        assert_eq!(e2.coeff(&p(&[1, 1])), inv.neg());
        assert!(from_htilde(&e2).equals(&SymFunc::e(2)));
    }

    #[test]
    fn nabla_e2() {
        let v = nabla(&SymFunc::e(2), 1);
        assert_eq!(v.coeff(&p(&[1, 1])).to_string(), "q + t");
        assert!(nabla(&v, -1).equals(&SymFunc::e(2)));
        assert!(delta(&SymFunc::e(2), &SymFunc::e(2)).equals(&v));
    }
}
