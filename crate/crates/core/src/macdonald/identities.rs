//! Both sides of the identities relating the H̃ toolkit, the creation
//! operators and the kernel expressions.

use super::creation::{c_alpha, creation_c, dual_b, dual_c};
use super::hook::{hook_data, HookData};
use super::htilde::{htilde, htilde_table};
use super::ops::{delta_h_nabla, star_inner};
use super::pieri::{gen_pieri, partitions_up_to, star_of, Direction};
use crate::exact::RatFunc;
use crate::symfunc::{compositions, pleth_eval, pleth_scale, Basis, Composition, Partition, SymFunc};

/// A pair of values expected to be equal.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(RatFunc),
    Sym(SymFunc),
}

impl Value {
    /// Canonical text: rational functions as printed, symmetric functions in the Schur basis.
    pub fn canonical(&self) -> String {
        match self {
            Value::Scalar(r) => r.to_string(),
            Value::Sym(f) => f.to_s().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sides {
    pub lhs: Value,
    pub rhs: Value,
}

impl Sides {
    pub fn scalars(lhs: RatFunc, rhs: RatFunc) -> Self {
        Sides { lhs: Value::Scalar(lhs), rhs: Value::Scalar(rhs) }
    }

    pub fn syms(lhs: SymFunc, rhs: SymFunc) -> Self {
        Sides { lhs: Value::Sym(lhs), rhs: Value::Sym(rhs) }
    }

    pub fn holds(&self) -> bool {
        self.lhs.canonical() == self.rhs.canonical()
    }
}

fn sign(k: i64) -> RatFunc {
    if k.rem_euclid(2) == 0 {
        RatFunc::one()
    } else {
        RatFunc::from_i64(-1)
    }
}

fn m_inv() -> RatFunc {
    RatFunc::m_const().inv().expect("M is nonzero")
}

/// `T_μ / w_μ`.
fn t_over_w(h: &HookData) -> RatFunc {
    h.t_rf().div(&h.w_rf()).expect("w is nonzero")
}

/// `<H̃_λ, H̃_μ>_*` against `χ(λ=μ) w_λ`.
pub fn orthogonality(lambda: &Partition, mu: &Partition) -> Sides {
    let v = star_inner(&htilde(lambda), &htilde(mu));
    let expect = if lambda == mu { hook_data(lambda).w_rf() } else { RatFunc::zero() };
    Sides::scalars(v, expect)
}

/// `e_n[B_μ]` against `T_μ`.
pub fn e_of_b(mu: &Partition) -> Sides {
    let h = hook_data(mu);
    Sides::scalars(pleth_eval(&SymFunc::e(mu.size() as i64), &h.b_rf()), h.t_rf())
}

/// `<H̃_μ, h_r e_n>` against `e_n[B_μ]`, for `|μ| = r + n`.
pub fn htilde_pairing(mu: &Partition, r: usize) -> Sides {
    let n = mu.size() - r;
    let pair = SymFunc::h(r as i64).mul(&SymFunc::e(n as i64));
    let lhs = htilde(mu).hall_inner(&pair);
    Sides::scalars(lhs, pleth_eval(&SymFunc::e(n as i64), &hook_data(mu).b_rf()))
}

/// `H̃_μ[D_ν]` against `(-1)^{|μ|+|ν|} H̃_ν[D_μ] T_μ/T_ν`.
pub fn reciprocity(mu: &Partition, nu: &Partition) -> Sides {
    let (hm, hn) = (hook_data(mu), hook_data(nu));
    let lhs = pleth_eval(&htilde(mu), &hn.d_rf());
    let rhs = pleth_eval(&htilde(nu), &hm.d_rf())
        .mul(&hm.t_rf())
        .div(&hn.t_rf())
        .unwrap()
        .mul(&sign((mu.size() + nu.size()) as i64));
    Sides::scalars(lhs, rhs)
}

/// `e_r* h_n*`; zero when an index is negative.
pub fn e_star_h_star(r: i64, n: i64) -> SymFunc {
    star_of(&SymFunc::e(r)).mul(&star_of(&SymFunc::h(n)))
}

/// `Δ_{h_d} ∇ (e_r* h_n*)` by direct operator application.
pub fn kernel_direct(d: i64, r: i64, n: i64) -> SymFunc {
    if d < 0 || r < 0 || n < 0 {
        return SymFunc::zero(Basis::S);
    }
    delta_h_nabla(d, &e_star_h_star(r, n))
}

/// `h_k[c]` for a finite alphabet.
fn h_at(k: i64, c: &RatFunc) -> RatFunc {
    pleth_eval(&SymFunc::h(k), c)
}

/// `Δ_{h_d} ∇ (e_r* h_n*)` as a sum over partitions `γ`.
pub fn kernel_gamma_sum(d: i64, r: i64, n: i64) -> SymFunc {
    if d < 0 || r < 0 || n < 0 {
        return SymFunc::zero(Basis::P);
    }
    let mut parts = Vec::new();
    let (mi, mi_neg) = (m_inv(), m_inv().neg());
    for a in 0..=d {
        let outer = h_at(d - a, &mi).mul(&sign(r + a));
        for gamma in partitions_up_to((n + a) as usize) {
            let h = hook_data(&gamma);
            let scalar = outer
                .mul(&h_at(n + a - gamma.size() as i64, &mi_neg))
                .mul(&t_over_w(&h))
                .mul(&pleth_eval(&SymFunc::e(a), &h.b_rf()));
            if scalar.is_zero() {
                continue;
            }
            let f = pleth_scale(&SymFunc::e(n + r), &h.d_rf().mul(&mi), false);
            parts.push(f.scale(&scalar));
        }
    }
    SymFunc::sum_of(parts.iter())
}

pub fn kernel_expression(d: i64, r: i64, n: i64) -> Sides {
    Sides::syms(kernel_direct(d, r, n), kernel_gamma_sum(d, r, n))
}

/// Both sides of the expansion of `(T_ν/w_ν) h_d[B_μ] H̃_μ[D_ν]` over `γ ⊇ ν`.
pub fn lemma44(nu: &Partition, mu: &Partition, d: i64) -> Sides {
    let (hn, hm) = (hook_data(nu), hook_data(mu));
    let htm = htilde(mu);
    let lhs = t_over_w(&hn).mul(&h_at(d, &hm.b_rf())).mul(&pleth_eval(&htm, &hn.d_rf()));
    let mut terms = Vec::new();
    for a in 0..=d.max(0) {
        let outer = sign(a).mul(&h_at(d - a, &m_inv()));
        let size = nu.size() + a as usize;
        let _ = htilde_table(size);
        for gamma in crate::symfunc::partitions(size).into_iter().filter(|g| g.contains(nu)) {
            let c = gen_pieri(&SymFunc::e(a), &gamma, Direction::Down).get(nu).cloned().unwrap_or_default();
            if c.is_zero() {
                continue;
            }
            let hg = hook_data(&gamma);
            terms.push(outer.mul(&pleth_eval(&htm, &hg.d_rf())).mul(&t_over_w(&hg)).mul(&c));
        }
    }
    Sides::scalars(lhs, RatFunc::sum(terms.iter()))
}

/// `ℂ*_m e_c[X D_γ/M]` directly and as a sum over `b`.
pub fn lemma47(gamma: &Partition, c: i64, m: i64) -> Sides {
    let h = hook_data(gamma);
    let scale = h.d_rf().mul(&m_inv());
    let e_scaled = |k: i64| pleth_scale(&SymFunc::e(k), &scale, false);
    let lhs = dual_c(m, &e_scaled(c));
    let one_minus_t_inv = RatFunc::one().sub(&RatFunc::t()).inv().unwrap();
    let mut terms = Vec::new();
    for b in 0..=c.max(0) {
        let coeff = RatFunc::monomial(1 - b as i32, 0).mul(&sign(m + 1)).mul(&h_at(b, &h.d_rf()));
        if coeff.is_zero() {
            continue;
        }
        let f = e_scaled(c - b).mul(&pleth_scale(&SymFunc::e(b - m), &one_minus_t_inv, false));
        terms.push(f.scale(&coeff));
    }
    Sides::syms(lhs, SymFunc::sum_of(terms.iter()))
}

/// `𝔹*_m Δ_{h_d} ∇ (e_r* h_n*)` directly and as a sum over `a`, `b`, `τ`.
pub fn lemma48(m: i64, r: i64, n: i64, d: i64) -> Sides {
    let lhs = dual_b(m, &kernel_direct(d, r, n));
    let one_minus_t_inv = RatFunc::one().sub(&RatFunc::t()).inv().unwrap();
    let (mi, mi_neg) = (m_inv(), m_inv().neg());
    let mut terms = Vec::new();
    for a in 0..=d.max(-1) {
        let outer = h_at(d - a, &mi);
        for tau in partitions_up_to((n + a).max(0) as usize) {
            let h = hook_data(&tau);
            let inner = outer
                .mul(&h_at(n + a - tau.size() as i64, &mi_neg))
                .mul(&t_over_w(&h))
                .mul(&pleth_eval(&SymFunc::e(a), &h.b_rf()));
            if inner.is_zero() {
                continue;
            }
            let scale = h.d_rf().mul(&mi);
            for b in 0..=(n + r).max(-1) {
                let coeff = inner.mul(&pleth_eval(&SymFunc::e(b), &h.d_rf())).mul(&sign(r + a + b + m));
                if coeff.is_zero() {
                    continue;
                }
                let f = pleth_scale(&SymFunc::e(n + r - b), &scale, false)
                    .mul(&pleth_scale(&SymFunc::e(b - m), &one_minus_t_inv, false));
                terms.push(f.scale(&coeff));
            }
        }
    }
    Sides::syms(lhs, SymFunc::sum_of(terms.iter()))
}

/// The recurrence for `ℂ*_{k+1} Δ_{h_d} ∇ (e_r* h_m*)`.
pub fn main_recurrence(k: i64, d: i64, r: i64, m: i64) -> Sides {
    let lhs = dual_c(k + 1, &kernel_direct(d, r, m));
    let tk = RatFunc::monomial(0, k as i32);
    let mut rhs = dual_b(k, &kernel_direct(d, r, m - 1))
        .add(&dual_b(k + 1, &kernel_direct(d - 1, r, m)))
        .scale(&tk);
    if k == 0 {
        rhs = rhs.add(&kernel_direct(d, r - 1, m));
    }
    Sides::syms(lhs, rhs)
}

/// `<Δ_{h_ℓ} ∇ C_α, s_{k+1,1^{|α|-k-1}}>`.
pub fn cat_rise_coefficient(alpha: &Composition, k: i64, ell: i64) -> RatFunc {
    let f = delta_h_nabla(ell, &c_alpha(alpha));
    f.hook_coefficient(k, alpha.size())
}

/// The hook coefficient recurrence for `ℂ_{a+1} C_β`.
pub fn corollary42(beta: &Composition, a: usize, k: i64, ell: i64) -> Sides {
    let n = beta.size();
    let lhs_f = delta_h_nabla(ell, &creation_c(a as i64 + 1, &c_alpha(beta)));
    let lhs = lhs_f.hook_coefficient(k, n + a + 1);
    let factor = RatFunc::monomial(beta.len() as i32, a as i32);
    let mut terms = Vec::new();
    for gamma in compositions(a) {
        let f = delta_h_nabla(ell, &c_alpha(&beta.concat(&gamma)));
        terms.push(f.hook_coefficient(k, n + a).mul(&factor));
    }
    for gamma in compositions(a + 1) {
        let f = delta_h_nabla(ell - 1, &c_alpha(&beta.concat(&gamma)));
        terms.push(f.hook_coefficient(k, n + a + 1).mul(&factor));
    }
    if a == 0 {
        let f = delta_h_nabla(ell, &c_alpha(beta));
        terms.push(f.hook_coefficient(k - 1, n));
    }
    Sides::scalars(lhs, RatFunc::sum(terms.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn reciprocity_small() {
        assert!(reciprocity(&p(&[2]), &p(&[1])).holds());
        assert!(reciprocity(&p(&[1]), &Partition::empty()).holds());
    }

    #[test]
    fn kernel_small() {
        for (d, r, n) in [(0, 0, 1), (0, 1, 0), (1, 0, 2)] {
            assert!(kernel_expression(d, r, n).holds(), "{d} {r} {n}");
        }
        let e1 = SymFunc::e(1).scale(&m_inv());
        assert!(kernel_direct(0, 0, 1).equals(&e1));
    }

    #[test]
    fn lemmas_small() {
        assert!(lemma44(&Partition::empty(), &p(&[1]), 1).holds());
        assert!(lemma47(&Partition::empty(), 1, 1).holds());
        assert!(lemma48(0, 0, 1, 0).holds());
    }

    #[test]
    fn recurrence_small() {
        assert!(main_recurrence(0, 0, 1, 0).holds());
        assert!(main_recurrence(2, 0, 0, 1).holds());
        assert!(corollary42(&Composition::empty(), 0, 0, 0).holds());
    }
}
