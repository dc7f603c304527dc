//! Pieri coefficients and their generalizations.

use std::collections::BTreeMap;

use super::hook::hook_data;
use super::htilde::htilde;
use super::ops::{nabla, to_htilde};
use crate::exact::RatFunc;
use crate::symfunc::{partitions, pleth, pleth_eval, Partition, SymFunc, VirtualAlphabet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Coefficients of `f·H̃_ν`.
    Up,
    /// Coefficients of `f^⊥ H̃_ν`.
    Down,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PieriData {
    pub mu: Partition,
    /// `ν -> c_{μν}` from `h_1^⊥ H̃_μ`.
    pub down: BTreeMap<Partition, RatFunc>,
    /// `λ -> d_{λμ}` from `h_1 H̃_μ`.
    pub up: BTreeMap<Partition, RatFunc>,
}

fn expansion(f: &SymFunc) -> BTreeMap<Partition, RatFunc> {
    to_htilde(f).terms().map(|(p, c)| (p.clone(), c.clone())).collect()
}

/// `f·H̃_ν` (up) or `f^⊥ H̃_ν` (down), expanded in the H̃ basis.
pub fn gen_pieri(f: &SymFunc, nu: &Partition, direction: Direction) -> BTreeMap<Partition, RatFunc> {
    let h = htilde(nu);
    match direction {
        Direction::Up => expansion(&f.mul(&h)),
        Direction::Down => expansion(&SymFunc::perp(f, &h)),
    }
}

pub fn pieri(mu: &Partition) -> PieriData {
    let h1 = SymFunc::h(1);
    let down_all = gen_pieri(&h1, mu, Direction::Down);
    let up_all = gen_pieri(&h1, mu, Direction::Up);
    let pick = |all: &BTreeMap<Partition, RatFunc>, keys: Vec<Partition>| {
        keys.into_iter().map(|k| (k.clone(), all.get(&k).cloned().unwrap_or_default())).collect()
    };
    PieriData { mu: mu.clone(), down: pick(&down_all, mu.remove_cell()), up: pick(&up_all, mu.add_cell()) }
}

/// Both sides of `d_{γτ} = M c_{γτ} w_τ / w_γ`.
pub fn eq9_sides(gamma: &Partition, tau: &Partition) -> (RatFunc, RatFunc) {
    let d = pieri(tau).up.get(gamma).cloned().unwrap_or_default();
    let c = pieri(gamma).down.get(tau).cloned().unwrap_or_default();
    let rhs = RatFunc::m_const()
        .mul(&c)
        .mul(&hook_data(tau).w_rf())
        .div(&hook_data(gamma).w_rf())
        .expect("w is nonzero");
    (d, rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriSum {
    /// `e_{s-1}[D_γ]` through the coefficients `d`.
    E,
    /// `h_{s+1}[D_γ]` through the coefficients `c`.
    H,
}

fn chi(b: bool) -> RatFunc {
    if b {
        RatFunc::one()
    } else {
        RatFunc::zero()
    }
}

/// `(direct evaluation, Pieri sum)` for the requested summation formula.
pub fn pieri_sums(gamma: &Partition, s: usize, kind: PieriSum) -> (RatFunc, RatFunc) {
    let hg = hook_data(gamma);
    let d_gamma = hg.d_rf();
    let t_gamma = hg.t_rf();
    let si = s as i32;
    match kind {
        PieriSum::E => {
            let lhs = pleth_eval(&SymFunc::e(s as i64 - 1), &d_gamma);
            let data = gen_pieri(&SymFunc::h(1), gamma, Direction::Up);
            let terms: Vec<RatFunc> = gamma
                .add_cell()
                .iter()
                .map(|nu| {
                    let ratio = hook_data(nu).t_rf().div(&t_gamma).unwrap().pow(si).unwrap();
                    data.get(nu).cloned().unwrap_or_default().mul(&ratio)
                })
                .collect();
            let mut sum = RatFunc::sum(terms.iter());
            if s.is_multiple_of(2) {
                sum = sum.neg();
            }
            (lhs, sum.add(&chi(s == 0)))
        }
        PieriSum::H => {
            let lhs = pleth_eval(&SymFunc::h(s as i64 + 1), &d_gamma);
            let data = gen_pieri(&SymFunc::h(1), gamma, Direction::Down);
            let terms: Vec<RatFunc> = gamma
                .remove_cell()
                .iter()
                .map(|tau| {
                    let ratio = t_gamma.div(&hook_data(tau).t_rf()).unwrap().pow(si).unwrap();
                    data.get(tau).cloned().unwrap_or_default().mul(&ratio)
                })
                .collect();
            let rhs = RatFunc::sum(terms.iter())
                .mul(&RatFunc::m_const())
                .mul(&RatFunc::monomial(si, si))
                .sub(&chi(s == 0));
            (lhs, rhs)
        }
    }
}

/// `f* = f[X/M]`, in the p basis.
pub fn star_of(f: &SymFunc) -> SymFunc {
    crate::symfunc::pleth_scale(f, &RatFunc::m_const().inv().expect("M is nonzero"), false)
}

/// Both sides of `c^{f⊥}_{μν} w_ν = d^{ωf*}_{μν} w_μ`.
pub fn eq13_sides(f: &SymFunc, mu: &Partition, nu: &Partition) -> (RatFunc, RatFunc) {
    let c = gen_pieri(f, mu, Direction::Down).get(nu).cloned().unwrap_or_default();
    let g = star_of(f).omega();
    let d = gen_pieri(&g, nu, Direction::Up).get(mu).cloned().unwrap_or_default();
    (c.mul(&hook_data(nu).w_rf()), d.mul(&hook_data(mu).w_rf()))
}

/// Sides of the generalized Pieri summation over `ν ⊆ μ` with `m-d ≤ |ν| ≤ m`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenPieriSum {
    /// `Σ c^{g⊥}_{μν}`.
    pub lhs: RatFunc,
    /// `Σ c^{(ωg)⊥}_{μν}`, the left side with `ω` applied to `g` inside the perp.
    pub lhs_omega: RatFunc,
    /// `∇^{-1}((ωg)[(X-ε)/M])` at `X = D_μ`.
    pub rhs: RatFunc,
}

fn perp_sum(g: &SymFunc, mu: &Partition, d: i64, m: i64) -> RatFunc {
    let coeffs = gen_pieri(g, mu, Direction::Down);
    let picked: Vec<RatFunc> = coeffs
        .iter()
        .filter(|(nu, _)| {
            let n = nu.size() as i64;
            mu.contains(nu) && m - d <= n && n <= m
        })
        .map(|(_, c)| c.clone())
        .collect();
    RatFunc::sum(picked.iter())
}

pub fn gen_pieri_sum(mu: &Partition, g: &SymFunc, d: i64, m: i64) -> GenPieriSum {
    let m_inv = RatFunc::m_const().inv().expect("M is nonzero");
    let alphabet = VirtualAlphabet {
        x_scale: m_inv.clone(),
        x_eps: false,
        scalar: m_inv.neg(),
        scalar_eps: true,
        u_power: 0,
    };
    let shifted = pleth(&g.omega(), &alphabet);
    let rhs = pleth_eval(&nabla(&shifted, -1), &hook_data(mu).d_rf());
    GenPieriSum { lhs: perp_sum(g, mu, d, m), lhs_omega: perp_sum(&g.omega(), mu, d, m), rhs }
}

/// `(Σ_{|ν|=|γ|-a} c^{e_a⊥}_{γν}, e_a[B_γ])`.
pub fn lemma45_sides(gamma: &Partition, a: usize) -> (RatFunc, RatFunc) {
    let coeffs = gen_pieri(&SymFunc::e(a as i64), gamma, Direction::Down);
    let picked: Vec<RatFunc> =
        coeffs.iter().filter(|(nu, _)| nu.size() + a == gamma.size()).map(|(_, c)| c.clone()).collect();
    (RatFunc::sum(picked.iter()), pleth_eval(&SymFunc::e(a as i64), &hook_data(gamma).b_rf()))
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}
