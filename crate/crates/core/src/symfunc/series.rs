//! Truncated u-expansions of the Ω factors used by the creation operators.

use super::pleth::pleth_scale;
use super::sf::SymFunc;
use crate::exact::{IntPoly, RatFunc, USeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaKind {
    /// `Ω[-εuX] = Σ u^k e_k`.
    B,
    /// `Ω[εuX/q] = Σ u^k (-1/q)^k h_k`.
    C,
    /// `Ω[-uX/(1-t)] = Σ u^k (-1)^k e_k[X/(1-t)]`, shared by both dual operators.
    Dual,
}

/// Terms `u^0 .. u^bound` of the requested Ω factor.
pub fn omega_series(kind: OmegaKind, bound: usize) -> USeries<SymFunc> {
    let one_minus_t_inv = || {
        RatFunc::from_int_poly(IntPoly::one().sub(&IntPoly::t())).inv().expect("nonzero")
    };
    let scale = match kind {
        OmegaKind::Dual => Some(one_minus_t_inv()),
        _ => None,
    };
    let terms = (0..=bound).map(|k| {
        let ki = k as i64;
        let f = match kind {
            OmegaKind::B => SymFunc::e(ki),
            OmegaKind::C => {
                let c = RatFunc::monomial(-(k as i32), 0);
                let c = if k % 2 == 1 { c.neg() } else { c };
                SymFunc::h(ki).scale(&c)
            }
            OmegaKind::Dual => {
                let e = pleth_scale(&SymFunc::e(ki), scale.as_ref().unwrap(), false);
                if k % 2 == 1 {
                    e.neg()
                } else {
                    e
                }
            }
        };
        (ki, f.to_p())
    });
    USeries::truncated(0, Some(bound as i64), terms)
}
