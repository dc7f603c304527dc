//! The creation operators, their duals, and the functions `C_α`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::exact::RatFunc;
use crate::symfunc::{compositions, omega_series, pleth_series, Basis, Composition, OmegaKind, SymFunc, VirtualAlphabet};

/// Coefficient of `u^m` in `f[X + shift/u] · Ω`, where `Ω` is expanded to
/// the highest power the window requires.
fn coefficient(m: i64, f: &SymFunc, shift: RatFunc, shift_eps: bool, kind: OmegaKind) -> SymFunc {
    let degree = f.degree() as i64;
    // f[X + a/u] lives in u^{-D} .. u^0 and Ω in u^0 .. u^{bound}
    let bound = m + degree;
    if f.is_zero() || bound < 0 {
        return SymFunc::zero(Basis::P);
    }
    let alphabet = VirtualAlphabet::shift(shift).with_scalar_eps(shift_eps).with_u_power(-1);
    let shifted = pleth_series(f, &alphabet);
    let omega = omega_series(kind, bound as usize);
    shifted.product_coefficient(&omega, m).expect("window covers the requested power")
}

fn one_minus_q() -> RatFunc {
    RatFunc::one().sub(&RatFunc::q())
}

/// `𝔹_m f`.
pub fn creation_b(m: i64, f: &SymFunc) -> SymFunc {
    coefficient(m, f, one_minus_q(), true, OmegaKind::B)
}

/// `ℂ_m f`.
pub fn creation_c(m: i64, f: &SymFunc) -> SymFunc {
    coefficient(m, f, one_minus_q(), true, OmegaKind::C).scale(&RatFunc::q().neg())
}

/// `𝔹*_m f`, the coefficient of `u^{-m}` in `f[X + M/u] Ω[-uX/(1-t)]`.
pub fn dual_b(m: i64, f: &SymFunc) -> SymFunc {
    coefficient(-m, f, RatFunc::m_const(), false, OmegaKind::Dual)
}

/// `ℂ*_m f`, `-q` times the coefficient of `u^{-m}` in `f[X - M/(qu)] Ω[-uX/(1-t)]`.
pub fn dual_c(m: i64, f: &SymFunc) -> SymFunc {
    let shift = RatFunc::m_const().div(&RatFunc::q()).expect("q is nonzero").neg();
    coefficient(-m, f, shift, false, OmegaKind::Dual).scale(&RatFunc::q().neg())
}

fn cache() -> &'static Mutex<HashMap<Composition, SymFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<Composition, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `C_α = ℂ_{α_1} ⋯ ℂ_{α_ℓ}(1)`, in the p basis.
pub fn c_alpha(alpha: &Composition) -> SymFunc {
    if let Some(v) = cache().lock().unwrap().get(alpha).cloned() {
        return v;
    }
    let value = match alpha.parts().split_first() {
        None => SymFunc::one(Basis::P),
        Some((&first, rest)) => {
            let tail = Composition::new(rest.to_vec()).expect("parts are positive");
            creation_c(first as i64, &c_alpha(&tail))
        }
    };
    cache().lock().unwrap().insert(alpha.clone(), value.clone());
    value
}

/// `(𝔹_m C_α, q^{ℓ(α)} Σ_{β⊨m} C_{α,β})`.
pub fn bc_relation_sides(alpha: &Composition, m: usize) -> (SymFunc, SymFunc) {
    let lhs = creation_b(m as i64, &c_alpha(alpha));
    let parts: Vec<SymFunc> = compositions(m).iter().map(|beta| c_alpha(&alpha.concat(beta))).collect();
    let rhs = SymFunc::sum_of(parts.iter()).scale(&RatFunc::monomial(alpha.len() as i32, 0));
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::ops::{nabla, star_inner};
    use crate::symfunc::Partition;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        let one = SymFunc::one(Basis::P);
        assert!(creation_c(1, &one).equals(&SymFunc::e(1)));
        assert!(creation_b(1, &one).equals(&SymFunc::e(1)));
        let expect = SymFunc::h(2).scale(&RatFunc::monomial(-1, 0).neg());
        assert!(c_alpha(&comp(&[2])).equals(&expect));
        let expect = SymFunc::h(1)
            .mul(&SymFunc::h(1))
            .add(&SymFunc::h(2).scale(&RatFunc::one().sub(&RatFunc::q()).div(&RatFunc::q()).unwrap()));
        assert!(c_alpha(&comp(&[1, 1])).equals(&expect));
        assert!(dual_b(1, &one).is_zero());
        assert_eq!(dual_c(1, &SymFunc::e(1)), SymFunc::constant(RatFunc::m_const(), Basis::P));
    }

    #[test]
    fn nabla_of_c_alpha() {
        let s11 = Partition::new(vec![1, 1]);
        let v = nabla(&c_alpha(&comp(&[1, 1])), 1);
        assert_eq!(v.coeff(&s11).to_string(), "q");
        let v = nabla(&c_alpha(&comp(&[2])), 1);
        assert_eq!(v.coeff(&s11).to_string(), "t");
    }

    #[test]
    fn bc_relation_small() {
        for (alpha, m) in [(vec![], 2), (vec![1], 1), (vec![2], 1)] {
            let (l, r) = bc_relation_sides(&comp(&alpha), m);
            assert!(l.equals(&r), "alpha {alpha:?} m {m}");
        }
    }

    #[test]
    fn adjoint_pair() {
        let a = SymFunc::e(1);
        let b = SymFunc::s(&[2, 1]);
        let lhs = star_inner(&creation_c(2, &a), &b);
        let rhs = star_inner(&a, &dual_c(2, &b));
        assert_eq!(lhs, rhs);
        let lhs = star_inner(&creation_b(2, &a), &b);
        let rhs = star_inner(&a, &dual_b(2, &b));
        assert_eq!(lhs, rhs);
    }
}
