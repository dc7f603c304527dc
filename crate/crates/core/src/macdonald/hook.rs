use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{IntPoly, Mono, RatFunc};
use crate::symfunc::Partition;

/// Hook polynomials of a partition.
#[derive(Clone, Debug, PartialEq)]
pub struct HookData {
    pub mu: Partition,
    /// `Σ q^{co-arm} t^{co-leg}` over cells.
    pub b: IntPoly,
    /// `∏ q^{co-arm} t^{co-leg}`.
    pub t: IntPoly,
    /// `M·B - 1`.
    pub d: IntPoly,
    /// `∏ (q^a - t^{l+1})(t^l - q^{a+1})`.
    pub w: IntPoly,
}

pub fn m_poly() -> IntPoly {
    let one = IntPoly::one();
    one.sub(&IntPoly::q()).mul(&one.sub(&IntPoly::t()))
}

pub fn hook_data(mu: &Partition) -> HookData {
    let mut b = IntPoly::zero();
    let mut tq = 0i32;
    let mut tt = 0i32;
    let mut w = IntPoly::one();
    let one = BigInt::one();
    for (i, j) in mu.cells() {
        b = b.add(&IntPoly::monomial(j as i32, i as i32));
        tq += j as i32;
        tt += i as i32;
        let (a, l) = (mu.arm(i, j) as i32, mu.leg(i, j) as i32);
        let f1 = IntPoly::from_terms([(Mono::new(a, 0), one.clone()), (Mono::new(0, l + 1), -one.clone())]);
        let f2 = IntPoly::from_terms([(Mono::new(0, l), one.clone()), (Mono::new(a + 1, 0), -one.clone())]);
        w = w.mul(&f1).mul(&f2);
    }
    let d = m_poly().mul(&b).sub(&IntPoly::one());
    HookData { mu: mu.clone(), b, t: IntPoly::monomial(tq, tt), d, w }
}

impl HookData {
    pub fn b_rf(&self) -> RatFunc {
        RatFunc::from_int_poly(self.b.clone())
    }
    pub fn t_rf(&self) -> RatFunc {
        RatFunc::from_int_poly(self.t.clone())
    }
    pub fn d_rf(&self) -> RatFunc {
        RatFunc::from_int_poly(self.d.clone())
    }
    pub fn w_rf(&self) -> RatFunc {
        RatFunc::from_int_poly(self.w.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        let h = hook_data(&Partition::new(vec![1]));
        assert!(h.b.is_one() && h.t.is_one());
        assert_eq!(h.d.to_string(), "q*t - q - t");
        assert_eq!(h.w, m_poly());
        let h = hook_data(&Partition::new(vec![2, 1]));
        assert_eq!(h.t.to_string(), "q*t");
        assert_eq!(h.b.to_string(), "q + t + 1");
        let h = hook_data(&Partition::empty());
        assert!(h.b.is_zero() && h.t.is_one() && h.w.is_one());
        assert_eq!(h.d.to_string(), "-1");
    }
}
