//! Exact arithmetic: integers, rationals, Laurent polynomials and rational
//! functions in q,t, and window-tracked series in a formal variable u.

pub mod atom;
pub mod gcd;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod useries;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Coeff, IntPoly, LaurentPoly, LaurentPolyQT, Mono};
pub use ratfunc::RatFunc;
pub use useries::USeries;

pub type BigRat = BigRational;

/// Coefficient rings usable inside [`USeries`].
pub trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl RingElem for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
}

impl RingElem for LaurentPolyQT {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
}
