//! Plethystic substitution on virtual alphabets.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use super::partition::Partition;
use super::sf::{collect_terms, SymFunc};
use super::Basis;
use crate::exact::{IntPoly, RatFunc, USeries};

/// The alphabet `x_scale·(ε?)X + (ε?)·scalar·u^{u_power}`, acting on power sums by
/// `p_k -> x_scale(q^k,t^k)·(±1)^k·p_k + scalar(q^k,t^k)·(±1)^k·u^{u_power·k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct VirtualAlphabet {
    pub x_scale: RatFunc,
    pub x_eps: bool,
    pub scalar: RatFunc,
    pub scalar_eps: bool,
    pub u_power: i64,
}

impl VirtualAlphabet {
    pub fn identity() -> Self {
        VirtualAlphabet::scaled(RatFunc::one(), false)
    }

    /// `c·X` (or `ε·c·X`).
    pub fn scaled(c: RatFunc, eps: bool) -> Self {
        VirtualAlphabet { x_scale: c, x_eps: eps, scalar: RatFunc::zero(), scalar_eps: false, u_power: 0 }
    }

    /// The finite alphabet `a` alone.
    pub fn finite(a: RatFunc) -> Self {
        VirtualAlphabet { x_scale: RatFunc::zero(), x_eps: false, scalar: a, scalar_eps: false, u_power: 0 }
    }

    /// `X + a`.
    pub fn shift(a: RatFunc) -> Self {
        VirtualAlphabet { scalar: a, ..VirtualAlphabet::identity() }
    }

    pub fn with_scalar_eps(mut self, eps: bool) -> Self {
        self.scalar_eps = eps;
        self
    }

    pub fn with_u_power(mut self, k: i64) -> Self {
        self.u_power = k;
        self
    }

    fn images(&self, max: usize) -> Vec<(RatFunc, RatFunc)> {
        let sign = |eps: bool, k: usize, c: RatFunc| if eps && k % 2 == 1 { c.neg() } else { c };
        (0..=max)
            .map(|k| {
                if k == 0 {
                    return (RatFunc::zero(), RatFunc::zero());
                }
                let a = sign(self.x_eps, k, self.x_scale.substitute_powers(k as u32));
                let b = sign(self.scalar_eps, k, self.scalar.substitute_powers(k as u32));
                (a, b)
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `f[A]` graded by the power of u, each component in the p basis.
pub fn pleth_graded(f: &SymFunc, alpha: &VirtualAlphabet) -> BTreeMap<i64, SymFunc> {
    let fp = f.to_p();
    let images = alpha.images(fp.degree());
    let x_zero = alpha.x_scale.is_zero();
    let mut pow_cache: HashMap<(usize, usize, bool), RatFunc> = HashMap::new();
    let mut power = |k: usize, e: usize, first: bool| -> RatFunc {
        pow_cache
            .entry((k, e, first))
            .or_insert_with(|| {
                let base = if first { &images[k].0 } else { &images[k].1 };
                base.pow(e as i32).expect("nonnegative power")
            })
            .clone()
    };
    let mut acc: BTreeMap<i64, HashMap<Partition, Vec<RatFunc>>> = BTreeMap::new();
    for (rho, c) in fp.terms() {
        // expand ∏ over part values of (a_k p_k + b_k u^{wk})^{m}
        let mut partial: Vec<(i64, Vec<usize>, RatFunc)> = vec![(0, Vec::new(), c.clone())];
        for (k, m) in rho.multiplicities() {
            let mut next = Vec::new();
            let js: Vec<usize> = if x_zero { vec![0] } else { (0..=m).collect() };
            for j in js {
                let coef = power(k, j, true).mul(&power(k, m - j, false)).scale_int(&binomial(m, j));
                if coef.is_zero() {
                    continue;
                }
                for (ue, parts, pc) in &partial {
                    let mut p2 = parts.clone();
                    p2.extend(std::iter::repeat_n(k, j));
                    next.push((ue + alpha.u_power * (k * (m - j)) as i64, p2, pc.mul(&coef)));
                }
            }
            partial = next;
        }
        for (ue, parts, pc) in partial {
            acc.entry(ue).or_default().entry(Partition::new(parts)).or_default().push(pc);
        }
    }
    acc.into_iter()
        .map(|(k, m)| (k, collect_terms(Basis::P, m)))
        .filter(|(_, f)| !f.is_zero())
        .collect()
}

/// `f[A]` for an alphabet without a u-grading, in the p basis.
pub fn pleth(f: &SymFunc, alpha: &VirtualAlphabet) -> SymFunc {
    assert_eq!(alpha.u_power, 0, "use pleth_series for u-graded alphabets");
    pleth_graded(f, alpha).remove(&0).unwrap_or_else(|| SymFunc::zero(Basis::P))
}

/// `f[A]` as an exact Laurent polynomial in u.
pub fn pleth_series(f: &SymFunc, alpha: &VirtualAlphabet) -> USeries<SymFunc> {
    let lo = (alpha.u_power * f.degree() as i64).min(0);
    USeries::exact(lo, pleth_graded(f, alpha))
}

/// `f[a]` for a finite alphabet `a`.
pub fn pleth_eval(f: &SymFunc, a: &RatFunc) -> RatFunc {
    pleth(f, &VirtualAlphabet::finite(a.clone())).coeff(&Partition::empty())
}

/// `f[a]` for a finite alphabet given as a Laurent polynomial.
pub fn pleth_eval_poly(f: &SymFunc, a: &IntPoly) -> RatFunc {
    pleth_eval(f, &RatFunc::from_int_poly(a.clone()))
}

/// `f[c·X]` or `f[ε·c·X]`.
pub fn pleth_scale(f: &SymFunc, c: &RatFunc, eps: bool) -> SymFunc {
    let fp = f.to_p();
    let mut cache: HashMap<usize, RatFunc> = HashMap::new();
    let mut factor = |k: usize| {
        cache
            .entry(k)
            .or_insert_with(|| {
                let v = c.substitute_powers(k as u32);
                if eps && k % 2 == 1 {
                    v.neg()
                } else {
                    v
                }
            })
            .clone()
    };
    let terms: Vec<(Partition, RatFunc)> = fp
        .terms()
        .map(|(rho, x)| {
            let mut v = x.clone();
            for &k in rho.parts() {
                v = v.mul(&factor(k));
            }
            (rho.clone(), v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect();
    SymFunc::from_terms(Basis::P, terms)
}

/// `f[X + a]`.
pub fn pleth_shift(f: &SymFunc, a: &RatFunc) -> SymFunc {
    pleth(f, &VirtualAlphabet::shift(a.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Mono;

    fn poly(terms: &[(i32, i32, i64)]) -> RatFunc {
        RatFunc::from_int_poly(IntPoly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), BigInt::from(c)))))
    }

    #[test]
    fn finite_alphabets() {
        let b21 = poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(pleth_eval(&SymFunc::e(1), &b21), b21);
        assert!(pleth_eval(&SymFunc::h(2), &RatFunc::one()).is_one());
        assert!(pleth_eval(&SymFunc::e(2), &RatFunc::from_i64(-1)).is_one());
    }

    #[test]
    fn shifts() {
        let lhs = pleth_shift(&SymFunc::h(2), &RatFunc::one());
        let rhs = SymFunc::h(2).add(&SymFunc::h(1)).add(&SymFunc::one(Basis::H));
        assert!(lhs.equals(&rhs));
        let p3 = pleth_shift(&SymFunc::p(3), &RatFunc::from_i64(-1));
        assert!(p3.equals(&SymFunc::p(3).sub(&SymFunc::one(Basis::P))));
        // e_2[X + Y] with Y = q + t
        let y = poly(&[(1, 0, 1), (0, 1, 1)]);
        let lhs = pleth_shift(&SymFunc::e(2), &y);
        let rhs = SymFunc::e(2)
            .add(&SymFunc::e(1).scale(&pleth_eval(&SymFunc::e(1), &y)))
            .add(&SymFunc::one(Basis::E).scale(&pleth_eval(&SymFunc::e(2), &y)));
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn scaling() {
        let m = RatFunc::m_const();
        let got = pleth_scale(&SymFunc::p(2), &m.inv().unwrap(), false);
        let expect = SymFunc::p(2).scale(&m.substitute_powers(2).inv().unwrap());
        assert_eq!(got, expect);
        assert!(pleth_scale(&SymFunc::e(2), &RatFunc::from_i64(-1), true).equals(&SymFunc::h(2)));
    }
}
