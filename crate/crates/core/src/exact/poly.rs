//! Sparse Laurent polynomials in the two parameters `q` and `t`.
//!
//! Terms are kept sorted descending under graded lexicographic order with
//! `q > t`, and no zero coefficient is ever stored, so structural equality is
//! value equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `q^q * t^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub q: i32,
    pub t: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, t: 0 };

    pub fn new(q: i32, t: i32) -> Self {
        Mono { q, t }
    }

    pub fn degree(self) -> i64 {
        self.q as i64 + self.t as i64
    }

    pub fn mul(self, o: Mono) -> Mono {
        Mono::new(self.q + o.q, self.t + o.t)
    }

    pub fn div(self, o: Mono) -> Mono {
        Mono::new(self.q - o.q, self.t - o.t)
    }

    pub fn inv(self) -> Mono {
        Mono::new(-self.q, -self.t)
    }

    pub fn scale(self, k: i32) -> Mono {
        Mono::new(self.q * k, self.t * k)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.q.cmp(&other.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient ring for [`LaurentPoly`].
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Zero + One {
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_negative(&self) -> bool;
    fn to_rational(&self) -> BigRational;
}

impl Coeff for BigInt {
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<C> {
    terms: Vec<(Mono, C)>,
}

/// Integer Laurent polynomial; the internal workhorse of [`crate::exact::RatFunc`].
pub type IntPoly = LaurentPoly<BigInt>;
/// Laurent polynomial in `q,t` over the rationals.
pub type LaurentPolyQT = LaurentPoly<BigRational>;

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn term(c: C, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(q: i32, t: i32) -> Self {
        Self::term(C::one(), Mono::new(q, t))
    }

    pub fn q() -> Self {
        Self::monomial(1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, C)>>(it: I) -> Self {
        let mut map: HashMap<Mono, C> = HashMap::new();
        for (m, c) in it {
            match map.get_mut(&m) {
                Some(v) => v.add_assign_ref(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<Mono, C>) -> Self {
        let mut terms: Vec<(Mono, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    /// A single term `c*q^i*t^j`.
    pub fn as_monomial(&self) -> Option<(&C, Mono)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].1, self.terms[0].0))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: Mono) -> C {
        self.terms
            .binary_search_by(|probe| m.cmp(&probe.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn leading(&self) -> Option<&(Mono, C)> {
        self.terms.first()
    }

    /// Componentwise minimum exponents (the largest monomial dividing every term).
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some(&(first, _)) = it.next() else {
            return Mono::ONE;
        };
        it.fold(first, |acc, (m, _)| Mono::new(acc.q.min(m.q), acc.t.min(m.t)))
    }

    pub fn max_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some(&(first, _)) = it.next() else {
            return Mono::ONE;
        };
        it.fold(first, |acc, (m, _)| Mono::new(acc.q.max(m.q), acc.t.max(m.t)))
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg_ref() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate {
                        c.sub_assign_ref(&b[j].1);
                    } else {
                        c.add_assign_ref(&b[j].1);
                    }
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some((c, m)) = o.as_monomial() {
            return self.mul_term(c, m);
        }
        if let Some((c, m)) = self.as_monomial() {
            return o.mul_term(c, m);
        }
        let lo = self.min_exponents().mul(o.min_exponents());
        let hi = self.max_exponents().mul(o.max_exponents());
        let w = (hi.q - lo.q + 1) as usize;
        let h = (hi.t - lo.t + 1) as usize;
        let area = w.saturating_mul(h);
        if area <= 4 * self.len() * o.len() + 256 {
            let mut dense: Vec<C> = vec![C::zero(); area];
            for (ma, ca) in &self.terms {
                for (mb, cb) in &o.terms {
                    let m = ma.mul(*mb);
                    let idx = (m.q - lo.q) as usize * h + (m.t - lo.t) as usize;
                    dense[idx].add_assign_ref(&ca.mul_ref(cb));
                }
            }
            let mut terms = Vec::new();
            for (idx, c) in dense.into_iter().enumerate() {
                if !c.is_zero() {
                    let m = Mono::new(lo.q + (idx / h) as i32, lo.t + (idx % h) as i32);
                    terms.push((m, c));
                }
            }
            terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            LaurentPoly { terms }
        } else {
            let mut map: HashMap<Mono, C> = HashMap::with_capacity(self.len() * o.len());
            for (ma, ca) in &self.terms {
                for (mb, cb) in &o.terms {
                    let p = ca.mul_ref(cb);
                    match map.get_mut(&ma.mul(*mb)) {
                        Some(v) => v.add_assign_ref(&p),
                        None => {
                            map.insert(ma.mul(*mb), p);
                        }
                    }
                }
            }
            Self::from_map(map)
        }
    }

    pub fn mul_term(&self, c: &C, m: Mono) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc.mul_ref(c))).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(c, Mono::ONE)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces `q -> q^k`, `t -> t^k` (the power-sum `p_k` rule on a finite alphabet).
    pub fn substitute_powers(&self, k: i32) -> Self {
        assert!(k != 0, "substitute_powers needs a nonzero power");
        let mut terms: Vec<(Mono, C)> =
            self.terms.iter().map(|(m, c)| (m.scale(k), c.clone())).collect();
        if k < 0 {
            terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        }
        LaurentPoly { terms }
    }

    /// Maps every coefficient, dropping those that become zero.
    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let d = f(c);
                    (!d.is_zero()).then_some((*m, d))
                })
                .collect(),
        }
    }

    pub fn to_rational(&self) -> LaurentPolyQT {
        self.map_coeffs(|c| c.to_rational())
    }

    /// Exact value at a rational point; `None` when a negative power meets a zero argument.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let qp = rat_pow(q0, m.q)?;
            let tp = rat_pow(t0, m.t)?;
            acc += c.to_rational() * qp * tp;
        }
        Some(acc)
    }

    /// Terms whose coefficients are all nonnegative integers with nonnegative exponents.
    pub fn is_ordinary_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.q >= 0 && m.t >= 0)
    }
}

pub(crate) fn rat_pow(x: &BigRational, e: i32) -> Option<BigRational> {
    if e >= 0 {
        Some(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        None
    } else {
        Some(num_traits::pow(x.recip(), (-e) as usize))
    }
}

impl IntPoly {
    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert!((x % c).is_zero());
                    (*m, x / c)
                })
                .collect(),
        }
    }

    /// Normal form up to units: primitive, shifted so that minimum exponents are zero,
    /// positive leading coefficient. Returns `(unit_coeff, unit_mono, normalized)` with
    /// `self = unit_coeff * q^..t^.. * normalized`.
    pub fn normalize_unit(&self) -> (BigInt, Mono, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), Mono::ONE, IntPoly::zero());
        }
        let mut c = self.content();
        if Signed::is_negative(&self.terms[0].1) {
            c = -c;
        }
        let shift = self.min_exponents();
        let p = self.div_scalar_exact(&c).mul_mono(shift.inv());
        (c, shift, p)
    }
}

impl LaurentPolyQT {
    /// Writes `self = num / den` with `num` integral and `den > 0` minimal.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let num = LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
                .collect(),
        };
        (num, den)
    }

    pub fn from_int(p: &IntPoly) -> Self {
        p.to_rational()
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = mono_text(*m);
            match (abs.is_one(), vars.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{vars}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{vars}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn mono_text(m: Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[(i32, i32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), BigInt::from(c))))
    }

    #[test]
    fn expand_m() {
        let one_minus_q = ip(&[(0, 0, 1), (1, 0, -1)]);
        let one_minus_t = ip(&[(0, 0, 1), (0, 1, -1)]);
        let m = one_minus_q.mul(&one_minus_t);
        assert_eq!(m, ip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]));
        assert_eq!(m.to_string(), "q*t - q - t + 1");
    }

    #[test]
    fn difference_of_squares() {
        let a = ip(&[(1, 0, 1), (0, 1, -1)]);
        let b = ip(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(a.mul(&b), ip(&[(2, 0, 1), (0, 2, -1)]));
    }

    #[test]
    fn additive_identity() {
        let p = ip(&[(2, 1, 3), (-1, 0, -2)]);
        assert_eq!(p.add(&IntPoly::zero()), p);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn substitute_powers_examples() {
        let m = ip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]);
        let m2 = ip(&[(0, 0, 1), (2, 0, -1), (0, 2, -1), (2, 2, 1)]);
        assert_eq!(m.substitute_powers(2), m2);
        assert_eq!(ip(&[(1, -1, 1)]).substitute_powers(3), ip(&[(3, -3, 1)]));
        assert_eq!(ip(&[(0, 0, 5)]).substitute_powers(7), ip(&[(0, 0, 5)]));
    }

    #[test]
    fn text_form() {
        let p = ip(&[(2, 1, 1), (1, 0, -2), (0, 0, 1)]);
        assert_eq!(p.to_string(), "q^2*t - 2*q + 1");
        assert_eq!(ip(&[(-1, 0, 1)]).to_string(), "q^-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let a = ip(&[(0, 0, 1), (40, 0, 1), (0, 40, -1)]);
        let b = ip(&[(0, 0, 1), (1, 1, 2), (3, 0, 1)]);
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab, ba);
        assert_eq!(ab.len(), 9);
    }
}
