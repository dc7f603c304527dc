//! Rational functions in q,t with factored denominators.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::atom::{extract_atoms, Atom};
use super::gcd::{poly_div_exact, poly_gcd};
use super::poly::{IntPoly, LaurentPolyQT, Mono};
use crate::error::{Error, Result};

/// An element of ℚ(q,t) in canonical reduced form.
///
/// The value is `num / (den_const · ∏ atom^e · rest)` where the atoms are
/// normalized cyclotomic factors, `rest` is a normalized polynomial free of
/// atom factors (almost always 1), `den_const > 0`, and numerator and
/// denominator share no nonunit factor. Equal values have equal fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den_const: BigInt,
    atoms: Vec<(Atom, u32)>,
    rest: IntPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

fn atom_power(a: &Atom, e: u32) -> IntPoly {
    a.poly().pow(e)
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den_const: BigInt::one(), atoms: Vec::new(), rest: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_int_poly(IntPoly::one())
    }

    pub fn from_int_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den_const: BigInt::one(), atoms: Vec::new(), rest: IntPoly::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        RatFunc::from_int_poly(IntPoly::constant(BigInt::from(c)))
    }

    pub fn from_rational(c: &BigRational) -> Self {
        RatFunc::from_parts(
            IntPoly::constant(c.numer().clone()),
            c.denom().clone(),
            Vec::new(),
            IntPoly::one(),
        )
    }

    pub fn from_laurent(p: &LaurentPolyQT) -> Self {
        let (num, den) = p.clear_denominators();
        RatFunc::from_parts(num, den, Vec::new(), IntPoly::one())
    }

    pub fn monomial(q: i32, t: i32) -> Self {
        RatFunc::from_int_poly(IntPoly::monomial(q, t))
    }

    pub fn q() -> Self {
        RatFunc::monomial(1, 0)
    }

    pub fn t() -> Self {
        RatFunc::monomial(0, 1)
    }

    /// `(1-q)(1-t)`.
    pub fn m_const() -> Self {
        let one = IntPoly::one();
        RatFunc::from_int_poly(one.sub(&IntPoly::q()).mul(&one.sub(&IntPoly::t())))
    }

    /// Canonical form of `num / den` for integer Laurent polynomials.
    pub fn make_int(num: IntPoly, den: &IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, shift, d) = den.normalize_unit();
        let mut num = num.mul_mono(shift.inv());
        if c.is_negative() {
            num = num.neg();
        }
        let (atoms, rest) = if d.is_one() { (Vec::new(), d) } else { extract_atoms(&d) };
        Ok(RatFunc::from_parts(num, c.abs(), atoms, rest))
    }

    /// Canonical form of `num / den`.
    pub fn make(num: &LaurentPolyQT, den: &LaurentPolyQT) -> Result<Self> {
        let (n, a) = num.clear_denominators();
        let (d, b) = den.clear_denominators();
        // (n/a) / (d/b) = (n b) / (d a)
        RatFunc::make_int(n.scale(&b), &d.scale(&a))
    }

    fn from_parts(num: IntPoly, den_const: BigInt, atoms: Vec<(Atom, u32)>, rest: IntPoly) -> Self {
        let mut r = RatFunc { num, den_const, atoms, rest };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            *self = RatFunc::zero();
            return;
        }
        for (a, e) in self.atoms.iter_mut() {
            while *e > 0 {
                match a.divide(&self.num) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.atoms.retain(|(_, e)| *e > 0);
        if !self.rest.is_one() {
            let g = poly_gcd(&self.num, &self.rest);
            if !g.is_one() {
                self.num = poly_div_exact(&self.num, &g).expect("gcd divides numerator");
                let r = poly_div_exact(&self.rest, &g).expect("gcd divides denominator");
                let (c, shift, r) = r.normalize_unit();
                self.num = self.num.mul_mono(shift.inv());
                if c.is_negative() {
                    self.num = self.num.neg();
                }
                self.rest = r;
            }
        }
        if !self.den_const.is_one() {
            let g = self.num.content().gcd(&self.den_const);
            if !g.is_one() {
                self.num = self.num.div_scalar_exact(&g);
                self.den_const = &self.den_const / &g;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.has_unit_denominator() && self.num.is_one()
    }

    /// Denominator is 1 (the value is an integer Laurent polynomial).
    pub fn has_unit_denominator(&self) -> bool {
        self.den_const.is_one() && self.atoms.is_empty() && self.rest.is_one()
    }

    /// Denominator is a positive integer constant.
    pub fn has_constant_denominator(&self) -> bool {
        self.atoms.is_empty() && self.rest.is_one()
    }

    /// The Laurent polynomial value, if the denominator is constant.
    pub fn as_laurent(&self) -> Option<LaurentPolyQT> {
        if !self.has_constant_denominator() {
            return None;
        }
        let d = BigRational::from_integer(self.den_const.clone());
        Some(self.num.map_coeffs(|c| BigRational::from_integer(c.clone()) / &d))
    }

    /// The integer Laurent polynomial value, if the denominator is 1.
    pub fn as_int_poly(&self) -> Option<&IntPoly> {
        if self.has_unit_denominator() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.has_constant_denominator() && self.num.is_constant() {
            let c = self.num.coeff(Mono::ONE);
            Some(BigRational::new(c, self.den_const.clone()))
        } else {
            None
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    /// The fully expanded denominator.
    pub fn denominator(&self) -> IntPoly {
        let mut d = self.rest.scale(&self.den_const);
        for (a, e) in &self.atoms {
            d = d.mul(&atom_power(a, *e));
        }
        d
    }

    pub fn denominator_atoms(&self) -> &[(Atom, u32)] {
        &self.atoms
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), ..self.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.has_unit_denominator() && o.has_unit_denominator() {
            return RatFunc::from_int_poly(self.num.add(&o.num));
        }
        RatFunc::sum([self, o])
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if o.has_unit_denominator() {
            if self.has_unit_denominator() {
                return RatFunc::from_int_poly(self.num.mul(&o.num));
            }
            if o.num.as_monomial().is_some_and(|(c, _)| c.abs().is_one()) {
                let mut r = self.clone();
                r.num = r.num.mul(&o.num);
                return r;
            }
        } else if self.has_unit_denominator() {
            return o.mul(self);
        }
        let mut atoms = self.atoms.clone();
        for (a, e) in &o.atoms {
            match atoms.binary_search_by(|x| x.0.cmp(a)) {
                Ok(i) => atoms[i].1 += e,
                Err(i) => atoms.insert(i, (*a, *e)),
            }
        }
        RatFunc::from_parts(
            self.num.mul(&o.num),
            &self.den_const * &o.den_const,
            atoms,
            self.rest.mul(&o.rest),
        )
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::make_int(self.denominator(), &self.num)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        let mut r = self.clone();
        r.num = r.num.scale(c);
        r.reduce_const();
        r
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        let mut r = self.clone();
        r.num = r.num.scale(c.numer());
        r.den_const *= c.denom();
        r.reduce_const();
        r
    }

    fn reduce_const(&mut self) {
        if self.den_const.is_one() {
            return;
        }
        let g = self.num.content().gcd(&self.den_const);
        if !g.is_one() {
            self.num = self.num.div_scalar_exact(&g);
            self.den_const = &self.den_const / &g;
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        RatFunc { num: self.num.mul_mono(m), ..self.clone() }
    }

    /// Sum over a common denominator built in one pass.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> Self {
        let items: Vec<&RatFunc> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return RatFunc::zero(),
            1 => return items[0].clone(),
            _ => {}
        }
        if items.iter().all(|x| x.has_unit_denominator()) {
            let mut acc = IntPoly::zero();
            for x in &items {
                acc = acc.add(&x.num);
            }
            return RatFunc::from_int_poly(acc);
        }
        // common denominator
        let mut den_const = BigInt::one();
        let mut atoms: Vec<(Atom, u32)> = Vec::new();
        let mut rest = IntPoly::one();
        for x in &items {
            den_const = den_const.lcm(&x.den_const);
            for (a, e) in &x.atoms {
                match atoms.binary_search_by(|y| y.0.cmp(a)) {
                    Ok(i) => atoms[i].1 = atoms[i].1.max(*e),
                    Err(i) => atoms.insert(i, (*a, *e)),
                }
            }
            if !x.rest.is_one() && x.rest != rest {
                let g = poly_gcd(&rest, &x.rest);
                rest = poly_div_exact(&rest, &g).unwrap().mul(&x.rest).normalize_unit().2;
            }
        }
        let mut num = IntPoly::zero();
        for x in &items {
            let mut f = x.num.scale(&(&den_const / &x.den_const));
            for (a, e) in &atoms {
                let have = x.atoms.binary_search_by(|y| y.0.cmp(a)).map(|i| x.atoms[i].1).unwrap_or(0);
                if *e > have {
                    f = f.mul(&atom_power(a, e - have));
                }
            }
            if rest != x.rest {
                let cof = poly_div_exact(&rest, &x.rest).expect("lcm is a multiple");
                f = f.mul(&cof);
            }
            num = num.add(&f);
        }
        RatFunc::from_parts(num, den_const, atoms, rest)
    }

    /// `Σ a_i · b_i` over a common denominator.
    pub fn sum_products<'a, I: IntoIterator<Item = (&'a RatFunc, &'a RatFunc)>>(pairs: I) -> Self {
        let prods: Vec<RatFunc> = pairs.into_iter().map(|(a, b)| a.mul(b)).collect();
        RatFunc::sum(prods.iter())
    }

    /// Value at `(q0, t0)`.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let pole = || Error::Pole { q: q0.to_string(), t: t0.to_string() };
        let n = self.num.to_rational().eval(q0, t0).ok_or_else(pole)?;
        let d = self.denominator().to_rational().eval(q0, t0).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        Ok(n / d)
    }

    /// The image under `q -> q^k, t -> t^k` for `k >= 1`.
    pub fn substitute_powers(&self, k: u32) -> Self {
        assert!(k >= 1);
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut num = self.num.substitute_powers(k as i32);
        let mut atoms: Vec<(Atom, u32)> = Vec::new();
        for (a, e) in &self.atoms {
            // rep(x^k) = c · x^shift · ∏ reps of the new atoms
            let (c, shift, _) = a.poly().substitute_powers(k as i32).normalize_unit();
            let unit = c.pow(*e);
            num = num.mul_mono(shift.scale(*e as i32).inv());
            if unit.is_negative() {
                num = num.neg();
            }
            for b in a.substitute_powers(k) {
                match atoms.binary_search_by(|y| y.0.cmp(&b)) {
                    Ok(i) => atoms[i].1 += e,
                    Err(i) => atoms.insert(i, (b, *e)),
                }
            }
        }
        if self.rest.is_one() {
            RatFunc::from_parts(num, self.den_const.clone(), atoms, IntPoly::one())
        } else {
            let head = RatFunc::from_parts(num, self.den_const.clone(), atoms, IntPoly::one());
            let tail = RatFunc::make_int(IntPoly::one(), &self.rest.substitute_powers(k as i32))
                .expect("nonzero");
            head.mul(&tail)
        }
    }

    /// The image under `q -> 1/q, t -> 1/t`.
    pub fn invert_variables(&self) -> Self {
        RatFunc::make_int(self.num.substitute_powers(-1), &self.denominator().substitute_powers(-1))
            .expect("nonzero denominator")
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_i64(c)
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc::from_int_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_unit_denominator() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.denominator())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[(i32, i32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), BigInt::from(c))))
    }

    fn rf(n: &[(i32, i32, i64)], d: &[(i32, i32, i64)]) -> RatFunc {
        RatFunc::make_int(ip(n), &ip(d)).unwrap()
    }

    #[test]
    fn make_examples() {
        assert_eq!(rf(&[(2, 0, 1), (1, 1, -1)], &[(1, 0, 1)]).to_string(), "q - t");
        let m = ip(&[(0, 0, 1), (1, 0, -1)]).mul(&ip(&[(0, 0, 1), (0, 1, -1)]));
        assert_eq!(RatFunc::make_int(m, &ip(&[(0, 0, 1), (1, 0, -1)])).unwrap().to_string(), "-t + 1");
        assert!(rf(&[], &[(0, 0, 1), (1, 0, -1)]).is_zero());
        assert!(matches!(RatFunc::make_int(IntPoly::one(), &IntPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn arithmetic_examples() {
        let a = rf(&[(0, 0, 1)], &[(1, 0, 1), (0, 1, -1)]);
        let b = rf(&[(0, 0, 1)], &[(0, 1, 1), (1, 0, -1)]);
        assert!(a.add(&b).is_zero());
        // ((1-t)/(q-t))·q + ((q-1)/(q-t))·t = 1
        let x = rf(&[(0, 0, 1), (0, 1, -1)], &[(1, 0, 1), (0, 1, -1)]).mul(&RatFunc::q());
        let y = rf(&[(1, 0, 1), (0, 0, -1)], &[(1, 0, 1), (0, 1, -1)]).mul(&RatFunc::t());
        assert!(x.add(&y).is_one());
        assert!(x.div(&x).unwrap().is_one());
    }

    #[test]
    fn eval_after_reduction() {
        let r = rf(&[(2, 0, 1), (0, 2, -1)], &[(1, 0, 1), (0, 1, -1)]);
        let one = BigRational::one();
        assert_eq!(r.eval(&one, &one).unwrap(), BigRational::from_integer(2.into()));
        let pole = rf(&[(0, 0, 1)], &[(1, 0, 1), (0, 1, -1)]);
        assert!(matches!(pole.eval(&one, &one), Err(Error::Pole { .. })));
    }

    #[test]
    fn general_denominator_uses_gcd() {
        let f = ip(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        let g = ip(&[(0, 0, 2), (1, 0, 1)]);
        let a = RatFunc::make_int(f.mul(&g), &f.mul(&ip(&[(0, 0, 3)]))).unwrap();
        assert_eq!(a, RatFunc::make_int(g.clone(), &ip(&[(0, 0, 3)])).unwrap());
        let b = RatFunc::make_int(IntPoly::one(), &f).unwrap();
        let c = b.mul(&RatFunc::from_int_poly(f.clone()));
        assert!(c.is_one());
    }

    #[test]
    fn substitution_keeps_value() {
        let r = rf(&[(0, 0, 1), (1, 1, 2)], &[(2, 0, 1), (0, 1, -1)]).mul(&rf(&[(0, 0, 1)], &[(0, 0, 1), (1, 0, 1)]));
        let s = r.substitute_powers(3);
        let (q0, t0) = (BigRational::new(2.into(), 3.into()), BigRational::new(5.into(), 7.into()));
        let lhs = s.eval(&q0, &t0).unwrap();
        let rhs = r.eval(&q0.pow(3), &t0.pow(3)).unwrap();
        assert_eq!(lhs, rhs);
    }
}
