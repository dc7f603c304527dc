//! Irreducible "atom" factors `Φ_d(q^a t^b)` used to keep denominators factored.
//!
//! Every binomial `c·q^i t^j ± c·q^k t^l` factors over the Laurent ring into a
//! unit times cyclotomic polynomials evaluated at a primitive monomial
//! `u = q^a t^b` (`gcd(|a|,|b|) = 1`). Those factors are irreducible, so a
//! denominator kept as a multiset of atoms has a unique representation.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, Mono};

/// `Φ_order(q^dir.q t^dir.t)`, with `dir` primitive and positively oriented
/// (`dir.q > 0`, or `dir.q == 0 && dir.t > 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub order: u32,
    pub dir: (i32, i32),
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dense coefficients (constant term first) of the `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    if let Some(v) = cyclotomic_cache().lock().unwrap().get(&d) {
        return v.clone();
    }
    // x^d - 1 divided by Φ_e for every proper divisor e
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = -BigInt::one();
    p[d as usize] = BigInt::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (q, r) = uni_divmod_monic(&p, &cyclotomic(e));
            debug_assert!(r.iter().all(|c| c.is_zero()));
            p = q;
        }
    }
    cyclotomic_cache().lock().unwrap().insert(d, p.clone());
    p
}

/// Division of a dense univariate integer polynomial by a monic one.
fn uni_divmod_monic(p: &[BigInt], d: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = d.len() - 1;
    debug_assert!(d[dd].is_one());
    if p.len() <= dd {
        return (vec![BigInt::zero()], p.to_vec());
    }
    let mut r = p.to_vec();
    let mut q = vec![BigInt::zero(); p.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            r[i + j] -= &c * dc;
        }
        q[i] = c;
    }
    r.truncate(dd);
    (q, r)
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Orients a nonzero direction positively and reduces it; returns `(primitive, multiplicity, flipped)`.
pub fn primitive_direction(a: i32, b: i32) -> ((i32, i32), u32, bool) {
    assert!(a != 0 || b != 0);
    let g = (a.unsigned_abs()).gcd(&b.unsigned_abs());
    let (pa, pb) = (a / g as i32, b / g as i32);
    if pa > 0 || (pa == 0 && pb > 0) {
        ((pa, pb), g, false)
    } else {
        ((-pa, -pb), g, true)
    }
}

/// Extended Euclid: `(x, y)` with `a*x + b*y = gcd(a,b)`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.signum(), 0, a.abs())
    } else {
        let (x, y, g) = ext_gcd(b, a % b);
        (y, x - (a / b) * y, g)
    }
}

impl Atom {
    pub fn new(order: u32, dir: (i32, i32)) -> Self {
        let (d, g, flipped) = primitive_direction(dir.0, dir.1);
        assert!(g == 1 && !flipped, "atom direction must be primitive and positive");
        Atom { order, dir: d }
    }

    fn u(&self) -> Mono {
        Mono::new(self.dir.0, self.dir.1)
    }

    /// Unimodular completion `w` of `dir`, so exponents split as `λ·dir + κ·w`.
    fn complement(&self) -> Mono {
        let (a, b) = (self.dir.0 as i64, self.dir.1 as i64);
        let (x, y, g) = ext_gcd(a, b);
        debug_assert_eq!(g, 1);
        // a*e - b*c = 1 with e = x, c = -y
        Mono::new((-y) as i32, x as i32)
    }

    fn coords(&self, m: Mono) -> (i64, i64) {
        let w = self.complement();
        let (a, b) = (self.dir.0 as i64, self.dir.1 as i64);
        let (c, e) = (w.q as i64, w.t as i64);
        let (i, j) = (m.q as i64, m.t as i64);
        (e * i - c * j, -b * i + a * j)
    }

    fn from_coords(&self, lambda: i64, kappa: i64) -> Mono {
        let w = self.complement();
        let u = self.u();
        Mono::new(
            (lambda * u.q as i64 + kappa * w.q as i64) as i32,
            (lambda * u.t as i64 + kappa * w.t as i64) as i32,
        )
    }

    /// `Φ_d(u)` expanded, before unit normalization.
    fn raw_poly(&self) -> IntPoly {
        let u = self.u();
        IntPoly::from_terms(
            cyclotomic(self.order)
                .into_iter()
                .enumerate()
                .map(|(k, c)| (u.scale(k as i32), c)),
        )
    }

    /// Canonical representative: min exponents zero and positive leading coefficient.
    /// Returns `(sign, shift, rep)` with `raw = sign * x^shift * rep`.
    fn normalized(&self) -> (i32, Mono, IntPoly) {
        type Entry = (i32, Mono, IntPoly);
        static CACHE: OnceLock<RwLock<HashMap<Atom, Entry>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(e) = cache.read().unwrap().get(self) {
            return e.clone();
        }
        let (c, shift, rep) = self.raw_poly().normalize_unit();
        debug_assert!(c.abs().is_one());
        let e = (if c.is_negative() { -1 } else { 1 }, shift, rep);
        cache.write().unwrap().insert(*self, e.clone());
        e
    }

    /// The canonical polynomial representative of this atom.
    pub fn poly(&self) -> IntPoly {
        self.normalized().2
    }

    /// Exact quotient `p / self.poly()`, or `None` when the atom does not divide `p`.
    pub fn divide(&self, p: &IntPoly) -> Option<IntPoly> {
        if p.is_zero() {
            return Some(IntPoly::zero());
        }
        let phi = cyclotomic(self.order);
        let deg = phi.len() - 1;
        let mut slices: HashMap<i64, Vec<(i64, &BigInt)>> = HashMap::new();
        for (m, c) in p.terms() {
            let (l, k) = self.coords(*m);
            slices.entry(k).or_default().push((l, c));
        }
        let mut out = Vec::with_capacity(p.len());
        for (kappa, terms) in slices {
            let lo = terms.iter().map(|x| x.0).min().unwrap();
            let hi = terms.iter().map(|x| x.0).max().unwrap();
            if ((hi - lo) as usize) < deg {
                return None;
            }
            let mut dense = vec![BigInt::zero(); (hi - lo) as usize + 1];
            for (l, c) in terms {
                dense[(l - lo) as usize] = c.clone();
            }
            let (q, r) = uni_divmod_monic(&dense, &phi);
            if r.iter().any(|c| !c.is_zero()) {
                return None;
            }
            for (i, c) in q.into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((self.from_coords(lo + i as i64, kappa), c));
                }
            }
        }
        let quotient = IntPoly::from_terms(out);
        // p / rep = sign * x^shift * (p / raw)
        let (sign, shift, _) = self.normalized();
        Some(quotient.mul_term(&BigInt::from(sign), shift))
    }

    /// Image under `q -> q^k, t -> t^k`: the atoms of `Φ_d(u^k)`.
    pub fn substitute_powers(&self, k: u32) -> Vec<Atom> {
        let dk = self.order * k;
        (1..=dk)
            .filter(|o| dk.is_multiple_of(*o) && o / o.gcd(&k) == self.order)
            .map(|o| Atom { order: o, dir: self.dir })
            .collect()
    }
}

/// Factors `1 - q^A t^B` (with `(A,B) != 0`) into atoms; the unit is recovered by the caller.
pub fn one_minus_monomial_atoms(m: Mono) -> Vec<Atom> {
    let (dir, g, _) = primitive_direction(m.q, m.t);
    (1..=g)
        .filter(|d| g % d == 0)
        .map(|d| Atom { order: d, dir })
        .collect()
}

/// Factors `1 + q^A t^B` into atoms.
pub fn one_plus_monomial_atoms(m: Mono) -> Vec<Atom> {
    let (dir, g, _) = primitive_direction(m.q, m.t);
    (1..=2 * g)
        .filter(|d| (2 * g) % d == 0 && g % d != 0)
        .map(|d| Atom { order: d, dir })
        .collect()
}

/// Atoms of a binomial `c1 x^m1 + c2 x^m2` when `c2 = ±c1`; `None` otherwise.
pub fn binomial_atoms(p: &IntPoly) -> Option<Vec<Atom>> {
    if p.len() != 2 {
        return None;
    }
    let (m1, c1) = &p.terms()[0];
    let (m2, c2) = &p.terms()[1];
    let rel = m2.div(*m1);
    if c1 == c2 {
        Some(one_plus_monomial_atoms(rel))
    } else if *c1 == -c2 {
        Some(one_minus_monomial_atoms(rel))
    } else {
        None
    }
}

/// Edge vectors of the convex hull of the exponent set (a degenerate hull yields its segment).
fn hull_edges(points: &[Mono]) -> Vec<(i32, i32)> {
    let mut pts: Vec<(i64, i64)> = points.iter().map(|m| (m.q as i64, m.t as i64)).collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 2 {
        return Vec::new();
    }
    fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let hull: Vec<(i64, i64)> = lower.into_iter().chain(upper).collect();
    (0..hull.len())
        .map(|i| {
            let a = hull[i];
            let b = hull[(i + 1) % hull.len()];
            ((b.0 - a.0) as i32, (b.1 - a.1) as i32)
        })
        .filter(|e| *e != (0, 0))
        .collect()
}

/// Splits off every atom factor of `p` (found through the Newton polygon edges).
/// Returns the atoms with multiplicities and the cofactor `p / ∏ atoms`.
pub fn extract_atoms(p: &IntPoly) -> (Vec<(Atom, u32)>, IntPoly) {
    let mut rest = p.clone();
    let mut found: HashMap<Atom, u32> = HashMap::new();
    loop {
        let pts: Vec<Mono> = rest.terms().iter().map(|(m, _)| *m).collect();
        let mut progressed = false;
        let mut candidates: Vec<Atom> = Vec::new();
        for (dq, dt) in hull_edges(&pts) {
            let (dir, len, _) = primitive_direction(dq, dt);
            let mut d = 1u32;
            while d <= 6 * len + 6 {
                if euler_phi(d) <= len {
                    candidates.push(Atom { order: d, dir });
                }
                d += 1;
            }
        }
        candidates.sort();
        candidates.dedup();
        for a in candidates {
            while let Some(q) = a.divide(&rest) {
                rest = q;
                *found.entry(a).or_insert(0) += 1;
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    let mut v: Vec<(Atom, u32)> = found.into_iter().collect();
    v.sort();
    (v, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[(i32, i32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), BigInt::from(c))))
    }

    #[test]
    fn cyclotomics() {
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic(1), c(&[-1, 1]));
        assert_eq!(cyclotomic(2), c(&[1, 1]));
        assert_eq!(cyclotomic(6), c(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), c(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn divide_difference_of_squares() {
        // q^2 - t^2 = (q - t)(q + t)
        let p = ip(&[(2, 0, 1), (0, 2, -1)]);
        let atoms = binomial_atoms(&p).unwrap();
        assert_eq!(atoms.len(), 2);
        let mut rest = p.clone();
        for a in &atoms {
            rest = a.divide(&rest).expect("atom divides");
        }
        assert!(rest.as_monomial().is_some());
    }

    #[test]
    fn non_divisible_is_rejected() {
        let a = Atom::new(1, (1, 0)); // q - 1
        assert!(a.divide(&ip(&[(1, 0, 1), (0, 0, 1)])).is_none());
        let q = a.divide(&ip(&[(2, 0, 1), (0, 0, -1)])).unwrap();
        assert_eq!(q.mul(&a.poly()), ip(&[(2, 0, 1), (0, 0, -1)]));
    }

    #[test]
    fn mixed_direction_atom() {
        // (1 - q t^-2) has direction (1,-2)
        let atoms = binomial_atoms(&ip(&[(0, 0, 1), (1, -2, -1)])).unwrap();
        assert_eq!(atoms, vec![Atom { order: 1, dir: (1, -2) }]);
        let prod = ip(&[(0, 0, 1), (1, -2, -1)]).mul(&ip(&[(0, 0, 3), (1, 1, 1), (2, 0, 1)]));
        let q = atoms[0].divide(&prod).unwrap();
        assert_eq!(q.mul(&atoms[0].poly()), prod);
    }

    #[test]
    fn newton_polygon_extraction() {
        // (1-q)(1-t)^2 (q^2 - t^3)(1 + q + t)
        let p = ip(&[(0, 0, 1), (1, 0, -1)])
            .mul(&ip(&[(0, 0, 1), (0, 1, -1)]).pow(2))
            .mul(&ip(&[(2, 0, 1), (0, 3, -1)]))
            .mul(&ip(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
        let (atoms, rest) = extract_atoms(&p);
        let count: u32 = atoms.iter().map(|a| a.1).sum();
        assert_eq!(count, 4);
        let (_, _, r) = rest.normalize_unit();
        assert_eq!(r, ip(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
    }

    #[test]
    fn substitution_of_atoms() {
        // Φ_1(q^2) = (q-1)(q+1)
        let a = Atom::new(1, (1, 0));
        assert_eq!(
            a.substitute_powers(2),
            vec![Atom { order: 1, dir: (1, 0) }, Atom { order: 2, dir: (1, 0) }]
        );
    }
}
