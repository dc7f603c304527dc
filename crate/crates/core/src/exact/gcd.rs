//! Fallback gcd for integer Laurent polynomials in q,t.
//!
//! Polynomials are viewed as univariate in t over ℤ[q] and reduced with a
//! primitive pseudo-remainder sequence. Only used when atom cancellation
//! cannot settle a common factor, so clarity wins over speed here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, Mono};

type UPoly = Vec<BigInt>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn u_content(a: &UPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Exact division in ℤ[q]; `None` when `b` does not divide `a`.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() > a.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = &r[i + b.len() - 1];
        if c.is_zero() {
            continue;
        }
        let (quo, rem) = c.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &quo * y;
        }
        q[i] = quo;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r.iter_mut().for_each(|c| *c *= &lb);
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

fn u_primitive(a: &UPoly) -> UPoly {
    let c = u_content(a);
    let sign = if a.last().is_some_and(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    a.iter().map(|x| x / &c).collect()
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return if b.is_empty() { Vec::new() } else { u_primitive(b).into_iter().map(|x| x * u_content(b)).collect() };
    }
    if b.is_empty() {
        return u_gcd(b, a);
    }
    let g = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { u_primitive(&r) };
    }
    let x = u_primitive(&x);
    x.into_iter().map(|c| c * &g).collect()
}

/// Bivariate polynomial as t-degree indexed coefficients in ℤ[q].
type BPoly = Vec<UPoly>;

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn to_bpoly(p: &IntPoly) -> BPoly {
    let lo = p.min_exponents();
    let hi = p.max_exponents();
    let mut out: BPoly = vec![Vec::new(); (hi.t - lo.t) as usize + 1];
    for (m, c) in p.terms() {
        let (i, j) = ((m.q - lo.q) as usize, (m.t - lo.t) as usize);
        let row = &mut out[j];
        if row.len() <= i {
            row.resize(i + 1, BigInt::zero());
        }
        row[i] = c.clone();
    }
    out
}

fn from_bpoly(p: &BPoly) -> IntPoly {
    IntPoly::from_terms(p.iter().enumerate().flat_map(|(j, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (Mono::new(i as i32, j as i32), c.clone()))
    }))
}

fn b_content(p: &BPoly) -> UPoly {
    p.iter().fold(Vec::new(), |g, c| u_gcd(&g, c))
}

fn b_div_scalar(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|x| u_div_exact(x, c).expect("content divides")).collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c = u_mul(c, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = u_sub(&r[shift + j], &u_mul(&lr, y));
        }
        b_trim(&mut r);
    }
    r
}

fn b_primitive(p: &BPoly) -> BPoly {
    b_div_scalar(p, &b_content(p))
}

/// Gcd of two integer Laurent polynomials, normalized with [`IntPoly::normalize_unit`].
/// Monomial factors are units and are ignored.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.normalize_unit().2;
    }
    if b.is_zero() {
        return a.normalize_unit().2;
    }
    let (x, y) = (to_bpoly(a), to_bpoly(b));
    let content = u_gcd(&b_content(&x), &b_content(&y));
    let (mut x, mut y) = (b_primitive(&x), b_primitive(&y));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_primitive(&r) };
    }
    let prim = if y.len() == 1 {
        // a nonzero remainder free of t: the primitive parts are coprime
        vec![vec![BigInt::one()]]
    } else {
        b_primitive(&x)
    };
    let g: BPoly = prim.iter().map(|c| u_mul(c, &content)).collect();
    from_bpoly(&g).normalize_unit().2
}

/// Exact quotient `a / b` of integer Laurent polynomials, or `None`.
pub fn poly_div_exact(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(IntPoly::zero());
    }
    if let Some((c, m)) = b.as_monomial() {
        let mut terms = Vec::with_capacity(a.len());
        for (am, ac) in a.terms() {
            let (quo, rem) = ac.div_rem(c);
            if !rem.is_zero() {
                return None;
            }
            terms.push((am.div(m), quo));
        }
        return Some(IntPoly::from_terms(terms));
    }
    // shift both to ordinary polynomials, divide as t-polynomials over ℤ[q]
    let (la, lb) = (a.min_exponents(), b.min_exponents());
    let (x, y) = (to_bpoly(a), to_bpoly(b));
    if x.len() < y.len() {
        return None;
    }
    let lb_coef = y.last().unwrap();
    let mut r = x;
    let mut q: BPoly = vec![Vec::new(); r.len() - y.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + y.len() - 1].clone();
        if c.is_empty() {
            continue;
        }
        let quo = u_div_exact(&c, lb_coef)?;
        for (j, yy) in y.iter().enumerate() {
            r[i + j] = u_sub(&r[i + j], &u_mul(&quo, yy));
        }
        q[i] = quo;
    }
    if r.iter().any(|c| !c.is_empty()) {
        return None;
    }
    b_trim(&mut q);
    Some(from_bpoly(&q).mul_mono(la.div(lb)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[(i32, i32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), BigInt::from(c))))
    }

    #[test]
    fn gcd_of_products() {
        let f = ip(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]); // 1+q+t
        let g = ip(&[(2, 0, 1), (0, 1, -3), (1, 1, 1)]);
        let h = ip(&[(0, 0, 2), (1, 2, 1)]);
        let a = f.mul(&g).mul(&ip(&[(3, 1, 6)]));
        let b = f.mul(&h);
        assert_eq!(poly_gcd(&a, &b), f);
        assert_eq!(poly_gcd(&g, &h), IntPoly::one());
    }

    #[test]
    fn exact_division() {
        let f = ip(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        let g = ip(&[(2, -1, 1), (0, 1, -3)]);
        let p = f.mul(&g);
        assert_eq!(poly_div_exact(&p, &g), Some(f.clone()));
        assert_eq!(poly_div_exact(&p, &f), Some(g));
        assert_eq!(poly_div_exact(&f, &ip(&[(1, 0, 1), (0, 0, -1)])), None);
    }
}
