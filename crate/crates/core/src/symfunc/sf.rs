use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;
use super::tables::tables;
use super::Basis;
use crate::error::{Error, Result};
use crate::exact::{RatFunc, RingElem};

/// A finite linear combination of basis elements with ℚ(q,t) coefficients.
/// Mixed degrees are allowed. Equality is structural; use [`SymFunc::equals`]
/// to compare values held in different bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatFunc>,
}

/// Sums coefficient lists per partition, dropping zeros.
pub(crate) fn collect_terms(basis: Basis, acc: HashMap<Partition, Vec<RatFunc>>) -> SymFunc {
    let terms = acc
        .into_iter()
        .map(|(p, cs)| (p, RatFunc::sum(cs.iter())))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    SymFunc { basis, terms }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn constant(c: RatFunc, basis: Basis) -> Self {
        SymFunc::term(basis, Partition::empty(), c)
    }

    pub fn one(basis: Basis) -> Self {
        SymFunc::constant(RatFunc::one(), basis)
    }

    pub fn term(basis: Basis, p: Partition, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        SymFunc { basis, terms }
    }

    pub fn basis_element(basis: Basis, p: Partition) -> Self {
        SymFunc::term(basis, p, RatFunc::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFunc)>>(basis: Basis, it: I) -> Self {
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for (p, c) in it {
            acc.entry(p).or_default().push(c);
        }
        collect_terms(basis, acc)
    }

    fn single(basis: Basis, n: i64) -> Self {
        match n {
            n if n < 0 => SymFunc::zero(basis),
            0 => SymFunc::one(basis),
            n => SymFunc::basis_element(basis, Partition::single(n as usize)),
        }
    }

    /// `e_n`, zero for negative `n`.
    pub fn e(n: i64) -> Self {
        SymFunc::single(Basis::E, n)
    }

    /// `h_n`, zero for negative `n`.
    pub fn h(n: i64) -> Self {
        SymFunc::single(Basis::H, n)
    }

    pub fn p(n: i64) -> Self {
        SymFunc::single(Basis::P, n)
    }

    pub fn s(parts: &[usize]) -> Self {
        SymFunc::basis_element(Basis::S, Partition::new(parts.to_vec()))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> RatFunc {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// Largest degree present (0 for the zero element).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|p| p.size());
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(p, _)| p.size() == d).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(p, c)| (p.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(p, x)| (p.clone(), x.mul(c))).collect() }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x.scale_rational(c))).collect(),
        }
    }

    /// Sum; the result is in the basis of `self` (converting `o` when needed).
    pub fn add(&self, o: &SymFunc) -> SymFunc {
        SymFunc::sum_of([self, o])
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        self.add(&o.neg())
    }

    /// Sum of many elements, in the basis of the first (p for an empty list).
    pub fn sum_of<'a, I: IntoIterator<Item = &'a SymFunc>>(items: I) -> SymFunc {
        let items: Vec<&SymFunc> = items.into_iter().collect();
        let basis = items.first().map_or(Basis::P, |f| f.basis);
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for f in items {
            let f = if f.basis == basis { std::borrow::Cow::Borrowed(f) } else { std::borrow::Cow::Owned(f.convert_unchecked(basis)) };
            for (p, c) in &f.terms {
                acc.entry(p.clone()).or_default().push(c.clone());
            }
        }
        collect_terms(basis, acc)
    }

    /// Re-expresses the element in a classical basis.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == Basis::Htilde || self.basis == Basis::Htilde {
            return Err(Error::Unsupported(
                "conversion to or from the modified Macdonald basis needs the Macdonald tables".into(),
            ));
        }
        Ok(self.convert_unchecked(target))
    }

    fn convert_unchecked(&self, target: Basis) -> SymFunc {
        assert!(target != Basis::Htilde && self.basis != Basis::Htilde, "Htilde conversion needs the Macdonald tables");
        if target == self.basis {
            return self.clone();
        }
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &RatFunc)>> = BTreeMap::new();
        for (p, c) in &self.terms {
            by_degree.entry(p.size()).or_default().push((p, c));
        }
        for (d, items) in by_degree {
            let t = tables(d);
            let m = t.transition(self.basis, target);
            for (p, c) in items {
                for (j, x) in m[t.index(p)].iter().enumerate() {
                    if !x.is_zero() {
                        acc.entry(t.parts[j].clone()).or_default().push(c.scale_rational(x));
                    }
                }
            }
        }
        collect_terms(target, acc)
    }

    pub fn to_p(&self) -> SymFunc {
        self.convert_unchecked(Basis::P)
    }

    pub fn to_s(&self) -> SymFunc {
        self.convert_unchecked(Basis::S)
    }

    /// Value equality across bases.
    pub fn equals(&self, o: &SymFunc) -> bool {
        if self.basis == o.basis {
            return self == o;
        }
        self.to_s() == o.to_s()
    }

    /// Product, returned in the p basis.
    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        let (a, b) = (self.to_p(), o.to_p());
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for (x, c) in &a.terms {
            for (y, d) in &b.terms {
                let mut v = x.parts().to_vec();
                v.extend_from_slice(y.parts());
                acc.entry(Partition::new(v)).or_default().push(c.mul(d));
            }
        }
        collect_terms(Basis::P, acc)
    }

    /// The Hall scalar product, under which the Schur functions are orthonormal.
    pub fn hall_inner(&self, o: &SymFunc) -> RatFunc {
        let dual = |a: Basis, b: Basis| {
            a == b && a == Basis::S || (a, b) == (Basis::H, Basis::M) || (a, b) == (Basis::M, Basis::H)
        };
        if dual(self.basis, o.basis) {
            return RatFunc::sum_products(self.terms.iter().filter_map(|(p, c)| o.terms.get(p).map(|d| (c, d))));
        }
        let (a, b) = (self.to_p(), o.to_p());
        let prods: Vec<RatFunc> = a
            .terms
            .iter()
            .filter_map(|(p, c)| b.terms.get(p).map(|d| c.mul(d).scale_int(&p.z())))
            .collect();
        RatFunc::sum(prods.iter())
    }

    /// `g^⊥ f`, the adjoint of multiplication by `g`; in the basis of `f`.
    pub fn perp(g: &SymFunc, f: &SymFunc) -> SymFunc {
        let (g, fp) = (g.to_p(), f.to_p());
        let mut acc: HashMap<Partition, Vec<RatFunc>> = HashMap::new();
        for (sigma, c) in &g.terms {
            for (rho, d) in &fp.terms {
                if let Some((rest, factor)) = p_perp(sigma, rho) {
                    acc.entry(rest).or_default().push(c.mul(d).scale_int(&factor));
                }
            }
        }
        collect_terms(Basis::P, acc).convert_unchecked(f.basis)
    }

    /// The involution ω, in the same basis.
    pub fn omega(&self) -> SymFunc {
        match self.basis {
            Basis::S => SymFunc {
                basis: Basis::S,
                terms: self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
            },
            Basis::E | Basis::H => SymFunc {
                basis: if self.basis == Basis::E { Basis::H } else { Basis::E },
                terms: self.terms.clone(),
            }
            .convert_unchecked(self.basis),
            Basis::P => SymFunc {
                basis: Basis::P,
                terms: self
                    .terms
                    .iter()
                    .map(|(p, c)| (p.clone(), if (p.size() - p.len()) % 2 == 0 { c.clone() } else { c.neg() }))
                    .collect(),
            },
            Basis::M => self.to_p().omega().convert_unchecked(Basis::M),
            Basis::Htilde => panic!("omega on the modified Macdonald basis needs the Macdonald tables"),
        }
    }

    /// `⟨f, s_{k+1,1^{d-k-1}}⟩` read from the Schur expansion. `k = -1` stands for the
    /// degenerate hook `s_{0,1^d}`, which is 1 when `d = 0` and 0 otherwise.
    pub fn hook_coefficient(&self, k: i64, d: usize) -> RatFunc {
        if k == -1 && d == 0 {
            return self.homogeneous_part(0).to_s().coeff(&Partition::empty());
        }
        if k < 0 || k as usize >= d {
            return RatFunc::zero();
        }
        let part = self.homogeneous_part(d).to_s();
        part.coeff(&Partition::hook(k as usize, d))
    }

    /// Same value as [`SymFunc::hook_coefficient`], computed from
    /// `s_{k+1,1^{d-k-1}} = Σ_r (-1)^r h_{k+1+r} e_{d-k-1-r}`.
    pub fn hook_coefficient_alternating(&self, k: i64, d: usize) -> RatFunc {
        if k < -1 || k >= d as i64 {
            return RatFunc::zero();
        }
        let d = d as i64;
        let mut parts = Vec::new();
        for r in 0..=(d - k - 1) {
            let pair = SymFunc::h(k + 1 + r).mul(&SymFunc::e(d - k - 1 - r));
            let v = self.hall_inner(&pair);
            parts.push(if r % 2 == 0 { v } else { v.neg() });
        }
        RatFunc::sum(parts.iter())
    }
}

/// `p_σ^⊥ p_ρ = factor · p_{ρ∖σ}` when `σ ⊆ ρ` as multisets.
fn p_perp(sigma: &Partition, rho: &Partition) -> Option<(Partition, BigInt)> {
    let mut rest = rho.parts().to_vec();
    let mut factor = BigInt::one();
    for (v, a) in sigma.multiplicities() {
        let b = rest.iter().filter(|&&x| x == v).count();
        if b < a {
            return None;
        }
        for i in 0..a {
            factor *= BigInt::from(v) * BigInt::from(b - i);
        }
        let mut removed = 0;
        rest.retain(|&x| {
            if x == v && removed < a {
                removed += 1;
                false
            } else {
                true
            }
        });
    }
    Some((Partition::new(rest), factor))
}

impl RingElem for SymFunc {
    fn zero() -> Self {
        SymFunc::zero(Basis::P)
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        SymFunc::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        SymFunc::mul(self, o)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.size().cmp(&a.size()).then(b.cmp(a)));
        for (i, p) in keys.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let c = &self.terms[p];
            let text = c.to_string();
            let body = p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let elem = format!("{}[{}]", self.basis.letter(), body);
            if c.is_one() {
                write!(f, "{elem}")?;
            } else if c.neg().is_one() {
                write!(f, "-{elem}")?;
            } else if text.contains(' ') {
                write!(f, "({text})*{elem}")?;
            } else {
                write!(f, "{text}*{elem}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> SymFunc {
        SymFunc::s(v)
    }

    #[test]
    fn classical_conversions() {
        assert_eq!(SymFunc::h(2).convert(Basis::S).unwrap(), s(&[2]));
        assert_eq!(SymFunc::e(2).convert(Basis::S).unwrap(), s(&[1, 1]));
        assert_eq!(SymFunc::p(2).convert(Basis::S).unwrap(), s(&[2]).sub(&s(&[1, 1])));
        assert!(SymFunc::h(2).convert(Basis::Htilde).is_err());
    }

    #[test]
    fn products_and_pairings() {
        let e1 = SymFunc::e(1);
        assert_eq!(e1.mul(&e1).to_s(), s(&[2]).add(&s(&[1, 1])));
        assert!(s(&[2, 1]).hall_inner(&s(&[2, 1])).is_one());
        assert!(s(&[2]).hall_inner(&s(&[1, 1])).is_zero());
        assert_eq!(SymFunc::p(2).hall_inner(&SymFunc::p(2)), RatFunc::from_i64(2));
    }

    #[test]
    fn perp_examples() {
        assert_eq!(SymFunc::perp(&SymFunc::h(1), &s(&[2])), s(&[1]));
        assert_eq!(SymFunc::perp(&SymFunc::h(1), &s(&[1, 1])), s(&[1]));
        assert!(SymFunc::perp(&SymFunc::h(2), &s(&[1])).is_zero());
    }

    #[test]
    fn omega_examples() {
        assert!(SymFunc::e(3).omega().equals(&SymFunc::h(3)));
        assert_eq!(s(&[2, 1]).omega(), s(&[2, 1]));
        assert_eq!(SymFunc::p(2).omega(), SymFunc::p(2).neg());
    }

    #[test]
    fn hook_routes() {
        let f = s(&[2, 1]);
        assert!(f.hook_coefficient(1, 3).is_one());
        assert!(s(&[3]).hook_coefficient(1, 3).is_zero());
        for k in -1..3 {
            assert_eq!(f.hook_coefficient(k, 3), f.hook_coefficient_alternating(k, 3));
        }
        assert!(SymFunc::one(Basis::S).hook_coefficient_alternating(-1, 0).is_one());
    }

    #[test]
    fn display_order() {
        let f = s(&[1, 1]).scale(&RatFunc::q()).add(&s(&[2])).add(&s(&[1]).neg());
        assert_eq!(f.to_string(), "s[2] + q*s[1,1] + -s[1]");
    }
}
