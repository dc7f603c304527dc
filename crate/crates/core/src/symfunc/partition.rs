use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only sequences that are already partitions.
    pub fn try_from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The hook `(k+1, 1^(d-k-1))`.
    pub fn hook(k: usize, d: usize) -> Self {
        assert!(k < d);
        let mut v = vec![k + 1];
        v.extend(std::iter::repeat_n(1, d - k - 1));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `Σ (i-1) μ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Dominance order `self ≥ other` (sizes must agree).
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicity of each part value, as `(value, count)` pairs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ k^{m_k} m_k!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (v, c) in self.multiplicities() {
            for i in 1..=c {
                z *= BigInt::from(v) * BigInt::from(i);
            }
        }
        z
    }

    /// Cells as `(row, column)`, zero based, so `(i, j)` has co-leg `i` and co-arm `j`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.0[i] - j - 1
    }

    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.0.iter().skip(i + 1).filter(|&&p| p > j).count()
    }

    /// Partitions obtained by adding one cell.
    pub fn add_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            if i == 0 || self.0[i - 1] > cur {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }

    /// Partitions obtained by removing one cell.
    pub fn remove_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let next = self.0.get(i + 1).copied().unwrap_or(0);
            if self.0[i] > next {
                let mut v = self.0.clone();
                v[i] -= 1;
                out.push(Partition::new(v));
            }
        }
        out
    }

    /// Containment of diagrams `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Parses "2,1,1"; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        Partition::try_from_parts(parse_parts(s)?)
    }
}

pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::Invalid(format!("bad part '{x}' in '{s}'")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// `(first, self)`.
    pub fn prepend(&self, first: usize) -> Composition {
        assert!(first > 0);
        let mut v = vec![first];
        v.extend_from_slice(&self.0);
        Composition(v)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` in descending lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=n).rev() {
            cur.push(p);
            rec(n - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(compositions(5).len(), 16);
        assert_eq!(compositions(0), vec![Composition::empty()]);
    }

    #[test]
    fn descending_order() {
        let p: Vec<String> = partitions(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(p, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        let c: Vec<String> = compositions(3).iter().map(|x| x.to_string()).collect();
        assert_eq!(c, ["(3)", "(2,1)", "(1,2)", "(1,1,1)"]);
    }

    #[test]
    fn shape_data() {
        let mu = Partition::new(vec![3, 1]);
        assert_eq!(mu.conjugate(), Partition::new(vec![2, 1, 1]));
        assert_eq!(mu.n_stat(), 1);
        assert_eq!(mu.arm(0, 0), 2);
        assert_eq!(mu.leg(0, 0), 1);
        assert_eq!(Partition::new(vec![2, 2, 1, 1]).z(), BigInt::from(16));
        assert!(Partition::new(vec![3, 1]).dominates(&Partition::new(vec![2, 2])));
        assert!(!Partition::new(vec![3, 1, 1, 1]).dominates(&Partition::new(vec![2, 2, 2])));
        assert_eq!(mu.add_cell().len(), 3);
        assert_eq!(mu.remove_cell().len(), 2);
        assert_eq!(Partition::parse("2,1").unwrap(), Partition::new(vec![2, 1]));
        assert!(Partition::parse("1,2").is_err());
    }
}
