//! Per-degree change-of-basis data, computed on demand and memoized.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{partitions, Partition};
use super::Basis;
use crate::exact::linalg::{invert, mat_mul, RatMatrix};

pub struct DegreeTables {
    pub n: usize,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    pub z: Vec<BigInt>,
    /// `chars[λ][ρ]` is the irreducible character `χ^λ` at cycle type `ρ`.
    pub chars: Vec<Vec<i64>>,
    to_p: HashMap<Basis, RatMatrix>,
    from_p: HashMap<Basis, RatMatrix>,
    transitions: RwLock<HashMap<(Basis, Basis), Arc<RatMatrix>>>,
}

fn murnaghan_nakayama(beta: &[usize], rho: &[usize]) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[idx] = b - k;
        total += sign * murnaghan_nakayama(&next, rest);
    }
    total
}

/// `χ^λ(ρ)`.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size());
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, p)| p + (l - 1 - i)).collect();
    murnaghan_nakayama(&beta, rho.parts())
}

type PExpansion = HashMap<Partition, BigRational>;

fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::new(v)
}

fn multiply(a: &PExpansion, b: &PExpansion) -> PExpansion {
    let mut out = PExpansion::new();
    for (x, c) in a {
        for (y, d) in b {
            *out.entry(merge(x, y)).or_insert_with(BigRational::zero) += c * d;
        }
    }
    out
}

impl DegreeTables {
    fn build(n: usize) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let z: Vec<BigInt> = parts.iter().map(|p| p.z()).collect();
        let chars: Vec<Vec<i64>> = parts.iter().map(|l| parts.iter().map(|r| character(l, r)).collect()).collect();
        let size = parts.len();

        // h_k and e_k in the p basis for k <= n
        let mut h_single: Vec<PExpansion> = Vec::new();
        let mut e_single: Vec<PExpansion> = Vec::new();
        for k in 0..=n {
            let mut h = PExpansion::new();
            let mut e = PExpansion::new();
            for rho in partitions(k) {
                let c = BigRational::new(BigInt::one(), rho.z());
                let sign = if (k - rho.len()) % 2 == 0 { c.clone() } else { -c.clone() };
                e.insert(rho.clone(), sign);
                h.insert(rho, c);
            }
            h_single.push(h);
            e_single.push(e);
        }
        let expand = |single: &Vec<PExpansion>, lambda: &Partition| -> Vec<BigRational> {
            let mut acc: PExpansion = [(Partition::empty(), BigRational::one())].into_iter().collect();
            for &part in lambda.parts() {
                acc = multiply(&acc, &single[part]);
            }
            let mut row = vec![BigRational::zero(); size];
            for (rho, c) in acc {
                row[index[&rho]] = c;
            }
            row
        };
        let h_to_p: RatMatrix = parts.iter().map(|l| expand(&h_single, l)).collect();
        let e_to_p: RatMatrix = parts.iter().map(|l| expand(&e_single, l)).collect();
        let s_to_p: RatMatrix = (0..size)
            .map(|l| (0..size).map(|r| BigRational::new(chars[l][r].into(), z[r].clone())).collect())
            .collect();
        let p_to_s: RatMatrix = (0..size)
            .map(|r| (0..size).map(|l| BigRational::from_integer(chars[l][r].into())).collect())
            .collect();
        // m is dual to h: <h_λ, m_μ> = Σ_ρ H[λ][ρ] Mm[μ][ρ] z_ρ = δ
        let hz: RatMatrix = h_to_p
            .iter()
            .map(|row| row.iter().zip(&z).map(|(c, zz)| c * BigRational::from_integer(zz.clone())).collect())
            .collect();
        let hz_inv = invert(&hz).expect("h basis is invertible");
        let m_to_p: RatMatrix = (0..size).map(|mu| (0..size).map(|r| hz_inv[r][mu].clone()).collect()).collect();

        let mut to_p = HashMap::new();
        let mut from_p = HashMap::new();
        for (b, m) in [(Basis::H, h_to_p), (Basis::E, e_to_p), (Basis::M, m_to_p)] {
            from_p.insert(b, invert(&m).expect("classical bases are invertible"));
            to_p.insert(b, m);
        }
        to_p.insert(Basis::S, s_to_p);
        from_p.insert(Basis::S, p_to_s);
        DegreeTables { n, parts, index, z, chars, to_p, from_p, transitions: RwLock::new(HashMap::new()) }
    }

    pub fn index(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// Row `λ`: coefficients of `b_λ` in the p basis.
    pub fn to_p(&self, b: Basis) -> &RatMatrix {
        &self.to_p[&b]
    }

    /// Row `ρ`: coefficients of `p_ρ` in the basis `b`.
    pub fn from_p(&self, b: Basis) -> &RatMatrix {
        &self.from_p[&b]
    }

    /// Row `λ`: coefficients of `a_λ` in the basis `b`, for classical bases `a`, `b`.
    pub fn transition(&self, a: Basis, b: Basis) -> Arc<RatMatrix> {
        if let Some(m) = self.transitions.read().unwrap().get(&(a, b)) {
            return m.clone();
        }
        let size = self.parts.len();
        let identity = || -> RatMatrix {
            (0..size)
                .map(|i| (0..size).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
                .collect()
        };
        let m = match (a, b) {
            (Basis::P, Basis::P) => identity(),
            (Basis::P, _) => self.from_p[&b].clone(),
            (_, Basis::P) => self.to_p[&a].clone(),
            _ if a == b => identity(),
            _ => mat_mul(&self.to_p[&a], &self.from_p[&b]),
        };
        let m = Arc::new(m);
        self.transitions.write().unwrap().insert((a, b), m.clone());
        m
    }
}

/// Shared tables for degree `n`.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(n));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_values() {
        let p = |v: &[usize]| Partition::new(v.to_vec());
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        assert_eq!(character(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
    }

    #[test]
    fn column_orthogonality() {
        let t = tables(5);
        for a in 0..t.parts.len() {
            for b in 0..t.parts.len() {
                let s: i64 = (0..t.parts.len()).map(|l| t.chars[l][a] * t.chars[l][b]).sum();
                let expect = if a == b { t.z[a].clone() } else { BigInt::zero() };
                assert_eq!(BigInt::from(s), expect);
            }
        }
    }
}
