//! Laurent series in a formal variable u, known exactly on a window.

use std::collections::BTreeMap;

use super::RingElem;
use crate::error::{Error, Result};

/// `Σ c_k u^k` with every nonzero coefficient at `k >= lo` and coefficients
/// exact up to `hi` (`None` means the series is an exact polynomial).
#[derive(Clone, Debug, PartialEq)]
pub struct USeries<R> {
    coeffs: BTreeMap<i64, R>,
    lo: i64,
    hi: Option<i64>,
}

impl<R: RingElem> USeries<R> {
    /// An exact Laurent polynomial in u. `lo` must not exceed the lowest exponent present.
    pub fn exact<I: IntoIterator<Item = (i64, R)>>(lo: i64, terms: I) -> Self {
        Self::truncated(lo, None, terms)
    }

    /// A series known exactly up to `u^hi`; terms above `hi` are dropped.
    pub fn truncated<I: IntoIterator<Item = (i64, R)>>(lo: i64, hi: Option<i64>, terms: I) -> Self {
        let mut coeffs: BTreeMap<i64, R> = BTreeMap::new();
        for (k, c) in terms {
            assert!(k >= lo, "term u^{k} below the declared window start {lo}");
            if hi.is_some_and(|h| k > h) || c.is_zero() {
                continue;
            }
            match coeffs.get_mut(&k) {
                Some(x) => *x = x.add(&c),
                None => {
                    coeffs.insert(k, c);
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        USeries { coeffs, lo, hi }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &R)> {
        self.coeffs.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let hi = match (self.hi, o.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let terms = self.coeffs.iter().chain(o.coeffs.iter()).map(|(k, c)| (*k, c.clone()));
        Self::truncated(self.lo.min(o.lo), hi, terms)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let hi = match (self.hi, o.hi) {
            (Some(a), Some(b)) => Some((a + o.lo).min(b + self.lo)),
            (Some(a), None) => Some(a + o.lo),
            (None, Some(b)) => Some(b + self.lo),
            (None, None) => None,
        };
        let mut terms = Vec::new();
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                if hi.is_none_or(|h| i + j <= h) {
                    terms.push((i + j, a.mul(b)));
                }
            }
        }
        Self::truncated(self.lo + o.lo, hi, terms)
    }

    /// The coefficient of `u^m` in `self * o`, with the same window rules as
    /// [`USeries::mul`] followed by [`USeries::extract`].
    pub fn product_coefficient(&self, o: &Self, m: i64) -> Result<R> {
        let lo = self.lo + o.lo;
        let hi = match (self.hi, o.hi) {
            (Some(a), Some(b)) => Some((a + o.lo).min(b + self.lo)),
            (Some(a), None) => Some(a + o.lo),
            (None, Some(b)) => Some(b + self.lo),
            (None, None) => None,
        };
        if m < lo || hi.is_some_and(|h| m > h) {
            return Err(Error::Window { m, lo, hi: hi.map_or_else(|| "inf".to_string(), |h| h.to_string()) });
        }
        let mut acc = R::zero();
        for (i, a) in &self.coeffs {
            if let Some(b) = o.coeffs.get(&(m - i)) {
                acc = acc.add(&a.mul(b));
            }
        }
        Ok(acc)
    }

    /// Applies a map to each coefficient.
    pub fn map<S: RingElem, F: Fn(&R) -> S>(&self, f: F) -> USeries<S> {
        USeries::truncated(self.lo, self.hi, self.coeffs.iter().map(|(k, c)| (*k, f(c))))
    }

    /// The exact coefficient of `u^m`.
    pub fn extract(&self, m: i64) -> Result<R> {
        if m < self.lo || self.hi.is_some_and(|h| m > h) {
            return Err(Error::Window {
                m,
                lo: self.lo,
                hi: self.hi.map_or_else(|| "inf".to_string(), |h| h.to_string()),
            });
        }
        Ok(self.coeffs.get(&m).cloned().unwrap_or_else(R::zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatFunc;

    fn c(x: i64) -> RatFunc {
        RatFunc::from_i64(x)
    }

    #[test]
    fn examples() {
        let a = USeries::exact(-1, [(-1, c(1)), (0, c(1))]);
        let b = USeries::exact(0, [(0, c(1)), (1, c(1))]);
        assert_eq!(a.mul(&b).extract(0).unwrap(), c(2));
        assert!(matches!(a.extract(-2), Err(Error::Window { .. })));
        let x = USeries::exact(-1, [(-1, c(3))]);
        let y = USeries::exact(2, [(2, c(5))]);
        assert_eq!(x.mul(&y).extract(1).unwrap(), c(15));
    }

    #[test]
    fn truncation_window() {
        let p = USeries::exact(-2, [(-2, c(1)), (0, c(4))]);
        let s = USeries::truncated(0, Some(3), (0..10).map(|k| (k, c(k + 1))));
        let prod = p.mul(&s);
        assert_eq!(prod.hi(), Some(1));
        assert_eq!(prod.extract(1).unwrap(), c(4 + 2 * 4));
        assert!(prod.extract(2).is_err());
    }
}
