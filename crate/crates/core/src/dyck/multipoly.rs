use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{IntPoly, Mono};

/// A polynomial in q, t, z, w with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<[u32; 4], BigInt>,
}

pub const VARS: [&str; 4] = ["q", "t", "z", "w"];

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::monomial([0; 4])
    }

    pub fn monomial(e: [u32; 4]) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn add_term(&mut self, e: [u32; 4], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], c * d);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: [u32; 4]) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn eval(&self, point: [i64; 4]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (x, &k) in point.iter().zip(e) {
                    v *= num_traits::pow(BigInt::from(*x), k as usize);
                }
                v
            })
            .sum()
    }

    /// Specialization `z = w = 0`-free view: the q,t polynomial when no z or w occurs.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.terms.keys().any(|e| e[2] != 0 || e[3] != 0) {
            return None;
        }
        Some(IntPoly::from_terms(self.terms.iter().map(|(e, c)| (Mono::new(e[0] as i32, e[1] as i32), c.clone()))))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.to_int_poly() {
            return write!(f, "{p}");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .zip(VARS)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            match (abs.is_one(), vars.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MultiPolyJson {
    vars: Vec<String>,
    terms: Vec<([u32; 4], String)>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultiPolyJson {
            vars: VARS.iter().map(|v| v.to_string()).collect(),
            terms: self.terms().map(|(e, c)| (*e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MultiPolyJson::deserialize(d)?;
        if raw.vars != VARS {
            return Err(D::Error::custom("expected variables q, t, z, w"));
        }
        let mut p = MultiPoly::zero();
        for (e, c) in raw.terms {
            p.add_term(e, c.parse().map_err(|_| D::Error::custom(format!("bad integer '{c}'")))?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_form() {
        let p = MultiPoly::monomial([1, 0, 0, 0]).add(&MultiPoly::monomial([0, 0, 0, 1]));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"vars":["q","t","z","w"],"terms":[[[1,0,0,0],"1"],[[0,0,0,1],"1"]]}"#);
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "q + w");
        assert_eq!(p.eval([1, 1, 1, 1]), BigInt::from(2));
    }
}
