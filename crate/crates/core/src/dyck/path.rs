use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symfunc::Composition;

/// A Dyck path given by its area sequence. Rows are indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DyckPath(Vec<u32>);

impl DyckPath {
    pub fn new(area_seq: Vec<u32>) -> Result<Self> {
        let ok = area_seq.first().is_none_or(|&a| a == 0) && area_seq.windows(2).all(|w| w[1] <= w[0] + 1);
        if !ok {
            return Err(Error::Invalid(format!("{area_seq:?} is not an area sequence")));
        }
        Ok(DyckPath(area_seq))
    }

    pub fn empty() -> Self {
        DyckPath(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(DyckPath::empty());
        }
        let v = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Invalid(format!("bad area value '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(v)
    }

    pub fn area_seq(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn area(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Row `i` is followed by a horizontal step.
    pub fn is_peak(&self, i: usize) -> bool {
        i + 1 == self.0.len() || self.0[i + 1] <= self.0[i]
    }

    /// Row `i` is followed by another vertical step.
    pub fn is_double_rise(&self, i: usize) -> bool {
        !self.is_peak(i)
    }

    /// Part sizes between consecutive returns to the diagonal.
    pub fn touch_composition(&self) -> Composition {
        let mut parts = Vec::new();
        for &a in &self.0 {
            if a == 0 {
                parts.push(0);
            }
            *parts.last_mut().expect("first row has area 0") += 1;
        }
        Composition::new(parts).expect("parts are positive")
    }

    /// Segment index (0-based touch part) of every row.
    pub fn segments(&self) -> Vec<usize> {
        let mut seg = Vec::with_capacity(self.0.len());
        let mut cur = 0usize;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 && i > 0 {
                cur += 1;
            }
            seg.push(cur);
        }
        seg
    }

    /// Rows from the highest diagonal down, right to left within a diagonal.
    pub fn reading_order(&self) -> ReadingOrder {
        let mut perm: Vec<usize> = (0..self.0.len()).collect();
        perm.sort_by(|&x, &y| self.0[y].cmp(&self.0[x]).then(y.cmp(&x)));
        ReadingOrder { perm }
    }

    /// Reading order and b-values listed in that order.
    pub fn b_sequence(&self) -> (ReadingOrder, Vec<u32>) {
        let order = self.reading_order();
        let b = self.b_by_row();
        let seq = order.perm.iter().map(|&r| b[r]).collect();
        (order, seq)
    }

    /// `b` value of each row, indexed by row.
    pub fn b_by_row(&self) -> Vec<u32> {
        let a = &self.0;
        (0..a.len())
            .map(|k| {
                let later_same = (k + 1..a.len()).filter(|&j| a[j] == a[k]).count();
                let earlier_above = (0..k).filter(|&j| a[j] == a[k] + 1).count();
                (later_same + earlier_above) as u32
            })
            .collect()
    }

    /// Pairs `i < j` with `a_i = a_j` or `a_i = a_j + 1`.
    pub fn dinv(&self) -> u32 {
        let a = &self.0;
        let mut count = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] == a[j] || a[i] == a[j] + 1 {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A permutation of the rows; `perm[i]` is the row read in position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingOrder {
    pub perm: Vec<usize>,
}

impl ReadingOrder {
    /// Position of every row in the reading order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (i, &r) in self.perm.iter().enumerate() {
            pos[r] = i;
        }
        pos
    }

    pub fn first(&self) -> Option<usize> {
        self.perm.first().copied()
    }
}

/// All Dyck paths with `n` rows in lexicographic order of area sequences.
pub fn enumerate_paths(n: usize) -> impl Iterator<Item = DyckPath> {
    PathIter { n, cur: if n == 0 { Some(Vec::new()) } else { Some(vec![0; n]) } }
}

struct PathIter {
    n: usize,
    cur: Option<Vec<u32>>,
}

impl Iterator for PathIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let out = self.cur.clone()?;
        // advance to the lexicographic successor
        let mut next = out.clone();
        let mut i = self.n;
        self.cur = loop {
            if i <= 1 {
                break None;
            }
            i -= 1;
            if next[i] < next[i - 1] + 1 {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break Some(next);
            }
        };
        Some(DyckPath(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(v: &[u32]) -> DyckPath {
        DyckPath::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let d = path(&[0, 1, 2, 2, 1, 1, 2, 0, 1, 1, 2, 1, 0, 1, 2]);
        assert_eq!(d.b_sequence().1, vec![0, 1, 2, 3, 4, 4, 5, 5, 6, 6, 7, 6, 6, 4, 2]);
        assert_eq!(d.area(), 17);
        assert_eq!(d.b_sequence().1.iter().sum::<u32>(), d.dinv());
    }

    #[test]
    fn small_paths() {
        assert_eq!(path(&[0, 0]).b_sequence().1, vec![0, 1]);
        assert_eq!(path(&[0, 1]).b_sequence().1, vec![0, 0]);
        assert_eq!(path(&[0, 0]).touch_composition().parts(), &[1, 1]);
        let all: Vec<DyckPath> = enumerate_paths(2).collect();
        assert_eq!(all, vec![path(&[0, 0]), path(&[0, 1])]);
        assert_eq!(enumerate_paths(3).count(), 5);
        assert_eq!(enumerate_paths(8).count(), 1430);
        assert_eq!(enumerate_paths(0).count(), 1);
        assert!(DyckPath::new(vec![0, 2]).is_err());
    }
}
