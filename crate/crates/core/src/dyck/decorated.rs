use crate::error::{Error, Result};
use crate::symfunc::Composition;

use super::path::DyckPath;

/// A Dyck path with a set of decorated rows (bit `i` marks row `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPath {
    pub path: DyckPath,
    mask: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathStats {
    pub area: u32,
    pub dinv: u32,
    pub area_circ: u32,
    pub dinv_circ: u32,
    pub peak_circ: u32,
    pub rise_circ: u32,
    /// b-values in reading order.
    pub b_seq: Vec<u32>,
}

/// Data of the rotation needed to undo it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FirstPart {
    /// Rows of the first part that were moved to the end.
    pub moved: usize,
    pub removed_decorated: bool,
}

impl DecoratedPath {
    pub fn new(path: DyckPath, rows: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &r in rows {
            if r >= path.len() {
                return Err(Error::Invalid(format!("row {r} out of range")));
            }
            mask |= 1 << r;
        }
        DecoratedPath::from_mask(path, mask)
    }

    pub fn from_mask(path: DyckPath, mask: u64) -> Result<Self> {
        if path.len() > 63 || (path.len() < 64 && mask >> path.len() != 0) {
            return Err(Error::Invalid("decoration outside the path".into()));
        }
        if let Some(first) = path.reading_order().first() {
            if mask & (1 << first) != 0 {
                return Err(Error::Invalid("the first row in reading order cannot be decorated".into()));
            }
        }
        Ok(DecoratedPath { path, mask })
    }

    pub fn undecorated(path: DyckPath) -> Self {
        DecoratedPath { path, mask: 0 }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_decorated(&self, row: usize) -> bool {
        self.mask >> row & 1 == 1
    }

    pub fn decorated_rows(&self) -> Vec<usize> {
        (0..self.path.len()).filter(|&r| self.is_decorated(r)).collect()
    }

    pub fn stats(&self) -> PathStats {
        stats_circ(self)
    }

    /// Touch composition minus the decorated double rises of each part.
    pub fn rise_touch_composition(&self) -> Composition {
        let mut parts: Vec<usize> = self.path.touch_composition().parts().to_vec();
        for (row, seg) in self.path.segments().into_iter().enumerate() {
            if self.is_decorated(row) && self.path.is_double_rise(row) {
                parts[seg] -= 1;
            }
        }
        Composition::new(parts).expect("every part keeps its final peak")
    }

    /// Moves the first part (without its first row, lowered by one) behind the rest.
    pub fn rotate(&self) -> Result<(DecoratedPath, FirstPart)> {
        let a = self.path.area_seq();
        if a.is_empty() {
            return Err(Error::Invalid("cannot rotate the empty path".into()));
        }
        let first_len = (1..a.len()).find(|&i| a[i] == 0).unwrap_or(a.len());
        let mut seq = Vec::with_capacity(a.len() - 1);
        let mut rows = Vec::new();
        for (i, &x) in a.iter().enumerate().skip(first_len) {
            if self.is_decorated(i) {
                rows.push(seq.len());
            }
            seq.push(x);
        }
        for (i, &x) in a.iter().enumerate().take(first_len).skip(1) {
            if self.is_decorated(i) {
                rows.push(seq.len());
            }
            seq.push(x - 1);
        }
        let out = DecoratedPath::new(DyckPath::new(seq)?, &rows)?;
        Ok((out, FirstPart { moved: first_len - 1, removed_decorated: self.is_decorated(0) }))
    }

    /// Inverse of [`DecoratedPath::rotate`].
    pub fn unrotate(&self, info: FirstPart) -> Result<DecoratedPath> {
        let a = self.path.area_seq();
        if info.moved > a.len() {
            return Err(Error::Invalid("moved block longer than the path".into()));
        }
        let split = a.len() - info.moved;
        let mut seq = vec![0];
        let mut rows = Vec::new();
        if info.removed_decorated {
            rows.push(0);
        }
        for (i, &x) in a.iter().enumerate().skip(split) {
            if self.is_decorated(i) {
                rows.push(seq.len());
            }
            seq.push(x + 1);
        }
        for (i, &x) in a.iter().enumerate().take(split) {
            if self.is_decorated(i) {
                rows.push(seq.len());
            }
            seq.push(x);
        }
        DecoratedPath::new(DyckPath::new(seq)?, &rows)
    }
}

/// All statistics of a decorated path.
pub fn stats_circ(dp: &DecoratedPath) -> PathStats {
    let p = &dp.path;
    let a = p.area_seq();
    let (_, b_seq) = p.b_sequence();
    let b = p.b_by_row();
    let mut s = PathStats { area: p.area(), dinv: b_seq.iter().sum(), b_seq, ..Default::default() };
    s.area_circ = s.area;
    s.dinv_circ = s.dinv;
    for row in dp.decorated_rows() {
        if p.is_double_rise(row) {
            s.rise_circ += 1;
            s.area_circ -= a[row + 1];
        } else {
            s.peak_circ += 1;
            s.dinv_circ -= b[row];
        }
    }
    s
}

/// All decorations of `path` (subsets avoiding the first row in reading order),
/// in increasing mask order.
pub fn enumerate_decorations(path: &DyckPath) -> impl Iterator<Item = DecoratedPath> + '_ {
    let n = path.len();
    let first = path.reading_order().first();
    let free: Vec<usize> = (0..n).filter(|&r| Some(r) != first).collect();
    (0u64..(1u64 << free.len())).map(move |bits| {
        let mut mask = 0u64;
        for (k, &r) in free.iter().enumerate() {
            if bits >> k & 1 == 1 {
                mask |= 1 << r;
            }
        }
        DecoratedPath { path: path.clone(), mask }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::path::enumerate_paths;

    fn path(v: &[u32]) -> DyckPath {
        DyckPath::new(v.to_vec()).unwrap()
    }

    #[test]
    fn decoration_counts() {
        assert_eq!(enumerate_decorations(&path(&[0])).count(), 1);
        assert_eq!(enumerate_decorations(&path(&[0, 0])).count(), 2);
        let total: usize = enumerate_paths(3).map(|p| enumerate_decorations(&p).count()).sum();
        assert_eq!(total, 20);
        assert!(DecoratedPath::new(path(&[0, 0]), &[1]).is_err());
    }

    #[test]
    fn small_stats() {
        let d = DecoratedPath::new(path(&[0, 0]), &[0]).unwrap();
        let s = d.stats();
        assert_eq!((s.peak_circ, s.dinv_circ, s.area_circ), (1, 0, 0));
        assert_eq!(d.rise_touch_composition().parts(), &[1, 1]);
        let d = DecoratedPath::new(path(&[0, 1]), &[0]).unwrap();
        let s = d.stats();
        assert_eq!((s.rise_circ, s.area_circ, s.dinv_circ), (1, 0, 0));
        assert_eq!(d.rise_touch_composition().parts(), &[1]);
    }

    #[test]
    fn rotation_example() {
        let d = DecoratedPath::undecorated(path(&[0, 1, 2, 2, 1, 1, 2, 0, 1, 1, 2, 1, 0, 1, 2]));
        let (r, info) = d.rotate().unwrap();
        assert_eq!(r.path.area_seq(), &[0, 1, 1, 2, 1, 0, 1, 2, 0, 1, 1, 0, 0, 1]);
        assert_eq!(r.path.area(), 11);
        let mut b = d.stats().b_seq;
        b.pop();
        assert_eq!(r.stats().b_seq, b);
        assert_eq!(r.unrotate(info).unwrap(), d);
        let (e, _) = DecoratedPath::undecorated(path(&[0])).rotate().unwrap();
        assert!(e.path.is_empty());
    }
}
