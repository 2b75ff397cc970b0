//! Ground sets and their subsets.
//!
//! Elements are the indices `0..n`. Subsets are stored canonically: a bitmask
//! for ground sets of at most 64 elements, a sorted index list above that.
//! The canonical representation makes subsets cheap to hash, which is what
//! the memoizing oracle relies on.

use crate::error::{Error, Result};

/// A finite ground set of `n` elements, optionally labeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("ground set must be nonempty".into()));
        }
        Ok(Self { n, labels: None })
    }

    pub fn with_labels(n: usize, labels: Vec<String>) -> Result<Self> {
        if labels.len() != n {
            return Err(Error::BadLabels);
        }
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != n {
            return Err(Error::BadLabels);
        }
        let mut g = Self::new(n)?;
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // by construction n >= 1
    }

    pub fn label(&self, e: usize) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(e)).map(|s| s.as_str())
    }

    pub fn contains_index(&self, e: usize) -> bool {
        e < self.n
    }

    pub fn check_index(&self, e: usize) -> Result<()> {
        if e < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange { index: e, n: self.n })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// The empty subset in this ground set's canonical representation.
    pub fn empty_subset(&self) -> Subset {
        Subset::empty(self.n)
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn subset_from_indices(&self, indices: &[usize]) -> Result<Subset> {
        Subset::from_indices(self.n, indices)
    }
}

/// A subset of a ground set, canonical per ground-set size.
///
/// `Mask` is used when the ground set has at most 64 elements, `Sorted`
/// (strictly increasing indices) above that. All constructors take the
/// ground-set size so the representation never mixes within one instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subset {
    Mask(u64),
    Sorted(Vec<u32>),
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        if n <= 64 {
            Subset::Mask(0)
        } else {
            Subset::Sorted(Vec::new())
        }
    }

    pub fn full(n: usize) -> Self {
        if n <= 64 {
            Subset::Mask(mask_full(n))
        } else {
            Subset::Sorted((0..n as u32).collect())
        }
    }

    pub fn singleton(n: usize, e: usize) -> Result<Self> {
        Self::from_indices(n, &[e])
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        for &e in indices {
            if e >= n {
                return Err(Error::OutOfRange { index: e, n });
            }
        }
        if n <= 64 {
            let mut m = 0u64;
            for &e in indices {
                m |= 1 << e;
            }
            Ok(Subset::Mask(m))
        } else {
            let mut v: Vec<u32> = indices.iter().map(|&e| e as u32).collect();
            v.sort_unstable();
            v.dedup();
            Ok(Subset::Sorted(v))
        }
    }

    /// Builds a subset from a bitmask over a ground set of size `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 64 {
            return Err(Error::BadParams(format!(
                "bitmask construction requires n <= 64, got {n}"
            )));
        }
        if mask & !mask_full(n) != 0 {
            return Err(Error::OutOfRange {
                index: 63 - mask.leading_zeros() as usize,
                n,
            });
        }
        Ok(Subset::Mask(mask))
    }

    pub fn mask(&self) -> Option<u64> {
        match self {
            Subset::Mask(m) => Some(*m),
            Subset::Sorted(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Subset::Mask(m) => m.count_ones() as usize,
            Subset::Sorted(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        match self {
            Subset::Mask(m) => e < 64 && m & (1 << e) != 0,
            Subset::Sorted(v) => v.binary_search(&(e as u32)).is_ok(),
        }
    }

    pub fn iter(&self) -> SubsetIter<'_> {
        match self {
            Subset::Mask(m) => SubsetIter::Mask(*m),
            Subset::Sorted(v) => SubsetIter::Sorted(v.iter()),
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Returns a copy with `e` inserted.
    pub fn inserted(&self, e: usize) -> Subset {
        match self {
            Subset::Mask(m) => {
                debug_assert!(e < 64);
                Subset::Mask(m | (1 << e))
            }
            Subset::Sorted(v) => {
                let mut v = v.clone();
                if let Err(pos) = v.binary_search(&(e as u32)) {
                    v.insert(pos, e as u32);
                }
                Subset::Sorted(v)
            }
        }
    }

    /// Returns a copy with `e` removed.
    pub fn removed(&self, e: usize) -> Subset {
        match self {
            Subset::Mask(m) => Subset::Mask(m & !(1u64.checked_shl(e as u32).unwrap_or(0))),
            Subset::Sorted(v) => {
                let mut v = v.clone();
                if let Ok(pos) = v.binary_search(&(e as u32)) {
                    v.remove(pos);
                }
                Subset::Sorted(v)
            }
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        match (self, other) {
            (Subset::Mask(a), Subset::Mask(b)) => Subset::Mask(a | b),
            _ => {
                let mut v: Vec<u32> = self
                    .iter()
                    .chain(other.iter())
                    .map(|e| e as u32)
                    .collect();
                v.sort_unstable();
                v.dedup();
                Subset::Sorted(v)
            }
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        match (self, other) {
            (Subset::Mask(a), Subset::Mask(b)) => Subset::Mask(a & b),
            _ => Subset::Sorted(
                self.iter()
                    .filter(|&e| other.contains(e))
                    .map(|e| e as u32)
                    .collect(),
            ),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        match (self, other) {
            (Subset::Mask(a), Subset::Mask(b)) => Subset::Mask(a & !b),
            _ => Subset::Sorted(
                self.iter()
                    .filter(|&e| !other.contains(e))
                    .map(|e| e as u32)
                    .collect(),
            ),
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        match (self, other) {
            (Subset::Mask(a), Subset::Mask(b)) => a & !b == 0,
            _ => self.iter().all(|e| other.contains(e)),
        }
    }
}

pub enum SubsetIter<'a> {
    Mask(u64),
    Sorted(std::slice::Iter<'a, u32>),
}

impl Iterator for SubsetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            SubsetIter::Mask(m) => {
                if *m == 0 {
                    None
                } else {
                    let e = m.trailing_zeros() as usize;
                    *m &= *m - 1;
                    Some(e)
                }
            }
            SubsetIter::Sorted(it) => it.next().map(|&e| e as usize),
        }
    }
}

pub(crate) fn mask_full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the submasks of `b` in increasing numeric order, including the
/// empty mask and `b` itself.
pub(crate) fn submasks_ascending(b: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(0u64);
    std::iter::from_fn(move |_: &mut ()| (), ).next(); // unreachable; replaced below
    std::iter::from_fn(move || {
        let a = cur?;
        cur = if a == b {
            None
        } else {
            Some(a.wrapping_sub(b) & b)
        };
        Some(a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_repr_follows_ground_size() {
        assert!(matches!(Subset::empty(64), Subset::Mask(0)));
        assert!(matches!(Subset::empty(65), Subset::Sorted(_)));
        let s = Subset::from_indices(100, &[7, 3, 3, 99]).unwrap();
        assert_eq!(s.indices(), vec![3, 7, 99]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Subset::from_indices(4, &[4]),
            Err(Error::OutOfRange { index: 4, n: 4 })
        ));
    }

    #[test]
    fn set_algebra_on_masks() {
        let a = Subset::from_indices(8, &[0, 1, 5]).unwrap();
        let b = Subset::from_indices(8, &[1, 2]).unwrap();
        assert_eq!(a.union(&b).indices(), vec![0, 1, 2, 5]);
        assert_eq!(a.intersection(&b).indices(), vec![1]);
        assert_eq!(a.difference(&b).indices(), vec![0, 5]);
        assert!(b.intersection(&a).is_subset_of(&b));
        assert_eq!(a.inserted(3).len(), 4);
        assert_eq!(a.removed(5).indices(), vec![0, 1]);
    }

    #[test]
    fn sorted_repr_mirrors_mask_ops() {
        let a = Subset::from_indices(70, &[0, 1, 65]).unwrap();
        let b = Subset::from_indices(70, &[1, 69]).unwrap();
        assert_eq!(a.union(&b).indices(), vec![0, 1, 65, 69]);
        assert_eq!(a.intersection(&b).indices(), vec![1]);
        assert_eq!(a.difference(&b).indices(), vec![0, 65]);
        assert!(a.contains(65));
        assert!(!a.contains(69));
        assert_eq!(a.inserted(2).indices(), vec![0, 1, 2, 65]);
    }

    #[test]
    fn submask_order_is_ascending() {
        let got: Vec<u64> = submasks_ascending(0b101).collect();
        assert_eq!(got, vec![0b000, 0b001, 0b100, 0b101]);
        let empty: Vec<u64> = submasks_ascending(0).collect();
        assert_eq!(empty, vec![0]);
    }

    #[test]
    fn labels_must_be_unique() {
        assert!(GroundSet::with_labels(2, vec!["a".into(), "a".into()]).is_err());
        let g = GroundSet::with_labels(2, vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.label(1), Some("b"));
    }
}
