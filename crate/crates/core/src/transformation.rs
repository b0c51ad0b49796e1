use alloc::vec;
use alloc::vec::Vec;

use crate::Partition;

/// A full transformation of `0..n`; entry `q` is the image of `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<usize>);

impl Transformation {
    /// Wraps a map, returning `None` if some entry is not below its length.
    pub fn new(map: Vec<usize>) -> Option<Self> {
        let n = map.len();
        map.iter().all(|&t| t < n).then_some(Transformation(map))
    }

    pub(crate) fn new_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(map.iter().all(|&t| t < map.len()));
        Transformation(map)
    }

    pub fn identity(n: usize) -> Self {
        Transformation((0..n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, q: usize) -> usize {
        self.0[q]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `self` followed by `next` (right action: `q · (self next)`).
    pub fn then(&self, next: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&q| next.0[q]).collect())
    }

    /// Indicator of the image set.
    pub fn image_mask(&self) -> Vec<bool> {
        let mut hit = vec![false; self.0.len()];
        for &t in &self.0 {
            hit[t] = true;
        }
        hit
    }

    /// Sorted image set `Q · self`.
    pub fn image(&self) -> Vec<usize> {
        self.image_mask()
            .iter()
            .enumerate()
            .filter_map(|(q, &h)| h.then_some(q))
            .collect()
    }

    /// Cardinality of the image.
    pub fn rank(&self) -> usize {
        self.image_mask().iter().filter(|&&h| h).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.0.len()
    }

    /// Inverse map, if `self` is a permutation.
    pub fn inverse(&self) -> Option<Transformation> {
        let mut inv = vec![usize::MAX; self.0.len()];
        for (q, &t) in self.0.iter().enumerate() {
            if inv[t] != usize::MAX {
                return None;
            }
            inv[t] = q;
        }
        Some(Transformation(inv))
    }

    /// States `p, q` share a class iff they have the same image.
    pub fn kernel(&self) -> Partition {
        Partition::from_bounded_labels(&self.0, self.0.len())
    }
}
