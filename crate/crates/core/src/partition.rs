use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A set partition of `0..n` in restricted-growth form.
///
/// `class_of[q]` is the class id of state `q`. Scanning states in order, the
/// first occurrence of id `c` precedes the first occurrence of `c + 1`, so two
/// partitions are equal exactly when their label vectors are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary labeling: states with equal labels share a class.
    pub fn from_labels<L: PartialEq>(labels: &[L]) -> Self {
        let mut seen: Vec<&L> = Vec::new();
        let class_of = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(c) => c,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            })
            .collect();
        Partition {
            class_of,
            classes: seen.len(),
        }
    }

    /// Like [`Partition::from_labels`] for labels known to lie in `0..bound`.
    pub(crate) fn from_bounded_labels(labels: &[usize], bound: usize) -> Self {
        let mut rename = vec![usize::MAX; bound];
        let mut classes = 0;
        let class_of = labels
            .iter()
            .map(|&l| {
                if rename[l] == usize::MAX {
                    rename[l] = classes;
                    classes += 1;
                }
                rename[l]
            })
            .collect();
        Partition { class_of, classes }
    }

    /// Builds a partition from explicit classes. Every state in `0..n` must
    /// appear in exactly one class; returns `None` otherwise.
    pub fn from_classes<C: AsRef<[usize]>>(n: usize, classes: &[C]) -> Option<Self> {
        let mut labels = vec![usize::MAX; n];
        for (id, class) in classes.iter().enumerate() {
            let class = class.as_ref();
            if class.is_empty() {
                return None;
            }
            for &q in class {
                if q >= n || labels[q] != usize::MAX {
                    return None;
                }
                labels[q] = id;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_bounded_labels(&labels, classes.len()))
    }

    /// Every state in its own class.
    pub fn discrete(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
            classes: n,
        }
    }

    /// A single class holding every state.
    pub fn full(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
            classes: usize::from(n > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    /// Number of classes.
    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, q: usize) -> usize {
        self.class_of[q]
    }

    /// Restricted-growth label vector.
    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    /// Classes in id order, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (q, &c) in self.class_of.iter().enumerate() {
            out[c].push(q);
        }
        out
    }

    pub fn same_class(&self, p: usize, q: usize) -> bool {
        self.class_of[p] == self.class_of[q]
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.len() != coarser.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.classes];
        self.class_of
            .iter()
            .zip(&coarser.class_of)
            .all(|(&fine, &coarse)| match image[fine] {
                usize::MAX => {
                    image[fine] = coarse;
                    true
                }
                c => c == coarse,
            })
    }
}

/// Prints 1-based classes joined by commas and separated by `|`, e.g. `1,3|2`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, q) in class.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", q + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Bell number `B_n` from the Bell triangle. Saturates at `u128::MAX`.
pub fn bell_number(n: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev.saturating_add(x));
        }
        row = next;
    }
    row[0]
}

/// All partitions of `0..n` in lexicographic order of their restricted-growth
/// strings (so `1,2,3` first and the discrete partition last).
pub fn all_partitions(n: usize) -> AllPartitions {
    AllPartitions {
        labels: vec![0; n],
        max_prefix: vec![0; n],
        done: false,
    }
}

/// Iterator returned by [`all_partitions`].
pub struct AllPartitions {
    labels: Vec<usize>,
    // max_prefix[i] = max(labels[0..i]), 0 for i = 0
    max_prefix: Vec<usize>,
    done: bool,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let n = self.labels.len();
        let classes = self.labels.iter().max().map_or(0, |m| m + 1);
        let current = Partition {
            class_of: self.labels.clone(),
            classes,
        };

        // Advance: bump the rightmost position that may still grow, reset the tail.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.max_prefix[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.max_prefix[j] = self.max_prefix[j - 1].max(self.labels[j - 1]);
                }
                break;
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_form_is_structural() {
        let a = Partition::from_labels(&['x', 'y', 'x']);
        let b = Partition::from_labels(&[7, 3, 7]);
        assert_eq!(a, b);
        assert_eq!(a.labels(), &[0, 1, 0]);
        assert_eq!(a.num_classes(), 2);
        assert_eq!(a.to_string(), "1,3|2");
    }

    #[test]
    fn from_classes_rejects_bad_covers() {
        assert_eq!(
            Partition::from_classes(3, &[vec![2], vec![0, 1]]).unwrap(),
            Partition::from_labels(&[0, 0, 1])
        );
        assert!(Partition::from_classes(3, &[vec![0, 1]]).is_none());
        assert!(Partition::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_none());
        assert!(Partition::from_classes(2, &[vec![0, 5]]).is_none());
        assert!(Partition::from_classes::<Vec<usize>>(2, &[vec![0, 1], vec![]]).is_none());
    }

    #[test]
    fn refinement() {
        let discrete = Partition::discrete(4);
        let full = Partition::full(4);
        let mid = Partition::from_labels(&[0, 0, 1, 1]);
        assert!(discrete.refines(&mid));
        assert!(mid.refines(&full));
        assert!(!full.refines(&mid));
        assert!(!mid.refines(&Partition::from_labels(&[0, 1, 0, 1])));
    }

    #[test]
    fn bell_triangle_values() {
        let expected = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), b, "B_{n}");
        }
        assert_eq!(bell_number(500), u128::MAX);
    }

    #[test]
    fn three_element_partitions_in_order() {
        let got: Vec<_> = all_partitions(3).map(|p| p.to_string()).collect();
        assert_eq!(got, ["1,2,3", "1,2|3", "1,3|2", "1|2,3", "1|2|3"]);
    }

    #[test]
    fn enumeration_counts_match_bell() {
        for n in 0..=8 {
            let all: Vec<_> = all_partitions(n).collect();
            assert_eq!(all.len() as u128, bell_number(n), "n = {n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]), "sorted, distinct");
        }
    }
}
