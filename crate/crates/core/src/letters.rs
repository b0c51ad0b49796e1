//! Classification of transformations by rank: permutations, 1-defect
//! transformations (with their excluded state, duplicated state and root), and
//! everything of lower rank.
//!
//! Rank never grows under composition, so only permutations and 1-defect
//! letters can take part in a word of deficiency 1.

use alloc::vec;
use core::fmt;

use crate::{Automaton, Error, Result, State, Transformation, Word};

/// An unordered pair of distinct states, stored smaller first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StatePair {
    lo: State,
    hi: State,
}

impl StatePair {
    pub fn new(p: State, q: State) -> Result<Self> {
        match p.cmp(&q) {
            core::cmp::Ordering::Less => Ok(StatePair { lo: p, hi: q }),
            core::cmp::Ordering::Greater => Ok(StatePair { lo: q, hi: p }),
            core::cmp::Ordering::Equal => Err(Error::DegeneratePair(p)),
        }
    }

    pub fn lo(&self) -> State {
        self.lo
    }

    pub fn hi(&self) -> State {
        self.hi
    }

    pub fn contains(&self, q: State) -> bool {
        self.lo == q || self.hi == q
    }

    /// Image of the pair, or `None` if `t` merges it.
    pub fn map(&self, t: &Transformation) -> Option<StatePair> {
        StatePair::new(t.apply(self.lo), t.apply(self.hi)).ok()
    }
}

/// 1-based, e.g. `{1,3}`.
impl fmt::Display for StatePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo + 1, self.hi + 1)
    }
}

/// Defect data of a transformation of rank `n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DefectInfo {
    /// The state with no preimage.
    pub excluded: State,
    /// The state with two preimages.
    pub duplicated: State,
    /// The two preimages of `duplicated`.
    pub root: StatePair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterClass {
    /// Rank `n`.
    Permutation,
    /// Rank `n - 1`.
    OneDefect(DefectInfo),
    /// Rank at most `n - 2`.
    LowRank { rank: usize },
}

impl LetterClass {
    pub fn rank(&self, n: usize) -> usize {
        match self {
            LetterClass::Permutation => n,
            LetterClass::OneDefect(_) => n - 1,
            LetterClass::LowRank { rank } => *rank,
        }
    }

    pub fn defect(&self) -> Option<&DefectInfo> {
        match self {
            LetterClass::OneDefect(info) => Some(info),
            _ => None,
        }
    }
}

pub fn classify(t: &Transformation) -> LetterClass {
    let n = t.degree();
    let mut preimages = vec![0usize; n];
    for &q in t.as_slice() {
        preimages[q] += 1;
    }
    let rank = preimages.iter().filter(|&&c| c > 0).count();
    if rank == n {
        return LetterClass::Permutation;
    }
    if rank + 1 < n {
        return LetterClass::LowRank { rank };
    }
    let excluded = preimages.iter().position(|&c| c == 0).unwrap();
    let duplicated = preimages.iter().position(|&c| c == 2).unwrap();
    let mut root = t
        .as_slice()
        .iter()
        .enumerate()
        .filter_map(|(q, &img)| (img == duplicated).then_some(q));
    let (p, q) = (root.next().unwrap(), root.next().unwrap());
    LetterClass::OneDefect(DefectInfo {
        excluded,
        duplicated,
        root: StatePair { lo: p, hi: q },
    })
}

/// Classifies the transformation of a whole word.
pub fn classify_word(a: &Automaton, w: &Word) -> LetterClass {
    classify(&a.transformation_of(w))
}
