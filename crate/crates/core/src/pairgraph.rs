//! The graph of 2-subsets under permutation letters, and the decision
//! procedure built on it.
//!
//! Vertices are the pairs `{p, q}` (`p < q`) in lexicographic order. Every
//! permutation letter `σ` contributes the edge `P → P·σ`; since `σ` is a
//! bijection on states it is also one on pairs, so every vertex has exactly
//! one successor and one predecessor per permutation letter. The root set
//! holds the roots of the 1-defect letters.
//!
//! A pair `P` is the root of some 1-defect word iff a path labeled
//! `σ₁…σ_k` leads from `P` into the root set: if it ends at the root of
//! letter `a`, the word `σ₁…σ_k a` has deficiency 1 and root `P`. The
//! automaton is totally compatible iff every pair has such a path. One
//! breadth-first search, run backwards from all roots at once, answers every
//! pair in `O(n² · |Σ₀|)`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Automaton, Error, Result, State, StatePair, Word};

const NONE: u32 = u32::MAX;

/// Number of 2-subsets of an `n`-set.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Labeled graph on 2-subsets with permutation-letter edges and the root set.
#[derive(Clone, Debug)]
pub struct PairGraph {
    n: usize,
    // row_start[p] = index of the pair {p, p+1}
    row_start: Vec<usize>,
    perm_letters: Vec<usize>,
    // succ[v * s + i]: image of v under the i-th permutation letter
    succ: Vec<u32>,
    // pred[v * s + i]: the unique u with succ[u * s + i] == v
    pred: Vec<u32>,
    // first 1-defect letter whose root is v, or NONE
    root_letter: Vec<u32>,
    roots: Vec<u32>,
}

impl PairGraph {
    pub fn build(a: &Automaton) -> Self {
        let n = a.num_states();
        let vertices = pair_count(n);
        assert!(vertices < NONE as usize, "too many states for a pair graph");

        let mut row_start = Vec::with_capacity(n);
        let mut acc = 0;
        for p in 0..n {
            row_start.push(acc);
            acc += n - p - 1;
        }

        let perm_letters = a.permutation_letters();
        let s = perm_letters.len();
        let mut succ = vec![NONE; vertices * s];
        let mut pred = vec![NONE; vertices * s];
        for (i, &letter) in perm_letters.iter().enumerate() {
            let row = a.letter(letter).as_slice();
            let mut v = 0;
            for p in 0..n {
                for q in p + 1..n {
                    let (x, y) = (row[p], row[q]);
                    let target = if x < y {
                        row_start[x] + (y - x - 1)
                    } else {
                        row_start[y] + (x - y - 1)
                    };
                    succ[v * s + i] = target as u32;
                    pred[target * s + i] = v as u32;
                    v += 1;
                }
            }
        }

        let mut root_letter = vec![NONE; vertices];
        let mut roots = Vec::new();
        for (letter, info) in a.defect_letters() {
            let v = row_start[info.root.lo()] + (info.root.hi() - info.root.lo() - 1);
            if root_letter[v] == NONE {
                root_letter[v] = letter as u32;
                roots.push(v as u32);
            }
        }
        roots.sort_unstable();

        PairGraph {
            n,
            row_start,
            perm_letters,
            succ,
            pred,
            root_letter,
            roots,
        }
    }

    pub fn num_states(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.root_letter.len()
    }

    /// Permutation letters in declaration order; edge label `i` refers to
    /// the `i`-th entry.
    pub fn permutation_letters(&self) -> &[usize] {
        &self.perm_letters
    }

    pub fn index_of(&self, pair: StatePair) -> usize {
        self.row_start[pair.lo()] + (pair.hi() - pair.lo() - 1)
    }

    pub fn pair_at(&self, v: usize) -> StatePair {
        let p = self.row_start.partition_point(|&start| start <= v) - 1;
        let q = p + 1 + (v - self.row_start[p]);
        StatePair::new(p, q).unwrap()
    }

    /// All pairs in vertex order.
    pub fn pairs(&self) -> impl Iterator<Item = StatePair> + '_ {
        let n = self.n;
        (0..n).flat_map(move |p| (p + 1..n).map(move |q| StatePair::new(p, q).unwrap()))
    }

    /// Target of vertex `v` under the `i`-th permutation letter.
    pub fn successor(&self, v: usize, i: usize) -> usize {
        self.succ[v * self.perm_letters.len() + i] as usize
    }

    /// Source of the unique edge labeled by the `i`-th permutation letter into `v`.
    pub fn predecessor(&self, v: usize, i: usize) -> usize {
        self.pred[v * self.perm_letters.len() + i] as usize
    }

    /// Edges as `(source, letter, target)`, sorted by source then letter order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let s = self.perm_letters.len();
        (0..self.vertex_count())
            .flat_map(move |v| (0..s).map(move |i| (v, self.perm_letters[i], self.successor(v, i))))
    }

    /// Root vertices in increasing order.
    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.roots.iter().map(|&v| v as usize)
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.root_letter[v] != NONE
    }

    /// The first 1-defect letter whose root is `v`.
    pub fn root_letter(&self, v: usize) -> Option<usize> {
        match self.root_letter[v] {
            NONE => None,
            l => Some(l as usize),
        }
    }
}

/// How a vertex reaches the root set in the reverse search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Unreached,
    /// The vertex is the root of this 1-defect letter.
    Root {
        letter: usize,
    },
    /// Follow permutation `letter` to vertex `next`, one layer closer.
    Via {
        letter: usize,
        next: u32,
    },
}

/// Outcome of the decision procedure, with the parent table for reading off
/// 1-defect words.
#[derive(Clone, Debug)]
pub struct Decision {
    n: usize,
    row_start: Vec<usize>,
    steps: Vec<Step>,
    witness_pairs: Vec<StatePair>,
}

impl Decision {
    pub fn is_totally_compatible(&self) -> bool {
        self.witness_pairs.is_empty()
    }

    /// Pairs that are not the root of any 1-defect word, in canonical order.
    pub fn witness_pairs(&self) -> &[StatePair] {
        &self.witness_pairs
    }

    pub fn num_states(&self) -> usize {
        self.n
    }

    /// Parent table indexed by vertex.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    fn index_of(&self, pair: StatePair) -> usize {
        self.row_start[pair.lo()] + (pair.hi() - pair.lo() - 1)
    }

    pub fn is_reachable(&self, pair: StatePair) -> bool {
        self.steps[self.index_of(pair)] != Step::Unreached
    }

    /// A shortest word `σ₁…σ_k a` (permutations, then one 1-defect letter)
    /// whose root is `pair`.
    pub fn defect_word(&self, pair: StatePair) -> Result<Word> {
        if pair.hi() >= self.n {
            return Err(Error::StateOutOfRange {
                state: pair.hi(),
                n: self.n,
            });
        }
        let mut v = self.index_of(pair);
        let mut w = Word::empty();
        loop {
            match self.steps[v] {
                Step::Unreached => return Err(Error::PairUnreachable(pair)),
                Step::Root { letter } => {
                    w.push(letter);
                    return Ok(w);
                }
                Step::Via { letter, next } => {
                    w.push(letter);
                    v = next as usize;
                }
            }
        }
    }
}

/// Runs the reverse breadth-first search from the root set over an existing graph.
/// Queue order is canonical vertex order for the roots, then discovery order;
/// predecessors are scanned in permutation-letter order.
pub fn decide_on(graph: &PairGraph) -> Decision {
    let vertices = graph.vertex_count();
    let s = graph.perm_letters.len();
    let mut steps = vec![Step::Unreached; vertices];
    let mut queue = VecDeque::with_capacity(vertices);
    for v in graph.roots() {
        steps[v] = Step::Root {
            letter: graph.root_letter[v] as usize,
        };
        queue.push_back(v as u32);
    }
    while let Some(t) = queue.pop_front() {
        let base = t as usize * s;
        for i in 0..s {
            let p = graph.pred[base + i] as usize;
            if steps[p] == Step::Unreached {
                steps[p] = Step::Via {
                    letter: graph.perm_letters[i],
                    next: t,
                };
                queue.push_back(p as u32);
            }
        }
    }
    let witness_pairs = graph
        .pairs()
        .zip(&steps)
        .filter_map(|(pair, step)| (*step == Step::Unreached).then_some(pair))
        .collect();
    Decision {
        n: graph.n,
        row_start: graph.row_start.clone(),
        steps,
        witness_pairs,
    }
}

/// Decides whether `a` is totally compatible.
pub fn decide_totally_compatible(a: &Automaton) -> Decision {
    decide_on(&PairGraph::build(a))
}

/// A 1-defect word of `a` whose root is `{p, q}`.
pub fn find_defect_word(a: &Automaton, p: State, q: State) -> Result<Word> {
    let n = a.num_states();
    if let Some(&state) = [p, q].iter().find(|&&s| s >= n) {
        return Err(Error::StateOutOfRange { state, n });
    }
    let pair = StatePair::new(p, q)?;
    decide_totally_compatible(a).defect_word(pair)
}
