//! Brute-force ground truth for small automata.
//!
//! [`enumerate_monoid`] closes the identity under right multiplication by the
//! letters, breadth-first by word length with letters tried in declaration
//! order, so each element's stored word is the shortlex-least word realizing
//! it. Every property below is read off the resulting census.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::{
    all_partitions, bell_number, Automaton, Error, Partition, Result, State, Transformation, Word,
};

pub const DEFAULT_CAP: u128 = 2_000_000;

/// The transformation monoid generated by an automaton's letters.
#[derive(Clone, Debug)]
pub struct MonoidCensus {
    elements: Vec<Transformation>,
    // (parent element, last letter); the identity's entry is unused
    parents: Vec<(u32, u32)>,
    kernels: BTreeSet<Partition>,
    images: BTreeSet<Vec<State>>,
    identity_generated: bool,
}

impl MonoidCensus {
    /// Number of distinct transformations, identity included.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of transformations realized by nonempty words.
    pub fn semigroup_len(&self) -> usize {
        self.elements.len() - usize::from(!self.identity_generated)
    }

    /// Whether some nonempty word acts as the identity.
    pub fn identity_generated(&self) -> bool {
        self.identity_generated
    }

    /// Elements in discovery order; index 0 is the identity.
    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    /// Shortlex-least word realizing element `i`.
    pub fn word_of(&self, mut i: usize) -> Word {
        let mut letters = Vec::new();
        while i != 0 {
            let (parent, letter) = self.parents[i];
            letters.push(letter as usize);
            i = parent as usize;
        }
        letters.reverse();
        Word::from(letters)
    }

    pub fn kernels(&self) -> &BTreeSet<Partition> {
        &self.kernels
    }

    /// Distinct image sets, each sorted.
    pub fn images(&self) -> &BTreeSet<Vec<State>> {
        &self.images
    }
}

/// Enumerates `⟨Σ⟩ ∪ {id}`. Fails once more than `cap` distinct elements appear.
pub fn enumerate_monoid(a: &Automaton, cap: u128) -> Result<MonoidCensus> {
    let n = a.num_states();
    let identity = Transformation::identity(n);
    let mut index: HashMap<Transformation, u32> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = alloc::vec![identity];
    let mut parents = alloc::vec![(0u32, 0u32)];
    let mut identity_generated = false;
    let mut queue = VecDeque::from([0u32]);

    while let Some(i) = queue.pop_front() {
        for letter in 0..a.num_letters() {
            let t = elements[i as usize].then(a.letter(letter));
            match index.get(&t) {
                Some(&0) => identity_generated = true,
                Some(_) => {}
                None => {
                    if elements.len() as u128 >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    let j = elements.len() as u32;
                    index.insert(t.clone(), j);
                    elements.push(t);
                    parents.push((i, letter as u32));
                    queue.push_back(j);
                }
            }
        }
    }

    let kernels = elements.iter().map(Transformation::kernel).collect();
    let images = elements.iter().map(Transformation::image).collect();
    Ok(MonoidCensus {
        elements,
        parents,
        kernels,
        images,
        identity_generated,
    })
}

/// Verdict on total compatibility with the partitions no word realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityVerdict {
    pub totally_compatible: bool,
    /// Partitions that are not the kernel of any word, in canonical order.
    pub missing: Vec<Partition>,
}

pub fn totally_compatible_in(census: &MonoidCensus, n: usize) -> CompatibilityVerdict {
    let missing: Vec<Partition> = all_partitions(n)
        .filter(|p| !census.kernels.contains(p))
        .collect();
    CompatibilityVerdict {
        totally_compatible: missing.is_empty(),
        missing,
    }
}

/// Every partition is the kernel of some word. The partition count must not
/// exceed `cap` either.
pub fn oracle_totally_compatible(a: &Automaton, cap: u128) -> Result<CompatibilityVerdict> {
    let n = a.num_states();
    if bell_number(n) > cap {
        return Err(Error::CapExceeded(cap));
    }
    let census = enumerate_monoid(a, cap)?;
    Ok(totally_compatible_in(&census, n))
}

pub fn completely_reachable_in(census: &MonoidCensus, n: usize) -> bool {
    u32::try_from(n)
        .ok()
        .and_then(|n| 1u128.checked_shl(n))
        .is_some_and(|subsets| census.images.len() as u128 == subsets - 1)
}

/// Every nonempty subset of states is `Q · w` for some word `w`.
pub fn oracle_completely_reachable(a: &Automaton, cap: u128) -> Result<bool> {
    let census = enumerate_monoid(a, cap)?;
    Ok(completely_reachable_in(&census, a.num_states()))
}

/// Shortlex-least reset word of the census, if any.
pub fn reset_word_in(census: &MonoidCensus) -> Option<Word> {
    census
        .elements
        .iter()
        .position(|t| t.rank() == 1)
        .map(|i| census.word_of(i))
}

/// Returns a shortest reset word if the automaton is synchronizing.
pub fn oracle_synchronizing(a: &Automaton, cap: u128) -> Result<Option<Word>> {
    Ok(reset_word_in(&enumerate_monoid(a, cap)?))
}

/// Size of the generated monoid against the Bell number, under both
/// counting conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub totally_compatible: bool,
    pub bell: u128,
    /// Distinct transformations including the identity (ε).
    pub monoid_size: usize,
    /// Distinct transformations of nonempty words.
    pub semigroup_size: usize,
}

impl MinimalityReport {
    /// Totally compatible with exactly `B_n` transformations, ε counted.
    pub fn minimal_as_monoid(&self) -> bool {
        self.totally_compatible && self.monoid_size as u128 == self.bell
    }

    /// Totally compatible with exactly `B_n` transformations of nonempty words.
    pub fn minimal_as_semigroup(&self) -> bool {
        self.totally_compatible && self.semigroup_size as u128 == self.bell
    }
}

pub fn minimality_report(a: &Automaton, cap: u128) -> Result<MinimalityReport> {
    let n = a.num_states();
    let bell = bell_number(n);
    if bell > cap {
        return Err(Error::CapExceeded(cap));
    }
    let census = enumerate_monoid(a, cap)?;
    Ok(MinimalityReport {
        totally_compatible: totally_compatible_in(&census, n).totally_compatible,
        bell,
        monoid_size: census.len(),
        semigroup_size: census.semigroup_len(),
    })
}

/// Every partition has exactly one compatible transformation in the monoid
/// (ε counted, since ε is the compatible word of the discrete partition).
/// See [`minimality_report`] for the semigroup count as well.
pub fn is_minimal_totally_compatible(a: &Automaton, cap: u128) -> Result<bool> {
    Ok(minimality_report(a, cap)?.minimal_as_monoid())
}
