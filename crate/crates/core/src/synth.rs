//! Compatible words for arbitrary partitions.
//!
//! Starting from ε (whose kernel is the discrete partition), each step picks
//! a target class whose current image still has two or more states and
//! appends a 1-defect word rooted at two of those image states. The appended
//! word merges exactly that pair and is injective elsewhere, so every step
//! removes one class from the kernel without merging anything else. After
//! `n - k` steps the kernel is the `k`-class target.
//!
//! When the automaton is not totally compatible this construction is sound
//! but not complete: a partition may have a compatible word that is not a
//! concatenation of permutation-prefixed 1-defect blocks.

use alloc::vec::Vec;

use crate::pairgraph::{decide_totally_compatible, pair_count, Decision};
use crate::{all_partitions, bell_number, Automaton, Error, Partition, Result, StatePair, Word};

/// Default bound on the number of partitions a witness table may enumerate.
pub const DEFAULT_PARTITION_CAP: u128 = 1_000_000;

/// Upper bound on the length of a synthesized word: `(n - 1) · C(n, 2)`.
pub fn length_bound(n: usize) -> usize {
    n.saturating_sub(1) * pair_count(n)
}

/// Synthesizes a word compatible with `rho`, reusing a finished decision.
pub fn synthesize_with(a: &Automaton, decision: &Decision, rho: &Partition) -> Result<Word> {
    let n = a.num_states();
    if rho.len() != n {
        return Err(Error::PartitionSize {
            expected: n,
            found: rho.len(),
        });
    }
    let classes = rho.classes();
    let mut w = Word::empty();
    // Current image of every state under w.
    let mut image: Vec<usize> = (0..n).collect();
    let mut kernel_classes = n;
    for _ in 0..n - rho.num_classes() {
        // Lowest class id whose image still holds two states; take its two
        // smallest image states.
        let pair = classes
            .iter()
            .find_map(|class| {
                let mut imgs: Vec<usize> = class.iter().map(|&q| image[q]).collect();
                imgs.sort_unstable();
                imgs.dedup();
                (imgs.len() >= 2).then(|| StatePair::new(imgs[0], imgs[1]).unwrap())
            })
            .expect("an unmerged class remains while classes exceed the target");
        let v = decision.defect_word(pair)?;
        let step = a.transformation_of(&v);
        for t in image.iter_mut() {
            *t = step.apply(*t);
        }
        w.extend_with(&v);

        let merged = Partition::from_bounded_labels(&image, n);
        debug_assert_eq!(merged.num_classes() + 1, kernel_classes);
        debug_assert!(merged.refines(rho));
        kernel_classes = merged.num_classes();
    }
    Ok(w)
}

/// Synthesizes a word `w` with `kernel(w) = rho`.
pub fn synthesize(a: &Automaton, rho: &Partition) -> Result<Word> {
    synthesize_with(a, &decide_totally_compatible(a), rho)
}

/// One row of a witness table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRow {
    pub partition: Partition,
    pub word: Result<Word>,
}

/// One synthesized (and kernel-checked) word per partition of the states,
/// in canonical partition order. Failures are recorded per row.
pub fn witness_table(a: &Automaton, cap: u128) -> Result<Vec<WitnessRow>> {
    let n = a.num_states();
    if bell_number(n) > cap {
        return Err(Error::CapExceeded(cap));
    }
    let decision = decide_totally_compatible(a);
    Ok(all_partitions(n)
        .map(|partition| {
            let word = synthesize_with(a, &decision, &partition);
            if let Ok(w) = &word {
                assert_eq!(
                    a.kernel(w),
                    partition,
                    "synthesized word has the wrong kernel"
                );
            }
            WitnessRow { partition, word }
        })
        .collect())
}
