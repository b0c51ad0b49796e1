//! Kernels of words and total compatibility of deterministic finite automata.
//!
//! An automaton here is a bare transition structure `(Q, Σ, δ)`: no initial or
//! accepting states. Every word acts on the state set as a transformation, and
//! the *kernel* of that transformation is a partition of the states. An
//! automaton is *totally compatible* when every partition of its states is the
//! kernel of some word.
//!
//! The crate provides:
//!
//! * [`Automaton`], [`Word`], [`Transformation`] and [`Partition`], with word
//!   action, image sets and kernels;
//! * classification of letters into permutations, 1-defect transformations
//!   and lower-rank transformations ([`letters`]);
//! * the polynomial decision procedure on the graph of 2-subsets
//!   ([`pairgraph`]) and witness extraction for every pair;
//! * synthesis of a compatible word for an arbitrary partition ([`synth`]);
//! * a brute-force transformation-monoid oracle for small automata
//!   ([`oracle`]);
//! * the standard example families and a portable seeded random generator
//!   ([`families`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, DOT export and
//! the command-line tool live in the `tcomp` crate.
//!
//! ```
//! use tcomp_core::{families, pairgraph, synth, Partition};
//!
//! let t = families::automaton_t();
//! assert!(pairgraph::decide_totally_compatible(&t).is_totally_compatible());
//!
//! // 1,3 | 2 in 0-based labels.
//! let rho = Partition::from_labels(&[0, 1, 0]);
//! let w = synth::synthesize(&t, &rho).unwrap();
//! assert_eq!(t.kernel(&w), rho);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod automaton;
mod error;
pub mod families;
pub mod letters;
pub mod oracle;
pub mod pairgraph;
mod partition;
pub mod rng;
pub mod synth;
mod transformation;

pub use automaton::{Automaton, CompatibilityConditions, State, Word};
pub use error::Error;
pub use letters::{DefectInfo, LetterClass, StatePair};
pub use partition::{all_partitions, bell_number, AllPartitions, Partition};
pub use transformation::Transformation;

pub type Result<T, E = Error> = core::result::Result<T, E>;
