use alloc::string::String;

use crate::letters::StatePair;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("an automaton needs at least one state")]
    NoStates,
    #[error("duplicate letter name `{0}`")]
    DuplicateLetter(String),
    #[error(
        "letter name `{0}` must be non-empty, free of whitespace and `:`, and not start with `#`"
    )]
    BadLetterName(String),
    #[error("row of letter `{letter}` has {found} entries, expected {expected}")]
    RowLength {
        letter: String,
        expected: usize,
        found: usize,
    },
    #[error("letter `{letter}` sends state {state} to {target}, outside 0..{n}")]
    TargetOutOfRange {
        letter: String,
        state: usize,
        target: usize,
        n: usize,
    },
    #[error("state {state} is out of range for {n} states")]
    StateOutOfRange { state: usize, n: usize },
    #[error("letter index {index} is out of range for {count} letters")]
    LetterOutOfRange { index: usize, count: usize },
    #[error("a pair needs two distinct states, got {0} twice")]
    DegeneratePair(usize),
    #[error("partition covers {found} states, automaton has {expected}")]
    PartitionSize { expected: usize, found: usize },
    #[error("no 1-defect word has root {0}")]
    PairUnreachable(StatePair),
    #[error("enumeration exceeded the cap of {0} elements")]
    CapExceeded(u128),
    #[error("{family} needs n >= {min}, got {n}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
}
