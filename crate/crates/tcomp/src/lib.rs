//! File formats, DOT export, benchmarking and the command-line front end for
//! [`tcomp_core`].

pub mod bench;
pub mod cli;
pub mod dot;
pub mod format;
