//! Stable marriage when agents submit rankings with ties.
//!
//! A matching is judged by its worst case over every way the ties could be
//! broken, which equals its number of super-blocking pairs. The crate
//! provides the model and predicates, exact and approximate solvers,
//! brute-force oracles for small instances and the adversarial instance
//! families used to probe the solvers.

pub mod completion;
pub mod error;
pub mod generators;
pub mod instance;
pub mod io;
pub mod matching;
pub mod oracles;
pub mod report;
pub mod solvers;
pub mod stability;

pub use completion::{build_witness_completion, complete, Completion, TieBreak};
pub use error::ModelError;
pub use instance::{compute_delta, validate_one_sided_top_truncated, Delta, Instance, Restriction, Side, TierList};
pub use matching::{AgentSet, Matching};
pub use report::SolveReport;
pub use stability::{
    count_super_blocking_pairs, is_obvious_blocking_pair, is_super_blocking_pair, is_super_stable, is_weakly_stable,
    obvious_blocking_pairs, super_blocking_pairs,
};
