//! Constructive algorithms.

mod algorithm1;
mod assemble;
mod exact;
mod gale_shapley;
mod super_stable;
mod vertex_cover;
mod working;

use thiserror::Error;

use crate::error::ModelError;

pub use algorithm1::{
    algorithm1, algorithm1_observed, eliminate_rotation, find_exposed_rotation, propose_with, Rotation, Step,
};
pub use assemble::{assemble_from_deletion, deletion_bound};
pub use exact::{demote_pairs, exact_min_super_bp, ExactOutcome};
pub use gale_shapley::{deferred_acceptance, gale_shapley_completion};
pub use super_stable::super_stable_solve;
pub use vertex_cover::{maximum_bipartite_matching, min_vertex_cover_bipartite, BipartiteCover};
pub use working::WorkingInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance is not one-sided top-truncated: men must be strict and women may tie only at the bottom")]
    NotTopTruncated,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate intermediate state: {0}")]
    DegenerateInstance(String),
    #[error("deletion set holds {men} men but {women} women")]
    UnbalancedDeletion { men: usize, women: usize },
    #[error("partial matching does not cover exactly the kept agents: {0}")]
    InvalidPartial(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
