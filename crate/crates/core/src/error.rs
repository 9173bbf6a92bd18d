use thiserror::Error;

use crate::instance::Side;

/// Structural problems with instances and matchings.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("{agent}: {reason}")]
    InvalidTierList { agent: String, reason: String },
    #[error("expected {expected} preference lists for the {side}, found {found}")]
    WrongListCount { side: Side, expected: usize, found: usize },
    #[error("agent index {} out of range for n = {n}", index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{} appears in more than one pair", side.label(*agent))]
    AgentMatchedTwice { side: Side, agent: usize },
    #[error("an agent is listed twice")]
    DuplicateAgent,
    #[error("restriction keeps {men} men but {women} women")]
    Unbalanced { men: usize, women: usize },
    #[error("instance is not strict: {0}")]
    NotStrict(String),
    #[error("matching is over {found} agents per side, instance has {expected}")]
    SizeMismatch { expected: usize, found: usize },
}
