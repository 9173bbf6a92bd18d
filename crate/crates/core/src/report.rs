use crate::completion::{build_witness_completion, Completion};
use crate::instance::Instance;
use crate::matching::{AgentSet, Matching};
use crate::stability::{obvious_blocking_pairs, super_blocking_pairs};

/// A matching together with its worst-case certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub algorithm: String,
    pub matching: Matching,
    pub super_blocking_pairs: Vec<(usize, usize)>,
    pub obvious_blocking_pairs: Vec<(usize, usize)>,
    /// Completion realising `super_blocking_pairs.len()` blocking pairs.
    pub witness_completion: Completion,
    pub deleted_agents: Option<AgentSet>,
}

impl SolveReport {
    /// Scores `matching` against `inst`.
    pub fn evaluate(
        inst: &Instance,
        matching: Matching,
        algorithm: impl Into<String>,
        deleted_agents: Option<AgentSet>,
    ) -> Self {
        let super_bps = super_blocking_pairs(inst, &matching);
        let obvious = obvious_blocking_pairs(inst, &matching);
        let witness = build_witness_completion(inst, &matching);
        debug_assert_eq!(witness.blocking_pairs(&matching).len(), super_bps.len());
        SolveReport {
            algorithm: algorithm.into(),
            matching,
            super_blocking_pairs: super_bps,
            obvious_blocking_pairs: obvious,
            witness_completion: witness,
            deleted_agents,
        }
    }

    pub fn super_bp_count(&self) -> usize {
        self.super_blocking_pairs.len()
    }

    pub fn is_weakly_stable(&self) -> bool {
        self.obvious_blocking_pairs.is_empty()
    }
}
