//! JSON document formats. Indices are 1-based on disk.
//!
//! Instance: `{"n": 3, "men": [[[1], [2, 3]], …], "women": […]}`, tiers
//! best-first, each tier ascending. Matching: `{"pairs": [[1, 2], …]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::ModelError;
use crate::instance::Instance;
use crate::matching::{AgentSet, Matching};
use crate::report::SolveReport;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("index 0 found; files use 1-based indices")]
    ZeroIndex,
    #[error("declared n = {declared} but {found} lists given")]
    DeclaredSize { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub n: usize,
    pub men: Vec<Vec<Vec<usize>>>,
    pub women: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingDoc {
    pub pairs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgentSetDoc {
    pub men: Vec<usize>,
    pub women: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReportDoc {
    pub schema: u32,
    pub algorithm: String,
    pub matching: MatchingDoc,
    pub super_blocking_pairs: Vec<[usize; 2]>,
    pub obvious_blocking_pairs: Vec<[usize; 2]>,
    pub deleted_agents: Option<AgentSetDoc>,
    pub witness_completion: InstanceDoc,
}

fn to_one_based(tiers: &[Vec<usize>]) -> Vec<Vec<usize>> {
    tiers.iter().map(|t| t.iter().map(|a| a + 1).collect()).collect()
}

fn to_zero_based(lists: Vec<Vec<Vec<usize>>>) -> Result<Vec<Vec<Vec<usize>>>, FormatError> {
    lists
        .into_iter()
        .map(|tiers| {
            tiers
                .into_iter()
                .map(|t| t.into_iter().map(|a| a.checked_sub(1).ok_or(FormatError::ZeroIndex)).collect())
                .collect()
        })
        .collect()
}

pub fn pairs_doc(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(m, w)| [m + 1, w + 1]).collect()
}

impl From<&Instance> for InstanceDoc {
    fn from(inst: &Instance) -> Self {
        InstanceDoc {
            n: inst.n(),
            men: inst.men().iter().map(|l| to_one_based(l.tiers())).collect(),
            women: inst.women().iter().map(|l| to_one_based(l.tiers())).collect(),
        }
    }
}

impl InstanceDoc {
    pub fn into_instance(self) -> Result<Instance, FormatError> {
        for found in [self.men.len(), self.women.len()] {
            if found != self.n {
                return Err(FormatError::DeclaredSize { declared: self.n, found });
            }
        }
        Ok(Instance::from_tiers(to_zero_based(self.men)?, to_zero_based(self.women)?)?)
    }
}

impl From<&Matching> for MatchingDoc {
    fn from(m: &Matching) -> Self {
        MatchingDoc { pairs: pairs_doc(&m.pairs()) }
    }
}

impl MatchingDoc {
    pub fn into_matching(self, n: usize) -> Result<Matching, FormatError> {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for [m, w] in self.pairs {
            let (m, w) = (m.checked_sub(1).ok_or(FormatError::ZeroIndex)?, w.checked_sub(1).ok_or(FormatError::ZeroIndex)?);
            pairs.push((m, w));
        }
        Ok(Matching::from_pairs(n, pairs)?)
    }
}

impl From<&AgentSet> for AgentSetDoc {
    fn from(s: &AgentSet) -> Self {
        AgentSetDoc { men: s.men.iter().map(|a| a + 1).collect(), women: s.women.iter().map(|a| a + 1).collect() }
    }
}

impl From<&SolveReport> for SolveReportDoc {
    fn from(r: &SolveReport) -> Self {
        SolveReportDoc {
            schema: REPORT_SCHEMA,
            algorithm: r.algorithm.clone(),
            matching: MatchingDoc::from(&r.matching),
            super_blocking_pairs: pairs_doc(&r.super_blocking_pairs),
            obvious_blocking_pairs: pairs_doc(&r.obvious_blocking_pairs),
            deleted_agents: r.deleted_agents.as_ref().map(AgentSetDoc::from),
            witness_completion: InstanceDoc::from(r.witness_completion.instance()),
        }
    }
}

pub fn parse_instance(json: &str) -> Result<Instance, FormatError> {
    serde_json::from_str::<InstanceDoc>(json)?.into_instance()
}

pub fn parse_matching(json: &str, n: usize) -> Result<Matching, FormatError> {
    serde_json::from_str::<MatchingDoc>(json)?.into_matching(n)
}

pub fn instance_to_json(inst: &Instance) -> String {
    serde_json::to_string(&InstanceDoc::from(inst)).expect("serializable")
}

pub fn matching_to_json(m: &Matching) -> String {
    serde_json::to_string(&MatchingDoc::from(m)).expect("serializable")
}

pub fn report_to_json(r: &SolveReport) -> String {
    serde_json::to_string(&SolveReportDoc::from(r)).expect("serializable")
}
