//! Instance families: the adversarial constructions, the vertex-cover
//! gadget and a seeded random generator.
//!
//! Constructions are written with 1-based agent labels (`m1`, `w1`, …) to
//! keep them readable next to their definitions; the resulting instances are
//! 0-based like everything else.

mod builder;
pub mod fig1;
pub mod fig3;
pub mod fig4;
pub mod graph;
pub mod random;
pub mod vc;

use thiserror::Error;

use crate::instance::Delta;

pub use fig1::{gen_fig1, Fig1Params};
pub use fig3::{gen_fig3, Fig3Params};
pub use fig4::gen_fig4;
pub use graph::UndirectedGraph;
pub use random::{gen_random, gen_random_top_truncated};
pub use vc::{build_yes_matching, gen_vc_reduction, ReductionCertificate, VCParams};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invalid vertex cover: {0}")]
    Cover(String),
}

/// How the women of the later blocks list their tied men in the
/// block-cascade families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBlockMode {
    /// Each woman ties the other men of her own block.
    #[default]
    OwnBlock,
    /// Every block's women tie the men of the first block, as drawn. Men
    /// already placed earlier in the list keep their first position.
    FirstBlock,
}

/// Block parameters shared by the two block-cascade families: `y` men per
/// block and `z` blocks filling the upper half.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockParams {
    pub n: usize,
    pub delta: Delta,
    pub y: usize,
    pub z: usize,
}

impl BlockParams {
    /// `y = n·√δ / 2` and `z = n / 2y`, both required to be integers, with
    /// `16/n² ≤ δ ≤ 1/4`.
    pub fn new(n: usize, delta: Delta) -> Result<Self, GenError> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(GenError::Parameter(format!("n must be even and at least 4, got {n}")));
        }
        let nn = (n * n) as u64;
        if delta < Delta::new(16, nn) || delta > Delta::new(1, 4) {
            return Err(GenError::Parameter(format!("delta {delta} outside [16/{nn}, 1/4]")));
        }
        let y_sq = delta * Delta::from_integer(nn) / Delta::from_integer(4);
        let y = if y_sq.is_integer() { integer_sqrt(*y_sq.numer()) } else { None };
        let Some(y) = y else {
            return Err(GenError::Parameter(format!("y = n·sqrt(delta)/2 is not an integer for n = {n}, delta = {delta}")));
        };
        let y = y as usize;
        if !n.is_multiple_of(2 * y) {
            return Err(GenError::Parameter(format!("z = n/(2y) = {n}/{} is not an integer", 2 * y)));
        }
        Ok(BlockParams { n, delta, y, z: n / (2 * y) })
    }

    /// 1-based members of block `j` in `1..=z`.
    pub fn block(&self, j: usize) -> std::ops::RangeInclusive<usize> {
        let start = self.n / 2 + (j - 1) * self.y + 1;
        start..=start + self.y - 1
    }

    /// The block containing 1-based agent `k` from the upper half.
    pub fn block_of(&self, k: usize) -> usize {
        (k - self.n / 2 - 1) / self.y + 1
    }
}

fn integer_sqrt(v: u64) -> Option<u64> {
    let r = (v as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|c| c * c == v)
}

/// Outcome of a generator's self-verification. Failing checks are reported,
/// not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheck {
    pub delta: Delta,
    pub checks: Vec<(String, bool)>,
}

impl SelfCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub(crate) fn push(&mut self, what: impl Into<String>, ok: bool) {
        self.checks.push((what.into(), ok));
    }
}
