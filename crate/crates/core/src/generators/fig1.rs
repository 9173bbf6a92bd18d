//! Ties at the top of the women's lists, arranged so that every weakly
//! stable matching cascades into many super-blocking pairs inside each
//! block while the identity has only one.

use crate::generators::builder::ListBuilder;
use crate::generators::{BlockParams, GenError, SelfCheck, TieBlockMode};
use crate::instance::{Delta, Instance};
use crate::matching::Matching;
use crate::stability::super_blocking_pairs;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fig1Params {
    pub blocks: BlockParams,
    pub mode: TieBlockMode,
}

impl Fig1Params {
    pub fn new(n: usize, delta: Delta) -> Result<Self, GenError> {
        Ok(Fig1Params { blocks: BlockParams::new(n, delta)?, mode: TieBlockMode::OwnBlock })
    }

    pub fn with_mode(self, mode: TieBlockMode) -> Self {
        Fig1Params { mode, ..self }
    }
}

pub fn gen_fig1(p: &Fig1Params) -> Instance {
    let bp = &p.blocks;
    let n = bp.n;
    let half = n / 2;
    let f_minus = |ex: &[usize]| (1..=half).filter(move |i| !ex.contains(i)).collect::<Vec<_>>();
    let upper = half + 1..=n;

    let mut men = Vec::with_capacity(n);
    men.push(ListBuilder::new(n).one(1).seq(upper.clone()).seq(f_minus(&[1])).finish());
    men.push(ListBuilder::new(n).one(1).one(2).finish());
    for i in 3..=half {
        men.push(ListBuilder::new(n).one(2).one(i).seq(f_minus(&[2, i])).seq(upper.clone()).finish());
    }
    for k in upper.clone() {
        let own = bp.block(bp.block_of(k));
        men.push(
            ListBuilder::new(n)
                .one(1)
                .one(k)
                .seq(own.clone())
                .seq(upper.clone().filter(|i| !own.contains(i)))
                .seq(f_minus(&[1]))
                .finish(),
        );
    }

    let mut women = Vec::with_capacity(n);
    women.push(ListBuilder::new(n).one(2).one(1).finish());
    women.push(ListBuilder::new(n).one(2).seq(2..=n).one(1).finish());
    for i in 3..=half {
        women.push(ListBuilder::new(n).one(1).one(i).finish());
    }
    for k in upper.clone() {
        let tied = match p.mode {
            TieBlockMode::OwnBlock => bp.block(bp.block_of(k)),
            TieBlockMode::FirstBlock => bp.block(1),
        };
        women.push(
            ListBuilder::new(n)
                .tie(tied.clone().filter(|&i| i != k))
                .seq(upper.clone().filter(|i| !tied.contains(i)))
                .one(1)
                .one(k)
                .seq(f_minus(&[1]))
                .finish(),
        );
    }
    Instance::new(men, women).expect("well-formed lists")
}

/// Checks the construction's stated properties: `δ` within budget and the
/// identity having `(m2, w1)` as its only super-blocking pair.
pub fn self_check(p: &Fig1Params, inst: &Instance) -> SelfCheck {
    let mut c = SelfCheck { delta: inst.delta(), checks: Vec::new() };
    c.push(format!("delta {} <= {}", inst.delta(), p.blocks.delta), inst.delta() <= p.blocks.delta);
    let sbp = super_blocking_pairs(inst, &Matching::identity(inst.n()));
    c.push("identity has only (m2, w1) as super-blocking pair", sbp == vec![(1, 0)]);
    c
}
