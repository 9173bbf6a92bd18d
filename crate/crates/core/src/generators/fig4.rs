//! Ties only at the bottom of the women's lists, together with a weakly
//! stable matching that rotates every block and so collects many
//! super-blocking pairs.

use crate::generators::builder::ListBuilder;
use crate::generators::fig1::Fig1Params;
use crate::generators::SelfCheck;
use crate::generators::TieBlockMode;
use crate::instance::Instance;
use crate::matching::Matching;
use crate::stability::{is_weakly_stable, super_blocking_pairs};

/// The instance and the rotated matching. Parameters are those of the
/// top-tie family.
pub fn gen_fig4(p: &Fig1Params) -> (Instance, Matching) {
    let bp = &p.blocks;
    let n = bp.n;
    let half = n / 2;
    let f_minus = |ex: &[usize]| (1..=half).filter(move |i| !ex.contains(i)).collect::<Vec<_>>();
    let upper = half + 1..=n;

    let mut men = Vec::with_capacity(n);
    men.push(ListBuilder::new(n).one(1).seq(f_minus(&[1])).seq(upper.clone()).finish());
    men.push(ListBuilder::new(n).one(1).one(2).finish());
    for i in 3..=half {
        men.push(ListBuilder::new(n).one(2).one(i).seq(f_minus(&[2, i])).seq(upper.clone()).finish());
    }
    for k in upper.clone() {
        let own = bp.block(bp.block_of(k));
        men.push(
            ListBuilder::new(n)
                .one(1)
                .seq(own.clone().filter(|&i| i != k))
                .one(k)
                .seq(upper.clone().filter(|i| !own.contains(i)))
                .seq(f_minus(&[1]))
                .finish(),
        );
    }

    let mut women = Vec::with_capacity(n);
    women.push(ListBuilder::new(n).one(2).one(1).finish());
    women.push(ListBuilder::new(n).one(2).one(1).finish());
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
                .seq(upper.clone().filter(|i| !tied.contains(i)))
                .one(1)
                .one(k)
                .seq(f_minus(&[1]))
                .tie(tied.clone().filter(|&i| i != k))
                .finish(),
        );
    }
    let inst = Instance::new(men, women).expect("well-formed lists");

    let mut assignment: Vec<usize> = (0..n).collect();
    assignment[0] = 1;
    assignment[1] = 0;
    for j in 1..=bp.z {
        let block: Vec<usize> = bp.block(j).collect();
        for (i, &k) in block.iter().enumerate() {
            assignment[k - 1] = block[(i + 1) % block.len()] - 1;
        }
    }
    (inst, Matching::from_assignment(&assignment).expect("permutation"))
}

/// Checks `δ`, the tie placement, that the rotated matching is weakly
/// stable, and that the identity has `(m2, w1)` as its only super-blocking
/// pair.
pub fn self_check(p: &Fig1Params, inst: &Instance, rotated: &Matching) -> SelfCheck {
    let mut c = SelfCheck { delta: inst.delta(), checks: Vec::new() };
    c.push(format!("delta {} <= {}", inst.delta(), p.blocks.delta), inst.delta() <= p.blocks.delta);
    c.push("one-sided top-truncated", inst.is_one_sided_top_truncated());
    c.push("rotated matching is weakly stable", is_weakly_stable(inst, rotated));
    let sbp = super_blocking_pairs(inst, &Matching::identity(inst.n()));
    c.push("identity has only (m2, w1) as super-blocking pair", sbp == vec![(1, 0)]);
    c
}
