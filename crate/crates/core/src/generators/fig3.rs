//! One woman with a bottom tie of `y` men. Every weakly stable matching
//! leaves `y − 2` of them blocking with her.

use crate::generators::builder::ListBuilder;
use crate::generators::{GenError, SelfCheck};
use crate::instance::{Delta, Instance};
use crate::matching::Matching;
use crate::stability::super_blocking_pairs;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fig3Params {
    pub n: usize,
    pub delta: Delta,
    pub y: usize,
}

impl Fig3Params {
    /// `y = min(⌊2·n^{3/2}·√δ⌋, n)`, computed exactly as `⌊√(4n³δ)⌋`.
    /// Requires `δ ≤ 1/(2n)` and `2 ≤ y ≤ n − 1`.
    pub fn new(n: usize, delta: Delta) -> Result<Self, GenError> {
        if n < 3 {
            return Err(GenError::Parameter(format!("n must be at least 3, got {n}")));
        }
        if delta > Delta::new(1, 2 * n as u64) {
            return Err(GenError::Parameter(format!("delta {delta} exceeds 1/(2n) = 1/{}", 2 * n)));
        }
        let scaled = delta * Delta::from_integer(4 * (n as u64).pow(3));
        let floor = scaled.to_integer();
        let mut y = (floor as f64).sqrt() as u64;
        while y * y > floor {
            y -= 1;
        }
        while (y + 1) * (y + 1) <= floor {
            y += 1;
        }
        let y = (y as usize).min(n);
        if y < 2 || y >= n {
            return Err(GenError::Parameter(format!("y = {y} must satisfy 2 <= y < n = {n}")));
        }
        Ok(Fig3Params { n, delta, y })
    }
}

pub fn gen_fig3(p: &Fig3Params) -> Instance {
    let (n, y) = (p.n, p.y);
    let cut = n - y;
    let mut men = Vec::with_capacity(n);
    for i in 1..=cut + 1 {
        men.push(ListBuilder::new(n).one(i + 1).one(1).one(i).finish());
    }
    for j in cut + 2..=n {
        let third = if j == cut + 2 { 2 } else { j };
        men.push(ListBuilder::new(n).one(cut + 2).one(1).one(third).finish());
    }
    let mut women = Vec::with_capacity(n);
    women.push(ListBuilder::new(n).seq(1..=cut).tie(cut + 1..=n).finish());
    for i in 1..=cut {
        women.push(ListBuilder::new(n).one(i).finish());
    }
    women.push(ListBuilder::new(n).one(cut + 1).one(cut + 2).finish());
    for j in cut + 3..=n {
        women.push(ListBuilder::new(n).one(j).finish());
    }
    Instance::new(men, women).expect("well-formed lists")
}

/// `{(m1, w1), (m_i, w_{i+1}) for 2 ≤ i ≤ n−y+1, (m_{n−y+2}, w2)}` and the
/// identity on the remaining agents.
pub fn optimal_matching(p: &Fig3Params) -> Matching {
    let (n, y) = (p.n, p.y);
    let mut assignment: Vec<usize> = (0..n).collect();
    for i in 2..=n - y + 1 {
        assignment[i - 1] = i;
    }
    assignment[n - y + 1] = 1;
    Matching::from_assignment(&assignment).expect("permutation")
}

/// Top-truncation and the optimal matching having `(m1, w2)` as its only
/// super-blocking pair. The `δ` entry is informational.
pub fn self_check(p: &Fig3Params, inst: &Instance) -> SelfCheck {
    let mut c = SelfCheck { delta: inst.delta(), checks: Vec::new() };
    c.push("one-sided top-truncated", inst.is_one_sided_top_truncated());
    let sbp = super_blocking_pairs(inst, &optimal_matching(p));
    c.push("optimal matching has only (m1, w2) as super-blocking pair", sbp == vec![(0, 1)]);
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_from_delta() {
        assert_eq!(Fig3Params::new(16, Delta::new(1, 256)).unwrap().y, 8);
        assert!(Fig3Params::new(16, Delta::new(1, 16)).is_err());
        assert!(Fig3Params::new(16, Delta::new(1, 100_000)).is_err());
    }

    #[test]
    fn construction_checks_out() {
        let p = Fig3Params::new(16, Delta::new(1, 256)).unwrap();
        let inst = gen_fig3(&p);
        assert!(self_check(&p, &inst).passed(), "{:?}", self_check(&p, &inst));
        assert_eq!(inst.woman(0).tiers().last().unwrap(), &(8..16).collect::<Vec<_>>());
    }
}
