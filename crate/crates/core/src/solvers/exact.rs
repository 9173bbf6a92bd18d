use crate::instance::{Instance, TierList};
use crate::report::SolveReport;
use crate::solvers::super_stable_solve;

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ExactOutcome {
    /// An optimal matching, found at depth `super_bp_count()`.
    Found(SolveReport),
    /// No matching with at most `k_max` super-blocking pairs.
    Exhausted { k_max: usize },
}

impl ExactOutcome {
    pub fn report(&self) -> Option<&SolveReport> {
        match self {
            ExactOutcome::Found(r) => Some(r),
            ExactOutcome::Exhausted { .. } => None,
        }
    }
}

/// Moves, for every `(m, w)` in `pairs`, `w` to a bottom tier of `m`'s list
/// and `m` to a bottom tier of `w`'s list. An agent named in several pairs
/// gets all its partners in one shared bottom tier; the rest of its list is
/// kept as it was.
pub fn demote_pairs(inst: &Instance, pairs: &[(usize, usize)]) -> Instance {
    let n = inst.n();
    let mut men_demoted = vec![Vec::new(); n];
    let mut women_demoted = vec![Vec::new(); n];
    for &(m, w) in pairs {
        men_demoted[m].push(w);
        women_demoted[w].push(m);
    }
    let rebuild = |list: &TierList, demoted: &[usize]| -> TierList {
        if demoted.is_empty() {
            return list.clone();
        }
        let mut tiers: Vec<Vec<usize>> = list
            .tiers()
            .iter()
            .map(|t| t.iter().copied().filter(|a| !demoted.contains(a)).collect::<Vec<_>>())
            .filter(|t| !t.is_empty())
            .collect();
        tiers.push(demoted.to_vec());
        TierList::new(tiers, n).expect("demotion keeps a partition")
    };
    let men = (0..n).map(|m| rebuild(inst.man(m), &men_demoted[m])).collect();
    let women = (0..n).map(|w| rebuild(inst.woman(w), &women_demoted[w])).collect();
    Instance::new(men, women).expect("same shape as source")
}

/// Advances `idx` to the next `k`-combination of `0..universe` in
/// lexicographic order.
fn next_combination(idx: &mut [usize], universe: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < universe - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum number of super-blocking pairs, if at most `k_max`.
///
/// For each depth `j` the `j`-subsets `B` of all `n²` pairs are tried in
/// lexicographic order of pair index `m·n + w`. Demoting `B` and finding a
/// super-stable matching of the result gives a matching whose
/// super-blocking pairs lie inside `B`; conversely an optimal matching is
/// super-stable once its own blocking pairs are demoted. The first success
/// is therefore optimal. `k_max` is capped at `n²`.
pub fn exact_min_super_bp(inst: &Instance, k_max: usize) -> ExactOutcome {
    let n = inst.n();
    let universe = n * n;
    let k_max = k_max.min(universe);
    for j in 0..=k_max {
        let mut idx: Vec<usize> = (0..j).collect();
        loop {
            let pairs: Vec<(usize, usize)> = idx.iter().map(|&p| (p / n, p % n)).collect();
            if let Some(m) = super_stable_solve(&demote_pairs(inst, &pairs)) {
                let report = SolveReport::evaluate(inst, m, "exact", None);
                debug_assert!(report.super_bp_count() <= j);
                return ExactOutcome::Found(report);
            }
            if !next_combination(&mut idx, universe) {
                break;
            }
        }
    }
    ExactOutcome::Exhausted { k_max }
}
