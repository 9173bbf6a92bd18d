//! Exhaustive reference implementations for small instances. They refuse
//! work beyond their budget instead of truncating.

use thiserror::Error;

use crate::completion::Completion;
use crate::instance::{Instance, TierList};
use crate::matching::{AgentSet, Matching};
use crate::solvers::{super_stable_solve, WorkingInstance};
use crate::stability::{count_super_blocking_pairs, super_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_agents: usize,
    pub max_completions: u128,
    pub max_matchings: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_agents: 5, max_completions: 1_000_000, max_matchings: 100_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget exceeded: {what} is {needed}, limit {limit}")]
    BudgetExceeded { what: &'static str, needed: u128, limit: u128 },
}

impl OracleBudget {
    fn check(&self, what: &'static str, needed: u128, limit: u128) -> Result<(), OracleError> {
        if needed > limit {
            return Err(OracleError::BudgetExceeded { what, needed, limit });
        }
        Ok(())
    }

    fn check_agents(&self, inst: &Instance) -> Result<(), OracleError> {
        self.check("agents per side", inst.n() as u128, self.max_agents as u128)
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Rearranges `v` into the next permutation in lexicographic order.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("v[i + 1] qualifies");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(out)
    })
}

/// Number of completions, `Π_agents Π_tiers |tier|!`, saturating.
pub fn count_completions(inst: &Instance) -> u128 {
    inst.men()
        .iter()
        .chain(inst.women())
        .flat_map(|l| l.tiers())
        .fold(1u128, |acc, t| acc.saturating_mul(factorial(t.len())))
}

/// Linear extensions of one list: tiers permuted lexicographically, the
/// last tier varying fastest.
fn extensions(list: &TierList) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for tier in list.tiers() {
        let mut next = Vec::new();
        for prefix in &out {
            let mut perm = tier.clone();
            loop {
                let mut ext = prefix.clone();
                ext.extend(&perm);
                next.push(ext);
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        out = next;
    }
    out
}

/// Every completion of `inst`, men's lists before women's and the last
/// agent varying fastest.
pub fn enumerate_completions(
    inst: &Instance,
    budget: &OracleBudget,
) -> Result<impl Iterator<Item = Completion>, OracleError> {
    budget.check("number of completions", count_completions(inst), budget.max_completions)?;
    let n = inst.n();
    let per_agent: Vec<Vec<TierList>> = inst
        .men()
        .iter()
        .chain(inst.women())
        .map(|l| extensions(l).iter().map(|o| TierList::strict(o).expect("extension is a permutation")).collect())
        .collect();
    let mut odometer: Option<Vec<usize>> = Some(vec![0; per_agent.len()]);
    Ok(std::iter::from_fn(move || {
        let digits = odometer.take()?;
        let lists: Vec<TierList> = digits.iter().enumerate().map(|(a, &d)| per_agent[a][d].clone()).collect();
        let (men, women) = lists.split_at(n);
        let c = Completion::new(Instance::new(men.to_vec(), women.to_vec()).expect("same shape")).expect("strict");
        let mut next = digits;
        for a in (0..next.len()).rev() {
            if next[a] + 1 < per_agent[a].len() {
                next[a] += 1;
                odometer = Some(next);
                break;
            }
            next[a] = 0;
        }
        Some(c)
    }))
}

/// Largest number of blocking pairs `m` has in any completion.
pub fn max_bp_over_completions(inst: &Instance, m: &Matching, budget: &OracleBudget) -> Result<usize, OracleError> {
    Ok(max_bp_over_completions_many(inst, std::slice::from_ref(m), budget)?[0])
}

/// [`max_bp_over_completions`] for several matchings in one sweep.
pub fn max_bp_over_completions_many(
    inst: &Instance,
    matchings: &[Matching],
    budget: &OracleBudget,
) -> Result<Vec<usize>, OracleError> {
    let mut best = vec![0; matchings.len()];
    for c in enumerate_completions(inst, budget)? {
        for (b, m) in best.iter_mut().zip(matchings) {
            *b = (*b).max(c.blocking_pairs(m).len());
        }
    }
    Ok(best)
}

/// Every perfect matching, man `i` paired with `perm[i]`, lexicographic.
pub fn perfect_matchings(n: usize) -> impl Iterator<Item = Matching> {
    permutations(n).map(|p| Matching::from_assignment(&p).expect("permutation"))
}

/// Minimum super-blocking-pair count over all perfect matchings, with the
/// lexicographically least minimiser.
pub fn min_super_bp(inst: &Instance, budget: &OracleBudget) -> Result<(usize, Matching), OracleError> {
    budget.check_agents(inst)?;
    budget.check("number of perfect matchings", factorial(inst.n()), budget.max_matchings)?;
    let mut best: Option<(usize, Matching)> = None;
    for m in perfect_matchings(inst.n()) {
        let c = count_super_blocking_pairs(inst, &m);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, m));
            if c == 0 {
                break;
            }
        }
    }
    Ok(best.expect("at least one perfect matching"))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest balanced agent set whose removal leaves an instance with a
/// super-stable matching. Sizes increase; within a size, men's subsets
/// vary slowest, both in lexicographic order.
pub fn min_delete(inst: &Instance, budget: &OracleBudget) -> Result<AgentSet, OracleError> {
    budget.check_agents(inst)?;
    let n = inst.n();
    for k in 0..=n {
        let subsets = combinations(n, k);
        for men in &subsets {
            for women in &subsets {
                let set = AgentSet { men: men.iter().copied().collect(), women: women.iter().copied().collect() };
                let keep_m = set.complement(crate::instance::Side::Men, n);
                let keep_w = set.complement(crate::instance::Side::Women, n);
                let r = inst.restrict(&keep_m, &keep_w).expect("balanced and in range");
                if super_stable_solve(&r.instance).is_some() {
                    return Ok(set);
                }
            }
        }
    }
    unreachable!("deleting everyone leaves the empty instance, which is super-stable")
}

/// Size of a largest matching using only surviving pairs of `work` that is
/// super-stable on its own matched agents, judged by the source instance.
pub fn max_internally_super_stable(work: &WorkingInstance, budget: &OracleBudget) -> Result<usize, OracleError> {
    let inst = work.source();
    budget.check_agents(inst)?;
    let n = inst.n();
    let mut best = 0;
    let mut m = Matching::empty(n);
    extend(work, 0, &mut m, &mut best);
    return Ok(best);

    fn extend(work: &WorkingInstance, man: usize, m: &mut Matching, best: &mut usize) {
        let n = work.n();
        if m.len() + (n - man) <= *best {
            return;
        }
        if man == n {
            if internally_super_stable(work.source(), m) {
                *best = m.len();
            }
            return;
        }
        for w in 0..n {
            if work.has_pair(man, w) && m.woman_partner(w).is_none() {
                let mut next = m.clone();
                next.insert(man, w).expect("free woman");
                extend(work, man + 1, &mut next, best);
            }
        }
        extend(work, man + 1, m, best);
    }
}

/// No super-blocking pair among agents that `m` matches.
pub fn internally_super_stable(inst: &Instance, m: &Matching) -> bool {
    let n = inst.n();
    (0..n).filter(|&a| m.man_partner(a).is_some()).all(|man| {
        (0..n).filter(|&w| m.woman_partner(w).is_some()).all(|woman| !super_unchecked(inst, m, man, woman))
    })
}
