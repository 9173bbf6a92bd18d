use std::collections::VecDeque;

use crate::completion::{complete, Completion, TieBreak};
use crate::instance::Instance;
use crate::matching::Matching;
use crate::report::SolveReport;

/// Man-proposing deferred acceptance on strict lists. Free men are served
/// in ascending index order.
pub fn deferred_acceptance(c: &Completion) -> Matching {
    let inst = c.instance();
    let n = inst.n();
    let orders: Vec<Vec<usize>> = inst.men().iter().map(|l| l.flatten()).collect();
    let mut next = vec![0usize; n];
    let mut held: Vec<Option<usize>> = vec![None; n];
    let mut free: VecDeque<usize> = (0..n).collect();
    while let Some(m) = free.pop_front() {
        let w = orders[m][next[m]];
        next[m] += 1;
        match held[w] {
            None => held[w] = Some(m),
            Some(cur) if inst.woman(w).prefers(m, cur) => {
                held[w] = Some(m);
                free.push_back(cur);
            }
            Some(_) => free.push_front(m),
        }
    }
    Matching::from_pairs(n, held.iter().enumerate().filter_map(|(w, m)| m.map(|m| (m, w))))
        .expect("deferred acceptance yields a matching")
}

/// Breaks ties by `policy`, runs deferred acceptance and scores the result
/// against the original instance.
pub fn gale_shapley_completion(inst: &Instance, policy: TieBreak) -> SolveReport {
    let c = complete(inst, policy);
    let matching = deferred_acceptance(&c);
    SolveReport::evaluate(inst, matching, "gs", None)
}
