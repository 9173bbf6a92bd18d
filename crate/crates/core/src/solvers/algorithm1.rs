//! Deletion-set approximation for instances whose men are strict and whose
//! women tie only at the bottom of their lists.

use std::collections::VecDeque;

use crate::instance::{Instance, Side};
use crate::matching::{AgentSet, Matching};
use crate::report::SolveReport;
use crate::solvers::{min_vertex_cover_bipartite, SolveError, WorkingInstance};
use crate::stability::super_blocking_pairs;

/// `(m_1, w_1), …, (m_r, w_r)` with `w_i` first and `w_{i+1}` second on
/// `m_i`'s list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation(pub Vec<(usize, usize)>);

/// Pipeline stage reported to an observer after it has run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Start,
    Propose(Side),
    Eliminate(Rotation),
}

fn degenerate(side: Side, a: usize) -> SolveError {
    SolveError::DegenerateInstance(format!("list of {} became empty", side.label(a)))
}

/// One proposal phase with `side` proposing, followed by the sweep that
/// removes every tie left at a man's current first choice.
///
/// Free agents are queued in ascending order. A proposal to someone already
/// holding an incomparable partner is simply deleted and the proposer tries
/// again at once; otherwise the receiver trades up and cuts everyone below
/// the proposer. Women may only propose once their lists are tie-free.
pub fn propose_with(mut work: WorkingInstance, side: Side) -> Result<WorkingInstance, SolveError> {
    let n = work.n();
    let other = side.other();
    if side == Side::Women && work.has_ties(Side::Women) {
        return Err(SolveError::Precondition("women propose only after their ties are removed".into()));
    }
    let mut holds: Vec<Option<usize>> = vec![None; n];
    let mut free: VecDeque<usize> = (0..n).collect();
    while let Some(a) = free.pop_front() {
        let b = work.first(side, a).ok_or_else(|| degenerate(side, a))?;
        match holds[b] {
            Some(p) if work.incomparable(other, b, p, a) => {
                work.delete(side, a, b);
                free.push_front(a);
            }
            held => {
                if let Some(p) = held {
                    free.push_back(p);
                }
                holds[b] = Some(a);
                for c in work.list(other, b) {
                    if work.prefers(other, b, a, c) {
                        work.delete(other, b, c);
                    }
                }
            }
        }
    }
    for m in 0..n {
        let w = work.first(Side::Men, m).ok_or_else(|| degenerate(Side::Men, m))?;
        for m2 in work.list(Side::Women, w) {
            if work.incomparable(Side::Women, w, m, m2) {
                work.delete_pair(m2, w);
            }
        }
    }
    for s in [Side::Men, Side::Women] {
        if let Some(a) = (0..n).find(|&a| work.list_len(s, a) == 0) {
            return Err(degenerate(s, a));
        }
    }
    Ok(work)
}

/// Starting from the lowest-index man with two or more entries, follows
/// `m → second(m) → last man on her list` until a man repeats and returns
/// the cycle. `None` iff every man's list is a singleton.
pub fn find_exposed_rotation(work: &WorkingInstance) -> Result<Option<Rotation>, SolveError> {
    let n = work.n();
    if work.has_ties(Side::Men) || work.has_ties(Side::Women) {
        return Err(SolveError::Precondition("rotations are only defined once all ties are gone".into()));
    }
    for s in [Side::Men, Side::Women] {
        if let Some(a) = (0..n).find(|&a| work.list_len(s, a) == 0) {
            return Err(degenerate(s, a));
        }
    }
    let Some(start) = (0..n).find(|&m| work.list_len(Side::Men, m) >= 2) else {
        return Ok(None);
    };
    let mut seen_at = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut m = start;
    while seen_at[m] == usize::MAX {
        seen_at[m] = path.len();
        path.push(m);
        let w = work
            .second(Side::Men, m)
            .ok_or_else(|| SolveError::DegenerateInstance(format!("{} has no second entry", Side::Men.label(m))))?;
        m = work.last(Side::Women, w).expect("w is on m's list, so her list is non-empty");
    }
    let cycle = &path[seen_at[m]..];
    let pairs: Vec<(usize, usize)> = cycle.iter().map(|&m| (m, work.first(Side::Men, m).expect("non-empty"))).collect();
    for i in 0..pairs.len() {
        let (m, _) = pairs[i];
        let (_, w_next) = pairs[(i + 1) % pairs.len()];
        if work.second(Side::Men, m) != Some(w_next) {
            return Err(SolveError::DegenerateInstance(format!(
                "cycle through {} is not an exposed rotation",
                Side::Men.label(m)
            )));
        }
    }
    Ok(Some(Rotation(pairs)))
}

/// Deletes every `(m_i, w_i)` of the rotation.
pub fn eliminate_rotation(work: &mut WorkingInstance, rotation: &Rotation) {
    for &(m, w) in &rotation.0 {
        work.delete_pair(m, w);
    }
}

/// Runs the full pipeline. The returned report lists the deletion set `D`
/// in `deleted_agents`.
pub fn algorithm1(inst: &Instance) -> Result<SolveReport, SolveError> {
    algorithm1_observed(inst, |_, _| {})
}

/// As [`algorithm1`], calling `observe` after every stage.
pub fn algorithm1_observed(
    inst: &Instance,
    mut observe: impl FnMut(&Step, &WorkingInstance),
) -> Result<SolveReport, SolveError> {
    if !inst.is_one_sided_top_truncated() {
        return Err(SolveError::NotTopTruncated);
    }
    let n = inst.n();
    let mut work = WorkingInstance::new(inst);
    observe(&Step::Start, &work);
    work = both_phases(work, &mut observe)?;
    while let Some(rotation) = find_exposed_rotation(&work)? {
        eliminate_rotation(&mut work, &rotation);
        observe(&Step::Eliminate(rotation), &work);
        work = both_phases(work, &mut observe)?;
    }

    let mut matching = Matching::empty(n);
    for m in 0..n {
        let list = work.list(Side::Men, m);
        let [w] = list[..] else {
            return Err(SolveError::DegenerateInstance(format!("{} ends with {} entries", Side::Men.label(m), list.len())));
        };
        if work.list(Side::Women, w) != [m] {
            return Err(SolveError::DegenerateInstance(format!("{} ends with an inconsistent list", Side::Women.label(w))));
        }
        matching.insert(m, w)?;
    }

    let edges = super_blocking_pairs(inst, &matching);
    let cover = min_vertex_cover_bipartite(n, n, &edges);
    let mut deleted = AgentSet::new();
    for &m in &cover.left {
        deleted.insert(Side::Men, m);
        deleted.insert(Side::Women, matching.man_partner(m).expect("perfect"));
    }
    for &w in &cover.right {
        deleted.insert(Side::Women, w);
        deleted.insert(Side::Men, matching.woman_partner(w).expect("perfect"));
    }
    Ok(SolveReport::evaluate(inst, matching, "algo1", Some(deleted)))
}

fn both_phases(
    mut work: WorkingInstance,
    observe: &mut impl FnMut(&Step, &WorkingInstance),
) -> Result<WorkingInstance, SolveError> {
    for side in [Side::Men, Side::Women] {
        work = propose_with(work, side)?;
        observe(&Step::Propose(side), &work);
    }
    Ok(work)
}
