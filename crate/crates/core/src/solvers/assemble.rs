use crate::instance::{Instance, Side};
use crate::matching::{AgentSet, Matching};
use crate::solvers::SolveError;

/// Extends `partial`, a matching of everyone outside `deleted`, by pairing
/// the deleted men with the deleted women in index order.
pub fn assemble_from_deletion(inst: &Instance, deleted: &AgentSet, partial: &Matching) -> Result<Matching, SolveError> {
    let n = inst.n();
    if !deleted.is_balanced() {
        return Err(SolveError::UnbalancedDeletion { men: deleted.men.len(), women: deleted.women.len() });
    }
    if partial.n() != n {
        return Err(SolveError::InvalidPartial(format!("matching is over {} agents, instance has {n}", partial.n())));
    }
    if let Some(&a) = deleted.men.iter().chain(&deleted.women).find(|&&a| a >= n) {
        return Err(SolveError::InvalidPartial(format!("deleted agent index {} out of range", a + 1)));
    }
    for side in [Side::Men, Side::Women] {
        for a in 0..n {
            let matched = partial.partner(side, a).is_some();
            if matched == deleted.contains(side, a) {
                let why = if matched { "is deleted but matched" } else { "is kept but unmatched" };
                return Err(SolveError::InvalidPartial(format!("{} {why}", side.label(a))));
            }
        }
    }
    let mut out = partial.clone();
    for (&m, &w) in deleted.men.iter().zip(&deleted.women) {
        out.insert(m, w)?;
    }
    Ok(out)
}

/// `(n − d/2)·d/2 + β + d/2·n` super-blocking pairs at most, for a deletion
/// set of size `d` and a residual matching with `β` super-blocking pairs.
pub fn deletion_bound(n: usize, deleted: usize, beta: usize) -> usize {
    let half = deleted / 2;
    (n - half) * half + beta + half * n
}
