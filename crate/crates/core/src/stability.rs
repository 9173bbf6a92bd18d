//! Blocking-pair predicates and counters.
//!
//! An unmatched agent strictly prefers every agent of the other side to
//! being alone, so it is willing to block with anyone.

use crate::error::ModelError;
use crate::instance::{Instance, TierList};
use crate::matching::Matching;

fn strictly_better(list: &TierList, candidate: usize, partner: Option<usize>) -> bool {
    partner.is_none_or(|p| list.prefers(candidate, p))
}

fn weakly_better(list: &TierList, candidate: usize, partner: Option<usize>) -> bool {
    partner.is_none_or(|p| list.weakly_prefers(candidate, p))
}

fn check(inst: &Instance, m: &Matching, man: usize, woman: usize) -> Result<(), ModelError> {
    let n = inst.n();
    if m.n() != n {
        return Err(ModelError::SizeMismatch { expected: n, found: m.n() });
    }
    for idx in [man, woman] {
        if idx >= n {
            return Err(ModelError::IndexOutOfRange { index: idx, n });
        }
    }
    Ok(())
}

fn assert_sizes(inst: &Instance, m: &Matching) {
    assert_eq!(m.n(), inst.n(), "matching and instance sizes differ");
}

pub(crate) fn obvious_unchecked(inst: &Instance, m: &Matching, man: usize, woman: usize) -> bool {
    strictly_better(inst.man(man), woman, m.man_partner(man))
        && strictly_better(inst.woman(woman), man, m.woman_partner(woman))
}

pub(crate) fn super_unchecked(inst: &Instance, m: &Matching, man: usize, woman: usize) -> bool {
    !m.contains(man, woman)
        && weakly_better(inst.man(man), woman, m.man_partner(man))
        && weakly_better(inst.woman(woman), man, m.woman_partner(woman))
}

/// `woman ≻_man M(man)` and `man ≻_woman M(woman)`.
pub fn is_obvious_blocking_pair(inst: &Instance, m: &Matching, man: usize, woman: usize) -> Result<bool, ModelError> {
    check(inst, m, man, woman)?;
    Ok(obvious_unchecked(inst, m, man, woman))
}

/// `woman ⪰_man M(man)` and `man ⪰_woman M(woman)` for an unmatched pair.
pub fn is_super_blocking_pair(inst: &Instance, m: &Matching, man: usize, woman: usize) -> Result<bool, ModelError> {
    check(inst, m, man, woman)?;
    Ok(super_unchecked(inst, m, man, woman))
}

/// Every super-blocking pair, man-major.
///
/// # Panics
/// If the matching and instance disagree on `n`.
pub fn super_blocking_pairs(inst: &Instance, m: &Matching) -> Vec<(usize, usize)> {
    assert_sizes(inst, m);
    let n = inst.n();
    let mut out = Vec::new();
    for man in 0..n {
        for woman in 0..n {
            if super_unchecked(inst, m, man, woman) {
                out.push((man, woman));
            }
        }
    }
    out
}

pub fn count_super_blocking_pairs(inst: &Instance, m: &Matching) -> usize {
    super_blocking_pairs(inst, m).len()
}

/// Every obvious blocking pair, man-major. On a strict instance these are
/// the ordinary blocking pairs.
pub fn obvious_blocking_pairs(inst: &Instance, m: &Matching) -> Vec<(usize, usize)> {
    assert_sizes(inst, m);
    let n = inst.n();
    let mut out = Vec::new();
    for man in 0..n {
        for woman in 0..n {
            if obvious_unchecked(inst, m, man, woman) {
                out.push((man, woman));
            }
        }
    }
    out
}

pub fn is_weakly_stable(inst: &Instance, m: &Matching) -> bool {
    obvious_blocking_pairs(inst, m).is_empty()
}

pub fn is_super_stable(inst: &Instance, m: &Matching) -> bool {
    assert_sizes(inst, m);
    let n = inst.n();
    (0..n).all(|man| (0..n).all(|woman| !super_unchecked(inst, m, man, woman)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{Side, TierList};

    /// m1, m2: w1 ≻ w2; w1, w2: m1 ≻ m2.
    fn aligned() -> Instance {
        Instance::strict(&[vec![0, 1], vec![0, 1]], &[vec![0, 1], vec![0, 1]]).unwrap()
    }

    #[test]
    fn crossed_matching_has_obvious_blocking_pair() {
        let inst = aligned();
        let m = Matching::from_pairs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(is_obvious_blocking_pair(&inst, &m, 0, 0).unwrap());
        assert!(is_super_blocking_pair(&inst, &m, 0, 0).unwrap());
        assert_eq!(obvious_blocking_pairs(&inst, &m), vec![(0, 0)]);
    }

    #[test]
    fn man_with_top_choice_never_blocks() {
        let inst = aligned();
        let m = Matching::identity(2);
        for w in 0..2 {
            assert!(!is_obvious_blocking_pair(&inst, &m, 0, w).unwrap());
        }
        assert!(is_super_stable(&inst, &m));
    }

    #[test]
    fn tie_on_womans_side_is_not_obvious() {
        // w1 ties m1 and m2; m2 is matched to w2 but prefers w1.
        let inst = aligned().with_list(Side::Women, 0, TierList::indifferent(2)).unwrap();
        let m = Matching::identity(2);
        assert!(!is_obvious_blocking_pair(&inst, &m, 1, 0).unwrap());
        assert!(is_super_blocking_pair(&inst, &m, 1, 0).unwrap());
        assert!(is_weakly_stable(&inst, &m));
        assert!(!is_super_stable(&inst, &m));
    }

    #[test]
    fn man_tie_woman_strict_is_super_blocking() {
        // m2 ties w1, w2 and is matched to w2; w1 strictly prefers m2 to m1.
        let inst = Instance::from_tiers(
            vec![vec![vec![0], vec![1]], vec![vec![0, 1]]],
            vec![vec![vec![1], vec![0]], vec![vec![0], vec![1]]],
        )
        .unwrap();
        let m = Matching::identity(2);
        assert!(is_super_blocking_pair(&inst, &m, 1, 0).unwrap());
        assert!(!is_obvious_blocking_pair(&inst, &m, 1, 0).unwrap());
    }

    #[test]
    fn matched_pair_never_blocks() {
        let inst = Instance::from_tiers(vec![vec![vec![0, 1]]; 2], vec![vec![vec![0, 1]]; 2]).unwrap();
        let m = Matching::identity(2);
        assert!(!is_super_blocking_pair(&inst, &m, 0, 0).unwrap());
        assert!(is_super_blocking_pair(&inst, &m, 0, 1).unwrap());
    }

    #[test]
    fn unmatched_agents_block_with_anyone_willing() {
        let inst = aligned();
        let m = Matching::from_pairs(2, [(0, 0)]).unwrap();
        assert_eq!(super_blocking_pairs(&inst, &m), vec![(1, 1)]);
    }

    #[test]
    fn out_of_range_is_an_error() {
        let inst = aligned();
        assert!(is_super_blocking_pair(&inst, &Matching::identity(2), 2, 0).is_err());
        assert!(is_super_blocking_pair(&inst, &Matching::identity(3), 0, 0).is_err());
    }
}
