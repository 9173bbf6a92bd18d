use crate::instance::{Instance, Side};
use crate::matching::Matching;
use crate::solvers::WorkingInstance;

/// A super-stable matching of `inst`, or `None` if there is none.
///
/// Men propose to their whole head tier at once. A woman receiving a
/// proposal drops everyone strictly worse than the proposer; a woman holding
/// several engagements drops all of them together with her whole tail tier.
/// This repeats until nothing changes; a super-stable matching exists iff
/// the surviving engagements pair everybody off.
pub fn super_stable_solve(inst: &Instance) -> Option<Matching> {
    let n = inst.n();
    let mut work = WorkingInstance::new(inst);
    let mut engaged = vec![vec![false; n]; n];

    loop {
        while let Some(m) =
            (0..n).find(|&m| !engaged[m].iter().any(|&e| e) && work.list_len(Side::Men, m) > 0)
        {
            for w in work.head_tier(Side::Men, m) {
                engaged[m][w] = true;
                for worse in work.list(Side::Women, w) {
                    if work.prefers(Side::Women, w, m, worse) {
                        work.delete_pair(worse, w);
                        engaged[worse][w] = false;
                    }
                }
            }
        }
        let mut changed = false;
        for w in 0..n {
            if (0..n).filter(|&m| engaged[m][w]).count() > 1 {
                for row in engaged.iter_mut() {
                    row[w] = false;
                }
                for m in work.tail_tier(Side::Women, w) {
                    work.delete_pair(m, w);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut matching = Matching::empty(n);
    for (m, row) in engaged.iter().enumerate() {
        let mut ws = row.iter().enumerate().filter(|(_, &e)| e).map(|(w, _)| w);
        match (ws.next(), ws.next()) {
            (Some(w), None) => matching.insert(m, w).ok()?,
            _ => return None,
        }
    }
    debug_assert!(crate::stability::is_super_stable(inst, &matching));
    Some(matching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::TierList;
    use crate::stability::is_super_stable;

    #[test]
    fn strict_instance_gives_man_optimal() {
        // m1: w1 w2, m2: w2 w1; w1: m2 m1, w2: m1 m2. Man-optimal is identity.
        let inst = Instance::strict(&[vec![0, 1], vec![1, 0]], &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(super_stable_solve(&inst), Some(Matching::identity(2)));
    }

    #[test]
    fn fully_tied_has_none() {
        let inst = Instance::new(vec![TierList::indifferent(2); 2], vec![TierList::indifferent(2); 2]).unwrap();
        assert_eq!(super_stable_solve(&inst), None);
    }

    #[test]
    fn one_tied_man() {
        // m1 ties both women; m2: w1 w2; both women: m2 m1.
        let inst = Instance::strict(&[vec![0, 1], vec![0, 1]], &[vec![1, 0], vec![1, 0]])
            .unwrap()
            .with_list(Side::Men, 0, TierList::indifferent(2))
            .unwrap();
        let m = super_stable_solve(&inst).expect("m2-w1, m1-w2 is super-stable");
        assert!(is_super_stable(&inst, &m));
        assert_eq!(m.pairs(), vec![(0, 1), (1, 0)]);
    }
}
