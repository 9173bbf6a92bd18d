//! Linear-order completions and the worst-case witness construction.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::ModelError;
use crate::instance::{Instance, Side, TierList};
use crate::matching::Matching;
use crate::stability::{obvious_blocking_pairs, super_blocking_pairs};

/// An instance in which every agent's list is a strict linear order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Completion(Instance);

impl Completion {
    pub fn new(inst: Instance) -> Result<Self, ModelError> {
        if !inst.is_strict() {
            return Err(ModelError::NotStrict("a completion needs singleton tiers only".into()));
        }
        Ok(Completion(inst))
    }

    pub fn instance(&self) -> &Instance {
        &self.0
    }

    pub fn into_instance(self) -> Instance {
        self.0
    }

    /// Blocking pairs of `m` under these strict orders.
    pub fn blocking_pairs(&self, m: &Matching) -> Vec<(usize, usize)> {
        obvious_blocking_pairs(&self.0, m)
    }

    /// Every strict comparison of `source` is preserved.
    pub fn refines(&self, source: &Instance) -> bool {
        if source.n() != self.0.n() {
            return false;
        }
        let n = source.n();
        [Side::Men, Side::Women].into_iter().all(|side| {
            (0..n).all(|i| {
                let (src, own) = (source.list(side, i), self.0.list(side, i));
                (0..n).all(|a| (0..n).all(|b| !src.prefers(a, b) || own.prefers(a, b)))
            })
        })
    }
}

/// How ties are broken when filling in missing comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Ascending agent index inside every tier.
    #[default]
    Ascending,
    /// Uniform shuffle of every tier from a seeded ChaCha8 stream.
    Seeded(u64),
}

/// Completes every list according to `policy`.
pub fn complete(inst: &Instance, policy: TieBreak) -> Completion {
    let n = inst.n();
    let mut rng = match policy {
        TieBreak::Ascending => None,
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut linearize = |list: &TierList| -> TierList {
        let mut order = Vec::with_capacity(n);
        for tier in list.tiers() {
            let mut tier = tier.clone();
            if let Some(rng) = rng.as_mut() {
                tier.shuffle(rng);
            }
            order.extend(tier);
        }
        TierList::strict(&order).expect("linearized partition")
    };
    let men = inst.men().iter().map(&mut linearize).collect();
    let women = inst.women().iter().map(&mut linearize).collect();
    Completion(Instance::new(men, women).expect("same shape as source"))
}

/// A completion under which `m` has exactly as many blocking pairs as it has
/// super-blocking pairs in `inst`.
///
/// Inside the tier holding an agent's partner, the agents it super-blocks
/// with are moved ahead of the partner; all other ties are broken by
/// ascending index.
pub fn build_witness_completion(inst: &Instance, m: &Matching) -> Completion {
    let n = inst.n();
    assert_eq!(m.n(), n, "matching and instance sizes differ");
    let mut men_blockers = vec![Vec::new(); n];
    let mut women_blockers = vec![Vec::new(); n];
    for (man, woman) in super_blocking_pairs(inst, m) {
        men_blockers[man].push(woman);
        women_blockers[woman].push(man);
    }
    let linearize = |list: &TierList, partner: Option<usize>, blockers: &[usize]| -> TierList {
        let mut order = Vec::with_capacity(n);
        for tier in list.tiers() {
            match partner {
                Some(p) if tier.contains(&p) => {
                    order.extend(tier.iter().copied().filter(|a| blockers.contains(a)));
                    order.push(p);
                    order.extend(tier.iter().copied().filter(|&a| a != p && !blockers.contains(&a)));
                }
                _ => order.extend(tier.iter().copied()),
            }
        }
        TierList::strict(&order).expect("linearized partition")
    };
    let men = (0..n).map(|i| linearize(inst.man(i), m.man_partner(i), &men_blockers[i])).collect();
    let women = (0..n).map(|j| linearize(inst.woman(j), m.woman_partner(j), &women_blockers[j])).collect();
    Completion(Instance::new(men, women).expect("same shape as source"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::count_super_blocking_pairs;

    fn tied_instance() -> Instance {
        Instance::from_tiers(
            vec![vec![vec![0, 1], vec![2]], vec![vec![0, 1, 2]], vec![vec![2], vec![0], vec![1]]],
            vec![vec![vec![0, 1, 2]], vec![vec![1], vec![0, 2]], vec![vec![0], vec![1], vec![2]]],
        )
        .unwrap()
    }

    #[test]
    fn completions_refine_source() {
        let inst = tied_instance();
        assert!(complete(&inst, TieBreak::Ascending).refines(&inst));
        for seed in 0..20 {
            assert!(complete(&inst, TieBreak::Seeded(seed)).refines(&inst));
        }
        let m = Matching::identity(3);
        assert!(build_witness_completion(&inst, &m).refines(&inst));
    }

    #[test]
    fn seeded_completion_is_deterministic() {
        let inst = tied_instance();
        assert_eq!(complete(&inst, TieBreak::Seeded(9)), complete(&inst, TieBreak::Seeded(9)));
    }

    #[test]
    fn witness_is_tight_on_every_matching() {
        let inst = tied_instance();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let m = Matching::from_assignment(&perm).unwrap();
            let c = build_witness_completion(&inst, &m);
            assert_eq!(c.blocking_pairs(&m).len(), count_super_blocking_pairs(&inst, &m), "{perm:?}");
        }
    }

    #[test]
    fn super_stable_witness_has_no_blocking_pairs() {
        let inst = Instance::strict(&[vec![0, 1], vec![1, 0]], &[vec![0, 1], vec![1, 0]]).unwrap();
        let m = Matching::identity(2);
        assert!(build_witness_completion(&inst, &m).blocking_pairs(&m).is_empty());
    }

    #[test]
    fn strictness_required() {
        assert!(Completion::new(tied_instance()).is_err());
    }
}
