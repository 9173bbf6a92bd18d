//! Preference model: strict weak orders as tier lists, two-sided instances,
//! and the missing-information measure.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::ModelError;

/// Exact fraction of pairwise comparisons that cannot be inferred.
pub type Delta = Ratio<u64>;

/// One side of the market.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Men,
    Women,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Men => Side::Women,
            Side::Women => Side::Men,
        }
    }

    /// 1-based label, `m3` or `w3`, for a 0-based index.
    pub fn label(self, index: usize) -> String {
        match self {
            Side::Men => format!("m{}", index + 1),
            Side::Women => format!("w{}", index + 1),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Men => "men",
            Side::Women => "women",
        })
    }
}

/// A strict weak order over the `n` agents of the opposite side, stored as
/// best-first tiers of mutually incomparable agents.
///
/// Every tier is non-empty and sorted ascending; the tiers partition
/// `0..n` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TierList {
    tiers: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl TierList {
    /// Validates that `tiers` partitions `0..n` into non-empty tiers.
    pub fn new(tiers: Vec<Vec<usize>>, n: usize) -> Result<Self, String> {
        let mut rank = vec![usize::MAX; n];
        let mut tiers = tiers;
        for (t, tier) in tiers.iter_mut().enumerate() {
            if tier.is_empty() {
                return Err(format!("tier {} is empty", t + 1));
            }
            tier.sort_unstable();
            for &a in tier.iter() {
                if a >= n {
                    return Err(format!("index {} out of range 1..={n}", a + 1));
                }
                if rank[a] != usize::MAX {
                    return Err(format!("index {} listed more than once", a + 1));
                }
                rank[a] = t;
            }
        }
        if let Some(missing) = rank.iter().position(|&r| r == usize::MAX) {
            return Err(format!("index {} is not ranked", missing + 1));
        }
        Ok(TierList { tiers, rank })
    }

    /// A linear order, best first.
    pub fn strict(order: &[usize]) -> Result<Self, String> {
        Self::new(order.iter().map(|&a| vec![a]).collect(), order.len())
    }

    /// Everyone tied.
    pub fn indifferent(n: usize) -> Self {
        if n == 0 {
            return TierList { tiers: Vec::new(), rank: Vec::new() };
        }
        TierList { tiers: vec![(0..n).collect()], rank: vec![0; n] }
    }

    /// Number of ranked agents.
    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    /// Index of the tier containing `agent`.
    pub fn rank(&self, agent: usize) -> usize {
        self.rank[agent]
    }

    /// `a ≻ b`.
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// `a ⪰ b`: strictly prefers `a` or finds the two incomparable.
    pub fn weakly_prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] <= self.rank[b]
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && self.rank[a] == self.rank[b]
    }

    /// Number of incomparable pairs, `Σ C(|tier|, 2)`.
    pub fn missing_pairs(&self) -> u64 {
        self.tiers.iter().map(|t| choose2(t.len() as u64)).sum()
    }

    pub fn is_strict(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    /// Agents in preference order, ties in ascending index.
    pub fn flatten(&self) -> Vec<usize> {
        self.tiers.iter().flatten().copied().collect()
    }

    /// Singletons followed by at most one final tier of any size.
    pub fn is_top_truncated(&self) -> bool {
        match self.tiers.split_last() {
            None => true,
            Some((_, head)) => head.iter().all(|t| t.len() == 1),
        }
    }
}

pub(crate) fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Two `n`-agent profiles: men's lists over women and women's lists over men.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    men: Vec<TierList>,
    women: Vec<TierList>,
}

impl Instance {
    pub fn new(men: Vec<TierList>, women: Vec<TierList>) -> Result<Self, ModelError> {
        let n = men.len();
        if women.len() != n {
            return Err(ModelError::WrongListCount { side: Side::Women, expected: n, found: women.len() });
        }
        for (side, lists) in [(Side::Men, &men), (Side::Women, &women)] {
            for (i, list) in lists.iter().enumerate() {
                if list.len() != n {
                    return Err(ModelError::InvalidTierList {
                        agent: side.label(i),
                        reason: format!("ranks {} agents, expected {n}", list.len()),
                    });
                }
            }
        }
        Ok(Instance { men, women })
    }

    /// Builds an instance from raw 0-based tiers, naming the offending agent
    /// when a list is malformed.
    pub fn from_tiers(men: Vec<Vec<Vec<usize>>>, women: Vec<Vec<Vec<usize>>>) -> Result<Self, ModelError> {
        let n = men.len();
        if women.len() != n {
            return Err(ModelError::WrongListCount { side: Side::Women, expected: n, found: women.len() });
        }
        let build = |side: Side, lists: Vec<Vec<Vec<usize>>>| -> Result<Vec<TierList>, ModelError> {
            lists
                .into_iter()
                .enumerate()
                .map(|(i, tiers)| {
                    TierList::new(tiers, n)
                        .map_err(|reason| ModelError::InvalidTierList { agent: side.label(i), reason })
                })
                .collect()
        };
        let men = build(Side::Men, men)?;
        let women = build(Side::Women, women)?;
        Instance::new(men, women)
    }

    /// Both sides strict, from best-first orders.
    pub fn strict(men: &[Vec<usize>], women: &[Vec<usize>]) -> Result<Self, ModelError> {
        let wrap = |orders: &[Vec<usize>]| orders.iter().map(|o| o.iter().map(|&a| vec![a]).collect()).collect();
        Instance::from_tiers(wrap(men), wrap(women))
    }

    pub fn n(&self) -> usize {
        self.men.len()
    }

    pub fn man(&self, m: usize) -> &TierList {
        &self.men[m]
    }

    pub fn woman(&self, w: usize) -> &TierList {
        &self.women[w]
    }

    pub fn men(&self) -> &[TierList] {
        &self.men
    }

    pub fn women(&self) -> &[TierList] {
        &self.women
    }

    pub fn list(&self, side: Side, agent: usize) -> &TierList {
        match side {
            Side::Men => &self.men[agent],
            Side::Women => &self.women[agent],
        }
    }

    /// Total number of incomparable pairs over all `2n` agents.
    pub fn missing_pairs(&self) -> u64 {
        self.men.iter().chain(&self.women).map(TierList::missing_pairs).sum()
    }

    /// `δ = (1/2n) Σ_i missing(p_i) / C(n,2)`.
    pub fn delta(&self) -> Delta {
        compute_delta(self)
    }

    pub fn is_strict(&self) -> bool {
        self.men.iter().chain(&self.women).all(TierList::is_strict)
    }

    /// Men strict; each woman ranks a strict prefix then at most one
    /// trailing tie.
    pub fn is_one_sided_top_truncated(&self) -> bool {
        self.men.iter().all(TierList::is_strict) && self.women.iter().all(TierList::is_top_truncated)
    }

    /// Replaces one agent's list.
    pub fn with_list(&self, side: Side, agent: usize, list: TierList) -> Result<Self, ModelError> {
        if list.len() != self.n() {
            return Err(ModelError::InvalidTierList {
                agent: side.label(agent),
                reason: format!("ranks {} agents, expected {}", list.len(), self.n()),
            });
        }
        let mut next = self.clone();
        match side {
            Side::Men => next.men[agent] = list,
            Side::Women => next.women[agent] = list,
        }
        Ok(next)
    }

    /// The instance on the kept agents only, relabelled `0..k` in ascending
    /// original order. Relative preferences are unchanged.
    pub fn restrict(&self, keep_men: &[usize], keep_women: &[usize]) -> Result<Restriction, ModelError> {
        if keep_men.len() != keep_women.len() {
            return Err(ModelError::Unbalanced { men: keep_men.len(), women: keep_women.len() });
        }
        let n = self.n();
        let mut men: Vec<usize> = keep_men.to_vec();
        let mut women: Vec<usize> = keep_women.to_vec();
        men.sort_unstable();
        men.dedup();
        women.sort_unstable();
        women.dedup();
        if men.len() != keep_men.len() || women.len() != keep_women.len() {
            return Err(ModelError::DuplicateAgent);
        }
        if let Some(&bad) = men.iter().chain(&women).find(|&&a| a >= n) {
            return Err(ModelError::IndexOutOfRange { index: bad, n });
        }
        let project = |list: &TierList, keep: &[usize]| -> TierList {
            let mut new_index = vec![usize::MAX; n];
            for (i, &a) in keep.iter().enumerate() {
                new_index[a] = i;
            }
            let tiers: Vec<Vec<usize>> = list
                .tiers()
                .iter()
                .map(|t| t.iter().filter(|&&a| new_index[a] != usize::MAX).map(|&a| new_index[a]).collect::<Vec<_>>())
                .filter(|t: &Vec<usize>| !t.is_empty())
                .collect();
            TierList::new(tiers, keep.len()).expect("projection of a partition is a partition")
        };
        let men_lists = men.iter().map(|&m| project(&self.men[m], &women)).collect();
        let women_lists = women.iter().map(|&w| project(&self.women[w], &men)).collect();
        Ok(Restriction { instance: Instance::new(men_lists, women_lists)?, men, women })
    }
}

/// A sub-instance plus the map from its indices back to the source.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub instance: Instance,
    /// `men[i]` is the source index of restricted man `i`.
    pub men: Vec<usize>,
    pub women: Vec<usize>,
}

/// Exact missing-information measure of an instance.
pub fn compute_delta(inst: &Instance) -> Delta {
    let n = inst.n() as u64;
    let per_agent = choose2(n);
    if per_agent == 0 {
        return Delta::from_integer(0);
    }
    Delta::new(inst.missing_pairs(), 2 * n * per_agent)
}

/// True iff all men are strict and every woman lists singletons followed by
/// at most one final tie.
pub fn validate_one_sided_top_truncated(inst: &Instance) -> bool {
    inst.is_one_sided_top_truncated()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strict_instance(n: usize) -> Instance {
        let order: Vec<usize> = (0..n).collect();
        Instance::strict(&vec![order.clone(); n], &vec![order; n]).unwrap()
    }

    #[test]
    fn tier_list_rejects_bad_partitions() {
        assert!(TierList::new(vec![vec![0], vec![]], 1).is_err());
        assert!(TierList::new(vec![vec![0, 0], vec![1]], 2).is_err());
        assert!(TierList::new(vec![vec![0]], 2).is_err());
        assert!(TierList::new(vec![vec![2], vec![0, 1]], 2).is_err());
        let ok = TierList::new(vec![vec![2], vec![1, 0]], 3).unwrap();
        assert_eq!(ok.tiers(), &[vec![2], vec![0, 1]]);
        assert!(ok.incomparable(0, 1));
        assert!(ok.prefers(2, 0));
        assert!(ok.weakly_prefers(1, 0) && ok.weakly_prefers(0, 1));
    }

    #[test]
    fn malformed_instance_names_the_agent() {
        let err = Instance::from_tiers(
            vec![vec![vec![0], vec![1]], vec![vec![0, 1]]],
            vec![vec![vec![0, 1]], vec![vec![0]]],
        )
        .unwrap_err();
        assert!(err.to_string().contains("w2"), "{err}");
    }

    #[test]
    fn delta_of_strict_instances_is_zero() {
        for n in 0..6 {
            assert_eq!(compute_delta(&strict_instance(n)), Delta::from_integer(0));
        }
    }

    #[test]
    fn delta_single_two_tie() {
        for n in 2..9u64 {
            let inst = strict_instance(n as usize);
            let mut tiers: Vec<Vec<usize>> = vec![vec![0, 1]];
            tiers.extend((2..n as usize).map(|a| vec![a]));
            let inst = inst.with_list(Side::Men, 0, TierList::new(tiers, n as usize).unwrap()).unwrap();
            assert_eq!(compute_delta(&inst), Delta::new(1, 2 * n * choose2(n)));
        }
    }

    #[test]
    fn delta_woman_fully_indifferent_n3() {
        let inst = strict_instance(3).with_list(Side::Women, 1, TierList::indifferent(3)).unwrap();
        assert_eq!(compute_delta(&inst), Delta::new(1, 6));
    }

    #[test]
    fn top_truncation() {
        let n = 3;
        let strict = strict_instance(n);
        assert!(validate_one_sided_top_truncated(&strict));
        let bottom = TierList::new(vec![vec![2], vec![0, 1]], n).unwrap();
        let top = TierList::new(vec![vec![0, 1], vec![2]], n).unwrap();
        assert!(validate_one_sided_top_truncated(&strict.with_list(Side::Women, 0, bottom.clone()).unwrap()));
        assert!(!validate_one_sided_top_truncated(&strict.with_list(Side::Women, 0, top).unwrap()));
        assert!(!validate_one_sided_top_truncated(&strict.with_list(Side::Men, 0, bottom).unwrap()));
    }

    #[test]
    fn restriction_relabels_and_keeps_order() {
        let inst = Instance::from_tiers(
            vec![vec![vec![2], vec![0, 1]], vec![vec![0], vec![1], vec![2]], vec![vec![1, 2, 0]]],
            vec![vec![vec![0, 1, 2]], vec![vec![2], vec![1], vec![0]], vec![vec![0], vec![2], vec![1]]],
        )
        .unwrap();
        let r = inst.restrict(&[0, 2], &[1, 2]).unwrap();
        assert_eq!(r.instance.n(), 2);
        // man 0 ranked w3 above the tie {w1, w2}: restricted to {w2, w3} -> w3 ≻ w2
        assert_eq!(r.instance.man(0).tiers(), &[vec![1], vec![0]]);
        // woman w3 (index 2): m1 ≻ m3 ≻ m2 -> restricted {m1, m3}
        assert_eq!(r.instance.woman(1).tiers(), &[vec![0], vec![1]]);
        assert!(inst.restrict(&[0], &[0, 1]).is_err());
    }
}
