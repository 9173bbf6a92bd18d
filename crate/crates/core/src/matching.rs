use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::instance::Side;

/// A set of disjoint man–woman pairs over `n` agents per side. Agents may be
/// left unmatched.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    of_man: Vec<Option<usize>>,
    of_woman: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { of_man: vec![None; n], of_woman: vec![None; n] }
    }

    /// `{(m_i, w_i)}`.
    pub fn identity(n: usize) -> Self {
        Matching::from_assignment(&(0..n).collect::<Vec<_>>()).expect("identity is a permutation")
    }

    /// Perfect matching with man `m` paired to `assignment[m]`.
    pub fn from_assignment(assignment: &[usize]) -> Result<Self, ModelError> {
        Matching::from_pairs(assignment.len(), assignment.iter().copied().enumerate())
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, ModelError> {
        let mut m = Matching::empty(n);
        for (man, woman) in pairs {
            m.insert(man, woman)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, man: usize, woman: usize) -> Result<(), ModelError> {
        let n = self.n();
        for idx in [man, woman] {
            if idx >= n {
                return Err(ModelError::IndexOutOfRange { index: idx, n });
            }
        }
        if self.of_man[man].is_some() {
            return Err(ModelError::AgentMatchedTwice { side: Side::Men, agent: man });
        }
        if self.of_woman[woman].is_some() {
            return Err(ModelError::AgentMatchedTwice { side: Side::Women, agent: woman });
        }
        self.of_man[man] = Some(woman);
        self.of_woman[woman] = Some(man);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.of_man.len()
    }

    pub fn man_partner(&self, man: usize) -> Option<usize> {
        self.of_man[man]
    }

    pub fn woman_partner(&self, woman: usize) -> Option<usize> {
        self.of_woman[woman]
    }

    pub fn partner(&self, side: Side, agent: usize) -> Option<usize> {
        match side {
            Side::Men => self.of_man[agent],
            Side::Women => self.of_woman[agent],
        }
    }

    pub fn contains(&self, man: usize, woman: usize) -> bool {
        self.of_man[man] == Some(woman)
    }

    /// Pairs in ascending man order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.of_man.iter().enumerate().filter_map(|(m, w)| w.map(|w| (m, w))).collect()
    }

    pub fn len(&self) -> usize {
        self.of_man.iter().filter(|w| w.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All `2n` agents matched.
    pub fn is_perfect(&self) -> bool {
        self.of_man.iter().all(Option::is_some)
    }
}

/// A set of agents from both sides, e.g. a deletion set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AgentSet {
    pub men: BTreeSet<usize>,
    pub women: BTreeSet<usize>,
}

impl AgentSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, side: Side, agent: usize) -> bool {
        match side {
            Side::Men => self.men.insert(agent),
            Side::Women => self.women.insert(agent),
        }
    }

    pub fn contains(&self, side: Side, agent: usize) -> bool {
        match side {
            Side::Men => self.men.contains(&agent),
            Side::Women => self.women.contains(&agent),
        }
    }

    pub fn len(&self) -> usize {
        self.men.len() + self.women.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_balanced(&self) -> bool {
        self.men.len() == self.women.len()
    }

    /// Agents of `side` among `0..n` that are not in the set.
    pub fn complement(&self, side: Side, n: usize) -> Vec<usize> {
        (0..n).filter(|&a| !self.contains(side, a)).collect()
    }
}
