use crate::instance::{Instance, Side};

/// Mutable preference lists over a fixed source instance.
///
/// Entries are only ever removed, always symmetrically, so `a` is on `b`'s
/// list iff `b` is on `a`'s. Comparisons use the source ranks; a tier is the
/// set of surviving entries that share a source rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingInstance {
    source: Instance,
    present: Vec<Vec<bool>>,
}

impl WorkingInstance {
    pub fn new(source: &Instance) -> Self {
        let n = source.n();
        WorkingInstance { source: source.clone(), present: vec![vec![true; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn source(&self) -> &Instance {
        &self.source
    }

    /// Whether the pair `(man, woman)` survives.
    pub fn has_pair(&self, man: usize, woman: usize) -> bool {
        self.present[man][woman]
    }

    /// `b` is on `a`'s list.
    pub fn contains(&self, side: Side, a: usize, b: usize) -> bool {
        match side {
            Side::Men => self.present[a][b],
            Side::Women => self.present[b][a],
        }
    }

    /// Removes `b` from `a`'s list and `a` from `b`'s. Returns whether
    /// anything was removed.
    pub fn delete(&mut self, side: Side, a: usize, b: usize) -> bool {
        let (m, w) = match side {
            Side::Men => (a, b),
            Side::Women => (b, a),
        };
        std::mem::replace(&mut self.present[m][w], false)
    }

    pub fn delete_pair(&mut self, man: usize, woman: usize) -> bool {
        self.delete(Side::Men, man, woman)
    }

    pub fn rank(&self, side: Side, a: usize, b: usize) -> usize {
        self.source.list(side, a).rank(b)
    }

    pub fn prefers(&self, side: Side, a: usize, b: usize, c: usize) -> bool {
        self.source.list(side, a).prefers(b, c)
    }

    pub fn incomparable(&self, side: Side, a: usize, b: usize, c: usize) -> bool {
        self.source.list(side, a).incomparable(b, c)
    }

    /// Surviving entries of `a`'s list, best first, ties by index.
    pub fn list(&self, side: Side, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.n()).filter(|&b| self.contains(side, a, b)).collect();
        out.sort_by_key(|&b| (self.rank(side, a, b), b));
        out
    }

    pub fn list_len(&self, side: Side, a: usize) -> usize {
        (0..self.n()).filter(|&b| self.contains(side, a, b)).count()
    }

    pub fn first(&self, side: Side, a: usize) -> Option<usize> {
        self.list(side, a).first().copied()
    }

    pub fn second(&self, side: Side, a: usize) -> Option<usize> {
        self.list(side, a).get(1).copied()
    }

    pub fn last(&self, side: Side, a: usize) -> Option<usize> {
        self.list(side, a).last().copied()
    }

    /// Entries sharing the best surviving rank.
    pub fn head_tier(&self, side: Side, a: usize) -> Vec<usize> {
        let list = self.list(side, a);
        match list.first() {
            None => Vec::new(),
            Some(&top) => {
                let r = self.rank(side, a, top);
                list.into_iter().take_while(|&b| self.rank(side, a, b) == r).collect()
            }
        }
    }

    /// Entries sharing the worst surviving rank.
    pub fn tail_tier(&self, side: Side, a: usize) -> Vec<usize> {
        let list = self.list(side, a);
        match list.last() {
            None => Vec::new(),
            Some(&bottom) => {
                let r = self.rank(side, a, bottom);
                list.into_iter().filter(|&b| self.rank(side, a, b) == r).collect()
            }
        }
    }

    /// Some surviving list still holds two entries of equal source rank.
    pub fn has_ties(&self, side: Side) -> bool {
        (0..self.n()).any(|a| {
            let list = self.list(side, a);
            list.windows(2).any(|p| self.rank(side, a, p[0]) == self.rank(side, a, p[1]))
        })
    }

    /// Total number of surviving pairs.
    pub fn total_len(&self) -> usize {
        self.present.iter().flatten().filter(|&&p| p).count()
    }
}
