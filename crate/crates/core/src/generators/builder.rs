use crate::instance::TierList;

/// Assembles a list from 1-based labels. An agent already placed is
/// skipped if it shows up again; whatever is never placed goes last in
/// ascending order.
pub(crate) struct ListBuilder {
    placed: Vec<bool>,
    tiers: Vec<Vec<usize>>,
}

impl ListBuilder {
    pub fn new(n: usize) -> Self {
        ListBuilder { placed: vec![false; n], tiers: Vec::new() }
    }

    fn take(&mut self, label: usize) -> Option<usize> {
        let a = label - 1;
        (!std::mem::replace(&mut self.placed[a], true)).then_some(a)
    }

    pub fn one(mut self, label: usize) -> Self {
        if let Some(a) = self.take(label) {
            self.tiers.push(vec![a]);
        }
        self
    }

    /// Each label its own tier, in the given order.
    pub fn seq(mut self, labels: impl IntoIterator<Item = usize>) -> Self {
        for l in labels {
            self = self.one(l);
        }
        self
    }

    /// All not-yet-placed labels as one tier.
    pub fn tie(mut self, labels: impl IntoIterator<Item = usize>) -> Self {
        let tier: Vec<usize> = labels.into_iter().filter_map(|l| self.take(l)).collect();
        if !tier.is_empty() {
            self.tiers.push(tier);
        }
        self
    }

    pub fn finish(mut self) -> TierList {
        let n = self.placed.len();
        self = self.seq(1..=n);
        TierList::new(self.tiers, n).expect("every label placed exactly once")
    }
}
