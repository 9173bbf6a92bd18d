//! Maximum matching and minimum vertex cover in bipartite graphs.

/// A minimum vertex cover split by side, both ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartiteCover {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BipartiteCover {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn adjacency(n_left: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n_left];
    for &(u, v) in edges {
        adj[u].push(v);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if !seen[v] {
            seen[v] = true;
            if match_right[v].is_none_or(|u2| augment(u2, adj, seen, match_right)) {
                match_right[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// Maximum matching by augmenting paths, left vertices and their
/// neighbours tried in ascending order. Returns `match_left`.
pub fn maximum_bipartite_matching(n_left: usize, n_right: usize, edges: &[(usize, usize)]) -> Vec<Option<usize>> {
    let adj = adjacency(n_left, edges);
    let mut match_right = vec![None; n_right];
    for u in 0..n_left {
        let mut seen = vec![false; n_right];
        augment(u, &adj, &mut seen, &mut match_right);
    }
    let mut match_left = vec![None; n_left];
    for (v, u) in match_right.iter().enumerate() {
        if let Some(u) = *u {
            match_left[u] = Some(v);
        }
    }
    match_left
}

/// König's construction: with `Z` the vertices reachable from unmatched
/// left vertices by alternating paths, the cover is `(L ∖ Z) ∪ (R ∩ Z)`.
/// On a single edge this picks the left endpoint.
pub fn min_vertex_cover_bipartite(n_left: usize, n_right: usize, edges: &[(usize, usize)]) -> BipartiteCover {
    let adj = adjacency(n_left, edges);
    let match_left = maximum_bipartite_matching(n_left, n_right, edges);
    let mut match_right = vec![None; n_right];
    for (u, v) in match_left.iter().enumerate() {
        if let Some(v) = *v {
            match_right[v] = Some(u);
        }
    }
    let mut in_z_left = vec![false; n_left];
    let mut in_z_right = vec![false; n_right];
    let mut stack: Vec<usize> = (0..n_left).filter(|&u| match_left[u].is_none()).collect();
    for &u in &stack {
        in_z_left[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if match_left[u] != Some(v) && !in_z_right[v] {
                in_z_right[v] = true;
                if let Some(u2) = match_right[v] {
                    if !in_z_left[u2] {
                        in_z_left[u2] = true;
                        stack.push(u2);
                    }
                }
            }
        }
    }
    BipartiteCover {
        left: (0..n_left).filter(|&u| !in_z_left[u]).collect(),
        right: (0..n_right).filter(|&v| in_z_right[v]).collect(),
    }
}
