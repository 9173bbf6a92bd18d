use std::fmt;

use serde::{Deserialize, Serialize};

use crate::generators::GenError;

/// Simple undirected graph on vertices `0..k`, edges stored as `(i, j)`
/// with `i < j`, sorted and without repeats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndirectedGraph {
    k: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(k: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GenError> {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= k || b >= k {
                return Err(GenError::Graph(format!("edge ({}, {}) uses a vertex outside 1..={k}", a + 1, b + 1)));
            }
            if a == b {
                return Err(GenError::Graph(format!("self-loop at vertex {}", a + 1)));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(UndirectedGraph { k, edges: out })
    }

    /// Complete graph on `k` vertices.
    pub fn complete(k: usize) -> Self {
        let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
        UndirectedGraph::new(k, edges).expect("valid")
    }

    /// Text format: a header `k |E|` followed by one 1-based `i j` pair per
    /// line. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, GenError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| GenError::Graph("empty graph file".into()))?;
        let nums = parse_pair(header)?;
        let (k, m) = nums;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let (a, b) = parse_pair(line)?;
            if a == 0 || b == 0 {
                return Err(GenError::Graph(format!("vertex 0 in `{line}`; vertices are 1-based")));
            }
            edges.push((a - 1, b - 1));
        }
        if edges.len() != m {
            return Err(GenError::Graph(format!("header declares {m} edges, found {}", edges.len())));
        }
        UndirectedGraph::new(k, edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        self.edges.iter().all(|(a, b)| cover.contains(a) || cover.contains(b))
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), GenError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    let [a, b] = parts[..] else {
        return Err(GenError::Graph(format!("expected two integers, got `{line}`")));
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| GenError::Graph(format!("not a number: `{s}`")));
    Ok((num(a)?, num(b)?))
}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.k, self.edges.len())?;
        for (a, b) in &self.edges {
            writeln!(f, "{} {}", a + 1, b + 1)?;
        }
        Ok(())
    }
}
