//! Gadget instance built from a vertex-cover instance `(G, k0)`.
//!
//! Men are `M_A` (one per vertex, the first `k0` forming `M_A1`), then per
//! edge the `S` men followed by the `P` men. Women are `W_A`, then per edge
//! the `T` women followed by the `V` women. Each gadget group is indexed by
//! a block `c ∈ 1..=z` and a position `b ∈ 1..=y`.
//!
//! The block size `y` and block count `z` are taken as parameters. The
//! values that give the hardness gap are far too large to build.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::generators::builder::ListBuilder;
use crate::generators::{GenError, SelfCheck, UndirectedGraph};
use crate::instance::{Delta, Instance};
use crate::io::pairs_doc;
use crate::matching::Matching;
use crate::oracles::permutations;
use crate::stability::super_blocking_pairs;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VCParams {
    pub graph: UndirectedGraph,
    pub k0: usize,
    pub y: usize,
    pub z: usize,
}

impl VCParams {
    pub fn new(graph: UndirectedGraph, k0: usize, y: usize, z: usize) -> Result<Self, GenError> {
        if z < 2 || !z.is_multiple_of(2) {
            return Err(GenError::Parameter(format!("z must be even and at least 2, got {z}")));
        }
        if y < 2 {
            return Err(GenError::Parameter(format!("y must be at least 2, got {y}")));
        }
        if k0 > graph.k() {
            return Err(GenError::Parameter(format!("k0 = {k0} exceeds the {} vertices", graph.k())));
        }
        Ok(VCParams { graph, k0, y, z })
    }
}

/// Index arithmetic for the gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Layout {
    k: usize,
    y: usize,
    z: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Group {
    Core,
    /// `S` men or `T` women.
    Gadget { e: usize, c: usize, b: usize },
    /// `P` men or `V` women.
    Pendant { e: usize, c: usize, b: usize },
}

impl Layout {
    fn per_edge(&self) -> usize {
        2 * self.y * self.z
    }

    fn gadget(&self, e: usize, c: usize, b: usize) -> usize {
        self.k + e * self.per_edge() + (c - 1) * self.y + (b - 1)
    }

    fn pendant(&self, e: usize, c: usize, b: usize) -> usize {
        self.gadget(e, c, b) + self.y * self.z
    }

    fn group(&self, a: usize) -> Group {
        if a < self.k {
            return Group::Core;
        }
        let rel = a - self.k;
        let e = rel / self.per_edge();
        let within = rel % self.per_edge();
        let (pendant, within) = (within >= self.y * self.z, within % (self.y * self.z));
        let (c, b) = (within / self.y + 1, within % self.y + 1);
        if pendant {
            Group::Pendant { e, c, b }
        } else {
            Group::Gadget { e, c, b }
        }
    }

    fn first_half(&self, c: usize) -> bool {
        c <= self.z / 2
    }

    /// Block-wise successor, wrapping from `(c, y)` to `(c + 1, 1)`.
    fn next(&self, c: usize, b: usize) -> (usize, usize) {
        if b < self.y {
            (c, b + 1)
        } else {
            (c + 1, 1)
        }
    }

    fn red(&self, c: usize, b: usize) -> (usize, usize) {
        let h = self.z / 2;
        if self.first_half(c) {
            (c, b)
        } else if (c, b) == (self.z, self.y) {
            (h + 1, 1)
        } else {
            self.next(c, b)
        }
    }

    fn blue(&self, c: usize, b: usize) -> (usize, usize) {
        let h = self.z / 2;
        if (c, b) == (1, 1) {
            (h + 1, 1)
        } else if (c, b) == (h, self.y) {
            (1, 1)
        } else if (c, b) == (h + 1, 1) {
            (1, 2)
        } else if self.first_half(c) {
            self.next(c, b)
        } else {
            (c, b)
        }
    }

    /// The single man ranked between `M_A` and the `S_c` tie by `t_{c,b}`.
    fn t_second(&self, c: usize, b: usize) -> (usize, usize) {
        let h = self.z / 2;
        let preimage = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
            self.cells().find(|&(c2, b2)| f(c2, b2) == (c, b)).expect("bijection")
        };
        if (c, b) == (h + 1, 1) {
            (1, 1)
        } else if self.first_half(c) {
            preimage(&|c2, b2| self.blue(c2, b2))
        } else {
            preimage(&|c2, b2| self.red(c2, b2))
        }
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let (y, z) = (self.y, self.z);
        (1..=z).flat_map(move |c| (1..=y).map(move |b| (c, b)))
    }
}

/// Everything needed to interpret and check a gadget instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub graph: UndirectedGraph,
    pub k0: usize,
    pub y: usize,
    pub z: usize,
    pub n: usize,
    /// Per edge, in the graph's edge order: the two canonical `S ↔ T`
    /// matchings, red then blue.
    pub blocks: Vec<EdgeBlocks>,
    layout: Layout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBlocks {
    pub edge: (usize, usize),
    pub m1: Vec<(usize, usize)>,
    pub m2: Vec<(usize, usize)>,
}

pub fn gen_vc_reduction(p: &VCParams) -> (Instance, ReductionCertificate) {
    let k = p.graph.k();
    let (y, z) = (p.y, p.z);
    let lay = Layout { k, y, z };
    let edges = p.graph.edges();
    let n = k + 2 * y * z * edges.len();
    // Builders take 1-based labels.
    let lab = |i: usize| i + 1;
    let core = 1..=k;
    let core_a1 = 1..=p.k0;
    let core_a2 = p.k0 + 1..=k;
    let pendant_block = |e: usize, c: usize| (1..=y).map(move |b| lab(lay.pendant(e, c, b)));
    let gadget_block = |e: usize, c: usize| (1..=y).map(move |b| lab(lay.gadget(e, c, b)));

    let mut men = Vec::with_capacity(n);
    let mut women = Vec::with_capacity(n);
    for _ in 0..k {
        let mut l = ListBuilder::new(n).tie(core.clone());
        if !edges.is_empty() {
            l = l.tie(pendant_block(0, 1));
        }
        men.push(l.finish());
    }
    let all_s: Vec<usize> =
        (0..edges.len()).flat_map(|e| lay.cells().map(move |(c, b)| lab(lay.gadget(e, c, b)))).collect();
    for _ in 0..k {
        women.push(ListBuilder::new(n).tie(core_a1.clone()).seq(all_s.iter().copied()).tie(core_a2.clone()).finish());
    }
    let mut blocks = Vec::with_capacity(edges.len());
    for (e, &(i, j)) in edges.iter().enumerate() {
        let mut s_lists = Vec::new();
        let mut p_lists = Vec::new();
        let mut t_lists = Vec::new();
        let mut v_lists = Vec::new();
        for (c, b) in lay.cells() {
            let red = lay.red(c, b);
            let blue = lay.blue(c, b);
            let t = |(c, b): (usize, usize)| lab(lay.gadget(e, c, b));
            let (top, vertex, third) =
                if lay.first_half(c) { (t(red), lab(i), t(blue)) } else { (t(blue), lab(j), t(red)) };
            s_lists.push(ListBuilder::new(n).one(top).one(vertex).one(third).tie(pendant_block(e, c)).finish());
            p_lists.push(ListBuilder::new(n).one(lab(lay.pendant(e, c, b))).finish());
            let (sc, sb) = lay.t_second(c, b);
            t_lists.push(
                ListBuilder::new(n).tie(core.clone()).one(lab(lay.gadget(e, sc, sb))).tie(gadget_block(e, c)).finish(),
            );
            v_lists.push(
                ListBuilder::new(n)
                    .tie(core.clone())
                    .tie(gadget_block(e, c))
                    .one(lab(lay.pendant(e, c, b)))
                    .finish(),
            );
        }
        men.extend(s_lists);
        men.extend(p_lists);
        women.extend(t_lists);
        women.extend(v_lists);
        let pairs = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<(usize, usize)> {
            lay.cells()
                .map(|(c, b)| {
                    let (c2, b2) = f(c, b);
                    (lay.gadget(e, c, b), lay.gadget(e, c2, b2))
                })
                .collect()
        };
        blocks.push(EdgeBlocks {
            edge: (i, j),
            m1: pairs(&|c, b| lay.red(c, b)),
            m2: pairs(&|c, b| lay.blue(c, b)),
        });
    }
    let inst = Instance::new(men, women).expect("well-formed lists");
    let cert = ReductionCertificate { graph: p.graph.clone(), k0: p.k0, y, z, n, blocks, layout: lay };
    (inst, cert)
}

/// The matching that witnesses a small optimum when `G` has a vertex cover
/// of size at most `k0`.
///
/// The cover is padded to exactly `k0` vertices with the lowest-index
/// vertices outside it. Cover vertices' `W_A` women take the `M_A1` men in
/// order, the others take `M_A2`. An edge uses its blue block matching when
/// its lower endpoint is in the cover and its red one otherwise. Every `P`
/// man gets his `V` counterpart.
pub fn build_yes_matching(cert: &ReductionCertificate, cover: &[usize]) -> Result<Matching, GenError> {
    let k = cert.graph.k();
    let mut cover: Vec<usize> = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    if let Some(&v) = cover.iter().find(|&&v| v >= k) {
        return Err(GenError::Cover(format!("vertex {} does not exist", v + 1)));
    }
    if cover.len() > cert.k0 {
        return Err(GenError::Cover(format!("{} vertices exceed k0 = {}", cover.len(), cert.k0)));
    }
    if !cert.graph.is_vertex_cover(&cover) {
        return Err(GenError::Cover("some edge has no endpoint in the set".into()));
    }
    let extra: Vec<usize> = (0..k).filter(|v| !cover.contains(v)).collect();
    let missing = cert.k0 - cover.len();
    cover.extend(&extra[..missing]);
    cover.sort_unstable();
    let mut m = Matching::empty(cert.n);
    let mut a1 = 0..cert.k0;
    let mut a2 = cert.k0..k;
    for w in 0..k {
        let man = if cover.contains(&w) { a1.next() } else { a2.next() };
        m.insert(man.expect("sizes agree"), w).expect("fresh");
    }
    let lay = cert.layout;
    for (e, block) in cert.blocks.iter().enumerate() {
        let pairs = if cover.contains(&block.edge.0) { &block.m2 } else { &block.m1 };
        for &(s, t) in pairs {
            m.insert(s, t).expect("fresh");
        }
        for (c, b) in lay.cells() {
            m.insert(lay.pendant(e, c, b), lay.pendant(e, c, b)).expect("fresh");
        }
    }
    Ok(m)
}

impl ReductionCertificate {
    pub fn man_label(&self, a: usize) -> String {
        match self.layout.group(a) {
            Group::Core => format!("m{}", a + 1),
            Group::Gadget { e, c, b } => self.gadget_label("s", e, c, b),
            Group::Pendant { e, c, b } => self.gadget_label("p", e, c, b),
        }
    }

    pub fn woman_label(&self, a: usize) -> String {
        match self.layout.group(a) {
            Group::Core => format!("w{}", a + 1),
            Group::Gadget { e, c, b } => self.gadget_label("t", e, c, b),
            Group::Pendant { e, c, b } => self.gadget_label("v", e, c, b),
        }
    }

    fn gadget_label(&self, letter: &str, e: usize, c: usize, b: usize) -> String {
        let (i, j) = self.blocks[e].edge;
        format!("{letter}^{{{},{}}}_{{{c},{b}}}", i + 1, j + 1)
    }

    /// Whether `man` is an `M_A` man outside `W_A` or an `S` man outside
    /// his top three.
    pub fn is_bad(&self, inst: &Instance, m: &Matching, man: usize) -> bool {
        match self.layout.group(man) {
            Group::Core => m.man_partner(man).is_none_or(|w| w >= self.layout.k),
            Group::Gadget { .. } => {
                let top3 = &inst.man(man).flatten()[..3];
                m.man_partner(man).is_none_or(|w| !top3.contains(&w))
            }
            Group::Pendant { .. } => false,
        }
    }

    pub fn has_bad_pair(&self, inst: &Instance, m: &Matching) -> bool {
        (0..self.n).any(|man| self.is_bad(inst, m, man))
    }

    fn edge_range(&self, e: usize) -> std::ops::Range<usize> {
        let start = self.layout.gadget(e, 1, 1);
        start..start + self.y * self.z
    }

    /// Super-blocking pairs `(s, t)` with both agents in edge `e`'s gadget,
    /// given only the block matching `pairs`.
    pub fn intra_block_super_bps(&self, inst: &Instance, e: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let m = Matching::from_pairs(self.n, pairs.iter().copied()).expect("block matching");
        let range = self.edge_range(e);
        super_blocking_pairs(inst, &m)
            .into_iter()
            .filter(|(s, t)| range.contains(s) && range.contains(t))
            .collect()
    }

    /// All perfect `S ↔ T` matchings of edge `e`'s gadget without a bad
    /// pair, by enumerating every bijection. `None` above 8 men per gadget.
    pub fn good_block_matchings(&self, inst: &Instance, e: usize) -> Option<Vec<Vec<(usize, usize)>>> {
        let size = self.y * self.z;
        if size > 8 {
            return None;
        }
        let base = self.edge_range(e).start;
        let mut out = Vec::new();
        for perm in permutations(size) {
            let ok = perm.iter().enumerate().all(|(s, &t)| inst.man(base + s).flatten()[..3].contains(&(base + t)));
            if ok {
                out.push(perm.iter().enumerate().map(|(s, &t)| (base + s, base + t)).collect());
            }
        }
        Some(out)
    }

    /// Verifies the gadget's structural claims, one entry per check.
    pub fn check(&self, inst: &Instance) -> SelfCheck {
        let mut c = SelfCheck { delta: inst.delta(), checks: Vec::new() };
        let bound = Delta::new(1, (self.z * self.z) as u64);
        c.push(format!("delta {} <= 1/z^2 = {bound}", inst.delta()), inst.delta() <= bound);
        for (e, block) in self.blocks.iter().enumerate() {
            let name = format!("edge ({}, {})", block.edge.0 + 1, block.edge.1 + 1);
            for (tag, pairs) in [("red", &block.m1), ("blue", &block.m2)] {
                let found = self.intra_block_super_bps(inst, e, pairs);
                c.push(format!("{name}: {tag} block matching has exactly 1 intra-block super-blocking pair (found {})", found.len()), found.len() == 1);
            }
            if let Some(good) = self.good_block_matchings(inst, e) {
                let mut expect = vec![block.m1.clone(), block.m2.clone()];
                expect.sort();
                let mut got = good;
                got.sort();
                c.push(format!("{name}: red and blue are the only block matchings without bad pairs"), got == expect);
            }
        }
        c
    }

    /// `count` perfect matchings that each contain a bad pair, derived from
    /// `base` by forcing one man outside his allowed set and then applying
    /// a few random partner swaps.
    pub fn sample_bad_matchings(&self, inst: &Instance, base: &Matching, count: usize, seed: u64) -> Vec<Matching> {
        let n = self.n;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let candidates: Vec<usize> = (0..n).filter(|&a| !matches!(self.layout.group(a), Group::Pendant { .. })).collect();
        let mut assignment: Vec<usize> = (0..n).map(|m| base.man_partner(m).expect("perfect base")).collect();
        let base_assignment = assignment.clone();
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            assignment.copy_from_slice(&base_assignment);
            let man = *candidates.choose(&mut rng).expect("non-empty");
            let woman = rng.gen_range(0..n);
            let other = assignment.iter().position(|&w| w == woman).expect("perfect");
            assignment.swap(man, other);
            for _ in 0..rng.gen_range(0..4) {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                assignment.swap(a, b);
            }
            let m = Matching::from_assignment(&assignment).expect("permutation");
            if self.has_bad_pair(inst, &m) {
                out.push(m);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct BlockDoc {
            edge: [usize; 2],
            m1: Vec<[usize; 2]>,
            m2: Vec<[usize; 2]>,
        }
        #[derive(Serialize)]
        struct Doc {
            k: usize,
            k0: usize,
            y: usize,
            z: usize,
            n: usize,
            edges: Vec<[usize; 2]>,
            blocks: Vec<BlockDoc>,
            note: &'static str,
        }
        let doc = Doc {
            k: self.graph.k(),
            k0: self.k0,
            y: self.y,
            z: self.z,
            n: self.n,
            edges: pairs_doc(self.graph.edges()),
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockDoc {
                    edge: [b.edge.0 + 1, b.edge.1 + 1],
                    m1: pairs_doc(&b.m1),
                    m2: pairs_doc(&b.m2),
                })
                .collect(),
            note: "y and z are supplied directly rather than derived from epsilon and delta",
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}
