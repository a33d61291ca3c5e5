//! Immutable simple undirected graphs over bitset adjacency rows.
//!
//! Vertex labels are `0..n-1`. All operators return new graphs; the vertex
//! orderings of composite constructions are fixed and documented on each
//! operator so that encodings are deterministic.

pub mod families;
pub mod graph6;
pub mod iso;

pub use families::{construct, FamilySpec};

use crate::srg::SrgParams;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid family parameters: {0}")]
    InvalidParam(String),
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

/// Subset of `0..n-1` stored as a bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex out of range");
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter { words: &self.words, word: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Sorted vertex list, the canonical external form of a witness set.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

struct BitIter<'a> {
    words: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word];
        }
    }
}

/// Immutable simple undirected graph; adjacency kept as `n` bit-rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.num_edges(), self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, adj: vec![0; n.max(1) * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge_mut(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge_mut(u, v);
        }
        g
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bitset row of vertex `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        BitIter { words: row, word: 0, cur: row.first().copied().unwrap_or(0) }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges in lexicographic order `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v).iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    /// Strong product; vertex `(i, j)` of `g ⊠ h` gets index `i * h.n() + j`.
    pub fn strong_product(&self, h: &Graph) -> Graph {
        let nh = h.n;
        let mut g = Graph::empty(self.n * nh);
        for i in 0..self.n {
            for j in 0..nh {
                let a = i * nh + j;
                for i2 in i..self.n {
                    for j2 in 0..nh {
                        let b = i2 * nh + j2;
                        if b <= a {
                            continue;
                        }
                        let gi = self.has_edge(i, i2);
                        let hj = h.has_edge(j, j2);
                        let adjacent = (i == i2 && hj) || (gi && j == j2) || (gi && hj);
                        if adjacent {
                            g.add_edge_mut(a, b);
                        }
                    }
                }
            }
        }
        g
    }

    /// `k`-fold strong power.
    pub fn strong_power(&self, k: u32) -> Graph {
        assert!(k >= 1);
        let mut p = self.clone();
        for _ in 1..k {
            p = p.strong_product(self);
        }
        p
    }

    /// Disjoint union; vertices of `self` keep `0..n1-1`, vertices of
    /// `other` get `n1..n1+n2-1`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge_mut(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_mut(self.n + u, self.n + v);
        }
        g
    }

    /// Join: disjoint union plus all cross edges; same indexing as
    /// [`Graph::disjoint_union`].
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge_mut(u, self.n + v);
            }
        }
        g
    }

    /// Neighbors-splitting join `self ⊞ other`: vertices of `self` at
    /// `0..n1-1`, copied vertices `v'_i` at `n1..2n1-1`, vertices of
    /// `other` at `2n1..2n1+n2-1`. The copy `v'_i` attaches to the
    /// neighbors of `v_i` in `self`.
    pub fn ns_join(&self, other: &Graph) -> Graph {
        self.split_join(other, false)
    }

    /// Nonneighbors-splitting join: as [`Graph::ns_join`] but `v'_i`
    /// attaches to the nonneighbors of `v_i` (`i ≠ j`).
    pub fn nns_join(&self, other: &Graph) -> Graph {
        self.split_join(other, true)
    }

    fn split_join(&self, other: &Graph, nonneighbors: bool) -> Graph {
        let n1 = self.n;
        let n2 = other.n;
        let mut g = Graph::empty(2 * n1 + n2);
        for (u, v) in self.edges() {
            g.add_edge_mut(u, v);
        }
        for i in 0..n1 {
            for j in 0..n1 {
                if i == j {
                    continue;
                }
                let adj = self.has_edge(i, j);
                if adj != nonneighbors {
                    // copy v'_i (index n1+i) to original v_j
                    g.add_edge_mut(n1 + i, j);
                }
            }
        }
        for (u, v) in other.edges() {
            g.add_edge_mut(2 * n1 + u, 2 * n1 + v);
        }
        for u in 0..n1 {
            for v in 0..n2 {
                g.add_edge_mut(u, 2 * n1 + v);
            }
        }
        g
    }

    /// Line graph; one vertex per edge of `self` in lexicographic edge
    /// order, adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut g = Graph::empty(edges.len());
        for (a, &(u1, v1)) in edges.iter().enumerate() {
            for (b, &(u2, v2)) in edges.iter().enumerate().skip(a + 1) {
                if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                    g.add_edge_mut(a, b);
                }
            }
        }
        g
    }

    /// Mycielskian; level-0 copies keep `0..n-1`, level-1 copies get
    /// `n..2n-1`, the apex is `2n`.
    pub fn mycielskian(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(2 * n + 1);
        for (u, v) in self.edges() {
            g.add_edge_mut(u, v);
            g.add_edge_mut(u, n + v);
            g.add_edge_mut(v, n + u);
        }
        for v in 0..n {
            g.add_edge_mut(2 * n, n + v);
        }
        g
    }

    /// Seidel switching: edges inside `s` and inside its complement are
    /// preserved; adjacency across the cut is complemented.
    pub fn seidel_switch(&self, s: &VertexSet) -> Graph {
        assert_eq!(s.universe(), self.n, "switching set universe mismatch");
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let cross = s.contains(u) != s.contains(v);
                let e = self.has_edge(u, v);
                if (cross && !e) || (!cross && e) {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on the sorted vertex list of `keep`, relabeled to
    /// `0..keep.len()-1` in that order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(a, b);
                }
            }
        }
        g
    }

    /// Relabel vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_mut(perm[u], perm[v]);
        }
        g
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn num_triangles(&self) -> u64 {
        let mut t = 0u64;
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    t += self.common_neighbors(u, v) as u64;
                }
            }
        }
        t / 3
    }

    /// Girth via BFS from every vertex; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn structure_report(&self) -> StructureReport {
        let degrees = self.degrees();
        StructureReport {
            n: self.n,
            num_edges: self.num_edges(),
            degree_sequence: {
                let mut d = degrees.clone();
                d.sort_unstable_by(|a, b| b.cmp(a));
                d
            },
            regular: self.is_regular(),
            bipartite: self.is_bipartite(),
            num_triangles: self.num_triangles(),
            triangle_free: self.num_triangles() == 0,
            connected: self.is_connected(),
            girth: self.girth(),
        }
    }

    /// Strongly-regular classification: `Some(params)` iff the graph is
    /// regular, neither complete nor empty, and the common-neighbor counts
    /// are constant over adjacent pairs and over distinct nonadjacent pairs.
    pub fn classify_srg(&self) -> Option<SrgParams> {
        let n = self.n;
        if n < 2 {
            return None;
        }
        let d = self.is_regular()?;
        if d == 0 || d == n - 1 {
            return None;
        }
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..n {
            for v in (u + 1)..n {
                let c = self.common_neighbors(u, v);
                let slot = if self.has_edge(u, v) { &mut lambda } else { &mut mu };
                match slot {
                    None => *slot = Some(c),
                    Some(x) if *x == c => {}
                    Some(_) => return None,
                }
            }
        }
        Some(SrgParams::new(n as u64, d as u64, lambda? as u64, mu? as u64))
    }

    /// Adjacency matrix as a dense float matrix.
    pub fn adjacency_matrix<F: crate::linalg::Real>(&self) -> crate::linalg::Mat<F> {
        crate::linalg::Mat::from_fn(self.n, self.n, |i, j| {
            if self.has_edge(i, j) {
                F::one()
            } else {
                F::zero()
            }
        })
    }
}

/// Summary of cheap structural facts about a graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub num_edges: usize,
    pub degree_sequence: Vec<usize>,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub num_triangles: u64,
    pub connected: bool,
    /// `None` means acyclic.
    pub girth: Option<usize>,
}
