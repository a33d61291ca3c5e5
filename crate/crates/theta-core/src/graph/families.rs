//! Parametric graph families and named graphs.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};

/// Tagged family constructors accepted by [`construct`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Path(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Kneser(usize, usize),
    Paley(u64),
    /// Vertices are the binary strings of length `l`; adjacency iff the
    /// Hamming distance lies in `[d_lo, d_hi]`.
    HammingBand(usize, usize, usize),
    LatinSquare(usize, usize),
    /// `Symplectic(n, q)` is the polar graph on the projective points of
    /// the 2n-dimensional space over the prime field of order `q`.
    Symplectic(usize, u64),
    Windmill(usize, usize),
    Hanoi3(usize),
    Tietze,
    Shrikhande,
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Build the graph of a family, validating parameters.
pub fn construct(spec: &FamilySpec) -> Result<Graph, GraphError> {
    use FamilySpec::*;
    let err = |msg: String| Err(GraphError::InvalidParam(msg));
    match spec {
        Complete(n) => Ok(Graph::complete(*n)),
        Empty(n) => Ok(Graph::empty(*n)),
        Cycle(n) => {
            if *n < 3 {
                return err(format!("cycle needs n >= 3, got {n}"));
            }
            Ok(named::cycle(*n))
        }
        Path(n) => {
            if *n < 1 {
                return err("path needs n >= 1".into());
            }
            Ok(Graph::from_edges(*n, &(1..*n).map(|v| (v - 1, v)).collect::<Vec<_>>()))
        }
        CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.iter().any(|&p| p == 0) {
                return err("complete multipartite needs nonempty parts".into());
            }
            Ok(named::complete_multipartite(parts))
        }
        Star(leaves) => Ok(named::star(*leaves)),
        Kneser(n, k) => {
            if !(*k >= 1 && *n >= 2 * *k) {
                return err(format!("Kneser needs n >= 2k >= 2, got n={n}, k={k}"));
            }
            Ok(named::kneser(*n, *k))
        }
        Paley(q) => {
            if !is_prime(*q) {
                return err(format!("Paley order {q} is not prime"));
            }
            if *q % 4 != 1 {
                return err(format!("Paley order {q} is not 1 mod 4"));
            }
            Ok(named::paley(*q))
        }
        HammingBand(l, lo, hi) => {
            if !(1 <= *lo && lo <= hi && hi <= l) {
                return err(format!("HammingBand needs 1 <= d_lo <= d_hi <= l, got ({l},{lo},{hi})"));
            }
            if *l > 20 {
                return err(format!("HammingBand length {l} too large (max 20)"));
            }
            Ok(named::hamming_band(*l, *lo, *hi))
        }
        LatinSquare(m, n) => {
            if !(2 <= *m && *m <= n + 1 && *n >= 2) {
                return err(format!("Latin square graph needs 2 <= m <= n+1, n >= 2, got m={m}, n={n}"));
            }
            // A single square (m <= 3) never needs orthogonality, so any
            // order works; m - 2 >= 2 mutually orthogonal squares are
            // realized as multiplication tables mod a prime.
            if *m > 3 && !is_prime(*n as u64) {
                return err(format!("Latin square graph with m={m} > 3 needs prime n, got {n}"));
            }
            Ok(named::latin_square(*m, *n))
        }
        Symplectic(n, q) => {
            if *n < 1 {
                return err("symplectic graph needs n >= 1".into());
            }
            if !is_prime(*q) {
                return err(format!("symplectic graph construction needs prime q, got {q}"));
            }
            let order = ((*q as f64).powi(2 * *n as i32) - 1.0) / (*q as f64 - 1.0);
            if order > 5000.0 {
                return err(format!("symplectic graph on {order} vertices too large"));
            }
            Ok(named::symplectic(*n, *q))
        }
        Windmill(k, n) => {
            if !(*k >= 2 && *n >= 1) {
                return err(format!("windmill needs k >= 2 and n >= 1, got k={k}, n={n}"));
            }
            Ok(named::windmill(*k, *n))
        }
        Hanoi3(n) => {
            if !(1..=8).contains(n) {
                return err(format!("three-tower graph needs 1 <= n <= 8, got {n}"));
            }
            Ok(named::hanoi3(*n))
        }
        Tietze => Ok(named::tietze()),
        Shrikhande => Ok(named::shrikhande()),
    }
}

pub mod named {
    use super::super::Graph;

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
    }

    /// Star with `leaves` leaves; the hub is vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>())
    }

    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (idx, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(idx, p));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Kneser graph: vertices are the k-subsets of an n-set in
    /// lexicographic bitmask order, adjacent iff disjoint.
    pub fn kneser(n: usize, k: usize) -> Graph {
        let mut subsets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
        subsets.sort_unstable();
        let mut edges = Vec::new();
        for (a, &s) in subsets.iter().enumerate() {
            for (b, &t) in subsets.iter().enumerate().skip(a + 1) {
                if s & t == 0 {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(subsets.len(), &edges)
    }

    pub fn petersen() -> Graph {
        kneser(5, 2)
    }

    /// Paley graph on a prime `q ≡ 1 (mod 4)`: adjacency iff the
    /// difference is a nonzero quadratic residue.
    pub fn paley(q: u64) -> Graph {
        let mut is_qr = vec![false; q as usize];
        for x in 1..q {
            is_qr[((x * x) % q) as usize] = true;
        }
        let mut edges = Vec::new();
        for u in 0..q {
            for v in (u + 1)..q {
                if is_qr[(v - u) as usize] {
                    edges.push((u as usize, v as usize));
                }
            }
        }
        Graph::from_edges(q as usize, &edges)
    }

    pub fn hamming_band(l: usize, lo: usize, hi: usize) -> Graph {
        let n = 1usize << l;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let d = (u ^ v).count_ones() as usize;
                if (lo..=hi).contains(&d) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Latin square graph on the n² cells; two cells are adjacent when
    /// they share a row, a column, or a symbol in one of the m−2 squares
    /// `L_a(i,j) = a·i + j (mod n)`, `a = 1..m-2`.
    pub fn latin_square(m: usize, n: usize) -> Graph {
        let mut edges = Vec::new();
        let idx = |i: usize, j: usize| i * n + j;
        for i1 in 0..n {
            for j1 in 0..n {
                for i2 in 0..n {
                    for j2 in 0..n {
                        let (a, b) = (idx(i1, j1), idx(i2, j2));
                        if b <= a {
                            continue;
                        }
                        let same_row = i1 == i2;
                        let same_col = j1 == j2;
                        let same_symbol = (1..m.saturating_sub(1))
                            .any(|s| (s * i1 + j1) % n == (s * i2 + j2) % n);
                        if same_row || same_col || same_symbol {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        Graph::from_edges(n * n, &edges)
    }

    /// Symplectic polar graph on the projective points of F_q^{2n},
    /// canonical representatives scaled so the first nonzero coordinate
    /// is 1; adjacency iff the standard symplectic form vanishes.
    pub fn symplectic(n: usize, q: u64) -> Graph {
        let dim = 2 * n;
        let mut points: Vec<Vec<u64>> = Vec::new();
        let mut vec = vec![0u64; dim];
        loop {
            // advance odometer
            let mut k = dim;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                vec[k] += 1;
                if vec[k] < q {
                    break;
                }
                vec[k] = 0;
                if k == 0 {
                    break;
                }
            }
            if vec.iter().all(|&x| x == 0) {
                break;
            }
            if vec.iter().find(|&&x| x != 0) == Some(&1) {
                points.push(vec.clone());
            }
        }
        let form = |x: &[u64], y: &[u64]| -> u64 {
            let mut acc: i128 = 0;
            for i in 0..n {
                acc += x[2 * i] as i128 * y[2 * i + 1] as i128
                    - x[2 * i + 1] as i128 * y[2 * i] as i128;
            }
            acc.rem_euclid(q as i128) as u64
        };
        let mut edges = Vec::new();
        for (a, x) in points.iter().enumerate() {
            for (b, y) in points.iter().enumerate().skip(a + 1) {
                if form(x, y) == 0 {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(points.len(), &edges)
    }

    /// Windmill: `n` copies of K_k sharing the universal vertex 0.
    pub fn windmill(k: usize, n: usize) -> Graph {
        let per = k - 1;
        let total = 1 + n * per;
        let mut edges = Vec::new();
        for c in 0..n {
            let base = 1 + c * per;
            for a in 0..per {
                edges.push((0, base + a));
                for b in (a + 1)..per {
                    edges.push((base + a, base + b));
                }
            }
        }
        Graph::from_edges(total, &edges)
    }

    /// Three-tower Hanoi graph on the 3^n disk placements; a move takes
    /// the smallest disk off two pegs.
    pub fn hanoi3(n: usize) -> Graph {
        let total = 3usize.pow(n as u32);
        let peg = |state: usize, disk: usize| state / 3usize.pow(disk as u32) % 3;
        let mut edges = Vec::new();
        for s in 0..total {
            for disk in 0..n {
                let from = peg(s, disk);
                // a disk moves only if no smaller disk sits on its source
                // or target peg
                for to in 0..3 {
                    if to == from {
                        continue;
                    }
                    if (0..disk).any(|d| peg(s, d) == from || peg(s, d) == to) {
                        continue;
                    }
                    let t = (s as isize + (to as isize - from as isize) * 3isize.pow(disk as u32))
                        as usize;
                    if s < t {
                        edges.push((s, t));
                    }
                }
            }
        }
        Graph::from_edges(total, &edges)
    }

    /// Tietze graph: the Petersen graph with one vertex expanded into a
    /// triangle.
    pub fn tietze() -> Graph {
        let p = petersen();
        expand_vertex_to_triangle(&p, 0)
    }

    fn expand_vertex_to_triangle(g: &Graph, v: usize) -> Graph {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        assert_eq!(nbrs.len(), 3, "expansion needs a degree-3 vertex");
        let relabel: Vec<Option<usize>> = (0..g.n())
            .map(|u| {
                use std::cmp::Ordering::*;
                match u.cmp(&v) {
                    Less => Some(u),
                    Equal => None,
                    Greater => Some(u - 1),
                }
            })
            .collect();
        let base = g.n() - 1;
        let mut edges = Vec::new();
        for (a, b) in g.edges() {
            if a != v && b != v {
                edges.push((relabel[a].unwrap(), relabel[b].unwrap()));
            }
        }
        for (i, &u) in nbrs.iter().enumerate() {
            edges.push((base + i, relabel[u].unwrap()));
        }
        edges.push((base, base + 1));
        edges.push((base + 1, base + 2));
        edges.push((base, base + 2));
        Graph::from_edges(base + 3, &edges)
    }

    /// L(K8) together with every strongly regular graph reachable from it
    /// by one Seidel switching over a degree-preserving candidate set
    /// (matchings and spanning cycle unions of the underlying K8),
    /// deduplicated up to isomorphism. Yields L(K8) plus the three Chang
    /// graphs.
    pub fn chang_family() -> Vec<Graph> {
        let lk8 = Graph::complete(8).line_graph();
        let edge_index: std::collections::HashMap<(usize, usize), usize> = Graph::complete(8)
            .edges()
            .into_iter()
            .enumerate()
            .map(|(k, e)| (e, k))
            .collect();
        // candidate switching sets: spanning subgraphs of K8 with all
        // degrees <= 2 and full cycle/matching structure
        let candidates: Vec<Vec<(usize, usize)>> = vec![
            vec![(0, 1), (2, 3), (4, 5), (6, 7)],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)],
            vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
            vec![(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)],
        ];
        let mut out = vec![lk8.clone()];
        let mut seen: Vec<Vec<u64>> = vec![crate::graph::iso::canonical_form(&lk8)];
        for cand in candidates {
            let set = crate::graph::VertexSet::from_iter(
                lk8.n(),
                cand.iter().map(|e| edge_index[e]),
            );
            let switched = lk8.seidel_switch(&set);
            if switched.is_regular() != Some(12) {
                continue;
            }
            let canon = crate::graph::iso::canonical_form(&switched);
            if !seen.contains(&canon) {
                seen.push(canon);
                out.push(switched);
            }
        }
        out
    }

    /// Shrikhande graph: Cayley graph on Z4 × Z4 with connection set
    /// {±(1,0), ±(0,1), ±(1,1)}.
    pub fn shrikhande() -> Graph {
        let idx = |a: usize, b: usize| a * 4 + b;
        let conn = [(1usize, 0usize), (0, 1), (1, 1), (3, 0), (0, 3), (3, 3)];
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for &(da, db) in &conn {
                    let (c, d) = ((a + da) % 4, (b + db) % 4);
                    let (u, v) = (idx(a, b), idx(c, d));
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
        }
        Graph::from_edges(16, &edges)
    }
}
