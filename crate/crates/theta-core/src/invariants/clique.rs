//! Branch-and-bound maximum clique over bitset adjacency with greedy
//! coloring upper bounds. Runs within a node budget and degrades to
//! certified bounds when the budget is hit.

use super::{Budget, SearchOutcome};
use crate::graph::Graph;
use std::time::Instant;

struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn full(n: usize, words: usize) -> Self {
        let mut w = vec![u64::MAX; words];
        let extra = words * 64 - n;
        if extra > 0 {
            *w.last_mut().unwrap() >>= extra;
        }
        Bitset { words: w }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

}

/// Exact (or budget-bounded) maximum clique search.
pub struct MaxClique<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    complete: bool,
    root_bound: usize,
}

impl<'a> MaxClique<'a> {
    pub fn new(g: &'a Graph, budget: Budget) -> Self {
        // descending-degree order gives sharper early colorings
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        MaxClique {
            g,
            order,
            best: Vec::new(),
            nodes: 0,
            budget,
            start: Instant::now(),
            complete: true,
            root_bound: g.n(),
        }
    }

    pub fn run(mut self) -> SearchOutcome {
        let n = self.g.n();
        if n == 0 {
            return SearchOutcome {
                lower: 0,
                upper: 0,
                exact: true,
                witness: Vec::new(),
                nodes: 0,
                budget_hit: false,
                elapsed_ms: 0,
            };
        }
        let words = self.g.row(0).len();
        let p = Bitset::full(n, words);
        // root coloring also serves as a global upper bound
        let (order, colors) = self.color_sort(&p);
        self.root_bound = colors.last().copied().unwrap_or(0);
        let mut r = Vec::new();
        self.expand(&p, order, colors, &mut r);
        let exact = self.complete;
        SearchOutcome {
            lower: self.best.len() as u64,
            upper: if exact { self.best.len() as u64 } else { self.root_bound as u64 },
            exact,
            witness: {
                let mut w = self.best.clone();
                w.sort_unstable();
                w
            },
            nodes: self.nodes,
            budget_hit: !exact,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if let Some(limit) = self.budget.max_nodes {
            if self.nodes >= limit {
                return true;
            }
        }
        if let Some(ms) = self.budget.max_millis {
            // wall-clock checks are cheap enough every few hundred nodes
            if self.nodes % 256 == 0 && self.start.elapsed().as_millis() as u64 >= ms {
                return true;
            }
        }
        false
    }

    /// Greedy sequential coloring of `p` in the stored vertex order;
    /// returns vertices sorted by color with their color numbers
    /// (1-based), so the tail has the largest bound.
    fn color_sort(&self, p: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in &self.order {
            if !p.contains(v) {
                continue;
            }
            let row = self.g.row(v);
            let slot = classes
                .iter_mut()
                .position(|class| class.iter().all(|&u| row[u / 64] >> (u % 64) & 1 == 0));
            match slot {
                Some(k) => classes[k].push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut verts = Vec::with_capacity(p.count());
        let mut colors = Vec::with_capacity(verts.capacity());
        for (k, class) in classes.iter().enumerate() {
            for &v in class {
                verts.push(v);
                colors.push(k + 1);
            }
        }
        (verts, colors)
    }

    fn expand(&mut self, p: &Bitset, verts: Vec<usize>, colors: Vec<usize>, r: &mut Vec<usize>) {
        if self.out_of_budget() {
            self.complete = false;
            return;
        }
        // iterate candidates from the highest color down
        let mut p = Bitset { words: p.words.clone() };
        for k in (0..verts.len()).rev() {
            if r.len() + colors[k] <= self.best.len() {
                return;
            }
            self.nodes += 1;
            let v = verts[k];
            r.push(v);
            let row = self.g.row(v);
            let mut next = Bitset { words: p.words.clone() };
            for (w, &rw) in next.words.iter_mut().zip(row.iter()) {
                *w &= rw;
            }
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                let (nverts, ncolors) = self.color_sort(&next);
                if r.len() + ncolors.last().copied().unwrap_or(0) > self.best.len() {
                    self.expand(&next, nverts, ncolors, r);
                }
            }
            r.pop();
            p.remove(v);
            if !self.complete {
                return;
            }
        }
    }
}

/// Maximum clique of `g` (bounds-certified under budget).
pub fn max_clique(g: &Graph, budget: Budget) -> SearchOutcome {
    MaxClique::new(g, budget).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::named;
    use rand::{Rng, SeedableRng};

    #[test]
    fn clique_in_small_graphs() {
        assert_eq!(max_clique(&Graph::complete(5), Budget::unlimited()).value(), Some(5));
        assert_eq!(max_clique(&named::cycle(5), Budget::unlimited()).value(), Some(2));
        assert_eq!(max_clique(&named::petersen().complement(), Budget::unlimited()).value(), Some(4));
    }

    #[test]
    fn clique_matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            let out = max_clique(&g, Budget::unlimited());
            assert!(out.exact);
            // brute force over all subsets
            let mut best = 0u32;
            for mask in 0u32..(1 << n) {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let ok = verts
                    .iter()
                    .enumerate()
                    .all(|(a, &u)| verts.iter().skip(a + 1).all(|&v| g.has_edge(u, v)));
                if ok {
                    best = best.max(mask.count_ones());
                }
            }
            assert_eq!(out.value(), Some(best as u64));
            // witness is a real clique
            let w = &out.witness;
            for (a, &u) in w.iter().enumerate() {
                for &v in w.iter().skip(a + 1) {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn budget_returns_bounds() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let mut edges = Vec::new();
        for u in 0..50usize {
            for v in (u + 1)..50 {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(50, &edges);
        let out = max_clique(&g, Budget::nodes(5));
        assert!(out.budget_hit);
        assert!(out.lower <= out.upper);
        let full = max_clique(&g, Budget::unlimited());
        assert!(full.exact);
        assert!(out.lower <= full.lower && full.upper <= out.upper);
    }
}
