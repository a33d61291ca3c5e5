//! Exact graph coloring: DSATUR upper bound plus branch and bound with a
//! clique lower bound.

use super::{clique, Budget, SearchOutcome};
use crate::graph::Graph;
use std::time::Instant;

/// Greedy DSATUR coloring; returns (color count, colors).
pub fn dsatur(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut saturation: Vec<std::collections::BTreeSet<usize>> =
        vec![std::collections::BTreeSet::new(); n];
    let mut used = 0usize;
    for _ in 0..n {
        // max saturation, ties by degree then index
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (saturation[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut c = 0;
        while saturation[v].contains(&c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c + 1);
        for u in g.neighbors(v) {
            saturation[u].insert(c);
        }
    }
    (used, colors)
}

struct ColorSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    complete: bool,
}

impl ColorSearch<'_> {
    fn out_of_budget(&self) -> bool {
        if let Some(limit) = self.budget.max_nodes {
            if self.nodes >= limit {
                return true;
            }
        }
        if let Some(ms) = self.budget.max_millis {
            if self.nodes % 256 == 0 && self.start.elapsed().as_millis() as u64 >= ms {
                return true;
            }
        }
        false
    }

    fn descend(&mut self, colors: &mut Vec<usize>, colored: usize, used: usize, lower: usize) {
        if used >= self.best {
            return;
        }
        if colored == self.g.n() {
            self.best = used;
            self.best_colors = colors.clone();
            return;
        }
        if self.out_of_budget() {
            self.complete = false;
            return;
        }
        self.nodes += 1;
        // most saturated uncolored vertex
        let v = self
            .order
            .iter()
            .copied()
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen = 0u128;
                for u in self.g.neighbors(v) {
                    if colors[u] != usize::MAX {
                        seen |= 1 << (colors[u] as u32 % 128);
                    }
                }
                (seen.count_ones(), self.g.degree(v))
            })
            .unwrap();
        let mut forbidden = vec![false; used + 1];
        for u in self.g.neighbors(v) {
            if colors[u] != usize::MAX && colors[u] <= used {
                forbidden[colors[u]] = true;
            }
        }
        for c in 0..=used.min(self.best - 1) {
            let new_used = if c == used { used + 1 } else { used };
            if c < used && forbidden[c] {
                continue;
            }
            if new_used >= self.best {
                continue;
            }
            colors[v] = c;
            self.descend(colors, colored + 1, new_used, lower);
            colors[v] = usize::MAX;
            if !self.complete || self.best == lower {
                return;
            }
        }
    }
}

/// Chromatic number with certified bounds under budget.
pub fn chromatic_number(g: &Graph, budget: Budget) -> SearchOutcome {
    let start = Instant::now();
    let n = g.n();
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
    let (ub, greedy_colors) = dsatur(g);
    // cheap clique lower bound
    let clique_budget = Budget {
        max_nodes: Some(budget.max_nodes.map_or(200_000, |b| b / 4 + 1)),
        max_millis: budget.max_millis.map(|ms| ms / 4 + 1),
    };
    let lb = clique::max_clique(g, clique_budget).lower.max(1);
    let mut search = ColorSearch {
        g,
        order: {
            let mut o: Vec<usize> = (0..n).collect();
            o.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
            o
        },
        best: ub,
        best_colors: greedy_colors,
        nodes: 0,
        budget,
        start,
        complete: true,
    };
    if (lb as usize) < ub {
        let mut colors = vec![usize::MAX; n];
        search.descend(&mut colors, 0, 0, lb as usize);
    }
    let exact = search.complete || search.best == lb as usize;
    SearchOutcome {
        lower: if exact { search.best as u64 } else { lb },
        upper: search.best as u64,
        exact,
        witness: search.best_colors,
        nodes: search.nodes,
        budget_hit: !search.complete,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
