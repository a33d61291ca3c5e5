//! Isomorphism testing via iterated color refinement with
//! individualize-and-refine backtracking. Exact, intended for n ≤ 64.

use super::Graph;
use serde::{Deserialize, Serialize};

/// Stable 1-dimensional color refinement. Color ids are assigned in
/// signature-sorted order, so corresponding vertices of isomorphic graphs
/// receive equal colors.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.n();
    if n == 0 {
        return;
    }
    loop {
        let ncolors = colors.iter().max().map(|&c| c as usize + 1).unwrap_or(0);
        let mut sigs: Vec<(Vec<u32>, usize)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut counts = vec![0u32; ncolors];
            for u in g.neighbors(v) {
                counts[colors[u] as usize] += 1;
            }
            let mut sig = Vec::with_capacity(ncolors + 1);
            sig.push(colors[v]);
            sig.extend(counts);
            sigs.push((sig, v));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].0.cmp(&sigs[b].0));
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for (k, &v) in order.iter().enumerate() {
            if k > 0 && sigs[order[k - 1]].0 != sigs[v].0 {
                next += 1;
            }
            new_colors[v] = next;
        }
        if next as usize + 1 == ncolors && new_colors == *colors {
            return;
        }
        let stable = next as usize + 1 == ncolors;
        *colors = new_colors;
        if stable {
            return;
        }
    }
}

/// Pack the adjacency of `g` relabeled by `perm` (vertex v -> perm[v])
/// into an upper-triangle bitstring.
fn encode_relabeled(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(inv[i], inv[j]) {
                out[k / 64] |= 1 << (k % 64);
            }
            k += 1;
        }
    }
    out
}

/// Canonical form: the minimum relabeled adjacency encoding over the
/// individualize-and-refine search tree. Equal canonical forms iff
/// isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let (form, _) = canonical_labeling(g);
    form
}

/// Isomorphism-invariant initial coloring: degree plus the sorted
/// common-neighbor counts towards neighbors and non-neighbors. Shatters
/// regular graphs that plain degree refinement cannot.
fn invariant_colors(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut with_nbrs: Vec<usize> =
                g.neighbors(v).map(|u| g.common_neighbors(u, v)).collect();
            with_nbrs.sort_unstable();
            let mut sig = vec![g.degree(v)];
            sig.extend(with_nbrs);
            (sig, v)
        })
        .collect();
    sigs.sort();
    let mut colors = vec![0u32; n];
    let mut next = 0u32;
    for k in 0..n {
        if k > 0 && sigs[k].0 != sigs[k - 1].0 {
            next += 1;
        }
        colors[sigs[k].1] = next;
    }
    colors
}

/// Canonical form together with one permutation achieving it.
pub fn canonical_labeling(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let mut colors = invariant_colors(g);
    refine(g, &mut colors);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    canon_search(g, colors, &mut best);
    best.expect("canonical search yields at least one leaf")
}

fn canon_search(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = g.n();
    // find the first non-singleton cell (smallest color id)
    let ncolors = colors.iter().max().map(|&c| c as usize + 1).unwrap_or(0);
    let mut cell_sizes = vec![0u32; ncolors];
    for &c in &colors {
        cell_sizes[c as usize] += 1;
    }
    let target = (0..ncolors).find(|&c| cell_sizes[c] > 1);
    match target {
        None => {
            // discrete: colors are a permutation
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let enc = encode_relabeled(g, &perm);
            if best.as_ref().is_none_or(|(b, _)| enc < *b) {
                *best = Some((enc, perm));
            }
        }
        Some(cell) => {
            for v in 0..n {
                if colors[v] as usize != cell {
                    continue;
                }
                let mut child = colors.clone();
                // individualize v: it keeps the cell id as a singleton,
                // everything at or above the cell shifts up
                for u in 0..n {
                    if child[u] as usize >= cell && u != v {
                        child[u] += 1;
                    }
                }
                refine(g, &mut child);
                canon_search(g, child, best);
            }
        }
    }
}

/// Isomorphism test; returns a witness permutation `p` with
/// `p[v_g] = v_h` when the graphs are isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.num_edges() != h.num_edges() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let mut budget = u64::MAX;
    let found = search_isomorphism(g, h, &[], &mut budget)?;
    debug_assert!(verify_witness(g, h, &found));
    Some(found)
}

/// Verify a claimed isomorphism by edge-set equality.
pub fn verify_witness(g: &Graph, h: &Graph, perm: &[usize]) -> bool {
    if g.n() != h.n() || perm.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &p in perm {
        if p >= g.n() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if g.has_edge(u, v) != h.has_edge(perm[u], perm[v]) {
                return false;
            }
        }
    }
    true
}

/// Backtracking isomorphism search with simultaneous refinement on both
/// graphs. `forced` pins vertex pairs (v in g -> w in h). `budget` counts
/// search nodes; `None` is returned both when no isomorphism exists and
/// when the budget runs out, so exhaust-sensitive callers must check the
/// budget afterwards.
fn search_isomorphism(
    g: &Graph,
    h: &Graph,
    forced: &[(usize, usize)],
    budget: &mut u64,
) -> Option<Vec<usize>> {
    let n = g.n();
    if h.n() != n {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let mut cg = vec![0u32; n];
    let mut ch = vec![0u32; n];
    for (k, &(v, w)) in forced.iter().enumerate() {
        cg[v] = k as u32 + 1;
        ch[w] = k as u32 + 1;
    }
    iso_node(g, h, cg, ch, budget)
}

/// Joint refinement of both colorings; colors comparable across graphs.
/// Returns false when the color distributions diverge (no isomorphism
/// respecting the current assignment).
fn joint_refine(g: &Graph, h: &Graph, cg: &mut Vec<u32>, ch: &mut Vec<u32>) -> bool {
    let n = g.n();
    loop {
        let ncolors =
            cg.iter().chain(ch.iter()).max().map(|&c| c as usize + 1).unwrap_or(0);
        let sig = |graph: &Graph, colors: &[u32], v: usize| {
            let mut counts = vec![0u32; ncolors];
            for u in graph.neighbors(v) {
                counts[colors[u] as usize] += 1;
            }
            let mut s = Vec::with_capacity(ncolors + 1);
            s.push(colors[v]);
            s.extend(counts);
            s
        };
        let sg: Vec<Vec<u32>> = (0..n).map(|v| sig(g, cg, v)).collect();
        let sh: Vec<Vec<u32>> = (0..n).map(|v| sig(h, ch, v)).collect();
        let mut all: Vec<&Vec<u32>> = sg.iter().chain(sh.iter()).collect();
        all.sort();
        all.dedup();
        let id_of = |s: &Vec<u32>| all.binary_search(&s).unwrap() as u32;
        let mut ng: Vec<u32> = sg.iter().map(id_of).collect();
        let mut nh: Vec<u32> = sh.iter().map(id_of).collect();
        // distributions must match
        let mut hist_g = vec![0u32; all.len()];
        let mut hist_h = vec![0u32; all.len()];
        for &c in &ng {
            hist_g[c as usize] += 1;
        }
        for &c in &nh {
            hist_h[c as usize] += 1;
        }
        if hist_g != hist_h {
            return false;
        }
        let stable = ng == *cg && nh == *ch;
        std::mem::swap(cg, &mut ng);
        std::mem::swap(ch, &mut nh);
        if stable {
            return true;
        }
    }
}

fn iso_node(
    g: &Graph,
    h: &Graph,
    mut cg: Vec<u32>,
    mut ch: Vec<u32>,
    budget: &mut u64,
) -> Option<Vec<usize>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if !joint_refine(g, h, &mut cg, &mut ch) {
        return None;
    }
    let n = g.n();
    let ncolors = cg.iter().max().map(|&c| c as usize + 1).unwrap_or(0);
    let mut cell_sizes = vec![0u32; ncolors];
    for &c in &cg {
        cell_sizes[c as usize] += 1;
    }
    let target = (0..ncolors).find(|&c| cell_sizes[c] > 1);
    match target {
        None => {
            // both discrete with equal color sets: map by color
            let mut perm = vec![0usize; n];
            let mut pos = vec![usize::MAX; ncolors];
            for (w, &c) in ch.iter().enumerate() {
                pos[c as usize] = w;
            }
            for (v, &c) in cg.iter().enumerate() {
                perm[v] = pos[c as usize];
            }
            if verify_witness(g, h, &perm) {
                Some(perm)
            } else {
                None
            }
        }
        Some(cell) => {
            let v = (0..n).find(|&v| cg[v] as usize == cell).unwrap();
            let individualize = |colors: &[u32], x: usize| -> Vec<u32> {
                colors
                    .iter()
                    .enumerate()
                    .map(|(u, &c)| if u == x { cell as u32 } else if c as usize >= cell { c + 1 } else { c })
                    .collect()
            };
            let cg2 = individualize(&cg, v);
            for w in 0..n {
                if ch[w] as usize != cell {
                    continue;
                }
                let ch2 = individualize(&ch, w);
                if let Some(found) = iso_node(g, h, cg2.clone(), ch2, budget) {
                    return Some(found);
                }
                if *budget == 0 {
                    return None;
                }
            }
            None
        }
    }
}

/// Transitivity flags; `None` means undecided within budget.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub vertex_transitive: Option<bool>,
    pub edge_transitive: Option<bool>,
    pub self_complementary: Option<bool>,
}

/// Decide vertex/edge transitivity and self-complementarity by
/// automorphism search. `budget` bounds backtracking nodes per query;
/// exhaustion yields `None` flags, never a wrong answer.
pub fn symmetry_report(g: &Graph, budget: u64) -> SymmetryReport {
    let n = g.n();
    let mut vt: Option<bool> = Some(true);
    if n > 1 {
        // degree check first: vertex-transitive graphs are regular
        if g.is_regular().is_none() {
            vt = Some(false);
        } else {
            'outer: for v in 1..n {
                let mut b = budget;
                match search_isomorphism(g, g, &[(0, v)], &mut b) {
                    Some(_) => {}
                    None if b == 0 => {
                        vt = None;
                        break 'outer;
                    }
                    None => {
                        vt = Some(false);
                        break 'outer;
                    }
                }
            }
        }
    }
    let edges = g.edges();
    let mut et: Option<bool> = Some(true);
    if let Some(&(a0, b0)) = edges.first() {
        'eouter: for &(a, b) in edges.iter().skip(1) {
            let mut hit = false;
            for (x, y) in [(a, b), (b, a)] {
                let mut bud = budget;
                if search_isomorphism(g, g, &[(a0, x), (b0, y)], &mut bud).is_some() {
                    hit = true;
                    break;
                }
                if bud == 0 {
                    et = None;
                    break 'eouter;
                }
            }
            if !hit {
                et = Some(false);
                break 'eouter;
            }
        }
    }
    let mut b = budget;
    let comp = g.complement();
    let sc = if g.num_edges() != comp.num_edges() {
        Some(false)
    } else {
        match search_isomorphism(g, &comp, &[], &mut b) {
            Some(_) => Some(true),
            None if b == 0 => None,
            None => Some(false),
        }
    };
    SymmetryReport { vertex_transitive: vt, edge_transitive: et, self_complementary: sc }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::named;
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    #[test]
    fn c5_is_self_complementary() {
        let c5 = named::cycle(5);
        let w = is_isomorphic(&c5, &c5.complement()).expect("C5 ~ complement(C5)");
        assert!(verify_witness(&c5, &c5.complement(), &w));
    }

    #[test]
    fn p4_not_isomorphic_to_c4() {
        let p4 = named::path(4);
        let c4 = named::cycle(4);
        assert!(is_isomorphic(&p4, &c4).is_none());
    }

    #[test]
    fn relabeled_graphs_are_isomorphic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            let w = is_isomorphic(&g, &h).expect("relabelings are isomorphic");
            assert!(verify_witness(&g, &h, &w));
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }

    #[test]
    fn canonical_form_separates_nonisomorphic() {
        let p4 = named::path(4);
        let s3 = named::star(3);
        assert_ne!(canonical_form(&p4), canonical_form(&s3));
    }

    #[test]
    fn petersen_is_vertex_and_edge_transitive() {
        let rep = symmetry_report(&named::petersen(), 1 << 20);
        assert_eq!(rep.vertex_transitive, Some(true));
        assert_eq!(rep.edge_transitive, Some(true));
        assert_eq!(rep.self_complementary, Some(false));
    }

    #[test]
    fn star_is_edge_but_not_vertex_transitive() {
        let rep = symmetry_report(&named::star(4), 1 << 20);
        assert_eq!(rep.vertex_transitive, Some(false));
        assert_eq!(rep.edge_transitive, Some(true));
    }

    #[test]
    fn tietze_is_neither() {
        let rep = symmetry_report(&named::tietze(), 1 << 20);
        assert_eq!(rep.vertex_transitive, Some(false));
        assert_eq!(rep.edge_transitive, Some(false));
    }

    #[test]
    fn paley_13_is_self_complementary_and_transitive() {
        let rep = symmetry_report(&named::paley(13), 1 << 20);
        assert_eq!(rep.self_complementary, Some(true));
        assert_eq!(rep.vertex_transitive, Some(true));
    }
}
