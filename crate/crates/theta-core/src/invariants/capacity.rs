//! Shannon-capacity bounding: independence numbers of strong powers for
//! the lower bound, ϑ for the upper bound, plus a randomized plateau
//! search for large independent sets in big product graphs.

use super::{clique, Budget};
use crate::graph::{iso, Graph, VertexSet};
use crate::theta::{lovasz_theta, ThetaError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// One strong-power row of the capacity table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PowerRow {
    pub k: u32,
    pub vertices: usize,
    pub independence_lower: u64,
    pub exact: bool,
    pub root: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CapacityReport {
    pub per_k: Vec<PowerRow>,
    /// Best k-th root of an achieved independent set size.
    pub lower: f64,
    pub lower_witness: (u32, u64),
    /// ϑ(G), always an upper bound on the capacity.
    pub upper_theta: f64,
    pub self_complementary: bool,
    /// √n lower bound applied (self-complementary graphs).
    pub sc_sqrt_lower_applied: bool,
    /// 16·n^{(α−1)/(α+1)} upper bound (self-complementary graphs, α exact).
    pub sc_extra_upper: Option<f64>,
}

/// Largest product size attempted for the strong powers.
const MAX_POWER_VERTICES: usize = 2048;
/// Product size above which branch and bound yields to plateau search.
const LOCAL_SEARCH_THRESHOLD: usize = 120;

pub fn capacity_report(
    g: &Graph,
    k_max: u32,
    budget: Budget,
    seed: u64,
) -> Result<CapacityReport, ThetaError> {
    assert!(k_max >= 1);
    let n = g.n();
    let theta = lovasz_theta(g)?.value;
    let mut per_k = Vec::new();
    let mut lower = 0.0f64;
    let mut witness = (1u32, 0u64);
    let mut alpha_exact: Option<u64> = None;
    let mut power = g.clone();
    for k in 1..=k_max {
        if k > 1 {
            if power.n().saturating_mul(n) > MAX_POWER_VERTICES {
                break;
            }
            power = power.strong_product(g);
        }
        let (size, exact) = if power.n() <= LOCAL_SEARCH_THRESHOLD {
            let out = clique::max_clique(&power.complement(), budget);
            (out.lower, out.exact)
        } else {
            let found = find_large_independent_set(&power, None, budget, seed);
            (found.len() as u64, false)
        };
        if k == 1 && exact {
            alpha_exact = Some(size);
        }
        let root = (size as f64).powf(1.0 / k as f64);
        if root > lower {
            lower = root;
            witness = (k, size);
        }
        per_k.push(PowerRow { k, vertices: power.n(), independence_lower: size, exact, root });
    }
    let self_complementary = iso::is_isomorphic(g, &g.complement()).is_some();
    let mut sc_sqrt_lower_applied = false;
    if self_complementary {
        let sqrt_n = (n as f64).sqrt();
        if sqrt_n > lower {
            lower = sqrt_n;
            sc_sqrt_lower_applied = true;
        }
    }
    let sc_extra_upper = (self_complementary && alpha_exact.is_some()).then(|| {
        let a = alpha_exact.unwrap() as f64;
        16.0 * (n as f64).powf((a - 1.0) / (a + 1.0))
    });
    Ok(CapacityReport {
        per_k,
        lower,
        lower_witness: witness,
        upper_theta: theta,
        self_complementary,
        sc_sqrt_lower_applied,
        sc_extra_upper,
    })
}

/// Randomized greedy construction plus (1,2)-swap plateau search for a
/// large independent set. Deterministic for a fixed seed. Stops at
/// `target` when given, else at budget exhaustion, and returns the best
/// set found (verified independent).
pub fn find_large_independent_set(
    g: &Graph,
    target: Option<usize>,
    budget: Budget,
    seed: u64,
) -> VertexSet {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = Instant::now();
    let max_millis = budget.max_millis.unwrap_or(10_000);
    let max_moves = budget.max_nodes.unwrap_or(u64::MAX);

    let mut conflicts: Vec<u32> = vec![0; n];
    let mut in_set = vec![false; n];
    let mut size = 0usize;
    let mut best: Vec<usize> = Vec::new();
    let mut moves = 0u64;

    let mut order: Vec<usize> = (0..n).collect();

    macro_rules! add {
        ($v:expr) => {{
            let v = $v;
            debug_assert!(!in_set[v] && conflicts[v] == 0);
            in_set[v] = true;
            size += 1;
            for u in g.neighbors(v) {
                conflicts[u] += 1;
            }
        }};
    }
    macro_rules! remove {
        ($v:expr) => {{
            let v = $v;
            debug_assert!(in_set[v]);
            in_set[v] = false;
            size -= 1;
            for u in g.neighbors(v) {
                conflicts[u] -= 1;
            }
        }};
    }

    'restarts: loop {
        // randomized greedy build
        for v in 0..n {
            if in_set[v] {
                remove!(v);
            }
        }
        order.shuffle(&mut rng);
        for &v in &order {
            if conflicts[v] == 0 && !in_set[v] {
                add!(v);
            }
        }
        let mut stale = 0u32;
        loop {
            moves += 1;
            if size > best.len() {
                best = (0..n).filter(|&v| in_set[v]).collect();
                stale = 0;
                if target.is_some_and(|t| best.len() >= t) {
                    break 'restarts;
                }
            }
            if moves >= max_moves || start.elapsed().as_millis() as u64 >= max_millis {
                break 'restarts;
            }
            // grab any free vertex first
            let free: Vec<usize> =
                (0..n).filter(|&v| !in_set[v] && conflicts[v] == 0).collect();
            if !free.is_empty() {
                add!(*free.choose(&mut rng).unwrap());
                continue;
            }
            // plateau: swap a one-conflict vertex with its set neighbor
            let ones: Vec<usize> = (0..n).filter(|&v| !in_set[v] && conflicts[v] == 1).collect();
            if !ones.is_empty() && stale < 4000 {
                let v = *ones.choose(&mut rng).unwrap();
                let u = g.neighbors(v).find(|&u| in_set[u]).expect("conflict neighbor");
                remove!(u);
                add!(v);
                stale += 1;
                continue;
            }
            // kick: drop a few vertices and rebuild greedily
            stale = 0;
            let members: Vec<usize> = (0..n).filter(|&v| in_set[v]).collect();
            if members.len() <= 2 {
                continue 'restarts;
            }
            let drop_count = 2 + rng.gen_range(0..3usize);
            for v in members.choose_multiple(&mut rng, drop_count) {
                remove!(*v);
            }
        }
    }

    // verify independence before returning
    for (a, &u) in best.iter().enumerate() {
        for &v in best.iter().skip(a + 1) {
            assert!(!g.has_edge(u, v), "plateau search produced a dependent set");
        }
    }
    VertexSet::from_iter(n, best.iter().copied())
}
