//! Exact max-cut by exhaustive bipartition search (n ≤ 24).

use super::InvariantError;
use crate::graph::Graph;

/// Maximum cut and surplus mc − |E|/2; vertex 0 is pinned to one side.
pub fn max_cut_exact(g: &Graph) -> Result<(u64, f64), InvariantError> {
    let n = g.n();
    if n > 24 {
        return Err(InvariantError::TooLarge(format!("max-cut search supports n <= 24, got {n}")));
    }
    if n == 0 {
        return Ok((0, 0.0));
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row(v)[0] as u32).collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = 0u32;
    for mask in 0..(1u32 << (n - 1)) {
        // cut edges: for v in S, neighbors outside S
        let mut cut = 0u32;
        let mut side = mask;
        while side != 0 {
            let v = side.trailing_zeros() as usize;
            side &= side - 1;
            cut += (rows[v] & (full & !mask)).count_ones();
        }
        best = best.max(cut);
    }
    let surplus = best as f64 - g.num_edges() as f64 / 2.0;
    Ok((best as u64, surplus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::named;

    #[test]
    fn small_cuts() {
        assert_eq!(max_cut_exact(&named::cycle(4)).unwrap(), (4, 2.0));
        assert_eq!(max_cut_exact(&Graph::complete(4)).unwrap(), (4, 1.0));
        let (mc, sp) = max_cut_exact(&named::petersen()).unwrap();
        assert_eq!(mc, 12);
        assert!((sp - 4.5).abs() < 1e-12);
    }

    #[test]
    fn surplus_is_nonnegative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
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
            let (_, sp) = max_cut_exact(&g).unwrap();
            assert!(sp >= 0.0);
        }
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(max_cut_exact(&Graph::empty(25)).is_err());
    }
}
