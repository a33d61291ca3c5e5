//! Exact permanents of 0/1 matrices by Ryser's inclusion–exclusion with
//! Gray-code column updates.

use super::InvariantError;
use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::Zero;

/// Largest supported side: row-sum products stay inside i128
/// (26^26 < 2^127).
pub const MAX_PERMANENT_SIDE: usize = 26;

/// Permanent of a 0/1 matrix given as bitmask rows over `n` columns.
pub fn permanent(rows: &[u64], n: usize) -> Result<BigInt, InvariantError> {
    if n != rows.len() {
        return Err(InvariantError::TooLarge("matrix must be square".into()));
    }
    if n > MAX_PERMANENT_SIDE {
        return Err(InvariantError::TooLarge(format!(
            "permanent supports side <= {MAX_PERMANENT_SIDE}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    // per(A) = (-1)^n Σ_{S} (-1)^{|S|} ∏_i Σ_{j∈S} a_ij
    let mut sums = vec![0i128; n];
    let mut total = BigInt::zero();
    let mut acc: i128 = 0;
    let mut gray: u64 = 0;
    for g in 1u64..(1u64 << n) {
        let next = g ^ (g >> 1);
        let flipped = (gray ^ next).trailing_zeros() as usize;
        let add = next >> flipped & 1 == 1;
        for (i, s) in sums.iter_mut().enumerate() {
            if rows[i] >> flipped & 1 == 1 {
                *s += if add { 1 } else { -1 };
            }
        }
        gray = next;
        let mut prod: i128 = 1;
        for &s in &sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod *= s;
        }
        let term = if next.count_ones() % 2 == 1 { -prod } else { prod };
        match acc.checked_add(term) {
            Some(v) => acc = v,
            None => {
                total += acc;
                acc = term;
            }
        }
    }
    total += acc;
    if n % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

/// Permanent of the adjacency matrix of `g` (counts perfect matchings of
/// the bipartite double).
pub fn permanent_of_adjacency(g: &Graph) -> Result<BigInt, InvariantError> {
    let n = g.n();
    if n > MAX_PERMANENT_SIDE {
        return Err(InvariantError::TooLarge(format!(
            "adjacency permanent supports n <= {MAX_PERMANENT_SIDE}, got {n}"
        )));
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0] & ((1u64 << n) - 1).max(1)).collect();
    permanent(&rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::named;

    fn brute_force(rows: &[u64], n: usize) -> i128 {
        fn rec(rows: &[u64], used: u64, i: usize, n: usize) -> i128 {
            if i == n {
                return 1;
            }
            let mut acc = 0;
            for j in 0..n {
                if used >> j & 1 == 0 && rows[i] >> j & 1 == 1 {
                    acc += rec(rows, used | 1 << j, i + 1, n);
                }
            }
            acc
        }
        rec(rows, 0, 0, n)
    }

    #[test]
    fn tiny_matrices() {
        assert_eq!(permanent(&[0b10, 0b01], 2).unwrap(), BigInt::from(1));
        // A(K2) = [[0,1],[1,0]]
        assert_eq!(permanent_of_adjacency(&Graph::complete(2)).unwrap(), BigInt::from(1));
        // C4: two rotations plus the two products of opposite transpositions
        let rows: Vec<u64> = (0..4).map(|v| named::cycle(4).row(v)[0]).collect();
        assert_eq!(BigInt::from(brute_force(&rows, 4)), BigInt::from(4));
        assert_eq!(permanent_of_adjacency(&named::cycle(4)).unwrap(), BigInt::from(4));
    }

    #[test]
    fn matches_brute_force_on_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.gen_range(0..=7usize);
            let rows: Vec<u64> =
                (0..n).map(|_| rng.gen_range(0..(1u64 << n).max(1))).collect();
            assert_eq!(
                permanent(&rows, n).unwrap(),
                BigInt::from(brute_force(&rows, n)),
                "n={n} rows={rows:?}"
            );
        }
    }

    #[test]
    fn van_der_waerden_check_on_c5() {
        // per(A(C5)) = 2 >= 5!·(2/5)^5 ≈ 1.2288
        let p = permanent_of_adjacency(&named::cycle(5)).unwrap();
        assert_eq!(p, BigInt::from(2));
        let bound = 120.0 * (2.0f64 / 5.0).powi(5);
        assert!(2.0 >= bound && bound > 1.2287 && bound < 1.2289);
    }

    #[test]
    fn all_ones_is_factorial() {
        let n = 9usize;
        let rows = vec![(1u64 << n) - 1; n];
        let fact: BigInt = (1..=n as i64).map(BigInt::from).product();
        assert_eq!(permanent(&rows, n).unwrap(), fact);
    }

    #[test]
    fn refuses_large_sides() {
        assert!(permanent(&vec![0u64; 27], 27).is_err());
    }
}
