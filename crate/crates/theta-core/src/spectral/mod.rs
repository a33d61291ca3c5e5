//! Floating and exact spectra of the four graph matrices, cospectrality
//! decisions, inertia/energy statistics, and spectrum-derived counts.

pub mod charpoly;
pub mod enumerate;

pub use charpoly::{char_poly_exact, cospectral, CospectralReport, IntPolynomial};

use crate::graph::Graph;
use crate::linalg::{sym_eigenvalues, Mat, Real};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// The four matrices associated with a graph. `NormL` uses the
/// convention that an isolated vertex contributes diagonal 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    L,
    Q,
    NormL,
}

pub const ALL_KINDS: [MatrixKind; 4] =
    [MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NormL];

/// Dense float matrix of the chosen kind.
pub fn graph_matrix<F: Real>(g: &Graph, kind: MatrixKind) -> Mat<F> {
    let n = g.n();
    Mat::from_fn(n, n, |i, j| {
        let a = g.has_edge(i, j);
        match kind {
            MatrixKind::A => {
                if a {
                    F::one()
                } else {
                    F::zero()
                }
            }
            MatrixKind::L => {
                if i == j {
                    F::of(g.degree(i) as f64)
                } else if a {
                    -F::one()
                } else {
                    F::zero()
                }
            }
            MatrixKind::Q => {
                if i == j {
                    F::of(g.degree(i) as f64)
                } else if a {
                    F::one()
                } else {
                    F::zero()
                }
            }
            MatrixKind::NormL => {
                if i == j {
                    if g.degree(i) > 0 {
                        F::one()
                    } else {
                        F::zero()
                    }
                } else if a {
                    -F::one() / F::of((g.degree(i) as f64 * g.degree(j) as f64).sqrt())
                } else {
                    F::zero()
                }
            }
        }
    })
}

/// Full real spectrum, sorted by the usual convention for each kind:
/// A and Q descending, L and NormL ascending.
pub fn eigenvalues(g: &Graph, kind: MatrixKind) -> Vec<f64> {
    let mut vals = sym_eigenvalues(&graph_matrix::<f64>(g, kind));
    match kind {
        MatrixKind::A | MatrixKind::Q => vals.reverse(),
        MatrixKind::L | MatrixKind::NormL => {}
    }
    vals
}

/// All four spectra of a graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// λ₁ ≥ … ≥ λ_n
    pub adjacency: Vec<f64>,
    /// μ₁ ≤ … ≤ μ_n
    pub laplacian: Vec<f64>,
    /// ν₁ ≥ … ≥ ν_n
    pub signless: Vec<f64>,
    /// δ₁ ≤ … ≤ δ_n
    pub normalized: Vec<f64>,
}

pub fn spectrum_report(g: &Graph) -> SpectrumReport {
    SpectrumReport {
        adjacency: eigenvalues(g, MatrixKind::A),
        laplacian: eigenvalues(g, MatrixKind::L),
        signless: eigenvalues(g, MatrixKind::Q),
        normalized: eigenvalues(g, MatrixKind::NormL),
    }
}

/// Inertia of the adjacency matrix plus the positive/negative square
/// energies.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InertiaEnergy {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
    pub s_plus: f64,
    pub s_minus: f64,
}

/// Counts come from exact sign bookkeeping on the integer characteristic
/// polynomial (sign variations are exact for all-real-roots polynomials),
/// so eigenvalues numerically near zero cannot be misclassified; the
/// square energies use the float spectrum.
pub fn inertia_and_energies(g: &Graph) -> InertiaEnergy {
    let p = char_poly_exact(g, MatrixKind::A);
    let n_zero = p.zero_root_multiplicity();
    let n_plus = p.sign_variations();
    let n_minus = p.reflected().sign_variations();
    debug_assert_eq!(n_plus + n_zero + n_minus, g.n());
    let vals = eigenvalues(g, MatrixKind::A);
    let mut s_plus = 0.0;
    let mut s_minus = 0.0;
    // split the float spectrum using the exact counts
    for (k, &v) in vals.iter().enumerate() {
        if k < n_plus {
            s_plus += v * v;
        } else if k >= n_plus + n_zero {
            s_minus += v * v;
        }
    }
    InertiaEnergy { n_plus, n_zero, n_minus, s_plus, s_minus }
}

/// Exact spanning-tree count: integer determinant of the first principal
/// (n−1)×(n−1) minor of the Laplacian. Zero for disconnected graphs.
pub fn count_spanning_trees(g: &Graph) -> BigInt {
    let n = g.n();
    if n == 0 {
        return BigInt::zero();
    }
    let mut m = vec![vec![BigInt::zero(); n - 1]; n - 1];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = if i == j {
                BigInt::from(g.degree(i) as i64)
            } else if g.has_edge(i, j) {
                -BigInt::one()
            } else {
                BigInt::zero()
            };
        }
    }
    charpoly::det_bareiss(m)
}

/// Number of walks of length `len` from `i` to `j`, exactly.
pub fn walk_count(g: &Graph, i: usize, j: usize, len: usize) -> BigInt {
    let n = g.n();
    assert!(i < n && j < n);
    // iterated vector-matrix product: row i of A^len
    let mut row = vec![BigInt::zero(); n];
    row[i] = BigInt::one();
    for _ in 0..len {
        let mut next = vec![BigInt::zero(); n];
        for (u, cnt) in row.iter().enumerate() {
            if cnt.is_zero() {
                continue;
            }
            for v in g.neighbors(u) {
                next[v] += cnt;
            }
        }
        row = next;
    }
    row[j].clone()
}

/// Check the line-graph spectrum identity: the adjacency eigenvalues of
/// ℓ(G) are {ν_i(G) − 2} plus m − n extra copies of −2 (copies removed
/// instead when n > m).
pub fn line_graph_spectrum_check(g: &Graph, tol: f64) -> bool {
    let m = g.num_edges();
    let n = g.n();
    let mut expected: Vec<f64> = eigenvalues(g, MatrixKind::Q).iter().map(|v| v - 2.0).collect();
    if m >= n {
        expected.extend(std::iter::repeat_n(-2.0, m - n));
    } else {
        // remove n − m values equal to −2 from the tail
        for _ in 0..n - m {
            let pos = expected
                .iter()
                .position(|v| (v + 2.0).abs() <= tol)
                .expect("Q-spectrum must contain enough zeros when n > m");
            expected.remove(pos);
        }
    }
    expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let got = eigenvalues(&g.line_graph(), MatrixKind::A);
    got.len() == expected.len()
        && got.iter().zip(expected.iter()).all(|(a, b)| (a - b).abs() <= tol)
}
