//! Dense conic optimization over the product cone
//! zero × nonnegative orthant × PSD blocks.
//!
//! Problems are in the standard equality form
//!
//! ```text
//!     min / max  cᵀx   subject to  A x = b,   x ∈ K
//! ```
//!
//! where the variable vector is laid out as
//! `[zero block | nonnegative block | svec(PSD block 1) | svec(PSD block 2) | …]`.
//! Symmetric matrix variables are stored in scaled upper-triangular
//! vectorization (off-diagonals × √2) so Euclidean inner products equal
//! trace inner products.
//!
//! The solver is an over-relaxed ADMM splitting: one Cholesky
//! factorization of AAᵀ is reused across all iterations, and each
//! iteration projects onto the product cone. Runs are deterministic for
//! fixed inputs and settings.

use crate::linalg::{sym_eigen, Cholesky, Mat, Real};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("problem dimensions inconsistent: {0}")]
    Dimension(String),
    #[error("constraint Gram matrix is numerically singular")]
    SingularGram,
    #[error("problem deserialization failed: {0}")]
    Json(String),
}

/// Product cone description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSpec {
    pub zero_dim: usize,
    pub nonneg_dim: usize,
    pub psd_block_sides: Vec<usize>,
}

impl ConeSpec {
    pub fn nonneg(dim: usize) -> Self {
        ConeSpec { zero_dim: 0, nonneg_dim: dim, psd_block_sides: Vec::new() }
    }

    pub fn psd(side: usize) -> Self {
        ConeSpec { zero_dim: 0, nonneg_dim: 0, psd_block_sides: vec![side] }
    }

    /// Total vectorized dimension.
    pub fn dim(&self) -> usize {
        self.zero_dim
            + self.nonneg_dim
            + self.psd_block_sides.iter().map(|&s| svec_len(s)).sum::<usize>()
    }
}

pub fn svec_len(side: usize) -> usize {
    side * (side + 1) / 2
}

/// Index of entry (i, j), i <= j, within an svec block (column-major
/// upper triangle).
pub fn svec_index(i: usize, j: usize) -> usize {
    assert!(i <= j);
    j * (j + 1) / 2 + i
}

/// Unpack an svec slice into a dense symmetric matrix.
pub fn svec_to_mat<F: Real>(s: &[F], side: usize) -> Mat<F> {
    assert_eq!(s.len(), svec_len(side));
    let inv_sqrt2 = F::one() / F::of(2.0).sqrt();
    let mut out = Mat::zeros(side, side);
    let mut idx = 0;
    for j in 0..side {
        for i in 0..=j {
            if i == j {
                out[(i, j)] = s[idx];
            } else {
                let v = s[idx] * inv_sqrt2;
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
            idx += 1;
        }
    }
    out
}

/// Pack a symmetric matrix into svec form.
pub fn mat_to_svec<F: Real>(m: &Mat<F>, out: &mut [F]) {
    let side = m.rows();
    assert_eq!(out.len(), svec_len(side));
    let sqrt2 = F::of(2.0).sqrt();
    let mut idx = 0;
    for j in 0..side {
        for i in 0..=j {
            out[idx] = if i == j { m[(i, j)] } else { m[(i, j)] * sqrt2 };
            idx += 1;
        }
    }
}

/// Frobenius-nearest positive semidefinite matrix: eigendecompose and
/// clip negative eigenvalues to zero.
pub fn project_psd<F: Real>(m: &Mat<F>) -> Mat<F> {
    let n = m.rows();
    let eig = sym_eigen(m);
    let mut out = Mat::zeros(n, n);
    for (k, &lam) in eig.values.iter().enumerate() {
        if lam <= F::zero() {
            continue;
        }
        for i in 0..n {
            let vi = eig.vectors[(i, k)] * lam;
            for j in 0..n {
                out[(i, j)] += vi * eig.vectors[(j, k)];
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Min,
    Max,
}

/// Standard-form conic program; rows of `a` are equality constraints.
#[derive(Clone, Debug)]
pub struct ConicProblem<F> {
    pub sense: Sense,
    pub c: Vec<F>,
    pub a: Mat<F>,
    pub b: Vec<F>,
    pub cone: ConeSpec,
}

impl<F: Real> ConicProblem<F> {
    pub fn validate(&self) -> Result<(), SolverError> {
        let dim = self.cone.dim();
        if self.a.cols() != dim {
            return Err(SolverError::Dimension(format!(
                "A has {} columns but the cone dimension is {dim}",
                self.a.cols()
            )));
        }
        if self.c.len() != dim {
            return Err(SolverError::Dimension(format!(
                "c has length {} but the cone dimension is {dim}",
                self.c.len()
            )));
        }
        if self.b.len() != self.a.rows() {
            return Err(SolverError::Dimension(format!(
                "b has length {} but A has {} rows",
                self.b.len(),
                self.a.rows()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Settings<F> {
    /// Target for primal residual, dual residual, and relative gap.
    pub eps: F,
    pub max_iters: usize,
    /// Initial ADMM penalty; adapted by residual balancing during the run
    /// (deterministically).
    pub scale: F,
}

impl<F: Real> Default for Settings<F> {
    fn default() -> Self {
        Settings { eps: F::of(1e-7), max_iters: 200_000, scale: F::one() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Optimal,
    MaxIters,
    InfeasibleDetected,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Residuals<F> {
    pub primal: F,
    pub dual: F,
    pub gap: F,
}

/// Solution with certificates: `x` is the cone-feasible iterate, `y` the
/// equality multipliers, `s ∈ K*` the dual cone variable with
/// `Aᵀy + s ≈ c` (sense-adjusted).
#[derive(Clone, Debug)]
pub struct ConicSolution<F> {
    pub x: Vec<F>,
    pub y: Vec<F>,
    pub s: Vec<F>,
    pub objective: F,
    pub dual_objective: F,
    pub status: Status,
    pub residuals: Residuals<F>,
    pub iterations: usize,
}

fn norm<F: Real>(v: &[F]) -> F {
    v.iter().fold(F::zero(), |acc, &x| acc + x * x).sqrt()
}

/// Project onto the product cone in place.
fn project_cone<F: Real>(v: &mut [F], cone: &ConeSpec) {
    let mut at = 0usize;
    for z in v[..cone.zero_dim].iter_mut() {
        *z = F::zero();
    }
    at += cone.zero_dim;
    for z in v[at..at + cone.nonneg_dim].iter_mut() {
        if *z < F::zero() {
            *z = F::zero();
        }
    }
    at += cone.nonneg_dim;
    for &side in &cone.psd_block_sides {
        let len = svec_len(side);
        let m = svec_to_mat(&v[at..at + len], side);
        let p = project_psd(&m);
        mat_to_svec(&p, &mut v[at..at + len]);
        at += len;
    }
}

/// Project onto the dual cone: free × nonnegative × PSD.
fn project_dual_cone<F: Real>(v: &mut [F], cone: &ConeSpec) {
    let mut at = cone.zero_dim; // zero-cone dual is free
    for z in v[at..at + cone.nonneg_dim].iter_mut() {
        if *z < F::zero() {
            *z = F::zero();
        }
    }
    at += cone.nonneg_dim;
    for &side in &cone.psd_block_sides {
        let len = svec_len(side);
        let m = svec_to_mat(&v[at..at + len], side);
        let p = project_psd(&m);
        mat_to_svec(&p, &mut v[at..at + len]);
        at += len;
    }
}

/// Solve a conic problem by over-relaxed ADMM with a cached AAᵀ Cholesky.
pub fn solve<F: Real>(
    problem: &ConicProblem<F>,
    settings: &Settings<F>,
) -> Result<ConicSolution<F>, SolverError> {
    problem.validate()?;
    let dim = problem.cone.dim();
    let rows = problem.a.rows();
    let maximize = problem.sense == Sense::Max;
    let c: Vec<F> = problem.c.iter().map(|&v| if maximize { -v } else { v }).collect();

    // static row equilibration of [A b]
    let mut row_scale = vec![F::one(); rows];
    let mut a = problem.a.clone();
    let mut b = problem.b.clone();
    for i in 0..rows {
        let nrm = norm(a.row(i));
        let d = if nrm > F::of(1e-12) { nrm } else { F::one() };
        row_scale[i] = d;
        for v in a.row_mut(i) {
            *v /= d;
        }
        b[i] /= d;
    }

    let chol = if rows > 0 {
        let mut gram = a.gram_rows();
        match Cholesky::new(&gram) {
            Some(ch) => Some(ch),
            None => {
                // redundant equality rows: regularize slightly and retry
                let ridge = F::of(1e-10);
                for i in 0..rows {
                    gram[(i, i)] += ridge;
                }
                Some(Cholesky::new(&gram).ok_or(SolverError::SingularGram)?)
            }
        }
    } else {
        None
    };

    let b_norm_unscaled = norm(&problem.b);
    let c_norm = norm(&c);

    let mut rho = settings.scale;
    let alpha = F::of(1.6);
    let mut z = vec![F::zero(); dim];
    let mut u = vec![F::zero(); dim];
    let mut x = vec![F::zero(); dim];
    let mut w = vec![F::zero(); dim];
    let mut nu = vec![F::zero(); rows];
    let mut rhs = vec![F::zero(); rows];
    let mut atn = vec![F::zero(); dim];

    // x-update: minimize cᵀx + (ρ/2)‖x − (z−u)‖² over Ax = b
    macro_rules! x_update {
        () => {
            if let Some(ch) = &chol {
                a.matvec(&w, &mut rhs);
                for i in 0..rows {
                    rhs[i] -= b[i];
                }
                nu.copy_from_slice(&rhs);
                ch.solve(&mut nu);
                a.tr_matvec(&nu, &mut atn);
                for k in 0..dim {
                    x[k] = w[k] - atn[k];
                }
            } else {
                x.copy_from_slice(&w);
            }
        };
    }

    let mut status = Status::MaxIters;
    let mut iterations = settings.max_iters;
    let mut residuals =
        Residuals { primal: F::infinity(), dual: F::infinity(), gap: F::infinity() };
    let mut objective = F::zero();
    let mut dual_objective = F::zero();
    let mut y = vec![F::zero(); rows];
    let mut s = vec![F::zero(); dim];

    let check_every = 25usize;
    for iter in 0..settings.max_iters {
        for k in 0..dim {
            w[k] = z[k] - u[k] - c[k] / rho;
        }
        x_update!();
        // over-relaxation, then cone projection
        for k in 0..dim {
            let xh = alpha * x[k] + (F::one() - alpha) * z[k];
            w[k] = xh + u[k]; // reuse w as the projection argument
        }
        let mut z_new = w.clone();
        project_cone(&mut z_new, &problem.cone);
        for k in 0..dim {
            u[k] = w[k] - z_new[k];
        }
        z = z_new;

        if !z.iter().all(|v| v.is_finite()) || !u.iter().all(|v| v.is_finite()) {
            status = Status::InfeasibleDetected;
            iterations = iter + 1;
            break;
        }

        if (iter + 1) % check_every != 0 && iter + 1 != settings.max_iters {
            continue;
        }

        // exact KKT quantities at the current (z, u)
        for k in 0..dim {
            w[k] = z[k] - u[k] - c[k] / rho;
        }
        x_update!();
        // primal residual on the cone-feasible iterate z, unscaled rows
        a.matvec(&z, &mut rhs);
        let mut pr = F::zero();
        for i in 0..rows {
            let r = (rhs[i] - b[i]) * row_scale[i];
            pr += r * r;
        }
        let pr = pr.sqrt() / (F::one() + b_norm_unscaled);
        // dual: y = −ρν (rows unscaled), s = Π_{K*}(−ρu)
        for i in 0..rows {
            y[i] = -rho * nu[i] / row_scale[i];
        }
        for k in 0..dim {
            s[k] = -rho * u[k];
        }
        project_dual_cone(&mut s, &problem.cone);
        // dual residual c − Aᵀy − s; zero-cone coordinates are free
        a.tr_matvec(&nu, &mut atn); // Âᵀν, so Aᵀy = −ρ·Âᵀν
        let mut dr = F::zero();
        for k in problem.cone.zero_dim..dim {
            let resid = c[k] + rho * atn[k] - s[k];
            dr += resid * resid;
        }
        let dr = dr.sqrt() / (F::one() + c_norm);
        let pobj = c.iter().zip(z.iter()).fold(F::zero(), |acc, (&ck, &zk)| acc + ck * zk);
        let dobj =
            problem.b.iter().zip(y.iter()).fold(F::zero(), |acc, (&bi, &yi)| acc + bi * yi);
        let gap = (pobj - dobj).abs() / (F::one() + pobj.abs() + dobj.abs());

        residuals = Residuals { primal: pr, dual: dr, gap };
        objective = if maximize { -pobj } else { pobj };
        dual_objective = if maximize { -dobj } else { dobj };

        if pr <= settings.eps && dr <= settings.eps && gap <= settings.eps {
            status = Status::Optimal;
            iterations = iter + 1;
            break;
        }

        // deterministic residual balancing
        let ten = F::of(10.0);
        if pr > ten * dr && rho < F::of(1e6) {
            rho *= F::of(2.0);
            for v in u.iter_mut() {
                *v /= F::of(2.0);
            }
        } else if dr > ten * pr && rho > F::of(1e-6) {
            rho /= F::of(2.0);
            for v in u.iter_mut() {
                *v *= F::of(2.0);
            }
        }
    }

    if maximize {
        for v in y.iter_mut() {
            *v = -*v;
        }
    }
    Ok(ConicSolution {
        x: z,
        y,
        s,
        objective,
        dual_objective,
        status,
        residuals,
        iterations,
    })
}

/// Serialization schema for problem dumps.
#[derive(Serialize, Deserialize)]
struct ProblemJson {
    sense: Sense,
    c: Vec<f64>,
    a_rows: usize,
    a_cols: usize,
    a: Vec<f64>,
    b: Vec<f64>,
    cone: ConeSpec,
}

impl ConicProblem<f64> {
    pub fn to_json(&self) -> String {
        let dump = ProblemJson {
            sense: self.sense,
            c: self.c.clone(),
            a_rows: self.a.rows(),
            a_cols: self.a.cols(),
            a: self.a.data().to_vec(),
            b: self.b.clone(),
            cone: self.cone.clone(),
        };
        serde_json::to_string(&dump).expect("problem serialization")
    }

    pub fn from_json(text: &str) -> Result<Self, SolverError> {
        let dump: ProblemJson =
            serde_json::from_str(text).map_err(|e| SolverError::Json(e.to_string()))?;
        if dump.a.len() != dump.a_rows * dump.a_cols {
            return Err(SolverError::Json("matrix payload length mismatch".into()));
        }
        let p = ConicProblem {
            sense: dump.sense,
            c: dump.c,
            a: Mat::from_rows(dump.a_rows, dump.a_cols, dump.a),
            b: dump.b,
            cone: dump.cone,
        };
        p.validate()?;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lp_min_with_shift() {
        // min x s.t. x >= 3, via x - s = 3 with x, s >= 0
        let p: ConicProblem<f64> = ConicProblem {
            sense: Sense::Min,
            c: vec![1.0, 0.0],
            a: Mat::from_rows(1, 2, vec![1.0, -1.0]),
            b: vec![3.0],
            cone: ConeSpec::nonneg(2),
        };
        let sol = solve(&p, &Settings::default()).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective - 3.0).abs() < 1e-6, "objective {}", sol.objective);
        // weak duality: the cone-feasible primal objective sits above the
        // optimum up to the residual slack
        assert!(sol.objective >= 3.0 - 1e-6);
        assert!(sol.dual_objective <= 3.0 + 1e-6);
    }

    #[test]
    fn psd_1x1_fixed_value() {
        // max t s.t. t = 2, t psd (1x1)
        let p: ConicProblem<f64> = ConicProblem {
            sense: Sense::Max,
            c: vec![1.0],
            a: Mat::from_rows(1, 1, vec![1.0]),
            b: vec![2.0],
            cone: ConeSpec::psd(1),
        };
        let sol = solve(&p, &Settings::default()).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective - 2.0).abs() < 1e-6);
    }

    fn c5_theta_problem() -> ConicProblem<f64> {
        // maximize <J, B> s.t. Tr B = 1, B_ij = 0 on edges, B psd
        let n = 5usize;
        let edges = [(0usize, 1usize), (1, 2), (2, 3), (3, 4), (0, 4)];
        let dim = svec_len(n);
        let mut c = vec![0.0; dim];
        for j in 0..n {
            for i in 0..=j {
                c[svec_index(i, j)] = if i == j { 1.0 } else { 2.0_f64.sqrt() };
            }
        }
        let mut rows = Vec::new();
        let mut b = Vec::new();
        let mut tr = vec![0.0; dim];
        for i in 0..n {
            tr[svec_index(i, i)] = 1.0;
        }
        rows.extend_from_slice(&tr);
        b.push(1.0);
        for &(i, j) in &edges {
            let mut r = vec![0.0; dim];
            r[svec_index(i, j)] = 1.0;
            rows.extend_from_slice(&r);
            b.push(0.0);
        }
        ConicProblem {
            sense: Sense::Max,
            c,
            a: Mat::from_rows(1 + edges.len(), dim, rows),
            b,
            cone: ConeSpec::psd(n),
        }
    }

    #[test]
    fn c5_theta_sdp_reaches_sqrt5() {
        let p = c5_theta_problem();
        let sol = solve(&p, &Settings { eps: 1e-8, ..Settings::default() }).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective - 5.0_f64.sqrt()).abs() < 1e-4, "got {}", sol.objective);
    }

    #[test]
    fn solver_is_deterministic() {
        let p = c5_theta_problem();
        let s1 = solve(&p, &Settings::default()).unwrap();
        let s2 = solve(&p, &Settings::default()).unwrap();
        assert_eq!(s1.iterations, s2.iterations);
        assert!(s1.x.iter().zip(s2.x.iter()).all(|(a, b)| a == b), "iterates must match bitwise");
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let p: ConicProblem<f64> = ConicProblem {
            sense: Sense::Min,
            c: vec![1.0],
            a: Mat::from_rows(1, 2, vec![1.0, 1.0]),
            b: vec![1.0],
            cone: ConeSpec::nonneg(2),
        };
        assert!(matches!(solve(&p, &Settings::default()), Err(SolverError::Dimension(_))));
    }

    #[test]
    fn project_psd_examples() {
        let m: Mat<f64> = Mat::from_rows(2, 2, vec![1.0, 0.0, 0.0, -1.0]);
        let p = project_psd(&m);
        assert!((p[(0, 0)] - 1.0).abs() < 1e-12);
        assert!(p[(1, 1)].abs() < 1e-12);
        // idempotence
        let pp = project_psd(&p);
        for i in 0..2 {
            for j in 0..2 {
                assert!((pp[(i, j)] - p[(i, j)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn projection_is_frobenius_nearest() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let n = 5;
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v: f64 = rng.gen_range(-1.0..1.0);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        let proj = project_psd(&m);
        let dist = |a: &Mat<f64>, b: &Mat<f64>| {
            let mut acc = 0.0;
            for i in 0..n {
                for j in 0..n {
                    acc += (a[(i, j)] - b[(i, j)]).powi(2);
                }
            }
            acc.sqrt()
        };
        let d_proj = dist(&proj, &m);
        for _ in 0..100 {
            // random PSD candidate p = G Gᵀ
            let mut g = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    g[(i, j)] = rng.gen_range(-1.0..1.0);
                }
            }
            let mut p = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0.0;
                    for k in 0..n {
                        acc += g[(i, k)] * g[(j, k)];
                    }
                    p[(i, j)] = acc;
                }
            }
            assert!(d_proj <= dist(&p, &m) + 1e-12);
        }
    }

    #[test]
    fn json_round_trip() {
        let p = c5_theta_problem();
        let text = p.to_json();
        let q = ConicProblem::from_json(&text).unwrap();
        assert_eq!(p.c, q.c);
        assert_eq!(p.b, q.b);
        assert_eq!(p.a.data(), q.a.data());
        assert_eq!(p.cone, q.cone);
    }

    #[test]
    fn zero_cone_pins_variables() {
        // min -x1 s.t. x0 + x1 = 1, x0 in zero cone, x1 >= 0 -> x1 = 1
        let p: ConicProblem<f64> = ConicProblem {
            sense: Sense::Min,
            c: vec![0.0, -1.0],
            a: Mat::from_rows(1, 2, vec![1.0, 1.0]),
            b: vec![1.0],
            cone: ConeSpec { zero_dim: 1, nonneg_dim: 1, psd_block_sides: vec![] },
        };
        let sol = solve(&p, &Settings::default()).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert!(sol.x[0].abs() < 1e-9);
        assert!((sol.x[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn solves_at_f32_too() {
        let p = ConicProblem::<f32> {
            sense: Sense::Min,
            c: vec![1.0, 0.0],
            a: Mat::from_rows(1, 2, vec![1.0, -1.0]),
            b: vec![3.0],
            cone: ConeSpec::nonneg(2),
        };
        let sol = solve(&p, &Settings { eps: 1e-4, max_iters: 50_000, scale: 1.0 }).unwrap();
        assert!((sol.objective - 3.0).abs() < 1e-2);
    }
}
