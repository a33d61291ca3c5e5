//! The Lovász ϑ-function and its relatives: Schrijver ϑ′, the vector and
//! strict vector chromatic numbers, spectral sandwich bounds for regular
//! graphs, and cross-formulation consistency checks.
//!
//! ϑ is computed from the primal trace form
//! (maximize Tr(BJ) over PSD B with Tr B = 1 and B_ij = 0 on edges);
//! the minimax dual form is kept as a consistency oracle.

use crate::conic::{
    self, svec_index, svec_len, ConeSpec, ConicProblem, ConicSolution, Sense, Settings,
    SolverError, Status,
};
use crate::graph::Graph;
use crate::linalg::Mat;
use crate::spectral::{eigenvalues, MatrixKind};
use crate::Scalar;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ThetaError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Formulation {
    Theta,
    ThetaPrime,
    ChiV,
    ChiSv,
    ClosedFormSrg,
    SpectralEquality,
}

/// A computed ϑ-family value with its certificate and solve diagnostics.
#[derive(Clone, Debug)]
pub struct ThetaValue {
    pub value: Scalar,
    pub formulation: Formulation,
    /// `p/q` with q ≤ 64 when the value sits within 1e-5 of a small
    /// rational; reported alongside the float, never replacing it.
    pub rational_snap: Option<(i64, u64)>,
    pub status: Status,
    pub residuals: conic::Residuals<Scalar>,
    pub iterations: usize,
    /// Optimal matrix of the solved program (B for the trace forms).
    pub certificate: Option<Mat<Scalar>>,
    /// |SDP value − closed form| when the graph is strongly regular.
    pub srg_crosscheck: Option<Scalar>,
}

/// Lower/upper bound pair with attainability notes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundInterval {
    pub lower: Scalar,
    pub upper: Scalar,
    pub attained_conditions: Vec<String>,
}

pub fn default_settings() -> Settings<Scalar> {
    Settings::default()
}

/// Snap to p/q with a bounded denominator via continued fractions.
pub fn snap_rational(x: Scalar, max_den: u64, tol: Scalar) -> Option<(i64, u64)> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0u64, x.floor() as i64, 1u64);
    let mut frac = x - x.floor();
    for _ in 0..40 {
        if ((p1 as Scalar) / (q1 as Scalar) - x).abs() < tol {
            return Some((p1, q1));
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let p2 = a as i64 * p1 + p0;
        let q2 = a as u64 * q1 + q0;
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    (((p1 as Scalar) / (q1 as Scalar) - x).abs() < tol).then_some((p1, q1))
}

/// Assemble the trace-form SDP for ϑ (and ϑ′ when `entrywise_nonneg`):
/// maximize <J, B> over PSD B with Tr B = 1, B_ij = 0 on edges, and for
/// ϑ′ additionally B_ij ≥ 0 (enforced on nonadjacent pairs via linked
/// nonnegative variables).
pub fn build_theta_problem(g: &Graph, entrywise_nonneg: bool) -> ConicProblem<Scalar> {
    let n = g.n();
    let sdim = svec_len(n);
    let nonedges: Vec<(usize, usize)> = if entrywise_nonneg {
        (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .collect()
    } else {
        Vec::new()
    };
    let t = nonedges.len();
    let dim = t + sdim;
    let sqrt2 = Scalar::sqrt(2.0);
    let mut c = vec![0.0; dim];
    for j in 0..n {
        for i in 0..=j {
            // <J, B> in svec coordinates
            c[t + svec_index(i, j)] = if i == j { 1.0 } else { sqrt2 };
        }
    }
    let edges = g.edges();
    let rows = 1 + edges.len() + t;
    let mut a = Mat::zeros(rows, dim);
    let mut b = vec![0.0; rows];
    for i in 0..n {
        a[(0, t + svec_index(i, i))] = 1.0;
    }
    b[0] = 1.0;
    for (r, &(i, j)) in edges.iter().enumerate() {
        a[(1 + r, t + svec_index(i, j))] = 1.0;
    }
    for (k, &(i, j)) in nonedges.iter().enumerate() {
        // svec entry = √2 B_ij must equal √2 · (linked nonnegative var)
        let r = 1 + edges.len() + k;
        a[(r, t + svec_index(i, j))] = 1.0;
        a[(r, k)] = -sqrt2;
    }
    ConicProblem {
        sense: Sense::Max,
        c,
        a,
        b,
        cone: ConeSpec { zero_dim: 0, nonneg_dim: t, psd_block_sides: vec![n] },
    }
}

fn extract_certificate(sol: &ConicSolution<Scalar>, n: usize, offset: usize) -> Mat<Scalar> {
    conic::svec_to_mat(&sol.x[offset..offset + svec_len(n)], n)
}

fn exact_value(g: &Graph, value: Scalar, formulation: Formulation) -> ThetaValue {
    let n = g.n();
    let mut cert = Mat::zeros(n, n);
    if n > 0 {
        if value >= n as Scalar - 0.5 {
            // empty graph: B = J/n
            for i in 0..n {
                for j in 0..n {
                    cert[(i, j)] = 1.0 / n as Scalar;
                }
            }
        } else {
            cert[(0, 0)] = 1.0;
        }
    }
    ThetaValue {
        value,
        formulation,
        rational_snap: snap_rational(value, 64, 1e-5),
        status: Status::Optimal,
        residuals: conic::Residuals { primal: 0.0, dual: 0.0, gap: 0.0 },
        iterations: 0,
        certificate: Some(cert),
        srg_crosscheck: None,
    }
}

fn solve_trace_form(
    g: &Graph,
    entrywise_nonneg: bool,
    settings: &Settings<Scalar>,
    formulation: Formulation,
) -> Result<ThetaValue, ThetaError> {
    assert!(g.n() >= 1, "theta needs at least one vertex");
    let n = g.n();
    let m = g.num_edges();
    if m == 0 {
        return Ok(exact_value(g, n as Scalar, formulation));
    }
    if m == n * (n - 1) / 2 {
        return Ok(exact_value(g, 1.0, formulation));
    }
    let problem = build_theta_problem(g, entrywise_nonneg);
    let t = problem.cone.nonneg_dim;
    let sol = conic::solve(&problem, settings)?;
    let srg_crosscheck = if !entrywise_nonneg {
        g.classify_srg().and_then(|p| {
            crate::srg::srg_theta(&p).ok().map(|(tg, _)| (sol.objective - tg.to_f64()).abs())
        })
    } else {
        None
    };
    Ok(ThetaValue {
        value: sol.objective,
        formulation,
        rational_snap: snap_rational(sol.objective, 64, 1e-5),
        status: sol.status,
        residuals: sol.residuals,
        iterations: sol.iterations,
        certificate: Some(extract_certificate(&sol, n, t)),
        srg_crosscheck,
    })
}

/// Lovász ϑ via the primal trace-form SDP.
pub fn lovasz_theta(g: &Graph) -> Result<ThetaValue, ThetaError> {
    lovasz_theta_with(g, &default_settings())
}

pub fn lovasz_theta_with(
    g: &Graph,
    settings: &Settings<Scalar>,
) -> Result<ThetaValue, ThetaError> {
    solve_trace_form(g, false, settings, Formulation::Theta)
}

/// Schrijver ϑ′: the ϑ program with an entrywise-nonnegative certificate.
pub fn schrijver_theta(g: &Graph) -> Result<ThetaValue, ThetaError> {
    schrijver_theta_with(g, &default_settings())
}

pub fn schrijver_theta_with(
    g: &Graph,
    settings: &Settings<Scalar>,
) -> Result<ThetaValue, ThetaError> {
    solve_trace_form(g, true, settings, Formulation::ThetaPrime)
}

/// Vector chromatic number: 1 for empty graphs, else ϑ′ of the
/// complement.
pub fn vector_chromatic(g: &Graph) -> Result<ThetaValue, ThetaError> {
    vector_chromatic_with(g, &default_settings())
}

pub fn vector_chromatic_with(
    g: &Graph,
    settings: &Settings<Scalar>,
) -> Result<ThetaValue, ThetaError> {
    if g.num_edges() == 0 {
        return Ok(ThetaValue { formulation: Formulation::ChiV, ..exact_value(g, 1.0, Formulation::ChiV) });
    }
    let mut v = solve_trace_form(&g.complement(), true, settings, Formulation::ChiV)?;
    v.formulation = Formulation::ChiV;
    Ok(v)
}

/// Strict vector chromatic number: 1 for empty graphs, else ϑ of the
/// complement.
pub fn strict_vector_chromatic(g: &Graph) -> Result<ThetaValue, ThetaError> {
    strict_vector_chromatic_with(g, &default_settings())
}

pub fn strict_vector_chromatic_with(
    g: &Graph,
    settings: &Settings<Scalar>,
) -> Result<ThetaValue, ThetaError> {
    if g.num_edges() == 0 {
        return Ok(ThetaValue { formulation: Formulation::ChiSv, ..exact_value(g, 1.0, Formulation::ChiSv) });
    }
    let mut v = solve_trace_form(&g.complement(), false, settings, Formulation::ChiSv)?;
    v.formulation = Formulation::ChiSv;
    Ok(v)
}

/// The minimax dual form: ϑ = 1 + min max_i Y_ii over PSD Y with
/// Y_ij = −1 on nonadjacent pairs. Used as a consistency oracle.
pub fn lovasz_theta_dual_form(
    g: &Graph,
    settings: &Settings<Scalar>,
) -> Result<Scalar, ThetaError> {
    let n = g.n();
    assert!(n >= 1);
    let sdim = svec_len(n);
    // columns: [t+ t- | slack_1..slack_n | svec(Y)]
    let nn = 2 + n;
    let dim = nn + sdim;
    let nonedges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect();
    let rows = nonedges.len() + n;
    let mut a = Mat::zeros(rows, dim);
    let mut b = vec![0.0; rows];
    let sqrt2 = Scalar::sqrt(2.0);
    for (r, &(i, j)) in nonedges.iter().enumerate() {
        a[(r, nn + svec_index(i, j))] = 1.0;
        b[r] = -sqrt2; // svec entry √2·Y_ij = −√2
    }
    for i in 0..n {
        let r = nonedges.len() + i;
        a[(r, 0)] = 1.0; // +t
        a[(r, 1)] = -1.0; // −t
        a[(r, 2 + i)] = -1.0; // −slack_i
        a[(r, nn + svec_index(i, i))] = -1.0; // −Y_ii
        b[r] = 0.0;
    }
    let mut c = vec![0.0; dim];
    c[0] = 1.0;
    c[1] = -1.0;
    let problem = ConicProblem {
        sense: Sense::Min,
        c,
        a,
        b,
        cone: ConeSpec { zero_dim: 0, nonneg_dim: nn, psd_block_sides: vec![n] },
    };
    let sol = conic::solve(&problem, settings)?;
    Ok(1.0 + sol.objective)
}

/// Spectral sandwich bounds for a regular graph from (n, d, λ₂, λ_n):
/// bounds on ϑ(G), ϑ(Ḡ), and the vector chromatic number of G, with the
/// equality conditions that are decided cheaply.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralBounds {
    pub theta_g: BoundInterval,
    pub theta_comp: BoundInterval,
    pub chi_v_bounds: BoundInterval,
}

pub fn theta_spectral_bounds(g: &Graph) -> Result<SpectralBounds, ThetaError> {
    let n = g.n();
    let d = g
        .is_regular()
        .ok_or_else(|| ThetaError::NotApplicable("spectral bounds need a regular graph".into()))?;
    if d == 0 || d == n - 1 {
        return Err(ThetaError::NotApplicable(
            "spectral bounds need a noncomplete, nonempty regular graph".into(),
        ));
    }
    let vals = eigenvalues(g, MatrixKind::A);
    let (lam2, lamn) = (vals[1], vals[n - 1]);
    let nf = n as Scalar;
    let df = d as Scalar;
    let mut conditions = Vec::new();
    if let Some(p) = g.classify_srg() {
        conditions.push(format!("strongly regular {p}: all four bounds are tight"));
    }
    let theta_g = BoundInterval {
        lower: (nf - df + lam2) / (1.0 + lam2),
        upper: -nf * lamn / (df - lamn),
        attained_conditions: conditions.clone(),
    };
    let theta_comp = BoundInterval {
        lower: 1.0 - df / lamn,
        upper: nf * (1.0 + lam2) / (nf - df + lam2),
        attained_conditions: conditions.clone(),
    };
    let chi_v_bounds = BoundInterval {
        lower: 1.0 - df / lamn,
        upper: nf * (1.0 + lam2) / (nf - df + lam2),
        attained_conditions: conditions,
    };
    Ok(SpectralBounds { theta_g, theta_comp, chi_v_bounds })
}

/// Cross-formulation consistency checks on one graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub theta: Scalar,
    pub theta_complement: Scalar,
    /// ϑ(G)·ϑ(Ḡ) − n (must be ≥ −tol; 0 for vertex-transitive / SRG)
    pub product_minus_n: Scalar,
    /// ϑ(G + H) − (ϑ(G) + ϑ(H)) for the sampled H
    pub additivity_gap: Scalar,
    /// ϑ(G ⊠ H) − ϑ(G)·ϑ(H) for the sampled H
    pub multiplicativity_gap: Option<Scalar>,
    /// primal trace form vs. minimax dual form
    pub primal_dual_gap: Scalar,
    /// 1 − λ₁/λ_n ≤ ϑ(Ḡ) slack (nonnegative when consistent)
    pub spectral_lower_slack: Scalar,
}

pub fn theta_consistency_report(
    g: &Graph,
    sample: &Graph,
    settings: &Settings<Scalar>,
) -> Result<ConsistencyReport, ThetaError> {
    let n = g.n();
    let theta = lovasz_theta_with(g, settings)?.value;
    let comp = lovasz_theta_with(&g.complement(), settings)?.value;
    let union_theta = lovasz_theta_with(&g.disjoint_union(sample), settings)?.value;
    let sample_theta = lovasz_theta_with(sample, settings)?.value;
    let multiplicativity_gap = if n * sample.n() <= 64 {
        let prod_theta = lovasz_theta_with(&g.strong_product(sample), settings)?.value;
        Some(prod_theta - theta * sample_theta)
    } else {
        None
    };
    let dual = lovasz_theta_dual_form(g, settings)?;
    let vals = eigenvalues(g, MatrixKind::A);
    let spectral_lower = if vals[n - 1] < 0.0 { 1.0 - vals[0] / vals[n - 1] } else { 1.0 };
    Ok(ConsistencyReport {
        theta,
        theta_complement: comp,
        product_minus_n: theta * comp - n as Scalar,
        additivity_gap: union_theta - (theta + sample_theta),
        multiplicativity_gap,
        primal_dual_gap: dual - theta,
        spectral_lower_slack: comp - spectral_lower,
    })
}

/// Serializable report row for the external JSON interface.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThetaReport {
    pub graph_id: String,
    pub formulation: Formulation,
    pub value: Scalar,
    pub rational_snap: Option<(i64, u64)>,
    pub residuals: conic::Residuals<Scalar>,
}

impl ThetaValue {
    pub fn report(&self, graph_id: impl Into<String>) -> ThetaReport {
        ThetaReport {
            graph_id: graph_id.into(),
            formulation: self.formulation,
            value: self.value,
            rational_snap: self.rational_snap,
            residuals: self.residuals,
        }
    }

    /// Certificate sanity: trace 1, zero on edges, PSD within `eps`.
    pub fn certificate_valid(&self, g: &Graph, eps: Scalar) -> bool {
        let Some(cert) = &self.certificate else { return false };
        let n = g.n();
        if cert.rows() != n {
            return false;
        }
        let mut trace = 0.0;
        for i in 0..n {
            trace += cert[(i, i)];
        }
        if (trace - 1.0).abs() > eps {
            return false;
        }
        for (u, v) in g.edges() {
            if cert[(u, v)].abs() > eps {
                return false;
            }
        }
        let min_eig =
            crate::linalg::sym_eigenvalues(cert).first().copied().unwrap_or(0.0);
        min_eig >= -eps
    }
}
