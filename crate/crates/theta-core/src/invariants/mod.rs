//! Exact combinatorial invariants (α, ω, χ, χ_f), Shannon-capacity
//! bounding, permanents and matching conditions, and the closed-form
//! bound library.

pub mod bounds;
pub mod capacity;
pub mod clique;
pub mod coloring;
pub mod fractional;
pub mod maxcut;
pub mod permanent;

pub use bounds::{bound_library, shearer_f, BoundEntry, BoundReport, SuppliedValues};
pub use capacity::{capacity_report, find_large_independent_set, CapacityReport};
pub use fractional::{fractional_chromatic, maximal_independent_sets, FractionalResult};
pub use maxcut::max_cut_exact;
pub use permanent::{permanent, permanent_of_adjacency};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("input exceeds the supported size: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Solver(#[from] crate::conic::SolverError),
}

/// Search budget; `None` fields are unlimited. Node budgets keep results
/// reproducible; wall-clock budgets guard the long searches.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Self {
        Budget { max_nodes: Some(n), max_millis: None }
    }

    pub fn millis(ms: u64) -> Self {
        Budget { max_nodes: None, max_millis: Some(ms) }
    }
}

/// Outcome of a branch-and-bound search for an integer invariant:
/// `lower` is achieved by `witness`, `upper` is certified, and
/// `exact = true` means the search completed with `lower == upper`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    /// Achieving vertex set (or color classes size for colorings),
    /// sorted; deterministic for a fixed budget.
    pub witness: Vec<usize>,
    pub nodes: u64,
    pub budget_hit: bool,
    pub elapsed_ms: u64,
}

impl SearchOutcome {
    pub fn value(&self) -> Option<u64> {
        self.exact.then_some(self.lower)
    }
}

/// Independence number: maximum clique of the complement.
pub fn independence_number(g: &Graph, budget: Budget) -> SearchOutcome {
    clique::max_clique(&g.complement(), budget)
}

/// Clique number.
pub fn clique_number(g: &Graph, budget: Budget) -> SearchOutcome {
    clique::max_clique(g, budget)
}

/// Chromatic number (DSATUR upper bound + branch and bound).
pub fn chromatic_number(g: &Graph, budget: Budget) -> SearchOutcome {
    coloring::chromatic_number(g, budget)
}

/// Both sides of the invariant identities for NS/NNS joins of graphs,
/// with the permanent-based sufficient conditions for the ϑ equalities.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitJoinSide {
    pub alpha: u64,
    pub alpha_formula: u64,
    pub alpha_equality_certified: bool,
    pub omega: u64,
    pub omega_formula: u64,
    pub chi: u64,
    pub chi_formula: u64,
    pub theta: f64,
    pub theta_lower_formula: f64,
    pub theta_equality_certified: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitJoinReport {
    pub permanent_g1_positive: bool,
    pub permanent_comp_g1_positive: bool,
    pub alpha_g2_equals_theta_g2: bool,
    pub ns: SplitJoinSide,
    pub nns: SplitJoinSide,
}

pub fn ns_nns_invariant_report(
    g1: &Graph,
    g2: &Graph,
    budget: Budget,
) -> Result<SplitJoinReport, crate::theta::ThetaError> {
    let per_g1 = permanent_of_adjacency(g1).map(|p| p > num_bigint::BigInt::from(0));
    let per_c1 = permanent_of_adjacency(&g1.complement()).map(|p| p > num_bigint::BigInt::from(0));
    let per_g1 = per_g1.unwrap_or(false);
    let per_c1 = per_c1.unwrap_or(false);
    let theta_g2 = crate::theta::lovasz_theta(g2)?.value;
    let alpha_g2 = independence_number(g2, budget).lower;
    let alpha_matches_theta = (alpha_g2 as f64 - theta_g2).abs() <= 1e-4;
    let n1 = g1.n() as u64;
    let omega1 = clique_number(g1, budget).lower;
    let chi1 = chromatic_number(g1, budget).lower;
    let omega2 = clique_number(g2, budget).lower;
    let chi2 = chromatic_number(g2, budget).lower;

    let side = |join: Graph, certified: bool| -> Result<SplitJoinSide, crate::theta::ThetaError> {
        let alpha = independence_number(&join, budget).lower;
        let omega = clique_number(&join, budget).lower;
        let chi = chromatic_number(&join, budget).lower;
        let theta = crate::theta::lovasz_theta(&join)?.value;
        Ok(SplitJoinSide {
            alpha,
            alpha_formula: n1 + alpha_g2,
            alpha_equality_certified: certified && alpha_matches_theta,
            omega,
            omega_formula: omega1 + omega2,
            chi,
            chi_formula: chi1 + chi2,
            theta,
            theta_lower_formula: n1 as f64 + theta_g2,
            theta_equality_certified: certified,
        })
    };
    let ns = side(g1.ns_join(g2), per_g1)?;
    let nns = side(g1.nns_join(g2), per_c1)?;
    Ok(SplitJoinReport {
        permanent_g1_positive: per_g1,
        permanent_comp_g1_positive: per_c1,
        alpha_g2_equals_theta_g2: alpha_matches_theta,
        ns,
        nns,
    })
}
