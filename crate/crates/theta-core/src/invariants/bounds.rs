//! Closed-form bound library: degree, spectral, inertial, and
//! ϑ-consuming bounds on α, ω, χ, χ_v, χ_f, and the surplus.

use crate::graph::Graph;
use crate::spectral::{eigenvalues, inertia_and_energies, MatrixKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

/// ϑ-family values a caller already computed; bounds that consume them
/// are marked inapplicable when absent.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct SuppliedValues {
    pub theta: Option<f64>,
    pub theta_complement: Option<f64>,
    pub chi_v: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundEntry {
    pub bound_id: String,
    pub applicable: bool,
    pub value: Option<f64>,
    /// bound direction and target, or the violated precondition
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.bound_id == id)
    }

    pub fn value(&self, id: &str) -> Option<f64> {
        self.get(id).and_then(|e| e.value)
    }
}

/// Shearer's recursion f(0) = 1, f(k) = (1 + (k²−k)f(k−1))/(k²+1), exact.
pub fn shearer_f(k: u64) -> BigRational {
    let mut f = BigRational::one();
    for j in 1..=k {
        let j2 = BigInt::from(j * j);
        f = (BigRational::one() + BigRational::from_integer(&j2 - BigInt::from(j)) * f)
            / BigRational::from_integer(j2 + BigInt::one());
    }
    f
}

fn golden_section(mut f: impl FnMut(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = (a + b) / 2.0;
    (x, f(x))
}

/// Evaluate every applicable bound; inapplicable entries carry the
/// violated precondition in `note`.
pub fn bound_library(g: &Graph, supplied: &SuppliedValues) -> BoundReport {
    let n = g.n();
    let m = g.num_edges();
    let degrees = g.degrees();
    let mut entries = Vec::new();
    let mut push = |id: &str, applicable: bool, value: Option<f64>, note: String| {
        entries.push(BoundEntry { bound_id: id.to_string(), applicable, value, note });
    };

    // Wei degree bounds
    let wei_alpha: f64 = degrees.iter().map(|&d| 1.0 / (1.0 + d as f64)).sum();
    push("wei_alpha_lb", n > 0, (n > 0).then_some(wei_alpha), "α ≥ Σ 1/(1+dᵢ)".into());
    let wei_omega: f64 = degrees.iter().map(|&d| 1.0 / (n as f64 - d as f64)).sum();
    push("wei_omega_lb", n > 0, (n > 0).then_some(wei_omega), "ω ≥ Σ 1/(n−dᵢ)".into());

    // Nikiforov spectral bounds
    if m > 0 {
        let lam1 = eigenvalues(g, MatrixKind::A)[0];
        let denom = 2.0 * m as f64 - lam1 * lam1;
        push(
            "nikiforov_omega_lb",
            denom > 0.0,
            (denom > 0.0).then(|| 2.0 * m as f64 / denom),
            "ω ≥ 2m/(2m−λ₁²)".into(),
        );
        let comp = g.complement();
        let mc = comp.num_edges();
        if mc > 0 {
            let lam1c = eigenvalues(&comp, MatrixKind::A)[0];
            let denom = 2.0 * mc as f64 - lam1c * lam1c;
            push(
                "nikiforov_alpha_lb",
                denom > 0.0,
                (denom > 0.0).then(|| 2.0 * mc as f64 / denom),
                "α ≥ (n(n−1)−2m)/(n(n−1)−2m−λ₁(Ḡ)²)".into(),
            );
        } else {
            push("nikiforov_alpha_lb", false, None, "complement has no edges".into());
        }
    } else {
        push("nikiforov_omega_lb", false, None, "graph has no edges".into());
        push("nikiforov_alpha_lb", false, None, "graph has no edges".into());
    }

    let triangle_free = g.num_triangles() == 0;

    // Shearer lower bound on α for triangle-free graphs, exact recursion
    if triangle_free && n > 0 {
        let total: BigRational = degrees.iter().map(|&d| shearer_f(d as u64)).sum();
        push(
            "shearer_alpha_lb",
            true,
            total.to_f64(),
            format!("α ≥ Σ f(dᵢ) = {total} (triangle-free)"),
        );
    } else {
        push("shearer_alpha_lb", false, None, "graph has a triangle".into());
    }

    // Pirot–Sereni fractional-chromatic upper bounds for triangle-free
    if triangle_free && m > 0 {
        let delta = *degrees.iter().max().unwrap() as f64;
        let mut best = f64::INFINITY;
        let mut arg = (1u32, 0.0f64);
        for k in 1..=64u32 {
            let obj = |lam: f64| {
                ((1.0 + lam).powi(k as i32) + lam * (1.0 + lam) * delta) / (lam * (1.0 + k as f64 * lam))
            };
            let (lam, val) = golden_section(obj, 1e-9, 8.0, 1e-9);
            if val < best {
                best = val;
                arg = (k, lam);
            }
        }
        push(
            "pirot_sereni_fchrnum_ub",
            true,
            Some(1.0 + best),
            format!("χ_f ≤ 1 + inner inf at k = {}, λ = {:.6}", arg.0, arg.1),
        );
    } else {
        push("pirot_sereni_fchrnum_ub", false, None, "needs a nonempty triangle-free graph".into());
    }

    // large-girth fractional-chromatic upper bound
    let girth_ok = g.girth().is_none_or(|gi| gi >= 7) && m > 0;
    if girth_ok {
        let delta = *degrees.iter().max().unwrap() as f64;
        let best = (1..=64u32)
            .map(|k| (2.0 * delta + 2.0f64.powi(k as i32 - 3)) / k as f64)
            .fold(f64::INFINITY, f64::min);
        push("large_girth_fchrnum_ub", true, Some(1.0 + best), "χ_f ≤ 1 + min_k (2Δ+2^{k−3})/k (girth ≥ 7)".into());
    } else {
        push("large_girth_fchrnum_ub", false, None, "girth below 7".into());
    }

    // Galtman / Hoffman-type lower bound on χ_v
    if m > 0 {
        let vals = eigenvalues(g, MatrixKind::A);
        let (lam1, lamn) = (vals[0], vals[n - 1]);
        push(
            "galtman_chi_v_lb",
            true,
            Some(1.0 - lam1 / lamn),
            "χ_v ≥ 1 − λ₁/λ_n".into(),
        );
        // Guo–Sapiro square-energy bound on χ_f
        let ie = inertia_and_energies(g);
        if ie.s_minus > 0.0 && ie.s_plus > 0.0 {
            let ratio = (ie.s_plus / ie.s_minus).max(ie.s_minus / ie.s_plus);
            push("guo_sapiro_fchrnum_lb", true, Some(1.0 + ratio), "χ_f ≥ 1 + max{s⁺/s⁻, s⁻/s⁺}".into());
        } else {
            push("guo_sapiro_fchrnum_lb", false, None, "degenerate square energies".into());
        }
        // inertial bounds
        if ie.n_minus > 0 && ie.n_plus > 0 {
            let ratio =
                (ie.n_plus as f64 / ie.n_minus as f64).max(ie.n_minus as f64 / ie.n_plus as f64);
            push("inertia_chrnum_lb", true, Some(1.0 + ratio), "χ ≥ 1 + max{n⁺/n⁻, n⁻/n⁺}".into());
            push(
                "inertia_fchrnum_lb",
                ie.n_zero == 0,
                (ie.n_zero == 0).then_some(1.0 + ratio),
                if ie.n_zero == 0 {
                    "χ_f ≥ 1 + max{n⁺/n⁻, n⁻/n⁺} (nonsingular adjacency)".into()
                } else {
                    "adjacency matrix is singular".to_string()
                },
            );
        } else {
            push("inertia_chrnum_lb", false, None, "one-sided spectrum".into());
            push("inertia_fchrnum_lb", false, None, "one-sided spectrum".into());
        }
        // signless-Laplacian lower bound on χ_v (connected graphs)
        let nu_n = *eigenvalues(g, MatrixKind::Q).last().unwrap();
        let denom = 2.0 * m as f64 - n as f64 * nu_n;
        let ok = g.is_connected() && denom > 0.0;
        push(
            "wocjan_elphick_chi_v_lb",
            ok,
            ok.then(|| 1.0 + 2.0 * m as f64 / denom),
            "χ_v ≥ 1 + 2m/(2m − n·ν_n) (connected)".into(),
        );
    } else {
        for id in [
            "galtman_chi_v_lb",
            "guo_sapiro_fchrnum_lb",
            "inertia_chrnum_lb",
            "inertia_fchrnum_lb",
            "wocjan_elphick_chi_v_lb",
        ] {
            push(id, false, None, "graph has no edges".into());
        }
    }

    // triangle-free ϑ lower bound
    if triangle_free && m > 0 {
        push(
            "theta_trianglefree_lb",
            true,
            Some((n as f64).powf(2.0 / 3.0) / 16.0),
            "ϑ(G) ≥ n^{2/3}/16 (nonempty triangle-free)".into(),
        );
    } else {
        push("theta_trianglefree_lb", false, None, "graph has a triangle or no edges".into());
    }

    // ϑ-consuming bounds (excluding complete graphs and their complements)
    let proper = m > 0 && m < n * n.saturating_sub(1) / 2 && n >= 2;
    match (supplied.theta_complement, proper) {
        (Some(tc), true) => {
            let v = (n as f64).powf(3.0 / (tc + 1.0)) / (10.0 * (n as f64).ln().sqrt());
            push("alpha_lb_theta_comp", true, Some(v), "α ≥ n^{3/(ϑ(Ḡ)+1)}/(10√ln n)".into());
        }
        _ => push("alpha_lb_theta_comp", false, None, "needs ϑ(Ḡ) and a proper graph".into()),
    }
    match (supplied.theta, proper) {
        (Some(t), true) => {
            let v = 2.0 * (n as f64).ln() / (16.0 * n as f64 / t).ln() - 1.0;
            push("alpha_lb_theta", true, Some(v), "α ≥ 2 ln n / ln(16n/ϑ(G)) − 1".into());
            let w = (n as f64).powf(3.0 / (t + 1.0)) / (10.0 * (n as f64).ln().sqrt());
            push("omega_lb_theta", true, Some(w), "ω ≥ n^{3/(ϑ(G)+1)}/(10√ln n)".into());
        }
        _ => {
            push("alpha_lb_theta", false, None, "needs ϑ(G) and a proper graph".into());
            push("omega_lb_theta", false, None, "needs ϑ(G) and a proper graph".into());
        }
    }
    match supplied.chi_v {
        Some(cv) if cv > 1.0 && m > 0 => {
            push(
                "sudakov_surplus_lb",
                true,
                Some(m as f64 / (std::f64::consts::PI * (cv - 1.0))),
                "sp(G) ≥ (1/π)·|E|/(χ_v − 1)".into(),
            );
        }
        _ => push("sudakov_surplus_lb", false, None, "needs χ_v > 1".into()),
    }

    BoundReport { entries }
}
