//! theta-toolkit: constructions, invariants, ϑ-family computations,
//! cospectrality checks, and one-shot reproduction suites.

use clap::{Args, Parser, Subcommand};
use theta_cli::output::{OutputSink, Report};
use theta_cli::source::GraphArgs;
use theta_cli::suites;
use std::process::ExitCode;
use theta_core::invariants::{self, Budget};
use theta_core::spectral;
use theta_core::theta;

#[derive(Parser)]
#[command(name = "theta-toolkit", version, about = "Graph invariants around the Lovász ϑ-function")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonFlags {
    /// Output format.
    #[arg(long, value_parser = ["json", "csv", "graph6", "edges"], default_value = "json", global = true)]
    format: String,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Comparison tolerance for suite checks.
    #[arg(long, default_value_t = 1e-3, global = true)]
    tol: f64,
    /// Wall-clock budget for searches, in milliseconds.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    /// Random seed for the search heuristics.
    #[arg(long, default_value_t = 2024, global = true)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and emit it (graph6, edge list, or JSON summary).
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Structural facts plus exact α, ω, χ, χ_f searches.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// ϑ, ϑ′, and the vector / strict vector chromatic numbers.
    Theta {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Float spectra and exact characteristic polynomials.
    Spectra {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Exact cospectrality report for two graphs.
    Cospectral {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Shannon-capacity bounding via strong powers.
    Capacity {
        #[command(flatten)]
        graph: GraphArgs,
        /// Largest strong power to search.
        #[arg(long, default_value_t = 2)]
        k_max: u32,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Re-derive a bundled table or example and compare row by row.
    Reproduce {
        /// Suite id: latin-table, symplectic-table, chromatic-table,
        /// schrijver-table, counterexample, nics-construction, chang,
        /// tietze, hanoi-windmill, srg-named.
        #[arg(required_unless_present = "config")]
        suite: Option<String>,
        /// Largest Latin-square order for latin-table.
        #[arg(long, default_value_t = 16)]
        n_max: u64,
        /// JSON config as an alternative to flags:
        /// {"suite": ..., "n_max": ..., "tol": ..., "budget_ms": ..., "seed": ...}.
        #[arg(long)]
        config: Option<std::path::PathBuf>,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn budget_from(common: &CommonFlags) -> Budget {
    match common.budget_ms {
        Some(ms) => Budget::millis(ms),
        None => Budget::unlimited(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Construct { graph, common } => {
            let g = graph.build_single()?;
            let sink = OutputSink::new(&common.format, common.out.as_deref())?;
            match common.format.as_str() {
                "graph6" => sink.raw(&theta_core::graph::graph6::encode(&g))?,
                "edges" => sink.raw(&theta_core::graph::graph6::format_edge_list(&g))?,
                _ => {
                    let mut rep = Report::new("construct");
                    rep.set("graph6", theta_core::graph::graph6::encode(&g));
                    rep.merge_value("structure", serde_json::to_value(g.structure_report())?);
                    sink.report(&rep)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { graph, common } => {
            let g = graph.build_single()?;
            let budget = budget_from(&common);
            let mut rep = Report::new("invariants");
            rep.merge_value("structure", serde_json::to_value(g.structure_report())?);
            if let Some(p) = g.classify_srg() {
                rep.merge_value("srg", serde_json::to_value(p)?);
            }
            let alpha = invariants::independence_number(&g, budget);
            let omega = invariants::clique_number(&g, budget);
            let chi = invariants::chromatic_number(&g, budget);
            rep.merge_value("independence_number", serde_json::to_value(&alpha)?);
            rep.merge_value("clique_number", serde_json::to_value(&omega)?);
            rep.merge_value("chromatic_number", serde_json::to_value(&chi)?);
            if g.n() <= 30 {
                let fc = invariants::fractional_chromatic(&g, budget)?;
                rep.merge_value("fractional_chromatic", serde_json::to_value(&fc)?);
            }
            if g.n() <= 24 {
                let (mc, sp) = invariants::max_cut_exact(&g)?;
                rep.set("max_cut", mc);
                rep.set("surplus", sp);
            }
            rep.merge_value(
                "bounds",
                serde_json::to_value(invariants::bound_library(
                    &g,
                    &invariants::SuppliedValues::default(),
                ))?,
            );
            OutputSink::new(&common.format, common.out.as_deref())?.report(&rep)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Theta { graph, common } => {
            let g = graph.build_single()?;
            let mut rep = Report::new("theta");
            let t = theta::lovasz_theta(&g)?;
            let tp = theta::schrijver_theta(&g)?;
            let cv = theta::vector_chromatic(&g)?;
            let csv = theta::strict_vector_chromatic(&g)?;
            rep.set("theta", t.value);
            rep.set("theta_prime", tp.value);
            rep.set("vector_chromatic", cv.value);
            rep.set("strict_vector_chromatic", csv.value);
            for (key, v) in
                [("theta", &t), ("theta_prime", &tp), ("vector_chromatic", &cv), ("strict_vector_chromatic", &csv)]
            {
                rep.merge_value(&format!("{key}_report"), serde_json::to_value(v.report(key))?);
            }
            if g.is_regular().is_some_and(|d| d > 0 && d < g.n() - 1) {
                rep.merge_value(
                    "spectral_bounds",
                    serde_json::to_value(theta::theta_spectral_bounds(&g)?)?,
                );
            }
            OutputSink::new(&common.format, common.out.as_deref())?.report(&rep)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectra { graph, common } => {
            let g = graph.build_single()?;
            let mut rep = Report::new("spectra");
            for kind in spectral::ALL_KINDS {
                let poly = spectral::char_poly_exact(&g, kind);
                let entry = serde_json::json!({
                    "kind": format!("{kind:?}"),
                    "coeffs": poly.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "denominator": poly.denom.to_string(),
                    "eigenvalues": spectral::eigenvalues(&g, kind),
                });
                rep.push("spectra", entry);
            }
            rep.merge_value(
                "inertia",
                serde_json::to_value(spectral::inertia_and_energies(&g))?,
            );
            rep.set("spanning_trees", spectral::count_spanning_trees(&g).to_string());
            OutputSink::new(&common.format, common.out.as_deref())?.report(&rep)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cospectral { graph, common } => {
            let (g, h) = graph.build_pair()?;
            let report = spectral::cospectral(&g, &h, &spectral::ALL_KINDS);
            let isomorphic = theta_core::graph::iso::is_isomorphic(&g, &h).is_some();
            let mut rep = Report::new("cospectral");
            for (kind, same) in &report.kinds {
                rep.set(&format!("{kind:?}"), *same);
            }
            rep.set("all", report.all());
            rep.set("isomorphic", isomorphic);
            rep.set("nics", report.all() && !isomorphic);
            OutputSink::new(&common.format, common.out.as_deref())?.report(&rep)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Capacity { graph, k_max, common } => {
            let g = graph.build_single()?;
            let budget = budget_from(&common);
            let report = invariants::capacity_report(&g, k_max, budget, common.seed)?;
            let mut rep = Report::new("capacity");
            rep.merge_value("report", serde_json::to_value(&report)?);
            OutputSink::new(&common.format, common.out.as_deref())?.report(&rep)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reproduce { suite, n_max, config, common } => {
            let mut suite_id = suite;
            let mut n_max = n_max;
            let mut tol = common.tol;
            let mut budget = common.budget_ms.unwrap_or(60_000);
            let mut seed = common.seed;
            if let Some(path) = config {
                let cfg: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                if let Some(v) = cfg.get("suite").and_then(|v| v.as_str()) {
                    suite_id = Some(v.to_string());
                }
                if let Some(v) = cfg.get("n_max").and_then(|v| v.as_u64()) {
                    n_max = v;
                }
                if let Some(v) = cfg.get("tol").and_then(|v| v.as_f64()) {
                    tol = v;
                }
                if let Some(v) = cfg.get("budget_ms").and_then(|v| v.as_u64()) {
                    budget = v;
                }
                if let Some(v) = cfg.get("seed").and_then(|v| v.as_u64()) {
                    seed = v;
                }
            }
            let suite_id = suite_id.ok_or("a suite id is required (argument or --config)")?;
            let table = suites::run_suite(&suite_id, n_max, tol, budget, seed)?;
            let all_pass = table.rows.iter().all(|r| r.pass);
            OutputSink::new(&common.format, common.out.as_deref())?.suite(&table)?;
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
