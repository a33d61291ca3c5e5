//! Acceptance suite: every release gate runs here, one test per
//! criterion, each printing a single pass/fail line. Tolerances are
//! pinned in the asserts.

use std::time::Instant;
use theta_cli::suites;
use theta_core::graph::families::named;
use theta_core::graph::{iso, Graph};
use theta_core::invariants::{self, Budget};
use theta_core::spectral::{self, enumerate, MatrixKind};
use theta_core::srg::{self, QuadExt, SrgFamily, SrgParams};
use theta_core::theta;
use theta_core::Scalar;

fn criterion<F: FnOnce() + std::panic::UnwindSafe>(id: u32, name: &str, body: F) {
    let outcome = std::panic::catch_unwind(body);
    match outcome {
        Ok(()) => println!("criterion {id:2} ({name}): PASS"),
        Err(e) => {
            println!("criterion {id:2} ({name}): FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn assert_close(what: &str, expected: f64, got: f64, tol: f64) {
    assert!(
        (expected - got).abs() <= tol,
        "{what}: expected {expected}, got {got} (tol {tol})"
    );
}

fn random_graph(n: usize, p: f64, rng: &mut impl rand::Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

#[test]
fn criterion_01_theta_named_values() {
    criterion(1, "ϑ named values by SDP", || {
        let cases: Vec<(&str, Graph, f64)> = vec![
            ("petersen", named::petersen(), 4.0),
            ("petersen complement", named::petersen().complement(), 2.5),
            ("shrikhande", named::shrikhande(), 4.0),
            ("shrikhande complement", named::shrikhande().complement(), 4.0),
            ("C5", named::cycle(5), 5.0_f64.sqrt()),
            ("C7", named::cycle(7), 7.0 / (1.0 + 1.0 / (std::f64::consts::PI / 7.0).cos())),
            ("tietze", named::tietze(), 5.0),
        ];
        for (name, g, want) in cases {
            let t0 = Instant::now();
            let v = theta::lovasz_theta(&g).unwrap();
            let elapsed = t0.elapsed();
            assert_close(name, want, v.value, 1e-3);
            assert!(elapsed.as_secs_f64() < 10.0, "{name} solve took {elapsed:?}");
        }
    });
}

#[test]
fn criterion_02_closed_form_srg_suite() {
    criterion(2, "closed-form SRG suite, exact rational arithmetic", || {
        let t0 = Instant::now();
        let int = QuadExt::from_int;
        // named parameter sets
        let (g, c) = srg::srg_theta(&SrgParams::new(27, 16, 10, 8)).unwrap();
        assert_eq!((g, c), (int(3), int(9)), "schläfli");
        let (g, c) = srg::srg_theta(&SrgParams::new(100, 36, 14, 12)).unwrap();
        assert_eq!((g, c), (int(10), int(10)), "hall-janko");
        let (g, c) = srg::srg_theta(&SrgParams::new(28, 12, 6, 4)).unwrap();
        assert_eq!((g, c), (int(4), int(7)), "chang");
        // Latin-square complements: capacity n for every order 3..=16
        for n in 3..=16u64 {
            let srg::FamilyParams::Srg(p) =
                srg::family_params(&SrgFamily::LatinSquare { m: 3, n }).unwrap()
            else {
                panic!("degenerate family")
            };
            let comp = srg::srg_complement(&p);
            let (theta_comp, _) = srg::srg_theta(&comp).unwrap();
            assert_eq!(theta_comp, int(n as i64), "Latin complement order {n}");
        }
        // symplectic complements: capacity (q^n − 1)/(q − 1)
        for (n, q) in [(3u32, 2u64), (3, 3), (3, 4), (3, 5), (3, 7), (4, 2), (4, 3), (4, 4)] {
            let srg::FamilyParams::Srg(p) =
                srg::family_params(&SrgFamily::Symplectic { n, q }).unwrap()
            else {
                panic!("degenerate family")
            };
            let (_, theta_comp) = srg::srg_theta(&p).unwrap();
            let want = ((q.pow(n) - 1) / (q - 1)) as i64;
            assert_eq!(theta_comp, int(want), "symplectic (n={n}, q={q})");
        }
        let elapsed = t0.elapsed();
        assert!(elapsed.as_secs_f64() < 1.0, "closed forms took {elapsed:?}");
    });
}

#[test]
fn criterion_03_sdp_vs_closed_form() {
    criterion(3, "SDP ϑ matches SRG closed forms on constructible suite", || {
        let t0 = Instant::now();
        let mut suite: Vec<(String, Graph)> = vec![
            ("petersen".into(), named::petersen()),
            ("shrikhande".into(), named::shrikhande()),
            ("Sp(4,2)".into(), named::symplectic(2, 2)),
            ("Sp(6,2)".into(), named::symplectic(3, 2)),
        ];
        for n in 2..=7 {
            suite.push((format!("rook {n}"), named::latin_square(2, n)));
        }
        for n in 3..=7 {
            suite.push((format!("latin(3,{n})"), named::latin_square(3, n)));
        }
        for q in [5, 13, 17, 29] {
            suite.push((format!("paley {q}"), named::paley(q)));
        }
        for (name, g) in suite {
            let params = g.classify_srg().unwrap_or_else(|| panic!("{name} must be an SRG"));
            assert!(params.n <= 63, "{name} exceeds the suite bound");
            let (closed, _) = srg::srg_theta(&params).unwrap();
            let sdp = theta::lovasz_theta(&g).unwrap();
            assert_close(&name, closed.to_f64(), sdp.value, 1e-3);
            assert!(sdp.srg_crosscheck.unwrap() <= 1e-3);
        }
        let elapsed = t0.elapsed();
        assert!(elapsed.as_secs_f64() < 300.0, "suite took {elapsed:?}");
    });
}

#[test]
fn criterion_04_capacity_counterexample() {
    criterion(4, "ϑ′ is not a capacity upper bound (counterexample)", || {
        let g = named::hamming_band(5, 3, 5).complement();
        let tp = theta::schrijver_theta(&g).unwrap().value;
        assert_close("ϑ'(G)", 4.0, tp, 1e-3);
        let t = theta::lovasz_theta(&g).unwrap().value;
        assert_close("ϑ(G)", 16.0 / 3.0, t, 1e-3);
        let alpha = invariants::independence_number(&g, Budget::unlimited());
        assert_eq!(alpha.value(), Some(4), "α(G) exact");
        let product = g.strong_product(&g);
        assert_eq!(product.n(), 1024);
        let found = invariants::find_large_independent_set(
            &product,
            Some(20),
            Budget::millis(30 * 60 * 1000),
            2024,
        );
        assert!(
            found.len() >= 20,
            "inconclusive: best independent set found has {} < 20 vertices",
            found.len()
        );
        let lower = (found.len() as f64).sqrt();
        assert!(lower > tp + 0.4, "Θ(G) ≥ {lower:.4} must beat ϑ'(G) = {tp:.4}");
    });
}

#[test]
fn criterion_05_nics_construction() {
    criterion(5, "irregular NICS pairs for k = 1..4", || {
        let t0 = Instant::now();
        let (g2, h2) = suites::ordered_pair().unwrap();
        for k in 1..=4usize {
            let base = if k == 1 { Graph::complete(2) } else { named::cycle(k + 1) };
            let a = base.ns_join(&g2);
            let b = base.ns_join(&h2);
            assert_eq!(a.n(), 2 * k + 12);
            let rep = spectral::cospectral(&a, &b, &spectral::ALL_KINDS);
            assert!(rep.all(), "k={k}: exact {{A,L,Q,NormL}} cospectrality");
            assert!(iso::is_isomorphic(&a, &b).is_none(), "k={k}: nonisomorphic");
            let budget = Budget::unlimited();
            let alpha_a = invariants::independence_number(&a, budget).value();
            let alpha_b = invariants::independence_number(&b, budget).value();
            assert_eq!(alpha_a, Some((k + 4) as u64), "k={k}: α");
            assert_eq!(alpha_a, alpha_b, "k={k}: α equal across the pair");
            let omega_a = invariants::clique_number(&a, budget).value();
            let omega_b = invariants::clique_number(&b, budget).value();
            // clique additivity: the ring contributes 2 except the
            // triangle at k = 2
            let omega_want = if k == 2 { 6u64 } else { 5 };
            assert_eq!(omega_a, Some(omega_want), "k={k}: ω");
            assert_eq!(omega_a, omega_b, "k={k}: ω equal across the pair");
            let chi_a = invariants::chromatic_number(&a, budget).value();
            let chi_b = invariants::chromatic_number(&b, budget).value();
            let chi_want = if k % 2 == 1 { 6u64 } else { 7 };
            assert_eq!(chi_a, Some(chi_want), "k={k}: χ by parity");
            assert_eq!(chi_a, chi_b, "k={k}: χ equal across the pair");
            let ta = theta::lovasz_theta(&a).unwrap().value;
            let tb = theta::lovasz_theta(&b).unwrap().value;
            assert_close(&format!("k={k} ϑ first"), k as f64 + 4.23607, ta, 1e-3);
            assert_close(&format!("k={k} ϑ second"), k as f64 + 4.26880, tb, 1e-3);
        }
        let elapsed = t0.elapsed();
        assert!(elapsed.as_secs_f64() < 300.0, "construction took {elapsed:?}");
    });
}

#[test]
fn criterion_06_regular_enumeration() {
    criterion(6, "regular-graph enumeration finds the cospectral pairs", || {
        let t0 = Instant::now();
        // degrees 1..4 cover everything on 10 vertices: degree d and
        // n−1−d pairs are complements of each other
        let mut pairs_by_degree = Vec::new();
        for d in 1..=4usize {
            let groups = enumerate::find_nics(10, Some(d), MatrixKind::A).unwrap();
            for grp in &groups {
                assert_eq!(grp.members.len(), 2, "groups on 10 vertices are pairs");
            }
            pairs_by_degree.push((d, groups.len()));
        }
        assert_eq!(
            pairs_by_degree,
            vec![(1, 0), (2, 0), (3, 0), (4, 2)],
            "two 4-regular pairs; with their 5-regular complements that is four pairs of cospectral regular graphs on 10 vertices"
        );
        let elapsed = t0.elapsed();
        assert!(elapsed.as_secs_f64() < 600.0, "enumeration took {elapsed:?}");

        // the distinguished pair carries the published polynomial ...
        let (g, h) = enumerate::ten_vertex_nics_pair();
        let poly = spectral::char_poly_exact(g, MatrixKind::A);
        let want: Vec<num_bigint::BigInt> =
            [80i64, 200, 9, -320, -180, 136, 110, -16, -20, 0, 1]
                .map(num_bigint::BigInt::from)
                .into();
        assert_eq!(poly.coeffs, want);
        assert!(poly.equals_rational(&spectral::char_poly_exact(h, MatrixKind::A)));
        // ... and the four ϑ values
        let (g2, h2) = suites::ordered_pair().unwrap();
        let ta = theta::lovasz_theta(&g2).unwrap().value;
        let tb = theta::lovasz_theta(&h2).unwrap().value;
        assert_close("ϑ(G)", 3.23607, ta, 1e-3);
        assert_close("ϑ(H)", 3.26880, tb, 1e-3);
        let tca = theta::lovasz_theta(&g2.complement()).unwrap().value;
        let tcb = theta::lovasz_theta(&h2.complement()).unwrap().value;
        assert_close("ϑ(Ḡ)", 3.19656, tca, 1e-3);
        assert_close("ϑ(H̄)", 3.13198, tcb, 1e-3);
        // complements are 5-regular cospectral nonisomorphic pairs
        let rep = spectral::cospectral(&g2.complement(), &h2.complement(), &spectral::ALL_KINDS);
        assert!(rep.all());
        assert!(iso::is_isomorphic(&g2.complement(), &h2.complement()).is_none());
    });
}

#[test]
fn criterion_07_chromatic_tables() {
    criterion(7, "vector-chromatic tables", || {
        let rows = suites::run_suite("chromatic-table", 16, 1e-3, 60_000, 2024).unwrap();
        for r in &rows.rows {
            assert!(r.pass, "chromatic-table row {}: expected {} got {}", r.id, r.expected, r.got);
        }
        let rows = suites::run_suite("schrijver-table", 16, 1e-3, 60_000, 2024).unwrap();
        for r in &rows.rows {
            assert!(r.pass, "schrijver-table row {}: expected {} got {}", r.id, r.expected, r.got);
        }
    });
}

#[test]
fn criterion_08_bound_anchors() {
    criterion(8, "bound-library numeric anchors", || {
        let rep = invariants::bound_library(&named::hanoi3(3), &invariants::SuppliedValues::default());
        assert_close("hanoi3(3) galtman", 2.4677, rep.value("galtman_chi_v_lb").unwrap(), 1e-3);
        assert_close("hanoi3(3) guo–sapiro", 2.4334, rep.value("guo_sapiro_fchrnum_lb").unwrap(), 1e-3);
        let rep =
            invariants::bound_library(&named::windmill(5, 8), &invariants::SuppliedValues::default());
        assert_close("windmill(5,8) galtman", 2.6893, rep.value("galtman_chi_v_lb").unwrap(), 1e-3);
        assert_close(
            "windmill(5,8) guo–sapiro",
            3.7259,
            rep.value("guo_sapiro_fchrnum_lb").unwrap(),
            1e-3,
        );
        let rep = invariants::bound_library(&named::petersen(), &invariants::SuppliedValues::default());
        assert_close("petersen inertial", 2.5, rep.value("inertia_fchrnum_lb").unwrap(), 1e-3);
    });
}

#[test]
fn criterion_09_property_suites() {
    criterion(9, "randomized property suites", || {
        use num_traits::ToPrimitive;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(90210);
        let budget = Budget::unlimited();
        let mut named_suite: Vec<Graph> = vec![
            named::petersen(),
            named::shrikhande(),
            named::cycle(5),
            named::cycle(6),
            named::tietze(),
            named::star(4),
        ];
        let mut count = 0usize;
        while count < 500 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(n, rng.gen_range(0.15..0.85), &mut rng);
            named_suite.push(g);
            count += 1;
        }
        for (idx, g) in named_suite.iter().enumerate() {
            let n = g.n();
            let comp = g.complement();
            let alpha = invariants::independence_number(g, budget).value().unwrap() as f64;
            let tp = theta::schrijver_theta(g).unwrap().value;
            let t = theta::lovasz_theta(g).unwrap().value;
            let tc = theta::lovasz_theta(&comp).unwrap().value;
            let chi_comp =
                invariants::chromatic_number(&comp, budget).value().unwrap() as f64;
            let fc = invariants::fractional_chromatic(&comp, budget).unwrap().value;
            // sandwich chain
            assert!(alpha <= tp + 1e-4, "graph {idx}: α ≤ ϑ'");
            assert!(tp <= t + 1e-4, "graph {idx}: ϑ' ≤ ϑ");
            assert!(t <= fc + 1e-4, "graph {idx}: ϑ ≤ χ_f(complement)");
            assert!(fc <= chi_comp + 1e-4, "graph {idx}: χ_f ≤ χ");
            // product identity
            assert!(t * tc >= n as f64 - 1e-3, "graph {idx}: ϑ(G)ϑ(Ḡ) ≥ n");
            // trace identities, exactly
            let p = spectral::char_poly_exact(g, MatrixKind::A);
            use num_traits::Zero;
            if n >= 1 {
                assert!(p.coeffs[n - 1].is_zero(), "graph {idx}: Σλ = 0");
            }
            let closed2: num_bigint::BigInt =
                (0..n).map(|i| spectral::walk_count(g, i, i, 2)).sum();
            assert_eq!(closed2, num_bigint::BigInt::from(2 * g.num_edges()), "graph {idx}: Σλ²");
            let closed3: num_bigint::BigInt =
                (0..n).map(|i| spectral::walk_count(g, i, i, 3)).sum();
            assert_eq!(
                closed3,
                num_bigint::BigInt::from(6 * g.num_triangles()),
                "graph {idx}: Σλ³ = 6·triangles"
            );
            // matrix-tree vs Laplacian eigenvalue product
            let trees = spectral::count_spanning_trees(g).to_f64().unwrap();
            if n >= 1 {
                let mu = spectral::eigenvalues(g, MatrixKind::L);
                let prod: f64 = mu.iter().skip(1).product::<f64>() / n as f64;
                let scale = trees.abs().max(1.0);
                assert!(
                    (prod - trees).abs() <= 1e-6 * scale,
                    "graph {idx}: matrix-tree {trees} vs eigenvalue product {prod}"
                );
            }
            // closed-form lower bounds sit below the exact invariants
            let bounds = invariants::bound_library(g, &invariants::SuppliedValues::default());
            let omega = invariants::clique_number(g, budget).value().unwrap() as f64;
            let chi = invariants::chromatic_number(g, budget).value().unwrap() as f64;
            let fc_g = invariants::fractional_chromatic(g, budget).unwrap().value;
            let chi_v = theta::vector_chromatic(g).unwrap().value;
            let check = |id: &str, cap: f64| {
                if let Some(v) = bounds.value(id) {
                    assert!(v <= cap + 1e-4, "graph {idx}: bound {id} = {v} exceeds {cap}");
                }
            };
            check("wei_alpha_lb", alpha);
            check("wei_omega_lb", omega);
            check("nikiforov_omega_lb", omega);
            check("nikiforov_alpha_lb", alpha);
            check("shearer_alpha_lb", alpha);
            check("galtman_chi_v_lb", chi_v);
            check("guo_sapiro_fchrnum_lb", fc_g);
            check("inertia_chrnum_lb", chi);
            check("inertia_fchrnum_lb", fc_g);
            check("wocjan_elphick_chi_v_lb", chi_v);
        }
        // ϑ additivity under disjoint union
        for _ in 0..20 {
            let g = random_graph(rng.gen_range(2..=8), 0.5, &mut rng);
            let h = random_graph(rng.gen_range(2..=8), 0.5, &mut rng);
            let sum = theta::lovasz_theta(&g).unwrap().value
                + theta::lovasz_theta(&h).unwrap().value;
            let union = theta::lovasz_theta(&g.disjoint_union(&h)).unwrap().value;
            assert!((union - sum).abs() <= 1e-3, "additivity: {union} vs {sum}");
        }
        // ϑ multiplicativity under the strong product
        for _ in 0..12 {
            let g = random_graph(rng.gen_range(2..=8), 0.5, &mut rng);
            let h = random_graph(rng.gen_range(2..=8), 0.5, &mut rng);
            let prod = theta::lovasz_theta(&g.strong_product(&h)).unwrap().value;
            let factors =
                theta::lovasz_theta(&g).unwrap().value * theta::lovasz_theta(&h).unwrap().value;
            assert!((prod - factors).abs() <= 1e-2, "factorization: {prod} vs {factors}");
        }
        // spanning trees of complete graphs follow the n^{n-2} count
        for n in 3..=8u32 {
            assert_eq!(
                spectral::count_spanning_trees(&Graph::complete(n as usize)),
                num_bigint::BigInt::from(n).pow(n - 2)
            );
        }
    });
}

#[test]
fn criterion_10_triangle_free_suite() {
    criterion(10, "triangle-free ϑ lower bound and Shearer", || {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1010);
        let mut done = 0;
        while done < 100 {
            // edge-subsampled bipartite double: triangle-free by
            // construction
            let m = rng.gen_range(3..=20usize);
            let seed_graph = random_graph(m, rng.gen_range(0.3..0.9), &mut rng);
            let keep = rng.gen_range(0.4..1.0);
            let mut edges = Vec::new();
            for (u, v) in seed_graph.edges() {
                if rng.gen_bool(keep) {
                    edges.push((u, m + v));
                }
                if rng.gen_bool(keep) {
                    edges.push((v, m + u));
                }
            }
            let g = Graph::from_edges(2 * m, &edges);
            if g.num_edges() == 0 {
                continue;
            }
            assert_eq!(g.num_triangles(), 0);
            let n = g.n();
            let t = theta::lovasz_theta(&g).unwrap().value;
            assert!(
                t >= (n as f64).powf(2.0 / 3.0) / 16.0 - 1e-6,
                "ϑ = {t} under the n^(2/3)/16 bound at n = {n}"
            );
            if n <= 20 {
                let alpha =
                    invariants::independence_number(&g, Budget::unlimited()).value().unwrap();
                let bounds =
                    invariants::bound_library(&g, &invariants::SuppliedValues::default());
                let shearer = bounds.value("shearer_alpha_lb").unwrap();
                assert!(shearer <= alpha as f64 + 1e-9, "shearer {shearer} vs α {alpha}");
            }
            done += 1;
        }
    });
}
