//! Cross-module checks: product identities, perfect-graph coincidences,
//! split-join values, and vector-chromatic agreements that span the
//! graph, spectral, theta, and invariants modules.

use theta_core::graph::families::named;
use theta_core::graph::{iso, Graph};
use theta_core::invariants::{self, Budget};
use theta_core::spectral::{self, MatrixKind};
use theta_core::theta;

fn random_graph(n: usize, p: f64, rng: &mut impl rand::Rng) -> Graph {
    use rand::Rng;
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
fn product_with_complement_attains_order() {
    // α(G ⊠ Ḡ) = n for vertex-transitive or strongly regular graphs
    let suite: Vec<(&str, Graph)> = vec![
        ("C5", named::cycle(5)),
        ("C6", named::cycle(6)),
        ("C7", named::cycle(7)),
        ("petersen", named::petersen()),
        ("shrikhande", named::shrikhande()),
    ];
    for (name, g) in suite {
        let p = g.strong_product(&g.complement());
        let out = invariants::independence_number(&p, Budget::unlimited());
        assert_eq!(out.value(), Some(g.n() as u64), "{name}");
    }
}

#[test]
fn product_independence_is_supermultiplicative() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(55);
    for _ in 0..10 {
        let g = random_graph(5, 0.5, &mut rng);
        let h = random_graph(5, 0.5, &mut rng);
        let a_g = invariants::independence_number(&g, Budget::unlimited()).value().unwrap();
        let a_h = invariants::independence_number(&h, Budget::unlimited()).value().unwrap();
        let a_p = invariants::independence_number(&g.strong_product(&h), Budget::unlimited())
            .value()
            .unwrap();
        assert!(a_p >= a_g * a_h);
    }
}

#[test]
fn strong_product_commutes_and_associates_up_to_iso() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(56);
    let g = random_graph(3, 0.6, &mut rng);
    let h = random_graph(4, 0.5, &mut rng);
    let k = random_graph(2, 0.9, &mut rng);
    assert!(iso::is_isomorphic(&g.strong_product(&h), &h.strong_product(&g)).is_some());
    assert!(iso::is_isomorphic(
        &g.strong_product(&h).strong_product(&k),
        &g.strong_product(&h.strong_product(&k))
    )
    .is_some());
}

#[test]
fn perfect_graph_coincidence() {
    // bipartite and windmill members: α(G) = ϑ'(G) = ϑ(G) = χ_f(Ḡ) = χ(Ḡ)
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(57);
    let mut suite: Vec<Graph> = vec![
        named::windmill(3, 4),
        named::windmill(4, 3),
        named::cycle(6),
        named::path(5),
    ];
    for _ in 0..4 {
        // random bipartite graph on 4 + 4 vertices
        let mut edges = Vec::new();
        for u in 0..4usize {
            for v in 4..8usize {
                use rand::Rng;
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        suite.push(Graph::from_edges(8, &edges));
    }
    for (idx, g) in suite.iter().enumerate() {
        let alpha = invariants::independence_number(g, Budget::unlimited()).value().unwrap() as f64;
        let tp = theta::schrijver_theta(g).unwrap().value;
        let t = theta::lovasz_theta(g).unwrap().value;
        let comp = g.complement();
        let chi = invariants::chromatic_number(&comp, Budget::unlimited()).value().unwrap() as f64;
        let fc = invariants::fractional_chromatic(&comp, Budget::unlimited()).unwrap().value;
        for (what, v) in [("ϑ'", tp), ("ϑ", t), ("χ_f(Ḡ)", fc), ("χ(Ḡ)", chi)] {
            assert!((v - alpha).abs() <= 1e-3, "graph {idx}: {what} = {v} vs α = {alpha}");
        }
    }
}

#[test]
fn split_joins_of_petersen_reach_fourteen() {
    let p = named::petersen();
    let report = invariants::ns_nns_invariant_report(&p, &p, Budget::unlimited()).unwrap();
    assert!(report.permanent_g1_positive && report.permanent_comp_g1_positive);
    assert!(report.alpha_g2_equals_theta_g2);
    assert!((report.ns.theta - 14.0).abs() < 1e-3, "ϑ(NS) = {}", report.ns.theta);
    assert!((report.nns.theta - 14.0).abs() < 1e-3, "ϑ(NNS) = {}", report.nns.theta);
    assert_eq!(report.ns.alpha, 14);
    assert_eq!(report.nns.alpha, 14);
    // Kneser closed forms: ω and χ additivity
    assert_eq!(report.ns.omega, 2 + 2);
    assert_eq!(report.ns.chi, 3 + 3);
}

#[test]
fn star_join_escapes_the_lower_bound() {
    // the hub-and-leaves graph has no spanning set of disjoint edges, so
    // only the nonneighbor-splitting join stays at the additive value
    let star = named::star(9);
    let (g2, _) = ordered_ten_vertex_pair();
    let ns = star.ns_join(&g2);
    let nns = star.nns_join(&g2);
    let t_ns = theta::lovasz_theta(&ns).unwrap().value;
    let t_nns = theta::lovasz_theta(&nns).unwrap().value;
    assert!((t_ns - 18.0).abs() < 1e-3, "ϑ(NS) = {t_ns}");
    assert!((t_nns - 13.23607).abs() < 1e-3, "ϑ(NNS) = {t_nns}");
    let per = invariants::permanent_of_adjacency(&star).unwrap();
    assert_eq!(per, num_bigint::BigInt::from(0), "stars have no spanning edge set");
}

fn ordered_ten_vertex_pair() -> (Graph, Graph) {
    let (a, b) = spectral::enumerate::ten_vertex_nics_pair().clone();
    let ta = theta::lovasz_theta(&a).unwrap().value;
    let tb = theta::lovasz_theta(&b).unwrap().value;
    if ta <= tb {
        (a, b)
    } else {
        (b, a)
    }
}

#[test]
fn chromatic_variants_coincide_tightly_on_srg_and_transitive_graphs() {
    let suite: Vec<(&str, Graph)> = vec![
        ("petersen", named::petersen()),
        ("shrikhande", named::shrikhande()),
        ("C5", named::cycle(5)),
        ("kneser(6,2)", named::kneser(6, 2)),
        ("C8", named::cycle(8)),
    ];
    for (name, g) in suite {
        let cv = theta::vector_chromatic(&g).unwrap().value;
        let csv = theta::strict_vector_chromatic(&g).unwrap().value;
        assert!((cv - csv).abs() <= 1e-4, "{name}: χ_v = {cv} vs χ_sv = {csv}");
    }
}

#[test]
fn four_vertex_pair_is_q_cospectral_only() {
    // exhaustive search turns up the signless-Laplacian pair sharing
    // x⁴ − 6x³ + 9x² − 4x while their adjacency spectra differ
    let groups = spectral::enumerate::find_nics(4, None, MatrixKind::Q).unwrap();
    let target: Vec<num_bigint::BigInt> =
        [0i64, -4, 9, -6, 1].map(num_bigint::BigInt::from).into();
    let group = groups
        .iter()
        .find(|grp| grp.poly.coeffs == target)
        .expect("the Q-cospectral pair on 4 vertices");
    assert_eq!(group.members.len(), 2);
    let (g, h) = (&group.members[0], &group.members[1]);
    let rep = spectral::cospectral(g, h, &spectral::ALL_KINDS);
    assert_eq!(rep.get(MatrixKind::Q), Some(true));
    assert_eq!(rep.get(MatrixKind::A), Some(false));
}

#[test]
fn consistency_report_on_petersen() {
    let rep = theta::theta_consistency_report(
        &named::petersen(),
        &Graph::complete(2),
        &theta::default_settings(),
    )
    .unwrap();
    assert!(rep.product_minus_n.abs() < 1e-3, "ϑ(G)ϑ(Ḡ) = n for SRGs");
    assert!(rep.additivity_gap.abs() < 1e-3);
    assert!(rep.primal_dual_gap.abs() < 1e-3);
    assert!(rep.spectral_lower_slack > -1e-6);
}
