//! Randomized invariants over seeded ribbon graphs.

mod common;

use brtpoly::expansions::{
    compute, genus_counts_from_polynomial, recursive, specialize_z_one, tutte_at_x_one_plus_y,
    Method,
};
use brtpoly::generate::{random_connected, random_edge_order, random_planar};
use brtpoly::poly::TermJson;
use brtpoly::quasitree::{enumerate_quasi_trees, quasi_trees_by_brute_force};
use brtpoly::{EdgeSet, MPoly, RibbonGraph};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_edges: usize) -> impl Strategy<Value = RibbonGraph> {
    (any::<u64>(), 0..=max_edges)
        .prop_map(|(seed, e)| random_connected(&mut ChaCha8Rng::seed_from_u64(seed), e))
}

fn planar(max_edges: usize) -> impl Strategy<Value = RibbonGraph> {
    (any::<u64>(), 1..=max_edges)
        .prop_map(|(seed, e)| random_planar(&mut ChaCha8Rng::seed_from_u64(seed), e))
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-50i64..50, 0u32..4, 0u32..4, 0u32..3, 0u32..3), 0..8).prop_map(
        |terms| {
            let mut p = MPoly::zero();
            for (c, x, y, z, t) in terms {
                p.add_term([x, y, z, t], BigInt::from(c));
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn boundary_walk_face_count_matches_restriction(g in graph(8)) {
        for h in g.all_edges().subsets() {
            // the lone vertex has no half-edges to walk but still bounds one face
            let walked = if g.is_trivial() { 1 } else { g.boundary_orbits(h).len() };
            let restricted = g.restrict(h).face_count();
            // SpanningSubgraph::new asserts 2g is even and non-negative
            let sub = g.subgraph(h);
            prop_assert_eq!(walked, restricted);
            prop_assert_eq!(sub.faces(), walked);
            prop_assert!(sub.faces() >= sub.components());
        }
    }

    #[test]
    fn composition_convention(g in graph(10)) {
        for i in 0..g.half_edge_count() {
            prop_assert_eq!(g.sigma0().apply(g.sigma1().apply(g.sigma2().apply(i))), i);
        }
    }

    #[test]
    fn dual_swaps_vertices_and_faces(g in graph(10)) {
        let d = g.dual().unwrap();
        let (c, cd) = (g.counts(), d.counts());
        prop_assert_eq!((cd.vertices, cd.faces, cd.edges, cd.genus), (c.faces, c.vertices, c.edges, c.genus));
        let dd = d.dual().unwrap().counts();
        prop_assert_eq!(dd, c);
    }

    #[test]
    fn delete_and_contract_counts(g in graph(10)) {
        let c = g.counts();
        for e in 0..g.edge_count() {
            if let Ok(d) = g.delete_edge(e) {
                prop_assert!(d.component_count() <= c.components + 1);
                prop_assert_eq!(d.edge_count(), c.edges - 1);
            }
            if !g.is_loop(e) {
                let k = g.contract_edge(e).unwrap().counts();
                prop_assert_eq!(
                    (k.vertices, k.edges, k.components, k.genus),
                    (c.vertices - 1, c.edges - 1, c.components, c.genus)
                );
            }
        }
    }

    #[test]
    fn polynomial_text_round_trip(p in mpoly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<MPoly>().unwrap(), p.clone());
        let json = serde_json::to_string(&p.to_json_terms()).unwrap();
        let terms: Vec<TermJson> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(MPoly::from_json_terms(&terms).unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in mpoly(), b in mpoly(), c in mpoly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MPoly::zero());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn resolution_tree_matches_brute_force(g in graph(9)) {
        let mut found: Vec<u64> = enumerate_quasi_trees(&g).unwrap().iter().map(|q| q.edges().bits()).collect();
        let mut brute: Vec<u64> = quasi_trees_by_brute_force(&g).iter().map(|h| h.bits()).collect();
        found.sort_unstable();
        brute.sort_unstable();
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn quasi_tree_identities(g in graph(8)) {
        for q in enumerate_quasi_trees(&g).unwrap() {
            common::check_quasi_tree(&g, &q).map_err(TestCaseError::fail)?;
        }
    }

    #[test]
    fn methods_agree_and_specialize(g in graph(8)) {
        let c = compute(&g, Method::StateSum, 24).unwrap().polynomial;
        for m in [Method::SpanningTree, Method::Recursive, Method::QuasiTree] {
            prop_assert_eq!(&compute(&g, m, 24).unwrap().polynomial, &c, "{}", m);
        }
        prop_assert_eq!(specialize_z_one(&c), tutte_at_x_one_plus_y(&g));
    }

    #[test]
    fn expansions_do_not_depend_on_edge_order(seed in any::<u64>(), e in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, e);
        let reference = compute(&g, Method::StateSum, 24).unwrap().polynomial;
        for _ in 0..5 {
            let reordered = g.clone().with_edge_order(random_edge_order(&mut rng, e)).unwrap();
            for m in [Method::SpanningTree, Method::QuasiTree, Method::Recursive] {
                prop_assert_eq!(&compute(&reordered, m, 24).unwrap().polynomial, &reference);
            }
            for q in enumerate_quasi_trees(&reordered).unwrap() {
                common::check_quasi_tree(&reordered, &q).map_err(TestCaseError::fail)?;
            }
        }
    }

    #[test]
    fn recursion_is_multiplicative(a in graph(5), b in graph(5)) {
        let union = a.disjoint_union(&b);
        let product = recursive(&a).polynomial * recursive(&b).polynomial;
        prop_assert_eq!(&recursive(&union).polynomial, &product);
        prop_assert_eq!(compute(&union, Method::StateSum, 24).unwrap().polynomial, product);
    }

    #[test]
    fn counting_substitution_counts_quasi_trees(g in graph(9)) {
        let c = compute(&g, Method::QuasiTree, 24).unwrap().polynomial;
        let by_genus = genus_counts_from_polynomial(&c).unwrap();
        let trees = enumerate_quasi_trees(&g).unwrap();
        let histogram = brtpoly::genus_histogram(&trees);
        let expected: Vec<BigInt> = histogram.iter().map(|&n| BigInt::from(n)).collect();
        prop_assert_eq!(by_genus, expected);
    }

    #[test]
    fn genus_zero_reduction(g in planar(8)) {
        common::check_genus_zero(&g).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn one_vertex_weights_factor(seed in any::<u64>(), loops in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = brtpoly::generate::one_vertex_graphs(loops);
        let g = &all[rand::Rng::gen_range(&mut rng, 0..all.len())];
        for q in enumerate_quasi_trees(g).unwrap() {
            let w = q.weight(g);
            let expected = MPoly::monomial(0, w.dead_nullity as u32, w.dead_genus as u32)
                * MPoly::binomial_power(1, 1, brtpoly::Var::Y, q.externally_live().len() as u32)
                * (MPoly::one() + MPoly::monomial(0, 1, 1)).pow(q.internally_live().len() as u32);
            prop_assert_eq!(w.expanded(), expected);
        }
    }
}

#[test]
fn tutte_tree_sum_matches_recursion_on_underlying_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for e in 0..=9 {
        let g = random_connected(&mut rng, e);
        let u = g.underlying_graph();
        let trees = u.spanning_trees_with_activities(|p| p).unwrap();
        let sum: MPoly = trees
            .iter()
            .map(|t| {
                MPoly::monomial(
                    t.internal_activity() as u32,
                    t.external_activity() as u32,
                    0,
                )
            })
            .sum();
        assert_eq!(sum, u.tutte_polynomial());
        assert_eq!(
            u.tutte_polynomial().eval_integer([1, 1, 0, 0]),
            BigInt::from(trees.len())
        );
    }
}

#[test]
fn empty_set_boundary_is_vertex_rotation() {
    let g = common::example();
    assert_eq!(g.boundary_components(EdgeSet::EMPTY), g.vertex_cycles());
}
