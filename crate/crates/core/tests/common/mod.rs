//! Fixtures and checks shared by the integration test targets.
#![allow(dead_code)]

use brtpoly::multigraph::SpanningTree;
use brtpoly::quasitree::{enumerate_quasi_trees, ChordDiagram, EdgeState, QuasiTree};
use brtpoly::{EdgeSet, MPoly, RibbonGraph, Var};

pub fn example() -> RibbonGraph {
    RibbonGraph::from_cycles(
        &[vec![1, 3, 2, 5], vec![7, 9], vec![10, 4, 12, 8, 6, 11]],
        &[(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)],
    )
    .unwrap()
}

pub fn two_vertex_planar() -> RibbonGraph {
    RibbonGraph::from_cycles(&[vec![1, 2, 3, 4], vec![5, 6]], &[(1, 4), (2, 5), (3, 6)]).unwrap()
}

pub fn two_vertex_torus() -> RibbonGraph {
    RibbonGraph::from_cycles(&[vec![1, 2, 3, 4], vec![5, 6]], &[(1, 3), (2, 6), (4, 5)]).unwrap()
}

pub fn planar_loop() -> RibbonGraph {
    RibbonGraph::from_cycles(&[vec![1, 2]], &[(1, 2)]).unwrap()
}

pub fn two_loops() -> RibbonGraph {
    RibbonGraph::from_cycles(&[vec![1, 3, 2, 4]], &[(1, 2), (3, 4)]).unwrap()
}

pub fn poly(s: &str) -> MPoly {
    s.parse().unwrap()
}

pub const EXAMPLE_C: &str =
    "Y^4*Z^2 + 2*X*Y^3*Z + 4*Y^3*Z + X^2*Y^2 + 3*X*Y^2 + 3*X*Y^2*Z + 4*Y^2*Z + 2*Y^2 \
                             + 2*X^2*Y + 6*X*Y + 4*Y + X^2 + 2*X + 1";

/// One row of the golden quasi-tree table for the example graph. The
/// weight is given as a list of factors to be multiplied out.
pub struct GoldenRow {
    pub bits: &'static str,
    pub cycle: [usize; 12],
    pub activity: &'static str,
    pub numbers: [usize; 4],
    pub weight: &'static [&'static str],
}

pub const GOLDEN_ROWS: [GoldenRow; 12] = [
    GoldenRow {
        bits: "001010",
        cycle: [1, 3, 2, 5, 11, 10, 7, 9, 4, 12, 8, 5],
        activity: "ℓdDdDd",
        numbers: [0, 0, 0, 1],
        weight: &["1 + Y"],
    },
    GoldenRow {
        bits: "001100",
        cycle: [1, 3, 2, 5, 11, 10, 4, 12, 8, 9, 7, 6],
        activity: "ℓdDLdd",
        numbers: [0, 0, 0, 1],
        weight: &["X", "1 + Y"],
    },
    GoldenRow {
        bits: "001111",
        cycle: [1, 3, 2, 5, 11, 8, 9, 4, 12, 10, 7, 6],
        activity: "ℓdDDDD",
        numbers: [1, 2, 1, 1],
        weight: &["Y^2*Z", "1 + Y"],
    },
    GoldenRow {
        bits: "010010",
        cycle: [1, 3, 12, 8, 6, 11, 10, 7, 9, 4, 2, 5],
        activity: "ℓLddDd",
        numbers: [0, 0, 0, 1],
        weight: &["X", "1 + Y"],
    },
    GoldenRow {
        bits: "010100",
        cycle: [1, 3, 12, 8, 9, 7, 6, 11, 10, 4, 2, 5],
        activity: "ℓLdLdd",
        numbers: [0, 0, 0, 1],
        weight: &["X^2", "1 + Y"],
    },
    GoldenRow {
        bits: "010111",
        cycle: [1, 3, 12, 10, 7, 6, 11, 8, 9, 4, 2, 5],
        activity: "ℓLdDDD",
        numbers: [1, 2, 1, 1],
        weight: &["X*Y^2*Z", "1 + Y"],
    },
    GoldenRow {
        bits: "011011",
        cycle: [1, 3, 12, 10, 7, 9, 4, 2, 5, 11, 8, 6],
        activity: "ℓLLdDD",
        numbers: [1, 1, 0, 1],
        weight: &["Y", "1 + Y", "X + 1 + Y*Z"],
    },
    GoldenRow {
        bits: "011101",
        cycle: [1, 3, 12, 10, 4, 2, 5, 11, 8, 9, 7, 6],
        activity: "ℓLLLdD",
        numbers: [1, 1, 0, 1],
        weight: &["X*Y", "1 + Y", "X + 1 + Y*Z"],
    },
    GoldenRow {
        bits: "011110",
        cycle: [1, 3, 12, 8, 9, 4, 2, 5, 11, 10, 7, 6],
        activity: "ℓLLDDd",
        numbers: [1, 1, 0, 1],
        weight: &["Y", "1 + Y", "X + 1 + Y*Z"],
    },
    GoldenRow {
        bits: "111010",
        cycle: [1, 5, 11, 10, 7, 9, 4, 2, 3, 12, 8, 6],
        activity: "LDDdDd",
        numbers: [1, 1, 0, 0],
        weight: &["Y", "1 + Y*Z"],
    },
    GoldenRow {
        bits: "111100",
        cycle: [1, 5, 11, 10, 4, 2, 3, 12, 8, 9, 7, 6],
        activity: "LDDLdd",
        numbers: [1, 1, 0, 0],
        weight: &["X*Y", "1 + Y*Z"],
    },
    GoldenRow {
        bits: "111111",
        cycle: [1, 5, 11, 8, 9, 4, 2, 3, 12, 10, 7, 6],
        activity: "LDDDDD",
        numbers: [2, 3, 1, 0],
        weight: &["Y^3*Z", "1 + Y*Z"],
    },
];

/// The row whose printed cycle repeats half-edge 5 and omits 6.
pub const TYPO_ROW: &str = "001010";

/// Golden spanning-tree table: tree, Tutte activities, inner weight factors, `X^{i(T)}`.
pub const GOLDEN_TREES: [(&str, &str, &[&str], &str); 4] = [
    (
        "001010",
        "ℓℓDℓDℓ",
        &["1 + 4*Y + 2*Y^2 + 4*Y^2*Z + 4*Y^3*Z + Y^4*Z^2"],
        "1",
    ),
    (
        "001100",
        "ℓℓDLdℓ",
        &["1 + 3*Y + Y^2 + 2*Y^2*Z + Y^3*Z"],
        "X",
    ),
    ("010010", "ℓLdℓDℓ", &["1 + Y", "1 + 2*Y + Y^2*Z"], "X"),
    ("010100", "ℓLdLdℓ", &["1 + Y", "1 + Y"], "X^2"),
];

pub fn product(factors: &[&str]) -> MPoly {
    factors.iter().map(|f| poly(f)).product()
}

fn fail(what: String) -> Result<(), String> {
    Err(what)
}

/// Leaf/activity agreement, the chord-crossing rule for live edges, the
/// single-edge effects, and the subset-split identities for `D(Q) ∪ S₁ ∪ S₂`.
pub fn check_quasi_tree(g: &RibbonGraph, q: &QuasiTree) -> Result<(), String> {
    let bits = g.bitstring(q.edges());
    let unresolved = EdgeSet::from_edges(
        (0..g.edge_count()).filter(|&e| q.leaf().state(e) == EdgeState::Unresolved),
    );
    if unresolved != q.live_edges() {
        return fail(format!(
            "{bits}: leaf {} but live edges differ",
            q.leaf().display(g)
        ));
    }
    let diagram = ChordDiagram::new(g, q.edges()).map_err(|e| e.to_string())?;
    let rank = |e: usize| g.edge_order().rank(e);
    for a in 0..g.edge_count() {
        for b in 0..g.edge_count() {
            if rank(a) < rank(b) && diagram.chords_intersect(g, a, b) && q.activities()[b].is_live()
            {
                return fail(format!("{bits}: live chord {b} crosses lower chord {a}"));
            }
        }
    }

    let d = q.dead_subgraph();
    let (internal, external) = (q.internally_live(), q.externally_live());
    let dead = g.subgraph(d);
    for x in external.iter() {
        let h = g.subgraph(d.with(x));
        if h.faces() != dead.faces() + 1 || h.components() != dead.components() {
            return fail(format!(
                "{bits}: external live edge {x} changes D unexpectedly"
            ));
        }
    }
    for x in internal.iter() {
        if g.subgraph(d.with(x)).faces() + 1 != dead.faces() {
            return fail(format!(
                "{bits}: internal live edge {x} does not merge two faces"
            ));
        }
    }

    let gq = q.contracted_graph(g);
    for s1 in internal.subsets() {
        let w = EdgeSet::from_edges(
            gq.edges()
                .iter()
                .enumerate()
                .filter(|(_, me)| s1.contains(me.id))
                .map(|(p, _)| p),
        );
        let n_w = gq.component_count_of(w) + s1.len() - gq.vertex_count();
        let h1 = g.subgraph(d.union(s1));
        if h1.nullity() != dead.nullity() + n_w || h1.genus() != dead.genus() + n_w {
            return fail(format!(
                "{bits}: n/g of D∪S₁ disagree with n(W) for S₁={:?}",
                s1.iter().collect::<Vec<_>>()
            ));
        }
        for s2 in external.subsets() {
            let h = g.subgraph(d.union(s1).union(s2));
            if h.components() != h1.components()
                || h.nullity() != h1.nullity() + s2.len()
                || h.genus() != h1.genus()
            {
                return fail(format!(
                    "{bits}: split identities fail for S₁={:?} S₂={:?}",
                    s1.iter().collect::<Vec<_>>(),
                    s2.iter().collect::<Vec<_>>()
                ));
            }
        }
    }
    Ok(())
}

/// Quasi-trees are spanning trees, live/dead equals Tutte activity, and the
/// expansion at `(X, y−1, 1)` equals `Σ_T x^{i(T)} y^{j(T)}`.
pub fn check_genus_zero(g: &RibbonGraph) -> Result<(), String> {
    let quasi = enumerate_quasi_trees(g).map_err(|e| e.to_string())?;
    let mut trees: Vec<SpanningTree> = g
        .underlying_graph()
        .spanning_trees_with_activities(|e| g.edge_order().rank(e))
        .map_err(|e| e.to_string())?;
    if quasi.len() != trees.len() {
        return fail(format!(
            "{} quasi-trees vs {} spanning trees",
            quasi.len(),
            trees.len()
        ));
    }
    trees.sort_by_key(|t| t.edges.bits());
    let mut sorted: Vec<&QuasiTree> = quasi.iter().collect();
    sorted.sort_by_key(|q| q.edges().bits());
    for (q, t) in sorted.iter().zip(&trees) {
        if q.edges() != t.edges || q.activities() != t.activities.as_slice() {
            return fail(format!("activities differ on {}", g.bitstring(q.edges())));
        }
    }
    let c = brtpoly::expansions::quasi_tree_method(g)
        .map_err(|e| e.to_string())?
        .polynomial;
    let shifted = c.substitute_xyz(
        &MPoly::var(Var::X),
        &(MPoly::var(Var::Y) - MPoly::one()),
        &MPoly::one(),
    );
    let tree_sum: MPoly = trees
        .iter()
        .map(|t| {
            MPoly::monomial(
                t.internal_activity() as u32,
                t.external_activity() as u32,
                0,
            )
        })
        .sum();
    if shifted != tree_sum {
        return fail(format!(
            "C(X, y-1, 1) = {shifted} but the tree sum is {tree_sum}"
        ));
    }
    Ok(())
}
