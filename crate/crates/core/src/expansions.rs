//! Four routes to `C(Γ; X, Y, Z)` and the checks that tie them together.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::activity::{activity_string, Activity};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};
use crate::quasitree::{enumerate_quasi_trees, genus_histogram, quasi_tree_expansion};
use crate::ribbon::RibbonGraph;

/// Default cap on the number of edges for the `2^e` state sum.
pub const DEFAULT_SIZE_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    StateSum,
    #[serde(rename = "tree")]
    SpanningTree,
    QuasiTree,
    Recursive,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::StateSum,
        Method::SpanningTree,
        Method::Recursive,
        Method::QuasiTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::StateSum => "statesum",
            Method::SpanningTree => "tree",
            Method::QuasiTree => "quasitree",
            Method::Recursive => "recursive",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct BrtResult {
    pub polynomial: MPoly,
    pub method: Method,
    /// Summands processed: subgraphs, (tree, S) pairs, quasi-trees, or
    /// base-case subgraphs of the recursion.
    pub term_count: u64,
    pub elapsed: Duration,
}

pub fn compute(graph: &RibbonGraph, method: Method, cap: usize) -> Result<BrtResult> {
    match method {
        Method::StateSum => state_sum(graph, cap),
        Method::SpanningTree => spanning_tree_expansion(graph),
        Method::QuasiTree => quasi_tree_method(graph),
        Method::Recursive => Ok(recursive(graph)),
    }
}

/// `Σ_{H ∈ subsets} (X−1)^{k(H)−k(Γ)} Y^{n(H)} Z^{g(H)}`.
pub fn state_sum_over(graph: &RibbonGraph, subsets: impl Iterator<Item = EdgeSet>) -> (MPoly, u64) {
    let base_k = graph.component_count();
    let mut buckets: HashMap<(usize, usize, usize), u64> = HashMap::new();
    let mut count = 0;
    for s in subsets {
        let h = graph.subgraph(s);
        *buckets
            .entry((h.components() - base_k, h.nullity(), h.genus()))
            .or_default() += 1;
        count += 1;
    }
    let mut poly = MPoly::zero();
    let mut x_powers: HashMap<usize, MPoly> = HashMap::new();
    for ((dk, n, g), c) in buckets {
        let xp = x_powers
            .entry(dk)
            .or_insert_with(|| MPoly::binomial_power(-1, 1, Var::X, dk as u32));
        let term = xp.clone() * MPoly::monomial(0, n as u32, g as u32);
        poly = poly + term.scale(&BigInt::from(c));
    }
    (poly, count)
}

/// Spanning-subgraph state sum over all `2^e` subgraphs.
pub fn state_sum(graph: &RibbonGraph, cap: usize) -> Result<BrtResult> {
    if graph.edge_count() > cap {
        return Err(Error::SizeLimit {
            edges: graph.edge_count(),
            cap,
        });
    }
    let start = Instant::now();
    let (polynomial, term_count) = state_sum_over(graph, graph.all_edges().subsets());
    Ok(BrtResult {
        polynomial,
        method: Method::StateSum,
        term_count,
        elapsed: start.elapsed(),
    })
}

/// One spanning tree's contribution `X^{i(T)} Σ_{S ⊆ ε(T)} Y^{n(T∪S)} Z^{g(T∪S)}`.
#[derive(Clone, Debug)]
pub struct SpanningTreeTerm {
    pub edges: EdgeSet,
    /// Tutte activities, indexed by edge number.
    pub activities: Vec<Activity>,
    pub inner: MPoly,
    pub internal_activity: usize,
}

impl SpanningTreeTerm {
    pub fn activity_string(&self, graph: &RibbonGraph) -> String {
        activity_string(&self.activities, graph.edge_order().sequence())
    }

    pub fn polynomial(&self) -> MPoly {
        MPoly::monomial(self.internal_activity as u32, 0, 0) * self.inner.clone()
    }
}

pub fn spanning_tree_terms(graph: &RibbonGraph) -> Result<Vec<SpanningTreeTerm>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    // underlying edge positions coincide with ribbon edge numbers
    let underlying = graph.underlying_graph();
    let trees = underlying.spanning_trees_with_activities(|pos| graph.edge_order().rank(pos))?;
    Ok(trees
        .into_iter()
        .map(|t| {
            let inner = t
                .externally_active()
                .subsets()
                .map(|s| {
                    let h = graph.subgraph(t.edges.union(s));
                    MPoly::monomial(0, h.nullity() as u32, h.genus() as u32)
                })
                .sum();
            SpanningTreeTerm {
                internal_activity: t.internal_activity(),
                edges: t.edges,
                activities: t.activities,
                inner,
            }
        })
        .collect())
}

pub fn spanning_tree_expansion(graph: &RibbonGraph) -> Result<BrtResult> {
    let start = Instant::now();
    let terms = spanning_tree_terms(graph)?;
    let term_count = terms
        .iter()
        .map(|t| {
            1u64 << t
                .activities
                .iter()
                .filter(|a| **a == Activity::ExternallyLive)
                .count()
        })
        .sum();
    Ok(BrtResult {
        polynomial: terms.iter().map(SpanningTreeTerm::polynomial).sum(),
        method: Method::SpanningTree,
        term_count,
        elapsed: start.elapsed(),
    })
}

pub fn quasi_tree_method(graph: &RibbonGraph) -> Result<BrtResult> {
    let start = Instant::now();
    let (polynomial, trees) = quasi_tree_expansion(graph)?;
    Ok(BrtResult {
        polynomial,
        method: Method::QuasiTree,
        term_count: trees.len() as u64,
        elapsed: start.elapsed(),
    })
}

/// Deletion/contraction on the highest-ordered non-loop edge, with the
/// one-vertex subgraph sum as base case and products over components.
pub fn recursive(graph: &RibbonGraph) -> BrtResult {
    let start = Instant::now();
    let mut term_count = 0;
    let polynomial = recurse(graph, &mut term_count);
    BrtResult {
        polynomial,
        method: Method::Recursive,
        term_count,
        elapsed: start.elapsed(),
    }
}

fn recurse(graph: &RibbonGraph, terms: &mut u64) -> MPoly {
    if graph.is_trivial() {
        *terms += 1;
        return MPoly::one();
    }
    if !graph.is_connected() {
        return graph
            .connected_components()
            .iter()
            .map(|c| recurse(c, terms))
            .product();
    }
    let pick = graph
        .edge_order()
        .sequence()
        .iter()
        .rev()
        .copied()
        .find(|&e| !graph.is_loop(e));
    match pick {
        None => {
            // one vertex: Σ_H Y^{n(H)} Z^{g(H)}
            let (poly, count) = state_sum_over(graph, graph.all_edges().subsets());
            *terms += count;
            poly
        }
        Some(e) => {
            let contracted = graph.contract_edge(e).expect("non-loop edge contracts");
            if graph.is_bridge(e) {
                MPoly::var(Var::X) * recurse(&contracted, terms)
            } else {
                let deleted = graph
                    .delete_edge(e)
                    .expect("non-bridge deletion keeps every vertex");
                recurse(&deleted, terms) + recurse(&contracted, terms)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MethodReport {
    pub method: Method,
    pub polynomial: String,
    pub term_count: u64,
    pub elapsed_ms: f64,
}

impl From<&BrtResult> for MethodReport {
    fn from(r: &BrtResult) -> Self {
        MethodReport {
            method: r.method,
            polynomial: r.polynomial.to_string(),
            term_count: r.term_count,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub methods: Vec<MethodReport>,
    pub all_equal: bool,
    /// `C(Γ; X, Y, 1) = T_G(X, 1+Y)`.
    pub specialization_ok: bool,
    pub quasi_tree_terms: u64,
    pub state_sum_terms: u64,
    /// Quasi-tree summands do not exceed state-sum summands.
    pub quasi_tree_not_more_terms: bool,
}

/// Runs all four methods and checks that they agree.
pub fn verify_all(graph: &RibbonGraph, cap: usize) -> Result<VerifyReport> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let results = Method::ALL
        .into_iter()
        .map(|m| compute(graph, m, cap))
        .collect::<Result<Vec<_>>>()?;
    let reference = &results[0];
    for r in &results[1..] {
        if r.polynomial != reference.polynomial {
            return Err(Error::Mismatch {
                left_method: reference.method.to_string(),
                left: reference.polynomial.to_string(),
                right_method: r.method.to_string(),
                right: r.polynomial.to_string(),
            });
        }
    }
    let c_at_z1 = specialize_z_one(&reference.polynomial);
    let tutte_shifted = tutte_at_x_one_plus_y(graph);
    if c_at_z1 != tutte_shifted {
        return Err(Error::Mismatch {
            left_method: "C(X,Y,1)".into(),
            left: c_at_z1.to_string(),
            right_method: "T_G(X,1+Y)".into(),
            right: tutte_shifted.to_string(),
        });
    }
    let count_of = |m: Method| results.iter().find(|r| r.method == m).unwrap().term_count;
    let (qt, ss) = (count_of(Method::QuasiTree), count_of(Method::StateSum));
    Ok(VerifyReport {
        methods: results.iter().map(MethodReport::from).collect(),
        all_equal: true,
        specialization_ok: true,
        quasi_tree_terms: qt,
        state_sum_terms: ss,
        quasi_tree_not_more_terms: qt <= ss,
    })
}

/// `C(X, Y, 1)`.
pub fn specialize_z_one(c: &MPoly) -> MPoly {
    c.substitute_xyz(&MPoly::var(Var::X), &MPoly::var(Var::Y), &MPoly::one())
}

/// Tutte polynomial of the underlying graph at `(X, 1+Y)`.
pub fn tutte_at_x_one_plus_y(graph: &RibbonGraph) -> MPoly {
    graph.underlying_graph().tutte_polynomial().substitute_xyz(
        &MPoly::var(Var::X),
        &(MPoly::one() + MPoly::var(Var::Y)),
        &MPoly::var(Var::Z),
    )
}

/// Quasi-tree counts by genus, read off `C(1, Y, t·Y⁻²)` at `Y = 0`.
pub fn genus_counts_from_polynomial(c: &MPoly) -> Result<Vec<BigInt>> {
    Ok(c.counting_substitution()?.t_coefficients_at_y0())
}

/// An exact rational point on the surface `(X−1)·Y·Z = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintPoint {
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

/// Deterministic points with `X ≠ 1`, `Y ≠ 0`, `Z = 1/((X−1)Y)`.
pub fn constraint_points(seed: u64, count: usize) -> Vec<ConstraintPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let v: i64 = rng.gen_range(-9..=9);
        if v != 0 {
            return v;
        }
    };
    let mut out: Vec<ConstraintPoint> = Vec::with_capacity(count);
    while out.len() < count {
        let dx = BigRational::new(nonzero(&mut rng).into(), rng.gen_range(1i64..=7).into());
        let y = BigRational::new(nonzero(&mut rng).into(), rng.gen_range(1i64..=7).into());
        let x = BigRational::one() + &dx;
        let z = (dx * &y).recip();
        let p = ConstraintPoint { x, y, z };
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityPoint {
    pub x: String,
    pub y: String,
    pub z: String,
    pub lhs: String,
    /// `Y^g C_{Γ*}(Y, X, Z)`.
    pub rhs_swapped: String,
    /// `Y^g C_{Γ*}(Y+1, X−1, Z)`.
    pub rhs_shifted: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DualityReport {
    pub genus: usize,
    pub histogram: Vec<usize>,
    pub dual_histogram: Vec<usize>,
    /// Complements of quasi-trees are exactly the dual's quasi-trees, with
    /// genera adding up to `g(Γ)`.
    pub bijection_ok: bool,
    /// `(X−1)^g C_Γ(X,Y,Z) = Y^g C_{Γ*}(Y,X,Z)` at every sampled point.
    pub swapped_identity_ok: bool,
    /// `(X−1)^g C_Γ(X,Y,Z) = Y^g C_{Γ*}(Y+1,X−1,Z)` at every sampled point.
    pub shifted_identity_ok: bool,
    pub points: Vec<IdentityPoint>,
}

impl DualityReport {
    /// Fails with [`Error::IdentityFailure`] at the first point where the
    /// `C_{Γ*}(Y, X, Z)` form does not hold.
    pub fn require_swapped_identity(&self) -> Result<()> {
        self.first_failure(|p| p.lhs == p.rhs_swapped)
    }

    /// As [`Self::require_swapped_identity`] for the `C_{Γ*}(Y+1, X−1, Z)` form.
    pub fn require_shifted_identity(&self) -> Result<()> {
        self.first_failure(|p| p.lhs == p.rhs_shifted)
    }

    fn first_failure(&self, holds: impl Fn(&IdentityPoint) -> bool) -> Result<()> {
        match self.points.iter().find(|p| !holds(p)) {
            None => Ok(()),
            Some(p) => Err(Error::IdentityFailure {
                x: p.x.clone(),
                y: p.y.clone(),
                z: p.z.clone(),
            }),
        }
    }
}

/// Checks the quasi-tree correspondence with the dual graph and evaluates
/// the duality identity at `point_count` rational points on `(X−1)YZ = 1`.
pub fn duality_check(graph: &RibbonGraph, seed: u64, point_count: usize) -> Result<DualityReport> {
    let dual = graph.dual()?;
    let genus = graph.genus();
    let trees = enumerate_quasi_trees(graph)?;
    let dual_trees = enumerate_quasi_trees(&dual)?;

    let m = graph.edge_count();
    let mut complements: Vec<(EdgeSet, usize)> = trees
        .iter()
        .map(|q| (q.edges().complement(m), genus - q.genus()))
        .collect();
    let mut dual_sets: Vec<(EdgeSet, usize)> =
        dual_trees.iter().map(|q| (q.edges(), q.genus())).collect();
    complements.sort();
    dual_sets.sort();
    let bijection_ok = complements == dual_sets;
    if !bijection_ok {
        return Err(Error::BijectionFailure(format!(
            "{} quasi-trees but {} dual quasi-trees, or genera do not complement",
            trees.len(),
            dual_trees.len()
        )));
    }

    let c = state_sum(graph, usize::MAX)?.polynomial;
    let c_dual = state_sum(&dual, usize::MAX)?.polynomial;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut points = Vec::with_capacity(point_count);
    for p in constraint_points(seed, point_count) {
        let dx = &p.x - &one;
        let lhs = num_traits::pow(dx.clone(), genus) * c.eval_rational([&p.x, &p.y, &p.z, &zero]);
        let y_g = num_traits::pow(p.y.clone(), genus);
        let swapped = &y_g * c_dual.eval_rational([&p.y, &p.x, &p.z, &zero]);
        let y_plus_one = &p.y + &one;
        let shifted = &y_g * c_dual.eval_rational([&y_plus_one, &dx, &p.z, &zero]);
        points.push(IdentityPoint {
            x: p.x.to_string(),
            y: p.y.to_string(),
            z: p.z.to_string(),
            lhs: lhs.to_string(),
            rhs_swapped: swapped.to_string(),
            rhs_shifted: shifted.to_string(),
        });
    }
    Ok(DualityReport {
        genus,
        histogram: genus_histogram(&trees),
        dual_histogram: genus_histogram(&dual_trees),
        bijection_ok,
        swapped_identity_ok: points.iter().all(|p| p.lhs == p.rhs_swapped),
        shifted_identity_ok: points.iter().all(|p| p.lhs == p.rhs_shifted),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_graph() -> RibbonGraph {
        RibbonGraph::from_cycles(
            &[vec![1, 3, 2, 5], vec![7, 9], vec![10, 4, 12, 8, 6, 11]],
            &[(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)],
        )
        .unwrap()
    }

    fn two_vertex_torus() -> RibbonGraph {
        RibbonGraph::from_cycles(&[vec![1, 2, 3, 4], vec![5, 6]], &[(1, 3), (2, 6), (4, 5)])
            .unwrap()
    }

    const EXAMPLE_C: &str =
        "Y^4*Z^2 + 2*X*Y^3*Z + 4*Y^3*Z + X^2*Y^2 + 3*X*Y^2 + 3*X*Y^2*Z + 4*Y^2*Z \
                             + 2*Y^2 + 2*X^2*Y + 6*X*Y + 4*Y + X^2 + 2*X + 1";

    #[test]
    fn bridge_state_sum_is_x() {
        let g = RibbonGraph::from_cycles(&[vec![1], vec![2]], &[(1, 2)]).unwrap();
        assert_eq!(state_sum(&g, 24).unwrap().polynomial, MPoly::var(Var::X));
        assert_eq!(recursive(&g).polynomial, MPoly::var(Var::X));
    }

    #[test]
    fn planar_loop_recursive() {
        let g = RibbonGraph::from_cycles(&[vec![1, 2]], &[(1, 2)]).unwrap();
        assert_eq!(recursive(&g).polynomial.to_string(), "Y + 1");
    }

    #[test]
    fn example_interval_sum_matches_weight() {
        let g = example_graph();
        let rho = crate::quasitree::PartialResolution::parse(&g, "****01").unwrap();
        let (poly, count) = state_sum_over(&g, rho.interval());
        assert_eq!(count, 16);
        let expected: MPoly = "X^2*Y + X*Y + X*Y^2*Z + X^2*Y^2 + X*Y^2 + X*Y^3*Z"
            .parse()
            .unwrap();
        assert_eq!(poly, expected);
    }

    #[test]
    fn example_all_methods() {
        let g = example_graph();
        let expected: MPoly = EXAMPLE_C.parse().unwrap();
        for m in Method::ALL {
            assert_eq!(compute(&g, m, 24).unwrap().polynomial, expected, "{m}");
        }
        let at_one = expected.eval_integer([1, 1, 1, 0]);
        assert_eq!(at_one, 36.into());
    }

    #[test]
    fn two_vertex_torus_recursive_equals_state_sum() {
        let g = two_vertex_torus();
        let ss = state_sum(&g, 24).unwrap();
        assert_eq!(ss.term_count, 8);
        assert_eq!(recursive(&g).polynomial, ss.polynomial);
    }

    #[test]
    fn size_cap() {
        let g = example_graph();
        assert_eq!(
            state_sum(&g, 5).unwrap_err(),
            Error::SizeLimit { edges: 6, cap: 5 }
        );
    }

    #[test]
    fn verify_example() {
        let r = verify_all(&example_graph(), 24).unwrap();
        assert!(r.all_equal && r.specialization_ok);
        assert_eq!((r.state_sum_terms, r.quasi_tree_terms), (64, 12));
    }

    #[test]
    fn genus_counts() {
        let c: MPoly = EXAMPLE_C.parse().unwrap();
        let counts = genus_counts_from_polynomial(&c).unwrap();
        assert_eq!(counts, vec![4.into(), 7.into(), 1.into()]);
    }

    #[test]
    fn constraint_points_lie_on_surface() {
        let pts = constraint_points(7, 20);
        assert_eq!(pts.len(), 20);
        for p in &pts {
            assert_eq!(
                (&p.x - BigRational::one()) * &p.y * &p.z,
                BigRational::one()
            );
        }
        assert_eq!(pts, constraint_points(7, 20));
    }

    #[test]
    fn duality_histograms_reverse() {
        let r = duality_check(&example_graph(), 1, 4).unwrap();
        assert_eq!(r.histogram, vec![4, 7, 1]);
        assert_eq!(r.dual_histogram, vec![1, 7, 4]);
        let r = duality_check(&two_vertex_torus(), 1, 4).unwrap();
        let mut rev = r.histogram.clone();
        rev.reverse();
        assert_eq!(r.dual_histogram, rev);
    }

    #[test]
    fn method_names_roundtrip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
    }
}
