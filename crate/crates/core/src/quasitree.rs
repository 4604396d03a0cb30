//! Quasi-trees: spanning subgraphs with a single boundary curve.
//!
//! Quasi-trees are enumerated as the leaves of a binary resolution tree.
//! Edges are resolved from the highest-ordered down. An edge is skipped
//! (left unresolved) when one of its two resolutions leaves no completion
//! with one face; otherwise the node branches into a 0-child (left) and a
//! 1-child (right). Each leaf completes uniquely to a quasi-tree, and its
//! unresolved edges are exactly the live edges of that quasi-tree.
//!
//! Whether a partial resolution can still reach one face is decided on the
//! graph whose nodes are the boundary curves of the resolved-to-1 edges and
//! whose links are the unresolved edges.

use std::fmt;

use crate::activity::{activity_string, Activity};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::perm::UnionFind;
use crate::poly::{MPoly, Var};
use crate::ribbon::{RibbonGraph, SpanningSubgraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeState {
    Zero,
    One,
    Unresolved,
}

impl EdgeState {
    fn symbol(self) -> char {
        match self {
            EdgeState::Zero => '0',
            EdgeState::One => '1',
            EdgeState::Unresolved => '*',
        }
    }
}

/// Per-edge state in `{0, 1, *}`, indexed by edge number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialResolution {
    states: Vec<EdgeState>,
}

impl PartialResolution {
    pub fn unresolved(edge_count: usize) -> Self {
        PartialResolution {
            states: vec![EdgeState::Unresolved; edge_count],
        }
    }

    /// Parses a string over `{0,1,*}` written in the graph's edge order.
    pub fn parse(graph: &RibbonGraph, s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != graph.edge_count() {
            return Err(Error::Input(format!("resolution {s:?} has wrong length")));
        }
        let mut states = vec![EdgeState::Unresolved; chars.len()];
        for (r, c) in chars.into_iter().enumerate() {
            states[graph.edge_order().sequence()[r]] = match c {
                '0' => EdgeState::Zero,
                '1' => EdgeState::One,
                '*' => EdgeState::Unresolved,
                _ => return Err(Error::Input(format!("bad resolution character {c:?}"))),
            };
        }
        Ok(PartialResolution { states })
    }

    pub fn state(&self, edge: usize) -> EdgeState {
        self.states[edge]
    }

    pub fn with(&self, edge: usize, state: EdgeState) -> Self {
        let mut states = self.states.clone();
        states[edge] = state;
        PartialResolution { states }
    }

    /// `H_ρ`: edges resolved to 1.
    pub fn ones(&self) -> EdgeSet {
        self.matching(EdgeState::One)
    }

    pub fn unresolved_edges(&self) -> EdgeSet {
        self.matching(EdgeState::Unresolved)
    }

    fn matching(&self, target: EdgeState) -> EdgeSet {
        EdgeSet::from_edges(
            self.states
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == target)
                .map(|(e, _)| e),
        )
    }

    /// Membership of a full resolution in the interval `[ρ]`.
    pub fn contains(&self, subset: EdgeSet) -> bool {
        self.states.iter().enumerate().all(|(e, s)| match s {
            EdgeState::Zero => !subset.contains(e),
            EdgeState::One => subset.contains(e),
            EdgeState::Unresolved => true,
        })
    }

    /// All full resolutions in `[ρ]`.
    pub fn interval(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        let base = self.ones();
        self.unresolved_edges()
            .subsets()
            .map(move |s| base.union(s))
    }

    /// Rendered in the graph's edge order.
    pub fn display(&self, graph: &RibbonGraph) -> String {
        graph
            .edge_order()
            .sequence()
            .iter()
            .map(|&e| self.states[e].symbol())
            .collect()
    }
}

/// The boundary curve of a quasi-tree with every half-edge marked on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    /// 0-based half-edges in walk order, starting at half-edge 0.
    cycle: Vec<usize>,
    position: Vec<usize>,
}

impl ChordDiagram {
    pub fn new(graph: &RibbonGraph, quasi_tree: EdgeSet) -> Result<Self> {
        let faces = graph.subgraph_face_count(quasi_tree);
        if faces != 1 {
            return Err(Error::NotQuasiTree { faces });
        }
        let len = graph.half_edge_count();
        let mut cycle = Vec::with_capacity(len);
        let mut position = vec![0; len];
        if len > 0 {
            let mut cur = 0;
            loop {
                position[cur] = cycle.len();
                cycle.push(cur);
                cur = graph.boundary_step(quasi_tree, cur);
                if cur == 0 {
                    break;
                }
            }
        }
        debug_assert_eq!(cycle.len(), len);
        Ok(ChordDiagram { cycle, position })
    }

    /// 1-based labels in walk order starting at half-edge 1.
    pub fn labels(&self) -> Vec<usize> {
        self.cycle.iter().map(|d| d + 1).collect()
    }

    pub fn position(&self, dart: usize) -> usize {
        self.position[dart]
    }

    /// Whether the chords of two edges have alternating endpoints.
    pub fn chords_intersect(&self, graph: &RibbonGraph, e1: usize, e2: usize) -> bool {
        if e1 == e2 {
            return false;
        }
        let (a, b) = graph.edge_darts(e1);
        let (lo, hi) = {
            let (pa, pb) = (self.position[a], self.position[b]);
            (pa.min(pb), pa.max(pb))
        };
        let (c, d) = graph.edge_darts(e2);
        let inside = |x: usize| lo < self.position[x] && self.position[x] < hi;
        inside(c) != inside(d)
    }
}

/// Live/dead classification: an edge is live iff its chord meets no chord of
/// a strictly lower-ordered edge. Indexed by edge number.
pub fn classify_activities(
    graph: &RibbonGraph,
    diagram: &ChordDiagram,
    quasi_tree: EdgeSet,
) -> Vec<Activity> {
    let order = graph.edge_order();
    (0..graph.edge_count())
        .map(|e| {
            let live = order.sequence()[..order.rank(e)]
                .iter()
                .all(|&lower| !diagram.chords_intersect(graph, e, lower));
            Activity::new(quasi_tree.contains(e), live)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct QuasiTree {
    edges: EdgeSet,
    diagram: ChordDiagram,
    activities: Vec<Activity>,
    genus: usize,
    leaf: PartialResolution,
}

impl QuasiTree {
    /// Builds a quasi-tree record for `edges` directly, without the
    /// resolution tree. The leaf is reconstructed from the activities.
    pub fn from_edges(graph: &RibbonGraph, edges: EdgeSet) -> Result<Self> {
        let diagram = ChordDiagram::new(graph, edges)?;
        let activities = classify_activities(graph, &diagram, edges);
        let mut leaf = PartialResolution::unresolved(graph.edge_count());
        for (e, a) in activities.iter().enumerate() {
            if !a.is_live() {
                let s = if a.is_internal() {
                    EdgeState::One
                } else {
                    EdgeState::Zero
                };
                leaf = leaf.with(e, s);
            }
        }
        Ok(QuasiTree {
            edges,
            genus: graph.subgraph(edges).genus(),
            diagram,
            activities,
            leaf,
        })
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    /// Indexed by edge number.
    pub fn activities(&self) -> &[Activity] {
        &self.activities
    }

    pub fn activity_string(&self, graph: &RibbonGraph) -> String {
        activity_string(&self.activities, graph.edge_order().sequence())
    }

    /// The resolution-tree leaf this quasi-tree completes.
    pub fn leaf(&self) -> &PartialResolution {
        &self.leaf
    }

    fn with_activity(&self, wanted: Activity) -> EdgeSet {
        EdgeSet::from_edges(
            self.activities
                .iter()
                .enumerate()
                .filter(|(_, a)| **a == wanted)
                .map(|(e, _)| e),
        )
    }

    /// `D(Q)`: internally dead edges.
    pub fn dead_subgraph(&self) -> EdgeSet {
        self.with_activity(Activity::InternallyDead)
    }

    /// `I(Q)`: internally live edges.
    pub fn internally_live(&self) -> EdgeSet {
        self.with_activity(Activity::InternallyLive)
    }

    /// `E(Q)`: externally live edges.
    pub fn externally_live(&self) -> EdgeSet {
        self.with_activity(Activity::ExternallyLive)
    }

    pub fn live_edges(&self) -> EdgeSet {
        self.internally_live().union(self.externally_live())
    }

    /// `G_Q`: vertices are the components of `D(Q)`, edges the internally
    /// live edges. Edge ids are the ribbon graph's edge numbers.
    pub fn contracted_graph(&self, graph: &RibbonGraph) -> MultiGraph {
        let mut uf = UnionFind::new(graph.vertex_count());
        for e in self.dead_subgraph().iter() {
            let (a, b) = graph.edge_darts(e);
            uf.union(graph.vertex_of(a), graph.vertex_of(b));
        }
        let mut component = vec![usize::MAX; graph.vertex_count()];
        let mut count = 0;
        for v in 0..graph.vertex_count() {
            let r = uf.find(v);
            if component[r] == usize::MAX {
                component[r] = count;
                count += 1;
            }
            component[v] = component[r];
        }
        let mut g = MultiGraph::new(count);
        for e in self.internally_live().iter() {
            let (a, b) = graph.edge_darts(e);
            g.add_edge(
                component[uf.find(graph.vertex_of(a))],
                component[uf.find(graph.vertex_of(b))],
                e,
            );
        }
        g
    }

    pub fn weight(&self, graph: &RibbonGraph) -> QuasiTreeWeight {
        let dead = graph.subgraph(self.dead_subgraph());
        let contracted = self.contracted_graph(graph);
        QuasiTreeWeight {
            dead_nullity: dead.nullity(),
            dead_genus: dead.genus(),
            external_live: self.externally_live().len(),
            tutte: contracted.tutte_at_x_one_plus_yz(),
            contracted,
        }
    }
}

/// The factors of one quasi-tree's summand:
/// `Y^{n(D)} Z^{g(D)} (1+Y)^{|E|} T_{G_Q}(X, 1+YZ)`.
#[derive(Clone, Debug)]
pub struct QuasiTreeWeight {
    pub dead_nullity: usize,
    pub dead_genus: usize,
    pub external_live: usize,
    pub contracted: MultiGraph,
    /// `T_{G_Q}(X, 1+YZ)`, already substituted.
    pub tutte: MPoly,
}

impl QuasiTreeWeight {
    pub fn expanded(&self) -> MPoly {
        MPoly::monomial(0, self.dead_nullity as u32, self.dead_genus as u32)
            * MPoly::binomial_power(1, 1, Var::Y, self.external_live as u32)
            * self.tutte.clone()
    }

    /// E.g. `X*Y*(1+Y)*(X + Y*Z + 1)`.
    pub fn factored(&self) -> String {
        let mut parts = Vec::new();
        let mono = MPoly::monomial(0, self.dead_nullity as u32, self.dead_genus as u32);
        let mut tutte = self.tutte.clone();
        // pull a pure power of X out of the Tutte value to lead, as in X*Y*(...)
        let x_power = tutte.terms().map(|(m, _)| m[0]).min().unwrap_or(0);
        if x_power > 0 {
            parts.push(monomial_factor("X", x_power));
            tutte = divide_by_x_power(&tutte, x_power);
        }
        if mono != MPoly::one() {
            parts.push(mono.to_string());
        }
        match self.external_live {
            0 => {}
            1 => parts.push("(1+Y)".into()),
            c => parts.push(format!("(1+Y)^{c}")),
        }
        if tutte != MPoly::one() {
            if tutte.len() == 1 {
                parts.push(tutte.to_string());
            } else {
                parts.push(format!("({tutte})"));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

fn monomial_factor(var: &str, exp: u32) -> String {
    if exp == 1 {
        var.to_string()
    } else {
        format!("{var}^{exp}")
    }
}

fn divide_by_x_power(p: &MPoly, exp: u32) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        out.add_term([m[0] - exp, m[1], m[2], m[3]], c.clone());
    }
    out
}

/// A node of the resolution tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionNode {
    pub resolution: PartialResolution,
    /// Edges of rank `< pending` have not been visited yet.
    pending: usize,
    /// Skipped edges whose 0-resolution is split, so the leaf must include them.
    forced: EdgeSet,
}

#[derive(Clone, Debug)]
pub enum Expansion {
    Leaf(Box<QuasiTree>),
    /// Left (0-resolution) and right (1-resolution) children.
    Branch(ResolutionNode, ResolutionNode),
}

/// The binary resolution tree of a connected ribbon graph.
#[derive(Clone, Copy, Debug)]
pub struct ResolutionTree<'g> {
    graph: &'g RibbonGraph,
}

impl<'g> ResolutionTree<'g> {
    pub fn new(graph: &'g RibbonGraph) -> Result<Self> {
        let tree = ResolutionTree { graph };
        let all = graph.all_edges();
        if !tree.can_reach_one_face(EdgeSet::EMPTY, all) {
            return Err(Error::SplitRoot);
        }
        Ok(tree)
    }

    pub fn root(&self) -> ResolutionNode {
        ResolutionNode {
            resolution: PartialResolution::unresolved(self.graph.edge_count()),
            pending: self.graph.edge_count(),
            forced: EdgeSet::EMPTY,
        }
    }

    /// Whether some choice of unresolved edges added to `ones` has one
    /// boundary curve: union-find over the boundary curves of `ones`, one
    /// link per unresolved edge.
    pub fn can_reach_one_face(&self, ones: EdgeSet, unresolved: EdgeSet) -> bool {
        let g = self.graph;
        if g.is_trivial() {
            return true;
        }
        let orbits = g.boundary_orbits(ones);
        let mut curve_of = vec![0; g.half_edge_count()];
        for (c, orbit) in orbits.iter().enumerate() {
            for &d in orbit {
                curve_of[d] = c;
            }
        }
        let mut uf = UnionFind::new(orbits.len());
        for e in unresolved.iter() {
            let (a, b) = g.edge_darts(e);
            uf.union(curve_of[a], curve_of[b]);
        }
        uf.components() == 1
    }

    /// Resolves edges of `node` top-down until one is not nugatory (branch)
    /// or none remain (leaf). Pure in `node`.
    pub fn expand(&self, node: &ResolutionNode) -> Expansion {
        let g = self.graph;
        let mut node = node.clone();
        while node.pending > 0 {
            node.pending -= 1;
            let e = g.edge_order().sequence()[node.pending];
            let ones = node.resolution.ones();
            let rest = node.resolution.unresolved_edges().without(e);
            let zero_ok = self.can_reach_one_face(ones, rest);
            let one_ok = self.can_reach_one_face(ones.with(e), rest);
            match (zero_ok, one_ok) {
                (true, true) => {
                    let left = ResolutionNode {
                        resolution: node.resolution.with(e, EdgeState::Zero),
                        ..node.clone()
                    };
                    let right = ResolutionNode {
                        resolution: node.resolution.with(e, EdgeState::One),
                        ..node
                    };
                    return Expansion::Branch(left, right);
                }
                (false, true) => node.forced = node.forced.with(e),
                (true, false) => {}
                (false, false) => unreachable!("expanded a split partial resolution"),
            }
        }
        let edges = node.resolution.ones().union(node.forced);
        let diagram = ChordDiagram::new(g, edges).expect("leaf completion has one face");
        let activities = classify_activities(g, &diagram, edges);
        Expansion::Leaf(Box::new(QuasiTree {
            edges,
            genus: g.subgraph(edges).genus(),
            diagram,
            activities,
            leaf: node.resolution,
        }))
    }

    /// Quasi-trees in left-to-right leaf order.
    pub fn leaves(&self) -> Vec<QuasiTree> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(node) = stack.pop() {
            match self.expand(&node) {
                Expansion::Leaf(q) => out.push(*q),
                Expansion::Branch(left, right) => {
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
        out
    }
}

/// All quasi-trees of a connected ribbon graph, in resolution-tree leaf order
/// under the graph's edge order.
pub fn enumerate_quasi_trees(graph: &RibbonGraph) -> Result<Vec<QuasiTree>> {
    Ok(ResolutionTree::new(graph)?.leaves())
}

/// Number of quasi-trees of each genus, indexed by genus.
pub fn genus_histogram(quasi_trees: &[QuasiTree]) -> Vec<usize> {
    let mut hist = Vec::new();
    for q in quasi_trees {
        if hist.len() <= q.genus() {
            hist.resize(q.genus() + 1, 0);
        }
        hist[q.genus()] += 1;
    }
    hist
}

/// `C(Γ) = Σ_Q Y^{n(D(Q))} Z^{g(D(Q))} (1+Y)^{|E(Q)|} T_{G_Q}(X, 1+YZ)`.
pub fn quasi_tree_expansion(graph: &RibbonGraph) -> Result<(MPoly, Vec<QuasiTree>)> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let trees = enumerate_quasi_trees(graph)?;
    let poly = trees.iter().map(|q| q.weight(graph).expanded()).sum();
    Ok((poly, trees))
}

impl fmt::Display for QuasiTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiTree({:?}, genus {})", self.edges, self.genus)
    }
}

/// Brute-force quasi-tree set: every spanning subgraph with one face.
pub fn quasi_trees_by_brute_force(graph: &RibbonGraph) -> Vec<EdgeSet> {
    graph
        .all_edges()
        .subsets()
        .filter(|&s| SpanningSubgraph::new(graph, s).is_quasi_tree())
        .collect()
}
