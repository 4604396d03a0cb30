//! Oriented ribbon graphs as permutation triples `(σ0, σ1, σ2)`.
//!
//! Half-edges are numbered `0..2n` internally and labelled `1..=2n` in every
//! user-facing input and output. `σ0` gives the cyclic order of half-edges
//! around each vertex, `σ1` pairs the two halves of every edge and
//! `σ2 = (σ0 σ1)⁻¹` traces faces, so that `σ0(σ1(σ2(i))) = i`.
//!
//! Edges are numbered by increasing `min(i, σ1(i))`. A separate
//! [`EdgeOrder`] carries the total order used for activities; by default it
//! coincides with the numbering.

use crate::edgeset::{EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::perm::{count_orbits, orbits_of, Perm, UnionFind};

/// A total order on edges: `sequence[r]` is the edge of rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl EdgeOrder {
    pub fn natural(edge_count: usize) -> Self {
        EdgeOrder {
            sequence: (0..edge_count).collect(),
            rank: (0..edge_count).collect(),
        }
    }

    /// `sequence` lists edge numbers from lowest to highest.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &e) in sequence.iter().enumerate() {
            if e >= n || rank[e] != usize::MAX {
                return Err(Error::BadEdgeOrder(n));
            }
            rank[e] = r;
        }
        Ok(EdgeOrder { sequence, rank })
    }

    #[inline]
    pub fn rank(&self, edge: usize) -> usize {
        self.rank[edge]
    }

    /// Edges from lowest to highest.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    fn without(&self, edge: usize) -> EdgeOrder {
        let sequence = self
            .sequence
            .iter()
            .filter(|&&e| e != edge)
            .map(|&e| if e > edge { e - 1 } else { e })
            .collect();
        EdgeOrder::from_sequence(sequence).expect("order restriction stays a permutation")
    }
}

/// `(v, e, f, k, g, n)` of a ribbon graph or spanning subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub genus: usize,
    pub nullity: usize,
}

impl Counts {
    fn derive(vertices: usize, edges: usize, faces: usize, components: usize) -> Counts {
        let twice_genus = (2 * components + edges) as isize - (vertices + faces) as isize;
        assert!(
            twice_genus >= 0 && twice_genus % 2 == 0,
            "Euler characteristic gives 2g = {twice_genus}"
        );
        Counts {
            vertices,
            edges,
            faces,
            components,
            genus: (twice_genus / 2) as usize,
            nullity: components + edges - vertices,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RibbonGraph {
    sigma0: Perm,
    sigma1: Perm,
    sigma2: Perm,
    dart_vertex: Vec<usize>,
    vertex_count: usize,
    dart_edge: Vec<usize>,
    edge_darts: Vec<(usize, usize)>,
    order: EdgeOrder,
    /// 1-based label of each half-edge in the graph this one was derived from.
    origin: Vec<usize>,
    components: usize,
}

impl RibbonGraph {
    /// The single isolated vertex (no half-edges).
    pub fn trivial() -> Self {
        RibbonGraph {
            sigma0: Perm::identity(0),
            sigma1: Perm::identity(0),
            sigma2: Perm::identity(0),
            dart_vertex: Vec::new(),
            vertex_count: 1,
            dart_edge: Vec::new(),
            edge_darts: Vec::new(),
            order: EdgeOrder::natural(0),
            origin: Vec::new(),
            components: 1,
        }
    }

    /// Builds a ribbon graph from 1-based vertex cycles and edge pairs.
    pub fn from_cycles(
        sigma0_cycles: &[Vec<usize>],
        sigma1_pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let len = 2 * sigma1_pairs.len();
        let to_index = |label: usize| -> Result<usize> {
            if label == 0 || label > len {
                Err(Error::LabelOutOfRange(label))
            } else {
                Ok(label - 1)
            }
        };
        let mut cycles = Vec::with_capacity(sigma0_cycles.len());
        let mut covered = 0;
        for cycle in sigma0_cycles {
            if cycle.is_empty() {
                return Err(Error::NotPartition);
            }
            covered += cycle.len();
            cycles.push(
                cycle
                    .iter()
                    .map(|&l| to_index(l))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let sigma0 = Perm::from_cycles(len, &cycles)?;
        if covered != len {
            return Err(Error::NotPartition);
        }

        let mut images = vec![usize::MAX; len];
        for &(a, b) in sigma1_pairs {
            let (a, b) = (to_index(a)?, to_index(b)?);
            if a == b || images[a] != usize::MAX || images[b] != usize::MAX {
                return Err(Error::NotInvolution);
            }
            images[a] = b;
            images[b] = a;
        }
        let sigma1 = Perm::from_images(images).map_err(|_| Error::NotInvolution)?;
        let origin = (1..=len).collect();
        Self::from_perms(sigma0, sigma1, origin)
    }

    /// Builds from 0-based permutations. `sigma1` must be a fixed-point-free
    /// involution on the same set.
    pub fn from_perms(sigma0: Perm, sigma1: Perm, origin: Vec<usize>) -> Result<Self> {
        if sigma0.len() != sigma1.len() || !sigma1.is_fixed_point_free_involution() {
            return Err(Error::NotInvolution);
        }
        let len = sigma0.len();
        if len == 0 {
            return Ok(Self::trivial());
        }
        if len / 2 > MAX_EDGES {
            return Err(Error::SizeLimit {
                edges: len / 2,
                cap: MAX_EDGES,
            });
        }
        let sigma2 = sigma0.compose(&sigma1).inverse();

        let mut dart_vertex = vec![0; len];
        let vertex_cycles = sigma0.cycles();
        for (v, cycle) in vertex_cycles.iter().enumerate() {
            for &d in cycle {
                dart_vertex[d] = v;
            }
        }
        let mut dart_edge = vec![0; len];
        let mut edge_darts = Vec::with_capacity(len / 2);
        for d in 0..len {
            let other = sigma1.apply(d);
            if d < other {
                dart_edge[d] = edge_darts.len();
                dart_edge[other] = edge_darts.len();
                edge_darts.push((d, other));
            }
        }

        let mut uf = UnionFind::new(vertex_cycles.len());
        for &(a, b) in &edge_darts {
            uf.union(dart_vertex[a], dart_vertex[b]);
        }

        Ok(RibbonGraph {
            order: EdgeOrder::natural(edge_darts.len()),
            sigma0,
            sigma1,
            sigma2,
            dart_vertex,
            vertex_count: vertex_cycles.len(),
            dart_edge,
            edge_darts,
            origin,
            components: uf.components(),
        })
    }

    pub fn with_edge_order(mut self, order: EdgeOrder) -> Result<Self> {
        if order.len() != self.edge_count() {
            return Err(Error::BadEdgeOrder(self.edge_count()));
        }
        self.order = order;
        Ok(self)
    }

    pub fn sigma0(&self) -> &Perm {
        &self.sigma0
    }

    pub fn sigma1(&self) -> &Perm {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Perm {
        &self.sigma2
    }

    pub fn edge_order(&self) -> &EdgeOrder {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.half_edge_count() == 0
    }

    pub fn half_edge_count(&self) -> usize {
        self.sigma0.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    /// The two half-edges of `edge`, smaller first.
    pub fn edge_darts(&self, edge: usize) -> (usize, usize) {
        self.edge_darts[edge]
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.dart_edge[dart]
    }

    pub fn vertex_of(&self, dart: usize) -> usize {
        self.dart_vertex[dart]
    }

    /// 1-based labels this graph's half-edges carried before relabelling.
    pub fn origin_labels(&self) -> &[usize] {
        &self.origin
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub fn counts(&self) -> Counts {
        Counts::derive(
            self.vertex_count,
            self.edge_count(),
            self.face_count_total(),
            self.components,
        )
    }

    fn face_count_total(&self) -> usize {
        if self.is_trivial() {
            1
        } else {
            self.sigma2.orbit_count()
        }
    }

    pub fn genus(&self) -> usize {
        self.counts().genus
    }

    /// Cycles of σ0, σ1, σ2 as 1-based labels.
    pub fn vertex_cycles(&self) -> Vec<Vec<usize>> {
        to_labels(self.sigma0.cycles())
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edge_darts
            .iter()
            .map(|&(a, b)| (a + 1, b + 1))
            .collect()
    }

    pub fn face_cycles(&self) -> Vec<Vec<usize>> {
        to_labels(self.sigma2.cycles())
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.edge_darts[edge];
        self.dart_vertex[a] == self.dart_vertex[b]
    }

    /// Whether removing `edge` increases the number of components.
    pub fn is_bridge(&self, edge: usize) -> bool {
        if self.is_loop(edge) {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for (e, &(a, b)) in self.edge_darts.iter().enumerate() {
            if e != edge {
                uf.union(self.dart_vertex[a], self.dart_vertex[b]);
            }
        }
        let (a, b) = self.edge_darts[edge];
        uf.find(self.dart_vertex[a]) != uf.find(self.dart_vertex[b])
    }

    /// Next half-edge on the boundary of the regular neighbourhood of `subset`:
    /// `σ0(i)` if the edge of `i` is outside, `σ2⁻¹(i) = σ0(σ1(i))` if inside.
    #[inline]
    pub fn boundary_step(&self, subset: EdgeSet, dart: usize) -> usize {
        if subset.contains(self.dart_edge[dart]) {
            self.sigma0.apply(self.sigma1.apply(dart))
        } else {
            self.sigma0.apply(dart)
        }
    }

    /// Boundary curves of the spanning subgraph on `subset`, as 1-based
    /// cyclic sequences each starting at its smallest label.
    pub fn boundary_components(&self, subset: EdgeSet) -> Vec<Vec<usize>> {
        to_labels(self.boundary_orbits(subset))
    }

    /// 0-based boundary orbits.
    pub fn boundary_orbits(&self, subset: EdgeSet) -> Vec<Vec<usize>> {
        orbits_of(self.half_edge_count(), |d| self.boundary_step(subset, d))
    }

    /// `f(H)`: number of boundary curves of the spanning subgraph `H`.
    pub fn subgraph_face_count(&self, subset: EdgeSet) -> usize {
        if self.is_trivial() {
            return 1;
        }
        count_orbits(self.half_edge_count(), |d| self.boundary_step(subset, d))
    }

    /// `k(H)` for the spanning subgraph `H`.
    pub fn subgraph_component_count(&self, subset: EdgeSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in subset.iter() {
            let (a, b) = self.edge_darts[e];
            uf.union(self.dart_vertex[a], self.dart_vertex[b]);
        }
        uf.components()
    }

    pub fn subgraph(&self, subset: EdgeSet) -> SpanningSubgraph<'_> {
        SpanningSubgraph::new(self, subset)
    }

    /// The spanning subgraph on `subset` as a standalone ribbon graph plus
    /// the number of vertices left without any half-edge.
    pub fn restrict(&self, subset: EdgeSet) -> RestrictedSubgraph {
        if self.is_trivial() {
            return RestrictedSubgraph {
                graph: None,
                isolated_vertices: 1,
            };
        }
        let keep: Vec<bool> = (0..self.half_edge_count())
            .map(|d| subset.contains(self.dart_edge[d]))
            .collect();
        let (graph, emptied) = self.rebuild_keeping(&keep);
        let graph = if graph.is_trivial() {
            None
        } else {
            Some(graph)
        };
        RestrictedSubgraph {
            graph,
            isolated_vertices: emptied,
        }
    }

    /// Removes `edge` from the graph, closing up both vertex rotations.
    pub fn delete_edge(&self, edge: usize) -> Result<RibbonGraph> {
        if edge >= self.edge_count() {
            return Err(Error::NoSuchEdge(edge));
        }
        let (a, b) = self.edge_darts[edge];
        let keep: Vec<bool> = (0..self.half_edge_count())
            .map(|d| d != a && d != b)
            .collect();
        let (graph, emptied) = self.rebuild_keeping(&keep);
        match (graph.is_trivial(), emptied) {
            (_, 0) => {}
            (true, 1) => {}
            _ => return Err(Error::IsolatedVertex),
        }
        Ok(graph.with_inherited_order(&self.order, edge))
    }

    /// Contracts the non-loop `edge`, merging its two endpoint rotations.
    pub fn contract_edge(&self, edge: usize) -> Result<RibbonGraph> {
        if edge >= self.edge_count() {
            return Err(Error::NoSuchEdge(edge));
        }
        if self.is_loop(edge) {
            return Err(Error::LoopContraction(edge));
        }
        let (a, b) = self.edge_darts[edge];
        let len = self.half_edge_count();
        // Rotation at the merged vertex: the rest of a's cycle, then the rest of b's.
        let rest = |start: usize| {
            let mut out = Vec::new();
            let mut cur = self.sigma0.apply(start);
            while cur != start {
                out.push(cur);
                cur = self.sigma0.apply(cur);
            }
            out
        };
        let merged: Vec<usize> = rest(a).into_iter().chain(rest(b)).collect();
        if merged.is_empty() && len > 2 {
            return Err(Error::IsolatedVertex);
        }
        let mut next: Vec<usize> = (0..len).map(|d| self.sigma0.apply(d)).collect();
        for (i, &d) in merged.iter().enumerate() {
            next[d] = merged[(i + 1) % merged.len()];
        }
        let keep: Vec<bool> = (0..len).map(|d| d != a && d != b).collect();
        let graph = self.relabel(&keep, |d| next[d]);
        Ok(graph.with_inherited_order(&self.order, edge))
    }

    /// The dual ribbon graph: vertices and faces exchange roles
    /// (`σ0* = σ2`, `σ1* = σ1`). Edge numbering is preserved.
    pub fn dual(&self) -> Result<RibbonGraph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.is_trivial() {
            return Ok(self.clone());
        }
        let graph = RibbonGraph::from_perms(
            self.sigma2.clone(),
            self.sigma1.clone(),
            self.origin.clone(),
        )?;
        graph.with_edge_order(self.order.clone())
    }

    /// Connected components as standalone graphs, each relabelled.
    pub fn connected_components(&self) -> Vec<RibbonGraph> {
        if self.is_connected() {
            return vec![self.clone()];
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edge_darts {
            uf.union(self.dart_vertex[a], self.dart_vertex[b]);
        }
        let mut roots: Vec<usize> = (0..self.vertex_count).map(|v| uf.find(v)).collect();
        let mut seen = Vec::new();
        for &r in &roots {
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        for r in roots.iter_mut() {
            *r = seen.iter().position(|s| s == r).unwrap();
        }
        (0..seen.len())
            .map(|c| {
                let keep: Vec<bool> = (0..self.half_edge_count())
                    .map(|d| roots[self.dart_vertex[d]] == c)
                    .collect();
                let kept_edges: Vec<usize> = (0..self.edge_count())
                    .filter(|&e| keep[self.edge_darts[e].0])
                    .collect();
                let graph = self.relabel(&keep, |d| self.sigma0.apply(d));
                let sequence = self
                    .order
                    .sequence()
                    .iter()
                    .filter_map(|e| kept_edges.iter().position(|k| k == e))
                    .collect();
                graph
                    .with_edge_order(EdgeOrder::from_sequence(sequence).expect("sub-order"))
                    .expect("sub-order length")
            })
            .collect()
    }

    /// Disjoint union; half-edges of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> RibbonGraph {
        let shift = self.half_edge_count();
        let mut s0: Vec<usize> = self.sigma0.images().to_vec();
        s0.extend(other.sigma0.images().iter().map(|&i| i + shift));
        let mut s1: Vec<usize> = self.sigma1.images().to_vec();
        s1.extend(other.sigma1.images().iter().map(|&i| i + shift));
        let origin = (1..=s0.len()).collect();
        let graph = RibbonGraph::from_perms(
            Perm::from_images(s0).expect("union of permutations"),
            Perm::from_images(s1).expect("union of involutions"),
            origin,
        )
        .expect("valid union");
        // Edge numbers of `other` follow those of `self` because labels are shifted.
        let e0 = self.edge_count();
        let sequence = self
            .order
            .sequence()
            .iter()
            .copied()
            .chain(other.order.sequence().iter().map(|&e| e + e0))
            .collect();
        graph
            .with_edge_order(EdgeOrder::from_sequence(sequence).expect("union order"))
            .expect("union order length")
    }

    /// Underlying multigraph; edge ids are this graph's edge numbers.
    pub fn underlying_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new(self.vertex_count);
        for (e, &(a, b)) in self.edge_darts.iter().enumerate() {
            g.add_edge(self.dart_vertex[a], self.dart_vertex[b], e);
        }
        g
    }

    /// Bitstring of `subset` written in edge order (lowest edge first).
    pub fn bitstring(&self, subset: EdgeSet) -> String {
        self.order
            .sequence()
            .iter()
            .map(|&e| if subset.contains(e) { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bitstring(&self, bits: &str) -> Result<EdgeSet> {
        if bits.len() != self.edge_count() {
            return Err(Error::Input(format!(
                "bitstring {bits:?} has wrong length for {} edges",
                self.edge_count()
            )));
        }
        let mut set = EdgeSet::EMPTY;
        for (r, c) in bits.chars().enumerate() {
            match c {
                '1' => set = set.with(self.order.sequence()[r]),
                '0' => {}
                _ => return Err(Error::Input(format!("bad bitstring character {c:?}"))),
            }
        }
        Ok(set)
    }

    fn with_inherited_order(self, order: &EdgeOrder, removed: usize) -> RibbonGraph {
        let order = order.without(removed);
        self.with_edge_order(order).expect("inherited order length")
    }

    /// Keeps the marked half-edges, splicing each σ0 cycle closed; returns the
    /// rebuilt graph and the number of vertices whose half-edges all vanished.
    fn rebuild_keeping(&self, keep: &[bool]) -> (RibbonGraph, usize) {
        let len = self.half_edge_count();
        let mut next = vec![usize::MAX; len];
        let mut emptied = 0;
        for cycle in self.sigma0.cycles() {
            let kept: Vec<usize> = cycle.into_iter().filter(|&d| keep[d]).collect();
            if kept.is_empty() {
                emptied += 1;
            }
            for (i, &d) in kept.iter().enumerate() {
                next[d] = kept[(i + 1) % kept.len()];
            }
        }
        (self.relabel(keep, |d| next[d]), emptied)
    }

    /// Compresses the kept half-edges to `0..m` preserving relative order.
    /// `next` must map kept half-edges to kept half-edges.
    fn relabel(&self, keep: &[bool], next: impl Fn(usize) -> usize) -> RibbonGraph {
        let mut new_index = vec![usize::MAX; keep.len()];
        let mut origin = Vec::new();
        for (d, &k) in keep.iter().enumerate() {
            if k {
                new_index[d] = origin.len();
                origin.push(self.origin[d]);
            }
        }
        let kept: Vec<usize> = (0..keep.len()).filter(|&d| keep[d]).collect();
        let s0 = kept.iter().map(|&d| new_index[next(d)]).collect();
        let s1 = kept
            .iter()
            .map(|&d| new_index[self.sigma1.apply(d)])
            .collect();
        RibbonGraph::from_perms(
            Perm::from_images(s0).expect("spliced rotation is a permutation"),
            Perm::from_images(s1).expect("restricted involution"),
            origin,
        )
        .expect("relabelled graph is valid")
    }
}

/// A spanning subgraph `H ⊆ Γ` with its derived counts.
#[derive(Clone, Copy, Debug)]
pub struct SpanningSubgraph<'g> {
    parent: &'g RibbonGraph,
    edges: EdgeSet,
    counts: Counts,
}

impl<'g> SpanningSubgraph<'g> {
    pub fn new(parent: &'g RibbonGraph, edges: EdgeSet) -> Self {
        let counts = Counts::derive(
            parent.vertex_count(),
            edges.len(),
            parent.subgraph_face_count(edges),
            parent.subgraph_component_count(edges),
        );
        SpanningSubgraph {
            parent,
            edges,
            counts,
        }
    }

    pub fn parent(&self) -> &'g RibbonGraph {
        self.parent
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn counts(&self) -> Counts {
        self.counts
    }

    pub fn components(&self) -> usize {
        self.counts.components
    }

    pub fn nullity(&self) -> usize {
        self.counts.nullity
    }

    pub fn faces(&self) -> usize {
        self.counts.faces
    }

    pub fn genus(&self) -> usize {
        self.counts.genus
    }

    pub fn is_quasi_tree(&self) -> bool {
        self.counts.faces == 1
    }
}

/// A spanning subgraph materialised as its own ribbon graph.
#[derive(Clone, Debug)]
pub struct RestrictedSubgraph {
    /// `None` when the subgraph has no edges.
    pub graph: Option<RibbonGraph>,
    pub isolated_vertices: usize,
}

impl RestrictedSubgraph {
    /// Each isolated vertex contributes one face of its own.
    pub fn face_count(&self) -> usize {
        self.graph.as_ref().map_or(0, |g| g.counts().faces) + self.isolated_vertices
    }

    pub fn component_count(&self) -> usize {
        self.graph.as_ref().map_or(0, |g| g.component_count()) + self.isolated_vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.as_ref().map_or(0, |g| g.vertex_count()) + self.isolated_vertices
    }

    pub fn genus(&self) -> usize {
        self.graph.as_ref().map_or(0, |g| g.counts().genus)
    }
}

fn to_labels(cycles: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    cycles
        .into_iter()
        .map(|c| c.into_iter().map(|d| d + 1).collect())
        .collect()
}

/// Rotates a cyclic sequence to begin at `first`, if present.
pub fn rotate_to(cycle: &[usize], first: usize) -> Vec<usize> {
    match cycle.iter().position(|&x| x == first) {
        Some(p) => cycle[p..].iter().chain(&cycle[..p]).copied().collect(),
        None => cycle.to_vec(),
    }
}
