//! Abstract multigraphs with loops and parallel edges: the underlying graph
//! of a ribbon graph and the contracted graphs built from quasi-trees.

use crate::activity::Activity;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::perm::UnionFind;
use crate::poly::{MPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiEdge {
    pub a: usize,
    pub b: usize,
    /// Identifier inherited from the ribbon graph; also the ordering key
    /// unless an explicit rank is supplied.
    pub id: usize,
}

impl MultiEdge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<MultiEdge>,
}

/// A spanning tree with the Tutte activity of every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    /// Positions (into [`MultiGraph::edges`]) of the tree edges.
    pub edges: EdgeSet,
    /// Indexed by edge position.
    pub activities: Vec<Activity>,
}

impl SpanningTree {
    pub fn internal_activity(&self) -> usize {
        self.activities
            .iter()
            .filter(|a| **a == Activity::InternallyLive)
            .count()
    }

    pub fn external_activity(&self) -> usize {
        self.activities
            .iter()
            .filter(|a| **a == Activity::ExternallyLive)
            .count()
    }

    /// Positions of the externally active edges.
    pub fn externally_active(&self) -> EdgeSet {
        EdgeSet::from_edges(
            self.activities
                .iter()
                .enumerate()
                .filter(|(_, a)| **a == Activity::ExternallyLive)
                .map(|(i, _)| i),
        )
    }
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize, id: usize) {
        assert!(a < self.vertex_count && b < self.vertex_count);
        self.edges.push(MultiEdge { a, b, id });
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Components of the spanning subgraph on the given edge positions.
    pub fn component_count_of(&self, subset: EdgeSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for i in subset.iter() {
            let e = self.edges[i];
            uf.union(e.a, e.b);
        }
        uf.components()
    }

    pub fn component_count(&self) -> usize {
        self.component_count_of(EdgeSet::full(self.edges.len()))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Tutte polynomial with `x` in the `X` slot and `y` in the `Y` slot,
    /// by deletion/contraction on the highest non-loop non-bridge edge.
    pub fn tutte_polynomial(&self) -> MPoly {
        tutte_rec(self.vertex_count, self.edges.clone())
    }

    /// `T(X, 1 + Y·Z)`.
    pub fn tutte_at_x_one_plus_yz(&self) -> MPoly {
        let y = MPoly::one() + MPoly::var(Var::Y) * MPoly::var(Var::Z);
        self.tutte_polynomial()
            .substitute_xyz(&MPoly::var(Var::X), &y, &MPoly::var(Var::Z))
    }

    /// All spanning trees with Tutte activities. `rank(position)` gives the
    /// order key of each edge; lower means earlier.
    pub fn spanning_trees_with_activities(
        &self,
        rank: impl Fn(usize) -> usize,
    ) -> Result<Vec<SpanningTree>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut trees = Vec::new();
        let need = self.vertex_count - 1;
        let mut chosen = Vec::with_capacity(need);
        self.grow_trees(
            0,
            need,
            &mut chosen,
            &UnionFind::new(self.vertex_count),
            &mut trees,
        );
        Ok(trees
            .into_iter()
            .map(|edges| SpanningTree {
                activities: self.tutte_activities(edges, &rank),
                edges,
            })
            .collect())
    }

    fn grow_trees(
        &self,
        next: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        uf: &UnionFind,
        out: &mut Vec<EdgeSet>,
    ) {
        if chosen.len() == need {
            out.push(EdgeSet::from_edges(chosen.iter().copied()));
            return;
        }
        if self.edges.len() - next < need - chosen.len() {
            return;
        }
        let e = self.edges[next];
        let mut with = uf.clone();
        if with.union(e.a, e.b) {
            chosen.push(next);
            self.grow_trees(next + 1, need, chosen, &with, out);
            chosen.pop();
        }
        self.grow_trees(next + 1, need, chosen, uf, out);
    }

    fn tutte_activities(&self, tree: EdgeSet, rank: &impl Fn(usize) -> usize) -> Vec<Activity> {
        (0..self.edges.len())
            .map(|i| {
                if tree.contains(i) {
                    // cut(T, e): edges joining the two sides of T − e
                    let mut uf = UnionFind::new(self.vertex_count);
                    for j in tree.without(i).iter() {
                        uf.union(self.edges[j].a, self.edges[j].b);
                    }
                    let lowest = (0..self.edges.len())
                        .filter(|&j| {
                            let e = self.edges[j];
                            uf.find(e.a) != uf.find(e.b)
                        })
                        .min_by_key(|&j| rank(j))
                        .expect("tree edge lies in its own cut");
                    Activity::new(true, lowest == i)
                } else {
                    let cycle = self.fundamental_cycle(tree, i);
                    let lowest = cycle.iter().copied().min_by_key(|&j| rank(j)).unwrap();
                    Activity::new(false, lowest == i)
                }
            })
            .collect()
    }

    /// Edge positions on the unique cycle of `tree ∪ {extra}`.
    fn fundamental_cycle(&self, tree: EdgeSet, extra: usize) -> Vec<usize> {
        let target = self.edges[extra];
        let mut cycle = vec![extra];
        if target.is_loop() {
            return cycle;
        }
        // BFS in the tree from target.a, remembering the edge used to arrive.
        let mut via: Vec<Option<usize>> = vec![None; self.vertex_count];
        let mut visited = vec![false; self.vertex_count];
        visited[target.a] = true;
        let mut queue = std::collections::VecDeque::from([target.a]);
        while let Some(v) = queue.pop_front() {
            for j in tree.iter() {
                let e = self.edges[j];
                let w = if e.a == v {
                    e.b
                } else if e.b == v {
                    e.a
                } else {
                    continue;
                };
                if !visited[w] {
                    visited[w] = true;
                    via[w] = Some(j);
                    queue.push_back(w);
                }
            }
        }
        let mut v = target.b;
        while v != target.a {
            let j = via[v].expect("tree spans the graph");
            cycle.push(j);
            let e = self.edges[j];
            v = if e.a == v { e.b } else { e.a };
        }
        cycle
    }
}

fn is_bridge(vertex_count: usize, edges: &[MultiEdge], idx: usize) -> bool {
    let target = edges[idx];
    if target.is_loop() {
        return false;
    }
    let mut uf = UnionFind::new(vertex_count);
    for (j, e) in edges.iter().enumerate() {
        if j != idx {
            uf.union(e.a, e.b);
        }
    }
    uf.find(target.a) != uf.find(target.b)
}

fn tutte_rec(vertex_count: usize, edges: Vec<MultiEdge>) -> MPoly {
    let pick = edges
        .iter()
        .enumerate()
        .filter(|(j, e)| !e.is_loop() && !is_bridge(vertex_count, &edges, *j))
        .max_by_key(|(_, e)| e.id)
        .map(|(j, _)| j);
    match pick {
        None => {
            let loops = edges.iter().filter(|e| e.is_loop()).count() as u32;
            let bridges = edges.len() as u32 - loops;
            MPoly::monomial(bridges, loops, 0)
        }
        Some(j) => {
            let mut deleted = edges.clone();
            let e = deleted.remove(j);
            let contracted = contract(vertex_count, &deleted, e.a, e.b);
            tutte_rec(vertex_count, deleted) + tutte_rec(vertex_count - 1, contracted)
        }
    }
}

/// Merges vertex `b` into `a` and renumbers vertices above `b` down by one.
fn contract(vertex_count: usize, edges: &[MultiEdge], a: usize, b: usize) -> Vec<MultiEdge> {
    debug_assert!(a != b && a < vertex_count && b < vertex_count);
    let map = |v: usize| {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    edges
        .iter()
        .map(|e| MultiEdge {
            a: map(e.a),
            b: map(e.b),
            id: e.id,
        })
        .collect()
}
