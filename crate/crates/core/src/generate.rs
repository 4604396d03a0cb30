//! Seeded generators of connected ribbon graphs for property tests.
//!
//! Graphs grow one edge at a time from a single vertex, so every graph is
//! connected by construction. Each step either hangs a pendant edge on a new
//! vertex or joins two random corners (possibly at the same vertex).

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ribbon::{EdgeOrder, RibbonGraph};

struct Builder {
    rotations: Vec<Vec<usize>>,
    pairs: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            rotations: vec![Vec::new()],
            pairs: Vec::new(),
        }
    }

    fn next_darts(&self) -> (usize, usize) {
        let d = 2 * self.pairs.len() + 1;
        (d, d + 1)
    }

    fn insert_at_random_corner<R: Rng>(
        rotations: &mut [Vec<usize>],
        rng: &mut R,
        vertex: usize,
        dart: usize,
    ) {
        let cycle = &mut rotations[vertex];
        let at = rng.gen_range(0..=cycle.len());
        cycle.insert(at, dart);
    }

    fn candidate<R: Rng>(
        &self,
        rng: &mut R,
        pendant: bool,
    ) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
        let (a, b) = self.next_darts();
        let mut rotations = self.rotations.clone();
        let u = rng.gen_range(0..rotations.len());
        Self::insert_at_random_corner(&mut rotations, rng, u, a);
        if pendant {
            rotations.push(vec![b]);
        } else {
            let w = rng.gen_range(0..rotations.len());
            Self::insert_at_random_corner(&mut rotations, rng, w, b);
        }
        let mut pairs = self.pairs.clone();
        pairs.push((a, b));
        (rotations, pairs)
    }

    fn build(&self) -> RibbonGraph {
        if self.pairs.is_empty() {
            return RibbonGraph::trivial();
        }
        RibbonGraph::from_cycles(&self.rotations, &self.pairs)
            .expect("generator keeps a valid permutation pair")
    }
}

/// A connected ribbon graph with `edges` edges and unconstrained genus.
pub fn random_connected<R: Rng>(rng: &mut R, edges: usize) -> RibbonGraph {
    let mut b = Builder::new();
    for _ in 0..edges {
        let pendant = rng.gen_bool(0.3);
        (b.rotations, b.pairs) = b.candidate(rng, pendant);
    }
    b.build()
}

/// A connected genus-zero ribbon graph with `edges` edges.
pub fn random_planar<R: Rng>(rng: &mut R, edges: usize) -> RibbonGraph {
    let mut b = Builder::new();
    for _ in 0..edges {
        let pendant = rng.gen_bool(0.3);
        loop {
            let (rotations, pairs) = b.candidate(rng, pendant);
            let g = RibbonGraph::from_cycles(&rotations, &pairs).expect("valid candidate");
            if g.genus() == 0 {
                (b.rotations, b.pairs) = (rotations, pairs);
                break;
            }
        }
    }
    b.build()
}

/// Every one-vertex ribbon graph with `loops` loops and rotation
/// `(1, 2, …, 2·loops)`: one graph per perfect matching of the half-edges.
pub fn one_vertex_graphs(loops: usize) -> Vec<RibbonGraph> {
    if loops == 0 {
        return vec![RibbonGraph::trivial()];
    }
    let rotation: Vec<usize> = (1..=2 * loops).collect();
    let mut out = Vec::new();
    let mut pairs = Vec::with_capacity(loops);
    matchings(&mut (1..=2 * loops).collect(), &mut pairs, &mut |p| {
        out.push(
            RibbonGraph::from_cycles(std::slice::from_ref(&rotation), p).expect("valid matching"),
        );
    });
    out
}

fn matchings(
    free: &mut Vec<usize>,
    pairs: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if free.is_empty() {
        emit(pairs);
        return;
    }
    let first = free.remove(0);
    for i in 0..free.len() {
        let partner = free.remove(i);
        pairs.push((first, partner));
        matchings(free, pairs, emit);
        pairs.pop();
        free.insert(i, partner);
    }
    free.insert(0, first);
}

pub fn random_edge_order<R: Rng>(rng: &mut R, edges: usize) -> EdgeOrder {
    let mut sequence: Vec<usize> = (0..edges).collect();
    sequence.shuffle(rng);
    EdgeOrder::from_sequence(sequence).expect("a shuffle is a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn one_vertex_family_sizes() {
        let sizes: Vec<usize> = (0..=4).map(|n| one_vertex_graphs(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 3, 15, 105]);
        assert!(one_vertex_graphs(3).iter().all(|g| g.vertex_count() == 1));
    }

    #[test]
    fn random_graphs_are_connected_with_requested_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for e in 0..=10 {
            let g = random_connected(&mut rng, e);
            assert_eq!(g.edge_count(), e);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn planar_graphs_have_genus_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for e in 1..=10 {
            let g = random_planar(&mut rng, e);
            assert_eq!((g.edge_count(), g.genus()), (e, 0));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_connected(&mut ChaCha8Rng::seed_from_u64(9), 8);
        let b = random_connected(&mut ChaCha8Rng::seed_from_u64(9), 8);
        assert_eq!(a.vertex_cycles(), b.vertex_cycles());
    }

    #[test]
    fn random_graphs_reach_positive_genus() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        assert!((0..50).any(|_| random_connected(&mut rng, 6).genus() > 0));
    }
}
