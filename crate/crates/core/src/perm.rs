//! Permutations of a finite set of half-edges.
//!
//! Indices are 0-based internally. Half-edge *labels* seen by users are
//! 1-based; the conversion happens at the ribbon-graph boundary.

use std::fmt;

use crate::error::Error;

/// A bijection on `0..len`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(len: usize) -> Self {
        Perm {
            images: (0..len).collect(),
        }
    }

    /// Builds a permutation from an image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img >= images.len() || seen[img] {
                return Err(Error::NotPermutation);
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation on `0..len` from disjoint cycles. Points not
    /// mentioned are fixed. Fails if a point repeats or is out of range.
    pub fn from_cycles(len: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<Option<usize>> = vec![None; len];
        let mut seen = vec![false; len];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point >= len || seen[point] {
                    return Err(Error::NotPartition);
                }
                seen[point] = true;
                images[point] = Some(cycle[(idx + 1) % cycle.len()]);
            }
        }
        Ok(Perm {
            images: images
                .into_iter()
                .enumerate()
                .map(|(i, img)| img.unwrap_or(i))
                .collect(),
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Orbits, each rotated to start at its minimum element, listed in
    /// order of their minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        orbits_of(self.images.len(), |i| self.images[i])
    }

    pub fn orbit_count(&self) -> usize {
        count_orbits(self.images.len(), |i| self.images[i])
    }

    /// Fixed-point-free involution check.
    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i != j && self.images[j] == i)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Orbits of an arbitrary map that is known to be a bijection on `0..len`.
pub(crate) fn orbits_of(len: usize, step: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; len];
    let mut out = Vec::new();
    for start in 0..len {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(cur);
            cur = step(cur);
        }
        out.push(cycle);
    }
    out
}

pub(crate) fn count_orbits(len: usize, step: impl Fn(usize) -> usize) -> usize {
    let mut seen = vec![false; len];
    let mut count = 0;
    for start in 0..len {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = step(cur);
        }
    }
    count
}

/// Minimal union-find used for component counting throughout the crate.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            components: len,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two sets were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
