use std::fmt;

/// Largest edge count an [`EdgeSet`] can address.
pub const MAX_EDGES: usize = 64;

/// A subset of a ribbon graph's edges, indexed by edge number.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    pub fn full(edge_count: usize) -> Self {
        assert!(edge_count <= MAX_EDGES);
        if edge_count == MAX_EDGES {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << edge_count) - 1)
        }
    }

    pub fn from_edges(edges: impl IntoIterator<Item = usize>) -> Self {
        edges.into_iter().fold(EdgeSet::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, edge: usize) -> bool {
        self.0 >> edge & 1 == 1
    }

    #[inline]
    pub fn with(self, edge: usize) -> Self {
        EdgeSet(self.0 | 1 << edge)
    }

    #[inline]
    pub fn without(self, edge: usize) -> Self {
        EdgeSet(self.0 & !(1 << edge))
    }

    pub fn union(self, other: EdgeSet) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn difference(self, other: EdgeSet) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    pub fn complement(self, edge_count: usize) -> Self {
        EdgeSet(!self.0 & EdgeSet::full(edge_count).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Edge numbers in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// All subsets of `self` (including empty and `self`).
    pub fn subsets(self) -> impl Iterator<Item = EdgeSet> {
        let mask = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask {
                None
            } else {
                Some((s.wrapping_sub(mask)) & mask)
            };
            Some(EdgeSet(s))
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
