use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of vertices drawn from a fixed universe `0..universe`.
///
/// The population count is cached so that `len` is constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
    count: usize,
}

impl VertexSet {
    /// The empty set over `0..universe`.
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
            count: 0,
        }
    }

    /// The full set `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self {
            bits,
            count: universe,
        }
    }

    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        Self::from_vertices(universe, [v])
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Inserts `v`; returns true if it was not yet present.
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.bits.put(v);
        if fresh {
            self.count += 1;
        }
        fresh
    }

    /// Removes `v`; returns true if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.bits.contains(v);
        if present {
            self.bits.set(v, false);
            self.count -= 1;
        }
        present
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
        self.recount();
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
        self.recount();
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
        self.recount();
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet {
            count: self.universe() - self.count,
            bits,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    fn recount(&mut self) {
        self.count = self.bits.count_ones(..);
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
