use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the vertex ids `0..universe`, stored as a bit vector.
///
/// All sets that are combined with each other must share the same universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Panics if any id is outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Returns true if `v` was not present before.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe()
        );
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.bits.set(v, false);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_strict_subset(&self, other: &VertexSet) -> bool {
        self.is_subset(other) && self.len() < other.len()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }
}

/// Sets are ordered by size first, then lexicographically by members.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        let a = VertexSet::from_vertices(8, [1, 2, 3]);
        let b = VertexSet::from_vertices(8, [2, 3]);
        assert!(b.is_strict_subset(&a));
        assert!(!a.is_strict_subset(&a));
        assert!(a.is_subset(&a));
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert_eq!(a.complement().len(), 5);
        assert_eq!(a.union(&VertexSet::from_vertices(8, [7])).len(), 4);
        assert_eq!(format!("{a}"), "1 2 3");
    }

    #[test]
    fn order_is_size_then_members() {
        let small = VertexSet::from_vertices(8, [7]);
        let big = VertexSet::from_vertices(8, [0, 1]);
        assert!(small < big);
        let a = VertexSet::from_vertices(8, [0, 5]);
        assert!(big < a);
    }
}
