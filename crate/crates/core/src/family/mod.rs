//! Partially ordered set families with the structure of important
//! separators: derived quantities, the axiom checker, principal-set
//! enumeration and the counting audit.

mod axioms;
mod counting;
mod graph_family;
mod principal;
mod structure;

use fixedbitset::FixedBitSet;

pub use axioms::{check_axioms, AxiomReport, Condition, ConditionResult, EcProbe};
pub use counting::{counting_audit, CountingReport, InequalityCheck};
pub use graph_family::SeparatorFamily;
pub use principal::{enumerate_principal, union_of_excess, PrincipalFamilyReport, PrincipalSet};
pub use structure::{derive_structure, FamilyStructure};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Read access to a (possibly implicit) family ordered by `≺`.
///
/// Implemented by [`SeparatorFamily`], which answers every query with flow
/// computations, and by [`EnumeratedFamily`], which holds all elements
/// explicitly.
pub trait FamilyAccess: Sync {
    type Element: Clone + Send + Sync;

    fn universe_size(&self) -> usize;

    fn members<'a>(&'a self, e: &'a Self::Element) -> &'a VertexSet;

    /// `sm(F)`, the element preceding all others; `None` for an empty family.
    fn smallest(&self) -> Result<Option<Self::Element>>;

    /// The minimal element `S'` with `e ≺ S'` and `v ∉ S'`, if any.
    fn witness(&self, e: &Self::Element, v: usize) -> Result<Option<Self::Element>>;

    fn precedes(&self, a: &Self::Element, b: &Self::Element) -> Result<bool>;
}

/// A finite family with an explicit order matrix. Used for oracle checks on
/// small instances and for hand-built families.
#[derive(Clone, Debug)]
pub struct EnumeratedFamily {
    universe: usize,
    elements: Vec<VertexSet>,
    /// `below[j]` holds every `i` with `elements[i] ≺ elements[j]`.
    below: Vec<FixedBitSet>,
    /// `above[i]` holds every `j` with `elements[i] ≺ elements[j]`.
    above: Vec<FixedBitSet>,
}

impl EnumeratedFamily {
    /// Builds the family from generating pairs `(i, j)` meaning
    /// `elements[i] ≺ elements[j]`; the transitive closure is taken. A cycle
    /// (including `i ≺ i`) is an error.
    pub fn new<I>(universe: usize, elements: Vec<VertexSet>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let m = elements.len();
        if let Some(e) = elements.iter().find(|e| e.universe() != universe) {
            return Err(Error::InvalidInstance(format!(
                "family element {{{e}}} has universe {} instead of {universe}",
                e.universe()
            )));
        }
        let mut above = vec![FixedBitSet::with_capacity(m); m];
        for (i, j) in pairs {
            if i >= m || j >= m {
                return Err(Error::InconsistentOrder(format!(
                    "pair ({i}, {j}) refers to a missing element"
                )));
            }
            above[i].insert(j);
        }
        // Warshall closure.
        for k in 0..m {
            let row_k = above[k].clone();
            for row in above.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        if let Some(i) = (0..m).find(|&i| above[i].contains(i)) {
            return Err(Error::InconsistentOrder(format!(
                "element {i} {{{}}} precedes itself through a cycle",
                elements[i]
            )));
        }
        Ok(Self::from_closed(universe, elements, above))
    }

    /// Builds the family from a relation that is already a strict partial
    /// order; it is verified to be irreflexive and transitive.
    pub fn from_relation<F>(universe: usize, elements: Vec<VertexSet>, rel: F) -> Result<Self>
    where
        F: Fn(&VertexSet, &VertexSet) -> bool,
    {
        let m = elements.len();
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if rel(&elements[i], &elements[j]) {
                    pairs.push((i, j));
                }
            }
        }
        let fam = Self::new(universe, elements, pairs.iter().copied())?;
        let closed_pairs: usize = fam.above.iter().map(|r| r.count_ones(..)).sum();
        if closed_pairs != pairs.len() {
            return Err(Error::InconsistentOrder(
                "relation is not transitive".into(),
            ));
        }
        Ok(fam)
    }

    fn from_closed(universe: usize, elements: Vec<VertexSet>, above: Vec<FixedBitSet>) -> Self {
        let m = elements.len();
        let mut below = vec![FixedBitSet::with_capacity(m); m];
        for (i, row) in above.iter().enumerate() {
            for j in row.ones() {
                below[j].insert(i);
            }
        }
        EnumeratedFamily {
            universe,
            elements,
            below,
            above,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &VertexSet {
        &self.elements[i]
    }

    pub fn index_of(&self, set: &VertexSet) -> Option<usize> {
        self.elements.iter().position(|e| e == set)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn predecessors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[j].ones()
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i].ones()
    }

    /// The unique element preceding every other one.
    pub fn smallest_index(&self) -> Option<usize> {
        let m = self.len();
        let mut found = (0..m).filter(|&i| self.above[i].count_ones(..) == m - 1);
        let first = found.next()?;
        found.next().is_none().then_some(first)
    }

    /// All minimal elements of `{ S' : S_i ≺ S', v ∉ S' }`. The SW condition
    /// asks for at most one.
    pub fn witness_candidates(&self, i: usize, v: usize) -> Vec<usize> {
        let cands: Vec<usize> = self
            .successors(i)
            .filter(|&j| !self.elements[j].contains(v))
            .collect();
        cands
            .iter()
            .copied()
            .filter(|&j| !cands.iter().any(|&c| self.lt(c, j)))
            .collect()
    }
}

impl FamilyAccess for EnumeratedFamily {
    type Element = usize;

    fn universe_size(&self) -> usize {
        self.universe
    }

    fn members<'a>(&'a self, e: &'a usize) -> &'a VertexSet {
        &self.elements[*e]
    }

    fn smallest(&self) -> Result<Option<usize>> {
        if self.is_empty() {
            return Ok(None);
        }
        self.smallest_index()
            .map(Some)
            .ok_or_else(|| Error::InconsistentOrder("no unique smallest element".into()))
    }

    fn witness(&self, e: &usize, v: usize) -> Result<Option<usize>> {
        match self.witness_candidates(*e, v).as_slice() {
            [] => Ok(None),
            [w] => Ok(Some(*w)),
            many => Err(Error::InconsistentOrder(format!(
                "{} witnesses of vertex {v} for element {e}",
                many.len()
            ))),
        }
    }

    fn precedes(&self, a: &usize, b: &usize) -> Result<bool> {
        Ok(self.lt(*a, *b))
    }
}
