use super::EnumeratedFamily;
use crate::error::Result;
use crate::graph::VertexSet;

/// Quantities derived from an [`EnumeratedFamily`] straight from their
/// definitions. Indices refer to `fam.elements()`.
#[derive(Clone, Debug)]
pub struct FamilyStructure {
    /// Immediate predecessors (covering relation from below).
    pub pred: Vec<Vec<usize>>,
    /// Immediate successors.
    pub succ: Vec<Vec<usize>>,
    /// Vertices covered by each element: members of some predecessor that
    /// the element itself drops.
    pub covered: Vec<VertexSet>,
    pub vis: Vec<VertexSet>,
    /// Members of the element found in no predecessor.
    pub hat: Vec<VertexSet>,
    pub smallest: Option<usize>,
    /// `|S| - |sm(F)|`; `None` when there is no unique smallest element or
    /// some element is smaller than it.
    pub excess: Option<Vec<usize>>,
}

impl FamilyStructure {
    pub fn covers(&self, s: usize, v: usize) -> bool {
        self.covered[s].contains(v)
    }

    /// Elements of excess at most `x` (`E_x`).
    pub fn level_set(&self, x: usize) -> Vec<usize> {
        match &self.excess {
            Some(ex) => (0..ex.len()).filter(|&i| ex[i] <= x).collect(),
            None => Vec::new(),
        }
    }

    /// `hat_x(S)`: members of `hat(S)` that no element of `E_x` succeeding
    /// `S` drops. Empty when `S ∉ E_x` or excess is undefined.
    pub fn hat_x(&self, fam: &EnumeratedFamily, s: usize, x: usize) -> VertexSet {
        let Some(ex) = &self.excess else {
            return VertexSet::new(fam.universe());
        };
        if ex[s] > x {
            return VertexSet::new(fam.universe());
        }
        let mut out = self.hat[s].clone();
        for j in fam.successors(s).filter(|&j| ex[j] <= x) {
            out = out.intersection(fam.element(j));
        }
        out
    }
}

/// Computes Pred, Succ, covers, Vis, hat and excess for every element.
#[allow(clippy::needless_range_loop)]
pub fn derive_structure(fam: &EnumeratedFamily) -> Result<FamilyStructure> {
    let m = fam.len();
    let n = fam.universe();
    let mut pred = vec![Vec::new(); m];
    let mut succ = vec![Vec::new(); m];
    for j in 0..m {
        for i in fam.predecessors(j) {
            let between = fam.successors(i).any(|k| fam.lt(k, j));
            if !between {
                pred[j].push(i);
                succ[i].push(j);
            }
        }
    }

    let mut covered = Vec::with_capacity(m);
    let mut hat = Vec::with_capacity(m);
    for j in 0..m {
        let mut below_union = VertexSet::new(n);
        for i in fam.predecessors(j) {
            below_union.union_with(fam.element(i));
        }
        covered.push(below_union.difference(fam.element(j)));
        hat.push(fam.element(j).difference(&below_union));
    }

    let vis = (0..m)
        .map(|j| {
            let mut seen = VertexSet::new(n);
            let mut hidden = VertexSet::new(n);
            for &p in &pred[j] {
                seen.union_with(fam.element(p));
                hidden.union_with(&covered[p]);
            }
            seen.difference(&hidden)
        })
        .collect();

    let smallest = fam.smallest_index();
    let excess = smallest.and_then(|s| {
        let r = fam.element(s).len();
        fam.elements()
            .iter()
            .map(|e| e.len().checked_sub(r))
            .collect()
    });

    Ok(FamilyStructure {
        pred,
        succ,
        covered,
        vis,
        hat,
        smallest,
        excess,
    })
}
