//! Definitional brute-force references for small instances.
//!
//! Everything here works on `u64` vertex masks and plain reachability; none
//! of it touches the flow code, so it can referee the algorithmic modules.

use crate::error::{Error, Result};
use crate::family::EnumeratedFamily;
use crate::graph::{Graph, MwcInstance, SeparatorInstance, VertexSet};

/// Hard caps on oracle inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_set_size: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 15,
            max_set_size: 15,
        }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleBudget {
            max_n,
            max_set_size: max_n,
        }
    }

    fn admit(&self, n: usize, set_size: usize) -> Result<()> {
        if n > self.max_n || n > 63 {
            return Err(Error::OracleBudget(format!(
                "{n} vertices > {}",
                self.max_n
            )));
        }
        if set_size > self.max_set_size {
            return Err(Error::OracleBudget(format!(
                "set size {set_size} > {}",
                self.max_set_size
            )));
        }
        Ok(())
    }
}

struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        MaskGraph {
            n: g.vertex_count(),
            adj,
        }
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn reach(&self, from: u64, blocked: u64) -> u64 {
        let mut seen = from & !blocked;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= !blocked & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }
}

fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | (1 << v))
}

fn set_of(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Spreads the low bits of `bits` onto the positions listed in `slots`.
fn scatter(bits: u64, slots: &[usize]) -> u64 {
    slots
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .fold(0, |m, (_, &v)| m | (1 << v))
}

struct SepSpace {
    g: MaskGraph,
    x: u64,
    y: u64,
    free: Vec<usize>,
}

impl SepSpace {
    fn new(si: &SeparatorInstance, max_size: usize, budget: &OracleBudget) -> Result<Self> {
        budget.admit(si.graph().vertex_count(), max_size)?;
        let g = MaskGraph::new(si.graph());
        let x = mask_of(si.source());
        let y = mask_of(si.sink());
        let free = (0..g.n).filter(|&v| (x | y) >> v & 1 == 0).collect();
        Ok(SepSpace { g, x, y, free })
    }

    fn separates(&self, k: u64) -> bool {
        self.g.reach(self.x, k) & self.y == 0
    }

    /// `NR(G, Y, K)`.
    fn nr(&self, k: u64) -> u64 {
        self.g.all() & !k & !self.g.reach(self.y, k)
    }

    /// Every separating subset of size at most `max_size`.
    fn all_separators(&self, max_size: usize) -> Vec<u64> {
        (0..1u64 << self.free.len())
            .filter(|b| b.count_ones() as usize <= max_size)
            .map(|b| scatter(b, &self.free))
            .filter(|&k| self.separates(k))
            .collect()
    }
}

fn minimal(space: &SepSpace, k: u64) -> bool {
    let mut rest = k;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        if space.separates(k & !bit) {
            return false;
        }
    }
    true
}

/// All inclusion-minimal X–Y separators of size at most `max_size`, in
/// size-then-lexicographic order.
pub fn enum_separators(
    si: &SeparatorInstance,
    max_size: usize,
    budget: &OracleBudget,
) -> Result<Vec<VertexSet>> {
    let space = SepSpace::new(si, max_size, budget)?;
    let n = space.g.n;
    let mut out: Vec<VertexSet> = space
        .all_separators(max_size)
        .into_iter()
        .filter(|&k| minimal(&space, k))
        .map(|k| set_of(n, k))
        .collect();
    out.sort();
    Ok(out)
}

/// All important X–Y separators of size at most `max_size`, ordered by
/// strict inclusion of their `NR(G, Y, ·)` sides.
///
/// A minimal separator `K` is kept iff no separating vertex set `K'` (minimal
/// or not) with `|K'| <= |K|` has a strictly larger side.
pub fn enum_important(
    si: &SeparatorInstance,
    max_size: usize,
    budget: &OracleBudget,
) -> Result<EnumeratedFamily> {
    let space = SepSpace::new(si, max_size, budget)?;
    let n = space.g.n;
    let all: Vec<(u32, u64, u64)> = space
        .all_separators(max_size)
        .into_iter()
        .map(|k| (k.count_ones(), k, space.nr(k)))
        .collect();
    let mut important: Vec<(u64, u64)> = all
        .iter()
        .filter(|&&(_, k, _)| minimal(&space, k))
        .filter(|&&(size, _, side)| {
            !all.iter()
                .any(|&(size2, _, side2)| size2 <= size && side2 != side && side & side2 == side)
        })
        .map(|&(_, k, side)| (k, side))
        .collect();
    important.sort_by_key(|&(k, _)| set_of(n, k));
    let sides: Vec<u64> = important.iter().map(|&(_, s)| s).collect();
    let elements = important.iter().map(|&(k, _)| set_of(n, k)).collect();
    let mut pairs = Vec::new();
    for i in 0..sides.len() {
        for j in 0..sides.len() {
            if sides[i] != sides[j] && sides[i] & sides[j] == sides[i] {
                pairs.push((i, j));
            }
        }
    }
    EnumeratedFamily::new(n, elements, pairs)
}

/// Members of the enumerated family with excess at most `x` whose hat is
/// nonempty, computed directly from the definition of hat.
pub fn principal_sets(fam: &EnumeratedFamily, x: usize) -> Vec<VertexSet> {
    let Some(sm) = fam.smallest_index() else {
        return Vec::new();
    };
    let r = fam.element(sm).len();
    (0..fam.len())
        .filter(|&j| fam.element(j).len() <= r + x)
        .filter(|&j| {
            let below = (0..fam.len())
                .filter(|&i| fam.lt(i, j))
                .fold(VertexSet::new(fam.universe()), |acc, i| {
                    acc.union(fam.element(i))
                });
            !fam.element(j).is_subset(&below)
        })
        .map(|j| fam.element(j).clone())
        .collect()
}

/// Union of all members of excess at most `x`.
pub fn union_up_to(fam: &EnumeratedFamily, x: usize) -> VertexSet {
    let mut out = VertexSet::new(fam.universe());
    if let Some(sm) = fam.smallest_index() {
        let r = fam.element(sm).len();
        for e in fam.elements().iter().filter(|e| e.len() <= r + x) {
            out.union_with(e);
        }
    }
    out
}

struct CutSpace {
    g: MaskGraph,
    terminals: Vec<u64>,
    all_terminals: u64,
    free: Vec<usize>,
}

impl CutSpace {
    fn new(inst: &MwcInstance, budget: &OracleBudget) -> Result<Self> {
        budget.admit(inst.graph().vertex_count(), 0)?;
        let g = MaskGraph::new(inst.graph());
        let terminals: Vec<u64> = inst.terminals().iter().map(|t| 1u64 << t).collect();
        let all_terminals = terminals.iter().fold(0, |a, t| a | t);
        let free = (0..g.n).filter(|&v| all_terminals >> v & 1 == 0).collect();
        Ok(CutSpace {
            g,
            terminals,
            all_terminals,
            free,
        })
    }

    fn is_cut(&self, k: u64) -> bool {
        self.terminals
            .iter()
            .all(|&t| self.g.reach(t, k) & self.all_terminals == t)
    }
}

/// Size of a smallest multiway cut, or `None` when two terminals are
/// adjacent.
pub fn exact_mwc_bruteforce(inst: &MwcInstance, budget: &OracleBudget) -> Result<Option<usize>> {
    let space = CutSpace::new(inst, budget)?;
    let best = (0..1u64 << space.free.len())
        .filter(|b| space.is_cut(scatter(*b, &space.free)))
        .map(|b| b.count_ones() as usize)
        .min();
    Ok(best)
}

/// Every multiway cut (not necessarily minimal) of size at most `max_size`.
pub fn multiway_cuts_up_to(
    inst: &MwcInstance,
    max_size: usize,
    budget: &OracleBudget,
) -> Result<Vec<VertexSet>> {
    let space = CutSpace::new(inst, budget)?;
    let n = space.g.n;
    Ok((0..1u64 << space.free.len())
        .filter(|b| b.count_ones() as usize <= max_size)
        .map(|b| scatter(b, &space.free))
        .filter(|&k| space.is_cut(k))
        .map(|k| set_of(n, k))
        .collect())
}
