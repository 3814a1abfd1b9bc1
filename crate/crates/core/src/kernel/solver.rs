//! Exact vertex multiway cut by important-separator branching, plus the
//! greedy fallback.

use super::min_isolating_cut;
use crate::error::{Error, Result};
use crate::graph::{Graph, MwcInstance, VertexSet};
use crate::separator::furthest_min_cut_without;

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search {
    Found(VertexSet),
    Exhausted,
    /// The node limit ran out before the search finished.
    Aborted,
}

struct Brancher<'a> {
    g: &'a Graph,
    nodes: u64,
    node_limit: Option<u64>,
}

impl Brancher<'_> {
    /// Each region is a connected, undeletable vertex set grown around one
    /// terminal. A solution must separate the regions pairwise using at most
    /// `budget` further vertices outside `deleted`.
    fn search(&mut self, regions: &[VertexSet], deleted: &VertexSet, budget: usize) -> Search {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            return Search::Aborted;
        }
        let mut owner = vec![usize::MAX; self.g.vertex_count()];
        for (i, region) in regions.iter().enumerate() {
            for v in region.iter() {
                owner[v] = i;
            }
        }
        for (i, region) in regions.iter().enumerate() {
            for v in region.iter() {
                for &w in self.g.neighbors(v) {
                    if owner[w] != usize::MAX && owner[w] != i {
                        return Search::Exhausted;
                    }
                }
            }
        }

        if let Some(found) = self.pairwise(regions, deleted, budget) {
            return found;
        }

        for (i, region) in regions.iter().enumerate() {
            let others = regions
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(self.g.empty_set(), |acc, (_, r)| acc.union(r));
            let Some((flow, cut)) =
                furthest_min_cut_without(self.g, region, &others, deleted, budget)
            else {
                return Search::Exhausted;
            };
            if flow == 0 {
                continue;
            }
            let mut blocked = deleted.union(&cut);
            let grown = self.g.reachable(region, &blocked);
            let v = cut.first().expect("positive flow has a nonempty cut");

            let mut with_grown = regions.to_vec();
            with_grown[i] = grown.clone();
            blocked = deleted.clone();
            blocked.insert(v);
            match self.search(&with_grown, &blocked, budget - 1) {
                Search::Exhausted => {}
                other => return other,
            }

            with_grown[i].insert(v);
            return self.search(&with_grown, deleted, budget);
        }
        Search::Found(deleted.clone())
    }

    /// When no component of `G - deleted` holds more than two regions the
    /// problem splits into independent minimum cuts.
    fn pairwise(
        &self,
        regions: &[VertexSet],
        deleted: &VertexSet,
        budget: usize,
    ) -> Option<Search> {
        let (label, count) = self.g.components(deleted);
        let mut by_component: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (i, region) in regions.iter().enumerate() {
            let v = region.first()?;
            by_component[label[v]?].push(i);
        }
        if by_component.iter().any(|c| c.len() > 2) {
            return None;
        }
        let mut cut = deleted.clone();
        let mut left = budget;
        for pair in by_component.iter().filter(|c| c.len() == 2) {
            let Some((flow, part)) = furthest_min_cut_without(
                self.g,
                &regions[pair[0]],
                &regions[pair[1]],
                deleted,
                left,
            ) else {
                return Some(Search::Exhausted);
            };
            left -= flow;
            cut.union_with(&part);
        }
        Some(Search::Found(cut))
    }
}

/// Searches for a multiway cut of size at most `budget`, visiting at most
/// `node_limit` branching nodes. Budgets are tried in increasing order, so a
/// returned cut is optimal.
pub fn solve_exact_limited(inst: &MwcInstance, budget: usize, node_limit: Option<u64>) -> Search {
    if !inst.is_feasible() {
        return Search::Exhausted;
    }
    let g = inst.graph();
    let regions: Vec<VertexSet> = inst
        .terminals()
        .iter()
        .map(|t| VertexSet::from_vertices(g.vertex_count(), [t]))
        .collect();
    let mut brancher = Brancher {
        g,
        nodes: 0,
        node_limit,
    };
    for b in 0..=budget {
        match brancher.search(&regions, &g.empty_set(), b) {
            Search::Exhausted => continue,
            other => return other,
        }
    }
    Search::Exhausted
}

/// A minimum multiway cut of size at most `budget`, or `None` if there is
/// none (including when two terminals are adjacent).
pub fn solve_exact(inst: &MwcInstance, budget: usize) -> Option<VertexSet> {
    match solve_exact_limited(inst, budget, None) {
        Search::Found(cut) => Some(cut),
        _ => None,
    }
}

/// Union of the smallest important isolating cuts of all terminals. Always
/// a valid multiway cut; its size is at most the sum of the `r_t`, with no
/// ratio guarantee.
pub fn greedy_mwc(inst: &MwcInstance) -> Result<VertexSet> {
    if !inst.is_feasible() {
        return Err(Error::InvalidInstance("adjacent terminals".into()));
    }
    let mut cut = inst.graph().empty_set();
    if inst.terminals().len() < 2 {
        return Ok(cut);
    }
    for t in inst.terminals().iter() {
        let sep = min_isolating_cut(inst, t)?
            .ok_or_else(|| Error::Internal(format!("terminal {t} has no isolating cut")))?;
        cut.union_with(sep.vertices());
    }
    Ok(cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_lowerbound;

    fn inst(n: usize, edges: &[(usize, usize)], t: &[usize], k: usize) -> MwcInstance {
        MwcInstance::new(
            Graph::from_edges(n, edges.iter().copied()).unwrap(),
            VertexSet::from_vertices(n, t.iter().copied()),
            k,
        )
        .unwrap()
    }

    #[test]
    fn path() {
        let p = inst(3, &[(0, 1), (1, 2)], &[0, 2], 1);
        assert_eq!(solve_exact(&p, 1).unwrap().to_vec(), vec![1]);
        assert_eq!(solve_exact(&p, 0), None);
        assert_eq!(greedy_mwc(&p).unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn star() {
        let s = inst(4, &[(0, 1), (0, 2), (0, 3)], &[1, 2, 3], 1);
        assert_eq!(solve_exact(&s, 3).unwrap().to_vec(), vec![0]);
        assert_eq!(greedy_mwc(&s).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn three_terminals_need_branching() {
        // terminals hang off the corners of a triangle
        let s = inst(
            6,
            &[(0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (3, 5)],
            &[0, 1, 2],
            2,
        );
        assert_eq!(solve_exact(&s, 3).unwrap().len(), 2);
        assert_eq!(solve_exact(&s, 1), None);
    }

    #[test]
    fn lowerbound_greedy() {
        let (si, _) = generate_lowerbound(2, 1).unwrap();
        let mwc = MwcInstance::new(si.graph().clone(), si.terminals(), 4).unwrap();
        let cut = greedy_mwc(&mwc).unwrap();
        assert!(mwc.is_multiway_cut(&cut));
        assert!(cut.len() <= 4);
        assert_eq!(solve_exact(&mwc, 4).unwrap().len(), 2);
    }

    #[test]
    fn node_limit_aborts() {
        let s = inst(
            6,
            &[(0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (3, 5)],
            &[0, 1, 2],
            2,
        );
        assert_eq!(solve_exact_limited(&s, 3, Some(1)), Search::Aborted);
    }
}
