use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, MwcInstance, SeparatorInstance, VertexSet};
use crate::error::{Error, Result};

/// Largest vertex count the lower-bound generator will produce.
pub const MAX_GENERATED_VERTICES: usize = 1 << 24;

/// Vertex numbering of a lower-bound graph: `s = 0`, then the trees one
/// after another in heap order (children of heap slot `i` at `2i+1`, `2i+2`),
/// then `t` last.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBoundLayout {
    pub trees: usize,
    pub height: usize,
}

impl LowerBoundLayout {
    pub fn tree_size(&self) -> usize {
        (1 << (self.height + 1)) - 1
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.trees * self.tree_size()
    }

    pub fn source(&self) -> usize {
        0
    }

    pub fn sink(&self) -> usize {
        self.vertex_count() - 1
    }

    /// Id of heap slot `slot` of tree `tree`.
    pub fn node(&self, tree: usize, slot: usize) -> usize {
        1 + tree * self.tree_size() + slot
    }

    pub fn root(&self, tree: usize) -> usize {
        self.node(tree, 0)
    }

    /// Depth of a tree vertex, `None` for `s` and `t`.
    pub fn depth(&self, v: usize) -> Option<usize> {
        if v == self.source() || v >= self.sink() {
            return None;
        }
        let slot = (v - 1) % self.tree_size();
        Some((usize::BITS - 1 - (slot + 1).leading_zeros()) as usize)
    }
}

/// `r` complete binary trees of height `x`; `s` joined to every root and `t`
/// to every leaf. The smallest s–t separator has size `r` and the union of
/// important separators of excess at most `x` covers all `r(2^{x+1}-1)` tree
/// vertices.
pub fn generate_lowerbound(r: usize, x: usize) -> Result<(SeparatorInstance, LowerBoundLayout)> {
    if r == 0 {
        return Err(Error::GeneratorRange("r must be at least 1".into()));
    }
    let n = u32::try_from(x + 1)
        .ok()
        .and_then(|h| 1usize.checked_shl(h))
        .and_then(|p| p.checked_sub(1))
        .and_then(|size| size.checked_mul(r))
        .and_then(|v| v.checked_add(2))
        .filter(|&n| n <= MAX_GENERATED_VERTICES)
        .ok_or_else(|| {
            Error::GeneratorRange(format!(
                "r = {r}, x = {x} exceeds {MAX_GENERATED_VERTICES} vertices"
            ))
        })?;
    let layout = LowerBoundLayout {
        trees: r,
        height: x,
    };
    debug_assert_eq!(layout.vertex_count(), n);
    let first_leaf = (1 << x) - 1;
    let mut edges = Vec::new();
    for tree in 0..r {
        edges.push((layout.source(), layout.root(tree)));
        for slot in 0..layout.tree_size() {
            if slot < first_leaf {
                edges.push((layout.node(tree, slot), layout.node(tree, 2 * slot + 1)));
                edges.push((layout.node(tree, slot), layout.node(tree, 2 * slot + 2)));
            } else {
                edges.push((layout.node(tree, slot), layout.sink()));
            }
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    let source = VertexSet::from_vertices(n, [layout.source()]);
    let sink = VertexSet::from_vertices(n, [layout.sink()]);
    Ok((SeparatorInstance::new(graph, source, sink)?, layout))
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::GeneratorRange(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi `G(n, p)` with `t_count` distinct uniformly chosen terminals.
/// Deterministic in `seed`.
pub fn generate_random(
    n: usize,
    p: f64,
    t_count: usize,
    k: usize,
    seed: u64,
) -> Result<MwcInstance> {
    if t_count > n {
        return Err(Error::GeneratorRange(format!(
            "{t_count} terminals requested but n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = gnp(n, p, &mut rng)?;
    let terminals = VertexSet::from_vertices(n, sample(&mut rng, n, t_count));
    MwcInstance::new(graph, terminals, k)
}

/// Random separator instance: `G(n, p)` with disjoint random source and sink
/// sets of the given sizes.
pub fn generate_random_separator(
    n: usize,
    p: f64,
    source_count: usize,
    sink_count: usize,
    seed: u64,
) -> Result<SeparatorInstance> {
    if source_count == 0 || sink_count == 0 || source_count + sink_count > n {
        return Err(Error::GeneratorRange(format!(
            "cannot pick {source_count} + {sink_count} terminals among {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = gnp(n, p, &mut rng)?;
    let picked = sample(&mut rng, n, source_count + sink_count).into_vec();
    let source = VertexSet::from_vertices(n, picked[..source_count].iter().copied());
    let sink = VertexSet::from_vertices(n, picked[source_count..].iter().copied());
    SeparatorInstance::new(graph, source, sink)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowerbound_small_cases() {
        let (si, _) = generate_lowerbound(1, 0).unwrap();
        assert_eq!(si.graph().vertex_count(), 3);
        assert_eq!(si.graph().edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        // s=0, a=1, b=2, c=3, t=4
        let (si, layout) = generate_lowerbound(1, 1).unwrap();
        assert_eq!(
            si.graph().edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]
        );
        assert_eq!(layout.depth(1), Some(0));
        assert_eq!(layout.depth(3), Some(1));
        assert_eq!(layout.depth(4), None);

        let (si, _) = generate_lowerbound(2, 1).unwrap();
        assert_eq!(si.graph().vertex_count(), 8);
    }

    #[test]
    fn lowerbound_closed_forms() {
        for r in 1..=4usize {
            for x in 0..=6usize {
                let (si, _) = generate_lowerbound(r, x).unwrap();
                assert_eq!(si.graph().vertex_count(), 2 + r * ((1 << (x + 1)) - 1));
                assert_eq!(
                    si.graph().edge_count(),
                    r + r * (1 << x) + r * ((1 << (x + 1)) - 2)
                );
            }
        }
    }

    #[test]
    fn lowerbound_overflow() {
        assert!(generate_lowerbound(1, 64).is_err());
        assert!(generate_lowerbound(1, 30).is_err());
        assert!(generate_lowerbound(0, 1).is_err());
    }

    #[test]
    fn random_cases() {
        let single = generate_random(1, 0.0, 1, 0, 0).unwrap();
        assert_eq!(single.graph().vertex_count(), 1);
        assert_eq!(single.terminals().to_vec(), vec![0]);

        let a = generate_random(12, 0.3, 3, 2, 7).unwrap();
        let b = generate_random(12, 0.3, 3, 2, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.terminals().len(), 3);

        let complete = generate_random(12, 1.0, 2, 1, 0).unwrap();
        assert_eq!(complete.graph().edge_count(), 66);
        assert!(!complete.is_feasible());

        assert!(generate_random(2, 0.5, 3, 0, 0).is_err());
    }
}
