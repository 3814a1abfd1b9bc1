//! Minimum and important vertex separators.
//!
//! For a separator `K` of `(G, X, Y)` its *side* is `NR(G, Y, K)`: the
//! vertices outside `K` that `Y` cannot reach once `K` is deleted. `K1`
//! precedes `K2` when the side of `K1` is a strict subset of the side of `K2`,
//! i.e. `K2` sits closer to `Y`.

mod flow;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, SeparatorInstance, VertexSet};
pub(crate) use flow::SplitNetwork;

/// `{ v ∉ b : v not reachable from a in G - b }`. Vertices of `a` outside
/// `b` are trivially reachable and never part of the result.
pub fn nr_set(g: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
    let mut out = g.reachable(a, b).complement();
    out.difference_with(b);
    out
}

/// An X–Y separator together with its cached side `NR(G, Y, K)`.
#[derive(Clone)]
pub struct Separator {
    vertices: VertexSet,
    nr_side: VertexSet,
    context: Arc<SeparatorInstance>,
}

impl Separator {
    /// Fails unless `vertices` avoids `X ∪ Y` and cuts every X–Y path.
    pub fn new(context: &Arc<SeparatorInstance>, vertices: VertexSet) -> Result<Self> {
        if vertices.universe() != context.graph().vertex_count() {
            return Err(Error::NotASeparator("universe mismatch".into()));
        }
        if !context.separates(&vertices) {
            return Err(Error::NotASeparator(format!("{{{vertices}}}")));
        }
        let nr_side = nr_set(context.graph(), context.sink(), &vertices);
        Ok(Separator {
            vertices,
            nr_side,
            context: Arc::clone(context),
        })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn into_vertices(self) -> VertexSet {
        self.vertices
    }

    pub fn nr_side(&self) -> &VertexSet {
        &self.nr_side
    }

    pub fn context(&self) -> &Arc<SeparatorInstance> {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    fn same_context(&self, other: &Separator) -> bool {
        Arc::ptr_eq(&self.context, &other.context) || self.context == other.context
    }

    /// Every vertex of the separator touches both the part reachable from
    /// `X` and the part reachable from `Y`.
    pub fn is_minimal(&self) -> bool {
        let g = self.context.graph();
        let from_x = g.reachable(self.context.source(), &self.vertices);
        let from_y = g.reachable(self.context.sink(), &self.vertices);
        self.vertices.iter().all(|v| {
            let nb = g.neighbors(v);
            nb.iter().any(|&w| from_x.contains(w)) && nb.iter().any(|&w| from_y.contains(w))
        })
    }
}

impl PartialEq for Separator {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.same_context(other)
    }
}

impl Eq for Separator {}

impl fmt::Debug for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Separator{:?}", self.vertices)
    }
}

/// Size `r` of the smallest important separator and the excess `x` allowed
/// on top of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExcessBudget {
    r: usize,
    x: usize,
}

impl ExcessBudget {
    pub fn new(r: usize, x: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::DegenerateFamily);
        }
        Ok(ExcessBudget { r, x })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn max_size(&self) -> usize {
        self.r + self.x
    }

    /// `|S| - r`, or `None` when `S` is smaller than `r`.
    pub fn excess_of(&self, size: usize) -> Option<usize> {
        size.checked_sub(self.r)
    }

    pub fn admits(&self, size: usize) -> bool {
        self.excess_of(size).is_some_and(|e| e <= self.x)
    }
}

fn wrap(context: &Arc<SeparatorInstance>, vertices: VertexSet) -> Result<Separator> {
    Separator::new(context, vertices)
        .map_err(|e| Error::Internal(format!("flow cut is not a separator: {e}")))
}

/// A minimum X–Y separator, the one nearest to `X`. `None` iff an edge joins
/// `X` to `Y`.
pub fn min_separator(si: &Arc<SeparatorInstance>) -> Result<Option<Separator>> {
    if si.has_direct_edge() {
        return Ok(None);
    }
    let mut net = SplitNetwork::new(si.graph(), si.source(), si.sink(), None);
    net.run(None);
    wrap(si, net.cut_nearest_source()).map(Some)
}

/// Size of a minimum X–Y separator, or `None` if it exceeds `limit` (or no
/// separator exists).
pub fn min_separator_size(
    g: &Graph,
    source: &VertexSet,
    sink: &VertexSet,
    limit: usize,
) -> Option<usize> {
    let direct = source
        .iter()
        .any(|x| g.neighbors(x).iter().any(|&w| sink.contains(w)));
    if direct {
        return None;
    }
    let mut net = SplitNetwork::new(g, source, sink, None);
    let limit = u32::try_from(limit).unwrap_or(u32::MAX / 8);
    let f = net.run(Some(limit));
    (f <= limit).then_some(f as usize)
}

/// The unique minimum-size important separator: the minimum cut pushed as
/// far towards `Y` as possible. `None` iff an edge joins `X` to `Y`.
pub fn smallest_important_separator(si: &Arc<SeparatorInstance>) -> Result<Option<Separator>> {
    if si.has_direct_edge() {
        return Ok(None);
    }
    let mut net = SplitNetwork::new(si.graph(), si.source(), si.sink(), None);
    net.run(None);
    wrap(si, net.cut_nearest_sink()).map(Some)
}

/// Vertex set of the furthest minimum cut between two arbitrary disjoint
/// sets, without building a [`Separator`].
pub(crate) fn furthest_min_cut(
    g: &Graph,
    source: &VertexSet,
    sink: &VertexSet,
    limit: Option<usize>,
) -> Option<VertexSet> {
    let direct = source
        .iter()
        .any(|x| g.neighbors(x).iter().any(|&w| sink.contains(w)));
    if direct {
        return None;
    }
    let mut net = SplitNetwork::new(g, source, sink, None);
    let limit = limit.map(|l| u32::try_from(l).unwrap_or(u32::MAX / 8));
    let f = net.run(limit);
    if limit.is_some_and(|l| f > l) {
        return None;
    }
    Some(net.cut_nearest_sink())
}

/// Flow value and furthest minimum cut between `source` and `sink` in
/// `G - blocked`, or `None` once the flow exceeds `limit`.
pub(crate) fn furthest_min_cut_without(
    g: &Graph,
    source: &VertexSet,
    sink: &VertexSet,
    blocked: &VertexSet,
    limit: usize,
) -> Option<(usize, VertexSet)> {
    let mut net = SplitNetwork::without(g, source, sink, blocked);
    let limit = u32::try_from(limit).unwrap_or(u32::MAX / 8);
    let f = net.run(Some(limit));
    (f <= limit).then(|| (f as usize, net.cut_nearest_sink()))
}

/// `k1 ≺* k2`: the side of `k1` is a strict subset of the side of `k2`.
pub fn precedes(k1: &Separator, k2: &Separator) -> Result<bool> {
    if !k1.same_context(k2) {
        return Err(Error::ContextMismatch);
    }
    Ok(k1.nr_side.is_strict_subset(&k2.nr_side))
}

/// Importance test: `k` is minimal and it is the furthest minimum cut
/// between its own side and `Y`. Any separator that `k` precedes is a
/// side(k)–Y separator, so `k` is dominated iff that cut differs from it.
pub fn is_important(k: &Separator) -> bool {
    if !k.is_minimal() {
        return false;
    }
    let si = k.context();
    match furthest_min_cut(si.graph(), &k.nr_side, si.sink(), Some(k.len())) {
        Some(cut) => cut == k.vertices,
        None => false,
    }
}

/// The witness of `v` with respect to the important separator `k`: the
/// unique minimal important separator succeeding `k` that omits `v`.
///
/// The side of `k` is contracted into the source and `v` is split into
/// `n + 1` copies (a vertex capacity of `n + 1`), so no minimum cut can
/// afford it; the smallest important separator of that network is the
/// witness. Returns `None` when even the cheapest cut has to pay for `v`,
/// which happens exactly when `v` is adjacent to `Y`.
pub fn witness(k: &Separator, v: usize) -> Result<Option<Separator>> {
    if !k.contains(v) {
        return Err(Error::NotInSeparator(v));
    }
    let si = k.context();
    let g = si.graph();
    let n = g.vertex_count();
    let copies = u32::try_from(n + 1).map_err(|_| Error::Internal("graph too large".into()))?;
    let mut net = SplitNetwork::new(g, &k.nr_side, si.sink(), Some((v, copies)));
    let f = net.run(None);
    if f >= copies {
        return Ok(None);
    }
    let cut = net.cut_nearest_sink();
    if cut.contains(v) {
        return Err(Error::Internal(format!(
            "witness cut for vertex {v} selected the split vertex"
        )));
    }
    wrap(si, cut).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_lowerbound;

    fn ctx(n: usize, edges: &[(usize, usize)], x: &[usize], y: &[usize]) -> Arc<SeparatorInstance> {
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        Arc::new(
            SeparatorInstance::new(
                g,
                VertexSet::from_vertices(n, x.iter().copied()),
                VertexSet::from_vertices(n, y.iter().copied()),
            )
            .unwrap(),
        )
    }

    fn lb(r: usize, x: usize) -> Arc<SeparatorInstance> {
        Arc::new(generate_lowerbound(r, x).unwrap().0)
    }

    fn sep(si: &Arc<SeparatorInstance>, vs: &[usize]) -> Separator {
        Separator::new(
            si,
            VertexSet::from_vertices(si.graph().vertex_count(), vs.iter().copied()),
        )
        .unwrap()
    }

    // s=0, a=1, b=2, t=3
    fn path4() -> Arc<SeparatorInstance> {
        ctx(4, &[(0, 1), (1, 2), (2, 3)], &[0], &[3])
    }

    #[test]
    fn nr_examples() {
        let si = path4();
        let g = si.graph();
        let t = VertexSet::from_vertices(4, [3]);
        assert_eq!(
            nr_set(g, &t, &VertexSet::from_vertices(4, [1])).to_vec(),
            vec![0]
        );
        assert!(nr_set(g, &t, &VertexSet::new(4)).is_empty());
        // H(1,1): s=0, a=1, b=2, c=3, t=4
        let h = lb(1, 1);
        let nr = nr_set(h.graph(), h.sink(), &VertexSet::from_vertices(5, [2, 3]));
        assert_eq!(nr.to_vec(), vec![0, 1]);
    }

    #[test]
    fn min_separator_examples() {
        let si = ctx(3, &[(0, 1), (1, 2)], &[0], &[2]);
        assert_eq!(
            min_separator(&si).unwrap().unwrap().vertices().to_vec(),
            vec![1]
        );
        for r in 1..=3 {
            assert_eq!(min_separator(&lb(r, 2)).unwrap().unwrap().len(), r);
        }
        let direct = ctx(3, &[(0, 1), (0, 2)], &[0], &[2]);
        assert!(min_separator(&direct).unwrap().is_none());
        assert!(smallest_important_separator(&direct).unwrap().is_none());
    }

    #[test]
    fn disconnected_gives_empty_separator() {
        let si = ctx(3, &[(0, 1)], &[0], &[2]);
        assert!(smallest_important_separator(&si)
            .unwrap()
            .unwrap()
            .is_empty());
        assert!(ExcessBudget::new(0, 1).is_err());
    }

    #[test]
    fn precedence_examples() {
        let h = lb(1, 1);
        let a = sep(&h, &[1]);
        let bc = sep(&h, &[2, 3]);
        assert!(precedes(&a, &bc).unwrap());
        assert!(!precedes(&bc, &a).unwrap());
        assert!(!precedes(&a, &a).unwrap());

        // H(2,1): s=0, tree0 = 1(2,3), tree1 = 4(5,6), t=7
        let h2 = lb(2, 1);
        assert!(precedes(&sep(&h2, &[1, 4]), &sep(&h2, &[2, 3, 4])).unwrap());

        let other = path4();
        assert!(matches!(
            precedes(&a, &sep(&other, &[1])),
            Err(Error::ContextMismatch)
        ));
    }

    #[test]
    fn smallest_important_examples() {
        let h = lb(1, 1);
        assert_eq!(
            smallest_important_separator(&h)
                .unwrap()
                .unwrap()
                .vertices()
                .to_vec(),
            vec![1]
        );
        let h2 = lb(2, 1);
        assert_eq!(
            smallest_important_separator(&h2)
                .unwrap()
                .unwrap()
                .vertices()
                .to_vec(),
            vec![1, 4]
        );
        let p = path4();
        assert_eq!(
            smallest_important_separator(&p)
                .unwrap()
                .unwrap()
                .vertices()
                .to_vec(),
            vec![2]
        );
        assert_eq!(
            min_separator(&p).unwrap().unwrap().vertices().to_vec(),
            vec![1]
        );
    }

    #[test]
    fn importance_examples() {
        let p = path4();
        assert!(!is_important(&sep(&p, &[1])));
        assert!(is_important(&sep(&p, &[2])));
        // non-minimal
        assert!(!is_important(&sep(&p, &[1, 2])));
        let h = lb(1, 1);
        assert!(is_important(&sep(&h, &[2, 3])));
        assert!(is_important(&sep(&h, &[1])));
    }

    #[test]
    fn witness_examples() {
        let h = lb(1, 1);
        let a = sep(&h, &[1]);
        assert_eq!(
            witness(&a, 1).unwrap().unwrap().vertices().to_vec(),
            vec![2, 3]
        );
        let bc = sep(&h, &[2, 3]);
        assert!(witness(&bc, 2).unwrap().is_none());
        assert!(matches!(witness(&bc, 1), Err(Error::NotInSeparator(1))));

        // H(1,2): root 1, children 2 and 3
        let h12 = lb(1, 2);
        let root = sep(&h12, &[1]);
        assert_eq!(
            witness(&root, 1).unwrap().unwrap().vertices().to_vec(),
            vec![2, 3]
        );
    }

    #[test]
    fn separator_validation() {
        let p = path4();
        assert!(Separator::new(&p, VertexSet::new(4)).is_err());
        assert!(Separator::new(&p, VertexSet::from_vertices(4, [0])).is_err());
        let k = sep(&p, &[1]);
        assert!(k.nr_side().contains(0));
        assert!(!k.nr_side().contains(3));
    }
}
