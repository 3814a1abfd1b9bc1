use super::{Graph, VertexSet};

/// Result of [`contract_outside`]: the graph on the kept vertices and the
/// map from new ids to old ids (increasing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    pub old_ids: Vec<usize>,
}

impl Contraction {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.old_ids.binary_search(&old).ok()
    }
}

/// Graph on `keep` where `u, v` are adjacent iff `g` has a `u`–`v` path whose
/// internal vertices all lie outside `keep`.
///
/// Every component of `g - keep` turns its kept neighbourhood into a clique.
pub fn contract_outside(g: &Graph, keep: &VertexSet) -> Contraction {
    let outside = keep.complement();
    let (labels, count) = g.components(keep);
    let mut attached: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in keep.iter() {
        let mut seen = Vec::new();
        for &w in g.neighbors(v) {
            if let Some(c) = labels[w] {
                if !seen.contains(&c) {
                    seen.push(c);
                    attached[c].push(v);
                }
            }
        }
    }
    debug_assert!(outside.iter().all(|v| labels[v].is_some()));

    let old_ids = keep.to_vec();
    let new_id = |old: usize| old_ids.binary_search(&old).expect("kept vertex");
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if keep.contains(u) && keep.contains(v) {
            edges.push((new_id(u), new_id(v)));
        }
    }
    for group in &attached {
        for (i, &u) in group.iter().enumerate() {
            for &v in &group[i + 1..] {
                edges.push((new_id(u), new_id(v)));
            }
        }
    }
    let graph = Graph::from_edges_dedup(old_ids.len(), edges).expect("ids in range");
    Contraction { graph, old_ids }
}
