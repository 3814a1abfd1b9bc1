//! Undirected simple graphs over dense vertex ids, plus the instance types
//! built on top of them.

mod contract;
mod format;
mod generate;
mod instance;
mod vertex_set;

use std::collections::VecDeque;

pub use contract::{contract_outside, Contraction};
pub use format::{
    parse_instance, parse_separator_instance, write_instance, write_separator_instance,
};
pub use generate::{
    generate_lowerbound, generate_random, generate_random_separator, LowerBoundLayout,
    MAX_GENERATED_VERTICES,
};
pub use instance::{MwcInstance, SeparatorInstance};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Undirected simple graph; neighbor lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge(u, w[0]));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    /// Same as [`Graph::from_edges`] but silently merges duplicate edges.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::from_edges(n, list)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.vertex_count())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        let n = self.vertex_count();
        let mut set = VertexSet::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Vertices reachable from `sources` without entering `blocked`.
    /// Sources that are themselves blocked are not expanded.
    pub fn reachable(&self, sources: &VertexSet, blocked: &VertexSet) -> VertexSet {
        let mut seen = self.empty_set();
        let mut queue = VecDeque::new();
        for s in sources.iter() {
            if !blocked.contains(s) && seen.insert(s) {
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !blocked.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected-component labels of `G - removed`; removed vertices get `None`.
    pub fn components(&self, removed: &VertexSet) -> (Vec<Option<usize>>, usize) {
        let n = self.vertex_count();
        let mut label = vec![None; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if removed.contains(start) || label[start].is_some() {
                continue;
            }
            label[start] = Some(count);
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !removed.contains(w) && label[w].is_none() {
                        label[w] = Some(count);
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Induced subgraph on `keep`, re-indexed in increasing id order.
    /// Returns the graph and the new-to-old id map.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); old_ids.len()];
        let mut edge_count = 0;
        for (i, &v) in old_ids.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    adj[i].push(new_id[w]);
                    if v < w {
                        edge_count += 1;
                    }
                }
            }
        }
        (Graph { adj, edge_count }, old_ids)
    }
}
