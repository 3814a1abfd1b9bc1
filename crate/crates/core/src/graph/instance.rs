use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// A multiway cut instance `(G, T, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwcInstance {
    graph: Graph,
    terminals: VertexSet,
    k: usize,
}

impl MwcInstance {
    pub fn new(graph: Graph, terminals: VertexSet, k: usize) -> Result<Self> {
        if terminals.universe() != graph.vertex_count() {
            return Err(Error::InvalidInstance(format!(
                "terminal set universe {} does not match vertex count {}",
                terminals.universe(),
                graph.vertex_count()
            )));
        }
        Ok(MwcInstance {
            graph,
            terminals,
            k,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn with_k(&self, k: usize) -> Self {
        MwcInstance { k, ..self.clone() }
    }

    /// False iff two terminals are adjacent; such an instance has no
    /// multiway cut at all since terminals cannot be deleted.
    pub fn is_feasible(&self) -> bool {
        self.terminals.iter().all(|t| {
            self.graph
                .neighbors(t)
                .iter()
                .all(|&w| !self.terminals.contains(w))
        })
    }

    /// Whether deleting `cut` leaves every terminal in its own component.
    pub fn is_multiway_cut(&self, cut: &VertexSet) -> bool {
        if !cut.is_disjoint(&self.terminals) {
            return false;
        }
        let (labels, _) = self.graph.components(cut);
        let mut seen = std::collections::HashSet::new();
        self.terminals.iter().all(|t| seen.insert(labels[t]))
    }
}

/// Source set `X` and sink set `Y` in a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorInstance {
    graph: Graph,
    source: VertexSet,
    sink: VertexSet,
}

impl SeparatorInstance {
    pub fn new(graph: Graph, source: VertexSet, sink: VertexSet) -> Result<Self> {
        let n = graph.vertex_count();
        if source.universe() != n || sink.universe() != n {
            return Err(Error::InvalidInstance(
                "set universe does not match graph".into(),
            ));
        }
        if source.is_empty() || sink.is_empty() {
            return Err(Error::InvalidInstance(
                "source and sink sets must be nonempty".into(),
            ));
        }
        if !source.is_disjoint(&sink) {
            return Err(Error::InvalidInstance(
                "source and sink sets intersect".into(),
            ));
        }
        Ok(SeparatorInstance {
            graph,
            source,
            sink,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> &VertexSet {
        &self.source
    }

    pub fn sink(&self) -> &VertexSet {
        &self.sink
    }

    pub fn terminals(&self) -> VertexSet {
        self.source.union(&self.sink)
    }

    /// True iff some edge joins the source side to the sink side, in which
    /// case no vertex separator exists.
    pub fn has_direct_edge(&self) -> bool {
        self.source.iter().any(|x| {
            self.graph
                .neighbors(x)
                .iter()
                .any(|&w| self.sink.contains(w))
        })
    }

    /// Whether `set` avoids `X ∪ Y` and cuts every X–Y path.
    pub fn separates(&self, set: &VertexSet) -> bool {
        if !set.is_disjoint(&self.source) || !set.is_disjoint(&self.sink) {
            return false;
        }
        self.graph
            .reachable(&self.source, set)
            .is_disjoint(&self.sink)
    }
}
