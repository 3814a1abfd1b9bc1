//! Unit-vertex-capacity max-flow on the split digraph.
//!
//! Vertex `v` becomes `in(v) = 2v -> out(v) = 2v+1` carrying the vertex
//! capacity; an undirected edge `{u, v}` becomes `out(u) -> in(v)` and
//! `out(v) -> in(u)` with unbounded capacity. A super source feeds every
//! source vertex and every sink vertex drains into a super sink.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

pub(crate) const UNBOUNDED: u32 = u32::MAX / 4;

pub(crate) struct SplitNetwork {
    n: usize,
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    flow: u32,
    blocked: Vec<bool>,
}

impl SplitNetwork {
    /// `heavy` raises one vertex's capacity from 1 to the given value.
    pub(crate) fn new(
        g: &Graph,
        source: &VertexSet,
        sink: &VertexSet,
        heavy: Option<(usize, u32)>,
    ) -> Self {
        Self::build(g, source, sink, heavy, None)
    }

    /// Network on `G - blocked`; blocked vertices get capacity 0 and never
    /// appear in a reported cut.
    pub(crate) fn without(
        g: &Graph,
        source: &VertexSet,
        sink: &VertexSet,
        blocked: &VertexSet,
    ) -> Self {
        Self::build(g, source, sink, None, Some(blocked))
    }

    fn build(
        g: &Graph,
        source: &VertexSet,
        sink: &VertexSet,
        heavy: Option<(usize, u32)>,
        blocked: Option<&VertexSet>,
    ) -> Self {
        let n = g.vertex_count();
        let mut net = SplitNetwork {
            n,
            adj: vec![Vec::new(); 2 * n + 2],
            to: Vec::with_capacity(4 * (n + 2 * g.edge_count())),
            cap: Vec::with_capacity(4 * (n + 2 * g.edge_count())),
            flow: 0,
            blocked: (0..n)
                .map(|v| blocked.is_some_and(|b| b.contains(v)))
                .collect(),
        };
        for v in 0..n {
            let c = if net.blocked[v] {
                0
            } else if source.contains(v) || sink.contains(v) {
                UNBOUNDED
            } else {
                match heavy {
                    Some((h, c)) if h == v => c,
                    _ => 1,
                }
            };
            net.add_arc(2 * v, 2 * v + 1, c);
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, UNBOUNDED);
            net.add_arc(2 * v + 1, 2 * u, UNBOUNDED);
        }
        let (s, t) = (net.super_source(), net.super_sink());
        for x in source.iter() {
            net.add_arc(s, 2 * x, UNBOUNDED);
        }
        for y in sink.iter() {
            net.add_arc(2 * y + 1, t, UNBOUNDED);
        }
        net
    }

    fn super_source(&self) -> usize {
        2 * self.n
    }

    fn super_sink(&self) -> usize {
        2 * self.n + 1
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Augments along shortest residual paths until none is left or the flow
    /// exceeds `limit`. Returns the flow value.
    pub(crate) fn run(&mut self, limit: Option<u32>) -> u32 {
        let (s, t) = (self.super_source(), self.super_sink());
        let mut parent_arc = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        loop {
            if limit.is_some_and(|l| self.flow > l) {
                return self.flow;
            }
            parent_arc.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let w = self.to[a];
                    if self.cap[a] > 0 && w != s && parent_arc[w] == usize::MAX {
                        parent_arc[w] = a;
                        if w == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                return self.flow;
            }
            let mut bottleneck = UNBOUNDED;
            let mut w = t;
            while w != s {
                let a = parent_arc[w];
                bottleneck = bottleneck.min(self.cap[a]);
                w = self.to[a ^ 1];
            }
            let mut w = t;
            while w != s {
                let a = parent_arc[w];
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                w = self.to[a ^ 1];
            }
            self.flow = self.flow.saturating_add(bottleneck);
        }
    }

    /// Residual nodes reachable from the super source.
    fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![self.super_source()];
        seen[self.super_source()] = true;
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let w = self.to[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Residual nodes from which the super sink is reachable.
    fn sink_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![self.super_sink()];
        seen[self.super_sink()] = true;
        while let Some(w) = stack.pop() {
            for &a in &self.adj[w] {
                let u = self.to[a];
                if self.cap[a ^ 1] > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Minimum cut whose source side is smallest.
    pub(crate) fn cut_nearest_source(&self) -> VertexSet {
        let side = self.source_side();
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| !self.blocked[v] && side[2 * v] && !side[2 * v + 1]),
        )
    }

    /// Minimum cut whose source side is largest.
    pub(crate) fn cut_nearest_sink(&self) -> VertexSet {
        let side = self.sink_side();
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| !self.blocked[v] && !side[2 * v] && side[2 * v + 1]),
        )
    }
}
