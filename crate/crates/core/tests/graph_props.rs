use proptest::prelude::*;

use mwc_core::graph::{
    contract_outside, parse_instance, parse_separator_instance, write_instance,
    write_separator_instance, Graph, MwcInstance, SeparatorInstance, VertexSet,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn subset(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Whether `u` reaches `v` through vertices outside `keep` only.
fn linked_outside(g: &Graph, keep: &VertexSet, u: usize, v: usize) -> bool {
    if g.has_edge(u, v) {
        return true;
    }
    let inner = keep.complement();
    let start: Vec<usize> = g
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&w| inner.contains(w))
        .collect();
    let reach = g.reachable(&VertexSet::from_vertices(g.vertex_count(), start), keep);
    g.neighbors(v).iter().any(|&w| reach.contains(w))
}

proptest! {
    #[test]
    fn contraction_preserves_outside_paths(g in graph_strategy(10), mask in any::<u64>()) {
        let n = g.vertex_count();
        let keep = subset(n, mask);
        let c = contract_outside(&g, &keep);
        prop_assert_eq!(c.old_ids.clone(), keep.to_vec());
        for (i, &u) in c.old_ids.iter().enumerate() {
            for (j, &v) in c.old_ids.iter().enumerate().skip(i + 1) {
                prop_assert_eq!(c.graph.has_edge(i, j), linked_outside(&g, &keep, u, v));
            }
        }
    }

    #[test]
    fn instance_roundtrip(g in graph_strategy(12), mask in any::<u64>(), k in 0usize..6) {
        let n = g.vertex_count();
        let inst = MwcInstance::new(g, subset(n, mask), k).unwrap();
        let text = write_instance(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn separator_roundtrip(g in graph_strategy(12), a in any::<u64>(), b in any::<u64>()) {
        let n = g.vertex_count();
        let x = subset(n, a | 1);
        let y = subset(n, b & !a & !1);
        prop_assume!(!y.is_empty());
        let si = SeparatorInstance::new(g, x, y).unwrap();
        let text = write_separator_instance(&si);
        prop_assert_eq!(parse_separator_instance(&text).unwrap(), si);
    }
}
