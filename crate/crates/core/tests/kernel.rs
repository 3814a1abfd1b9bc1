mod common;

use mwc_core::graph::{generate_lowerbound, Graph, MwcInstance, SeparatorInstance, VertexSet};
use mwc_core::kernel::{
    kernelize, solve_exact, squeeze_terminals, ExactProvider, GreedyProvider, KernelOutcome,
    MwcProvider, SqueezeOutcome,
};
use mwc_core::oracle::{
    enum_important, exact_mwc_bruteforce, multiway_cuts_up_to, union_up_to, OracleBudget,
};

/// Terminals `0..m`, each the apex of `trees` complete binary trees of the
/// given height whose leaves are all joined to every vertex of a shared hub
/// clique.
fn hub_of_trees(m: usize, trees: usize, height: usize, hub: usize) -> MwcInstance {
    let tree_size = (1 << (height + 1)) - 1;
    let first_leaf = (1 << height) - 1;
    let hub_start = m + m * trees * tree_size;
    let n = hub_start + hub;
    let mut edges = Vec::new();
    for t in 0..m {
        for tr in 0..trees {
            let base = m + (t * trees + tr) * tree_size;
            edges.push((t, base));
            for slot in 1..tree_size {
                edges.push((base + (slot - 1) / 2, base + slot));
            }
            for leaf in first_leaf..tree_size {
                for h in hub_start..n {
                    edges.push((base + leaf, h));
                }
            }
        }
    }
    for a in hub_start..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    MwcInstance::new(
        Graph::from_edges(n, edges).unwrap(),
        VertexSet::from_vertices(n, 0..m),
        0,
    )
    .unwrap()
}

#[test]
fn forced_vertices_lie_in_every_small_cut() {
    let budget = OracleBudget::default();
    let mut forcing_seen = 0;
    for inst in common::forcing_corpus(300, 31) {
        let cuts = multiway_cuts_up_to(&inst, inst.k(), &budget).unwrap();
        for provider in [
            &ExactProvider::default() as &dyn MwcProvider,
            &GreedyProvider,
        ] {
            let forced = match squeeze_terminals(&inst, provider).unwrap() {
                SqueezeOutcome::No => {
                    assert!(cuts.is_empty());
                    continue;
                }
                SqueezeOutcome::Yes { cut } => {
                    assert!(inst.is_multiway_cut(&cut));
                    assert!(cut.len() <= inst.k());
                    cut
                }
                SqueezeOutcome::Reduced(sq) => {
                    assert_eq!(sq.k() + sq.forced.len(), inst.k());
                    sq.forced
                }
            };
            if !forced.is_empty() {
                forcing_seen += 1;
            }
            for cut in &cuts {
                assert!(
                    forced.is_subset(cut),
                    "forced {{{forced}}} outside cut {{{cut}}}"
                );
            }
        }
    }
    assert!(
        forcing_seen > 20,
        "only {forcing_seen} runs forced anything"
    );
}

#[test]
fn squeeze_respects_terminal_bound() {
    for inst in common::forcing_corpus(200, 32) {
        if let SqueezeOutcome::Reduced(sq) =
            squeeze_terminals(&inst, &ExactProvider::default()).unwrap()
        {
            assert!(sq.terminal_bound_holds());
            // the exact provider returns a cut of size at most k'
            assert!(sq.instance.terminals().len() <= sq.k() * (sq.k() + 1));
        }
    }
}

#[test]
fn some_optimal_cut_lies_in_the_isolating_unions() {
    let budget = OracleBudget::default();
    for inst in common::mwc_corpus(150, 11, 4, 4, 33) {
        let Some(opt) = exact_mwc_bruteforce(&inst, &budget).unwrap() else {
            continue;
        };
        if opt > inst.k() || inst.terminals().len() < 2 {
            continue;
        }
        let n = inst.graph().vertex_count();
        let mut union = VertexSet::new(n);
        for t in inst.terminals().iter() {
            let mut rest = inst.terminals().clone();
            rest.remove(t);
            let si = SeparatorInstance::new(
                inst.graph().clone(),
                VertexSet::from_vertices(n, [t]),
                rest,
            )
            .unwrap();
            let fam = enum_important(&si, inst.k(), &budget).unwrap();
            let Some(sm) = fam.smallest_index() else {
                continue;
            };
            let r = fam.element(sm).len();
            if r <= inst.k() {
                union.union_with(&union_up_to(&fam, inst.k() - r));
            }
        }
        let cuts = multiway_cuts_up_to(&inst, opt, &budget).unwrap();
        assert!(cuts.iter().any(|c| c.len() == opt && c.is_subset(&union)));
    }
}

#[test]
fn kernels_preserve_the_optimum() {
    let budget = OracleBudget::default();
    for inst in common::mwc_corpus(200, 14, 4, 4, 34) {
        let opt = exact_mwc_bruteforce(&inst, &budget).unwrap();
        let yes = opt.is_some_and(|o| o <= inst.k());
        for provider in [
            &ExactProvider::default() as &dyn MwcProvider,
            &GreedyProvider,
        ] {
            match kernelize(&inst, provider).unwrap() {
                KernelOutcome::Yes { cut } => {
                    assert!(yes && inst.is_multiway_cut(&cut) && cut.len() <= inst.k());
                }
                KernelOutcome::No { .. } => assert!(!yes),
                KernelOutcome::Reduced(res) => {
                    let kernel_opt = solve_exact(&res.reduced, res.reduced.graph().vertex_count());
                    let kernel_opt = kernel_opt.map(|c| c.len() + res.forced.len());
                    assert_eq!(kernel_opt.is_some_and(|o| o <= inst.k()), yes);
                    if yes {
                        assert_eq!(kernel_opt, opt);
                    }
                    for (v, &old) in res.old_ids.iter().enumerate() {
                        assert_eq!(
                            res.reduced.terminals().contains(v),
                            inst.terminals().contains(old)
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn lowerbound_kernels_keep_the_source_trees() {
    for (r, x) in [(1, 2), (2, 2), (3, 1)] {
        let (si, _) = generate_lowerbound(r, x).unwrap();
        let inst = MwcInstance::new(si.graph().clone(), si.terminals(), r + x).unwrap();
        let KernelOutcome::Reduced(res) = kernelize(&inst, &ExactProvider::default()).unwrap()
        else {
            panic!("expected a reduced instance");
        };
        assert_eq!(res.vertex_count(), (1 << (x + 1)) * r - r + 2);
        assert!(res.size_bound_holds());
    }
}

#[test]
fn cheap_far_cuts_keep_multi_terminal_kernels_small() {
    let inst = hub_of_trees(3, 1, 2, 4).with_k(3);
    let KernelOutcome::Reduced(res) = kernelize(&inst, &ExactProvider::default()).unwrap() else {
        panic!("expected a reduced instance");
    };
    // only the three roots survive beside the terminals
    assert_eq!(res.vertex_count(), 6);
    assert!(res.size_bound_holds());
}

#[test]
fn greedy_kernel_of_a_no_instance_can_exceed_the_size_bound() {
    // r_t = 2 and k' = 3 for every terminal, and the hub is too big to cut,
    // so each terminal keeps all six vertices of its own two trees
    let inst = hub_of_trees(3, 2, 1, 4).with_k(3);
    assert_eq!(solve_exact(&inst, 3), None);
    assert_eq!(
        kernelize(&inst, &ExactProvider::default())
            .unwrap()
            .verdict(),
        "NO"
    );

    let KernelOutcome::Reduced(res) = kernelize(&inst, &GreedyProvider).unwrap() else {
        panic!("expected a reduced instance");
    };
    assert_eq!(res.r(), 2);
    assert_eq!(res.vertex_count(), 21);
    assert_eq!(res.size_bound(), 18);
    assert!(!res.size_bound_holds());
    assert_eq!(res.refined_bound(), 27);
    assert!(res.refined_bound_holds());
    assert_eq!(solve_exact(&res.reduced, 3), None);
}
