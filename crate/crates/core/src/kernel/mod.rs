//! Kernelization pipeline for vertex multiway cut: terminal squeeze,
//! per-terminal unions of important isolating cuts, and contraction.

mod kernelize;
mod provider;
mod solver;
mod squeeze;

use std::sync::Arc;

pub use kernelize::{kernelize, KernelOutcome, KernelResult};
pub use provider::{ExactProvider, GreedyProvider, Guarantee, MwcProvider, ProviderAnswer};
pub use solver::{greedy_mwc, solve_exact, solve_exact_limited, Search};
pub use squeeze::{squeeze_terminals, SqueezeOutcome, Squeezed};

use crate::error::{Error, Result};
use crate::graph::{MwcInstance, SeparatorInstance};
use crate::separator::{smallest_important_separator, Separator};

/// The smallest important `t`–`(T \ {t})` separator, a minimum isolating cut
/// of `t`. `None` when `t` is adjacent to another terminal.
pub fn min_isolating_cut(inst: &MwcInstance, t: usize) -> Result<Option<Separator>> {
    let n = inst.graph().vertex_count();
    if t >= n || !inst.terminals().contains(t) {
        return Err(Error::InvalidInstance(format!("{t} is not a terminal")));
    }
    if inst.terminals().len() < 2 {
        return Err(Error::InvalidInstance("fewer than two terminals".into()));
    }
    let mut rest = inst.terminals().clone();
    rest.remove(t);
    let si = SeparatorInstance::new(
        inst.graph().clone(),
        crate::graph::VertexSet::from_vertices(n, [t]),
        rest,
    )?;
    smallest_important_separator(&Arc::new(si))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_lowerbound, Graph, VertexSet};

    #[test]
    fn isolating_cuts() {
        let p = MwcInstance::new(
            Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(),
            VertexSet::from_vertices(3, [0, 2]),
            1,
        )
        .unwrap();
        assert_eq!(
            min_isolating_cut(&p, 0)
                .unwrap()
                .unwrap()
                .vertices()
                .to_vec(),
            vec![1]
        );
        assert!(min_isolating_cut(&p, 1).is_err());

        let star = MwcInstance::new(
            Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
            VertexSet::from_vertices(4, [1, 2, 3]),
            1,
        )
        .unwrap();
        for t in 1..4 {
            assert_eq!(
                min_isolating_cut(&star, t)
                    .unwrap()
                    .unwrap()
                    .vertices()
                    .to_vec(),
                vec![0]
            );
        }

        let adjacent = MwcInstance::new(
            Graph::from_edges(2, [(0, 1)]).unwrap(),
            VertexSet::full(2),
            1,
        )
        .unwrap();
        assert!(min_isolating_cut(&adjacent, 0).unwrap().is_none());

        for r in 1..4 {
            let (si, layout) = generate_lowerbound(r, 2).unwrap();
            let mwc = MwcInstance::new(si.graph().clone(), si.terminals(), r).unwrap();
            for t in [layout.source(), layout.sink()] {
                assert_eq!(min_isolating_cut(&mwc, t).unwrap().unwrap().len(), r);
            }
        }
    }
}
