//! Pluggable sources of multiway cuts for the terminal squeeze.

use super::solver::{greedy_mwc, solve_exact_limited, Search};
use crate::error::Result;
use crate::graph::{MwcInstance, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Guarantee {
    /// The cut has minimum size.
    Optimal,
    /// A valid cut, nothing more.
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProviderAnswer {
    Cut {
        set: VertexSet,
        guarantee: Guarantee,
    },
    /// No multiway cut of size at most `2k` exists.
    No,
    Unknown,
}

pub trait MwcProvider: Sync {
    fn name(&self) -> &'static str;
    fn provide(&self, inst: &MwcInstance) -> Result<ProviderAnswer>;
}

/// Branching solver with budget `2k`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactProvider {
    /// Answer `Unknown` after this many branching nodes.
    pub node_limit: Option<u64>,
}

impl MwcProvider for ExactProvider {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn provide(&self, inst: &MwcInstance) -> Result<ProviderAnswer> {
        Ok(
            match solve_exact_limited(inst, 2 * inst.k(), self.node_limit) {
                Search::Found(set) => ProviderAnswer::Cut {
                    set,
                    guarantee: Guarantee::Optimal,
                },
                Search::Exhausted => ProviderAnswer::No,
                Search::Aborted => ProviderAnswer::Unknown,
            },
        )
    }
}

/// Union of minimum isolating cuts. Never answers `No`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyProvider;

impl MwcProvider for GreedyProvider {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn provide(&self, inst: &MwcInstance) -> Result<ProviderAnswer> {
        if !inst.is_feasible() {
            return Ok(ProviderAnswer::Unknown);
        }
        Ok(ProviderAnswer::Cut {
            set: greedy_mwc(inst)?,
            guarantee: Guarantee::Heuristic,
        })
    }
}
