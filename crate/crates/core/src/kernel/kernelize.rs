//! Kernel construction: union of important isolating cuts per terminal,
//! then contraction of everything else.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;

use super::provider::MwcProvider;
use super::squeeze::{squeeze_terminals, SqueezeOutcome, Squeezed};
use crate::error::Result;
use crate::family::{union_of_excess, SeparatorFamily};
use crate::graph::{contract_outside, MwcInstance, SeparatorInstance, VertexSet};
use crate::separator::min_separator_size;

/// A reduced instance together with its bookkeeping.
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub reduced: MwcInstance,
    /// `old_ids[v]` is the input id of kernel vertex `v`.
    pub old_ids: Vec<usize>,
    /// Vertices lying in every cut of size at most `k`, as input ids.
    pub forced: VertexSet,
    pub k_original: usize,
    pub k_reduced: usize,
    /// `r_t` per surviving terminal, keyed by input id.
    pub per_terminal_r: BTreeMap<usize, usize>,
    pub provider: &'static str,
    pub provider_cut: Option<usize>,
}

fn pow2(e: usize) -> u64 {
    u32::try_from(e)
        .ok()
        .and_then(|e| 1u64.checked_shl(e))
        .unwrap_or(u64::MAX)
}

impl KernelResult {
    pub fn vertex_count(&self) -> usize {
        self.reduced.graph().vertex_count()
    }

    pub fn terminal_count(&self) -> usize {
        self.reduced.terminals().len()
    }

    /// `min_t r_t`, 0 when there are no terminals.
    pub fn r(&self) -> usize {
        self.per_terminal_r.values().copied().min().unwrap_or(0)
    }

    /// `|T'|(2^{k'-r} r + 1) + |T'|`.
    pub fn size_bound(&self) -> u64 {
        let t = self.terminal_count() as u64;
        let r = self.r();
        let per = pow2(self.k_reduced.saturating_sub(r))
            .saturating_mul(r as u64)
            .saturating_add(1);
        t.saturating_mul(per).saturating_add(t)
    }

    /// `Σ_t 2^{k'-r_t+1} r_t + |T'|`, the bound obtained by applying the
    /// union bound to each terminal separately.
    pub fn refined_bound(&self) -> u64 {
        self.per_terminal_r
            .values()
            .map(|&r| pow2(self.k_reduced - r + 1).saturating_mul(r as u64))
            .fold(self.terminal_count() as u64, u64::saturating_add)
    }

    pub fn size_bound_holds(&self) -> bool {
        self.vertex_count() as u64 <= self.size_bound()
    }

    pub fn refined_bound_holds(&self) -> bool {
        self.vertex_count() as u64 <= self.refined_bound()
    }

    /// `2k'(k'+1)`.
    pub fn terminal_bound(&self) -> usize {
        2 * self.k_reduced * (self.k_reduced + 1)
    }

    pub fn terminal_bound_holds(&self) -> bool {
        self.terminal_count() <= self.terminal_bound()
    }
}

#[derive(Clone, Debug)]
pub enum KernelOutcome {
    Reduced(KernelResult),
    /// A multiway cut of size at most `k`, as input ids.
    Yes {
        cut: VertexSet,
    },
    No {
        reason: String,
    },
}

impl KernelOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            KernelOutcome::Reduced(_) => "REDUCED",
            KernelOutcome::Yes { .. } => "YES",
            KernelOutcome::No { .. } => "NO",
        }
    }

    /// Sidecar text report, one `key=value` per line.
    pub fn report(&self) -> String {
        let mut out = format!("verdict={}\n", self.verdict());
        match self {
            KernelOutcome::Yes { cut } => {
                let _ = writeln!(out, "cut={cut}");
                let _ = writeln!(out, "cut_size={}", cut.len());
            }
            KernelOutcome::No { reason } => {
                let _ = writeln!(out, "reason={reason}");
            }
            KernelOutcome::Reduced(res) => {
                let _ = writeln!(out, "provider={}", res.provider);
                if let Some(s) = res.provider_cut {
                    let _ = writeln!(out, "provider_cut={s}");
                }
                let _ = writeln!(out, "k={}", res.k_original);
                let _ = writeln!(out, "k_reduced={}", res.k_reduced);
                let _ = writeln!(out, "forced={}", res.forced);
                let _ = writeln!(out, "terminals={}", res.terminal_count());
                for (t, r) in &res.per_terminal_r {
                    let _ = writeln!(out, "r_t[{t}]={r}");
                }
                let _ = writeln!(out, "r={}", res.r());
                let _ = writeln!(out, "vertices={}", res.vertex_count());
                let _ = writeln!(
                    out,
                    "size_bound={} ({}*(2^({}-{})*{}+1)+{})",
                    res.size_bound(),
                    res.terminal_count(),
                    res.k_reduced,
                    res.r(),
                    res.r(),
                    res.terminal_count()
                );
                let _ = writeln!(out, "size_bound_holds={}", res.size_bound_holds());
                let _ = writeln!(out, "refined_bound={}", res.refined_bound());
                let _ = writeln!(out, "refined_bound_holds={}", res.refined_bound_holds());
                let _ = writeln!(out, "terminal_bound={}", res.terminal_bound());
                let _ = writeln!(out, "terminal_bound_holds={}", res.terminal_bound_holds());
            }
        }
        out
    }
}

/// Squeezes the terminal set, then keeps only the terminals and the union,
/// over each terminal `t`, of its important isolating cuts of size at most
/// `k'`; every other component is replaced by a clique on its neighborhood.
pub fn kernelize(inst: &MwcInstance, provider: &dyn MwcProvider) -> Result<KernelOutcome> {
    if !inst.is_feasible() {
        return Ok(KernelOutcome::No {
            reason: "adjacent terminals".into(),
        });
    }
    let sq = match squeeze_terminals(inst, provider)? {
        SqueezeOutcome::Yes { cut } => return Ok(KernelOutcome::Yes { cut }),
        SqueezeOutcome::No => {
            return Ok(KernelOutcome::No {
                reason: "terminal squeeze".into(),
            })
        }
        SqueezeOutcome::Reduced(sq) => sq,
    };
    let Squeezed {
        instance,
        old_ids,
        forced,
        k_original,
        provider_cut,
    } = sq;
    let g = instance.graph();
    let k = instance.k();
    let n = g.vertex_count();
    let terminals = instance.terminals().to_vec();

    let per_terminal: Vec<Option<(usize, VertexSet)>> = terminals
        .par_iter()
        .map(|&t| {
            let x = VertexSet::from_vertices(n, [t]);
            let mut y = instance.terminals().clone();
            y.remove(t);
            let Some(r) = min_separator_size(g, &x, &y, k) else {
                return Ok(None);
            };
            let fam = SeparatorFamily::new(SeparatorInstance::new(g.clone(), x, y)?);
            Ok(Some((r, union_of_excess(&fam, k - r)?)))
        })
        .collect::<Result<_>>()?;

    let mut keep = instance.terminals().clone();
    let mut per_terminal_r = BTreeMap::new();
    for (&t, entry) in terminals.iter().zip(&per_terminal) {
        let Some((r, u)) = entry else {
            return Ok(KernelOutcome::No {
                reason: format!("isolating cut of terminal {} exceeds k'={k}", old_ids[t]),
            });
        };
        per_terminal_r.insert(old_ids[t], *r);
        keep.union_with(u);
    }

    let contraction = contract_outside(g, &keep);
    let reduced_terminals = VertexSet::from_vertices(
        contraction.old_ids.len(),
        terminals.iter().filter_map(|&t| contraction.new_id(t)),
    );
    let reduced = MwcInstance::new(contraction.graph, reduced_terminals, k)?;
    Ok(KernelOutcome::Reduced(KernelResult {
        reduced,
        old_ids: contraction.old_ids.iter().map(|&v| old_ids[v]).collect(),
        forced,
        k_original,
        k_reduced: k,
        per_terminal_r,
        provider: provider.name(),
        provider_cut,
    }))
}
