//! Terminal-count reduction by forcing high-fan-out cut vertices.

use super::provider::{Guarantee, MwcProvider, ProviderAnswer};
use crate::error::{Error, Result};
use crate::graph::{MwcInstance, VertexSet};

/// An instance after squeezing, with ids mapped back to the input.
#[derive(Clone, Debug)]
pub struct Squeezed {
    pub instance: MwcInstance,
    /// `old_ids[v]` is the input id of vertex `v` of `instance`.
    pub old_ids: Vec<usize>,
    /// Forced vertices, as input ids.
    pub forced: VertexSet,
    pub k_original: usize,
    /// Size of the last cut the provider returned, if any.
    pub provider_cut: Option<usize>,
}

impl Squeezed {
    pub fn k(&self) -> usize {
        self.instance.k()
    }

    /// `2k'(k'+1)`.
    pub fn terminal_bound(&self) -> usize {
        let k = self.k();
        2 * k * (k + 1)
    }

    pub fn terminal_bound_holds(&self) -> bool {
        self.instance.terminals().len() <= self.terminal_bound()
    }
}

#[derive(Clone, Debug)]
pub enum SqueezeOutcome {
    Reduced(Squeezed),
    /// The forced vertices already separate every terminal.
    Yes {
        cut: VertexSet,
    },
    No,
}

/// Restricts to the components of `G - removed` holding at least two
/// terminals. Returns the new instance and its new-to-old id map.
fn drop_lonely(
    inst: &MwcInstance,
    removed: &VertexSet,
    k: usize,
) -> Result<(MwcInstance, Vec<usize>)> {
    let g = inst.graph();
    let (label, count) = g.components(removed);
    let mut terminals_in = vec![0usize; count];
    for t in inst.terminals().iter() {
        if let Some(c) = label[t] {
            terminals_in[c] += 1;
        }
    }
    let keep = VertexSet::from_vertices(
        g.vertex_count(),
        (0..g.vertex_count()).filter(|&v| label[v].is_some_and(|c| terminals_in[c] >= 2)),
    );
    let (h, old_ids) = g.induced(&keep);
    let terminals = VertexSet::from_vertices(
        old_ids.len(),
        old_ids
            .iter()
            .enumerate()
            .filter(|&(_, &v)| inst.terminals().contains(v))
            .map(|(i, _)| i),
    );
    Ok((MwcInstance::new(h, terminals, k)?, old_ids))
}

/// Smallest `v` in the cut adjacent to at least `k + 2` components of
/// `G - cut` that contain terminals.
fn forcing_vertex(inst: &MwcInstance, cut: &VertexSet) -> Option<usize> {
    let g = inst.graph();
    let (label, count) = g.components(cut);
    let mut has_terminal = vec![false; count];
    for t in inst.terminals().iter() {
        if let Some(c) = label[t] {
            has_terminal[c] = true;
        }
    }
    cut.iter().find(|&v| {
        let mut seen: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|&w| label[w])
            .filter(|&c| has_terminal[c])
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len() >= inst.k() + 2
    })
}

/// Repeatedly asks `provider` for a cut `S` and, while `|T| > |S|(k+1)`,
/// deletes a vertex of `S` that sees `k + 2` terminal components of
/// `G - S`. Such a vertex lies in every cut of size at most `k`.
pub fn squeeze_terminals(inst: &MwcInstance, provider: &dyn MwcProvider) -> Result<SqueezeOutcome> {
    if !inst.is_feasible() {
        return Ok(SqueezeOutcome::No);
    }
    let n = inst.graph().vertex_count();
    let mut forced = VertexSet::new(n);
    let (mut cur, mut ids) = drop_lonely(inst, &VertexSet::new(n), inst.k())?;
    let mut provider_cut = None;
    let done = |cur: MwcInstance, ids: Vec<usize>, forced: VertexSet, provider_cut| {
        Ok(SqueezeOutcome::Reduced(Squeezed {
            instance: cur,
            old_ids: ids,
            forced,
            k_original: inst.k(),
            provider_cut,
        }))
    };
    loop {
        let t = cur.terminals().len();
        let k = cur.k();
        if t == 0 {
            return Ok(SqueezeOutcome::Yes { cut: forced });
        }
        if k == 0 {
            return Ok(SqueezeOutcome::No);
        }
        let (set, guarantee) = match provider.provide(&cur)? {
            ProviderAnswer::No => return Ok(SqueezeOutcome::No),
            ProviderAnswer::Unknown => {
                let threshold = 2 * k * (k + 1);
                if t > threshold {
                    return Err(Error::ProviderUnknown {
                        terminals: t,
                        threshold,
                    });
                }
                return done(cur, ids, forced, provider_cut);
            }
            ProviderAnswer::Cut { set, guarantee } => (set, guarantee),
        };
        if !cur.is_multiway_cut(&set) {
            return Err(Error::Internal(format!(
                "provider {} returned an invalid cut",
                provider.name()
            )));
        }
        provider_cut = Some(set.len());
        if guarantee == Guarantee::Optimal && set.len() > k {
            return Ok(SqueezeOutcome::No);
        }
        if t <= set.len() * (k + 1) {
            return done(cur, ids, forced, provider_cut);
        }
        let v = forcing_vertex(&cur, &set)
            .ok_or_else(|| Error::Internal("no cut vertex sees k+2 terminal components".into()))?;
        forced.insert(ids[v]);
        let removed = VertexSet::from_vertices(cur.graph().vertex_count(), [v]);
        let (next, local) = drop_lonely(&cur, &removed, k - 1)?;
        ids = local.into_iter().map(|i| ids[i]).collect();
        cur = next;
    }
}
