use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::FamilyAccess;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// One principal set found by [`enumerate_principal`].
#[derive(Clone, Debug, Serialize)]
pub struct PrincipalSet {
    pub members: Vec<usize>,
    pub excess: usize,
    /// Members lying in no earlier principal set that precedes this one.
    pub hat: Vec<usize>,
}

/// Principal sets of excess `0..=x`, grouped by exact excess.
#[derive(Clone, Debug, Serialize)]
pub struct PrincipalFamilyReport {
    pub r: usize,
    pub x: usize,
    /// `levels[i]` holds the principal sets of excess exactly `i`, so
    /// `Pr_i` is the concatenation of `levels[0..=i]`.
    pub levels: Vec<Vec<PrincipalSet>>,
    #[serde(skip)]
    pub union: VertexSet,
    /// `M(0..=x)` computed from the principal hats and witness excesses.
    pub m: Vec<u64>,
    pub witness_calls: usize,
}

impl PrincipalFamilyReport {
    /// `|Pr_i|`.
    pub fn principal_count(&self, i: usize) -> usize {
        self.levels.iter().take(i + 1).map(Vec::len).sum()
    }

    pub fn union_size(&self) -> usize {
        self.union.len()
    }

    /// `2^{i+1} r`, the bound on both `|Pr_i|` and the union size.
    pub fn bound(&self, i: usize) -> usize {
        (1usize << (i + 1)) * self.r
    }

    pub fn sets(&self) -> impl Iterator<Item = &PrincipalSet> {
        self.levels.iter().flatten()
    }

    pub fn principal_bound_holds(&self) -> bool {
        (0..=self.x).all(|i| self.principal_count(i) <= self.bound(i))
    }

    pub fn union_bound_holds(&self) -> bool {
        self.union_size() <= self.bound(self.x)
    }

    /// `M(i) <= 2^i r` for every level.
    pub fn mass_bound_holds(&self) -> bool {
        self.m
            .iter()
            .enumerate()
            .all(|(i, &m)| m <= (1u64 << i) * self.r as u64)
    }

    /// Text form: one set per line, prefixed by its excess.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, level) in self.levels.iter().enumerate() {
            for set in level {
                let members: Vec<String> = set.members.iter().map(usize::to_string).collect();
                out.push_str(&format!("{i}: {}\n", members.join(" ")));
            }
        }
        out
    }
}

struct Found<E> {
    element: E,
    members: VertexSet,
    excess: usize,
    hat: VertexSet,
    /// Excess of the witness of each member, `None` when it has none.
    witness_excess: Vec<(usize, Option<usize>)>,
}

/// Enumerates the principal sets of excess at most `x` level by level.
///
/// Level 0 is `sm(F)`. Every later candidate is the witness of some member
/// of an already found principal set; a candidate of excess `i` is kept iff
/// it is new and the principal sets of excess `< i` preceding it do not
/// cover all of its members.
#[allow(clippy::needless_range_loop)]
pub fn enumerate_principal<F: FamilyAccess>(fam: &F, x: usize) -> Result<PrincipalFamilyReport> {
    let sm = fam.smallest()?.ok_or(Error::EmptyFamily)?;
    let r = fam.members(&sm).len();
    if r == 0 {
        return Err(Error::DegenerateFamily);
    }
    let n = fam.universe_size();

    let mut found: Vec<Found<F::Element>> = Vec::new();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); x + 1];
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut pending: BTreeMap<usize, Vec<F::Element>> = BTreeMap::new();
    let mut witness_calls = 0;

    let sm_members = fam.members(&sm).clone();
    seen.insert(sm_members.clone());
    found.push(Found {
        element: sm,
        hat: sm_members.clone(),
        members: sm_members,
        excess: 0,
        witness_excess: Vec::new(),
    });
    levels[0].push(0);

    for level in 0..=x {
        if level > 0 {
            let mut cands = pending.remove(&level).unwrap_or_default();
            cands.sort_by(|a, b| fam.members(a).cmp(fam.members(b)));
            for cand in cands {
                let members = fam.members(&cand).clone();
                if !seen.insert(members.clone()) {
                    continue;
                }
                let mut covered = VertexSet::new(n);
                for f in found.iter().filter(|f| f.excess < level) {
                    if fam.precedes(&f.element, &cand)? {
                        covered.union_with(&f.members);
                    }
                }
                if members.is_subset(&covered) {
                    continue;
                }
                levels[level].push(found.len());
                found.push(Found {
                    element: cand,
                    hat: members.difference(&covered),
                    members,
                    excess: level,
                    witness_excess: Vec::new(),
                });
            }
        }
        if level == x {
            break;
        }

        let tasks: Vec<(usize, usize)> = levels[level]
            .iter()
            .flat_map(|&i| found[i].members.iter().map(move |v| (i, v)))
            .collect();
        witness_calls += tasks.len();
        let results: Vec<(usize, usize, Option<F::Element>)> = tasks
            .par_iter()
            .map(|&(i, v)| fam.witness(&found[i].element, v).map(|w| (i, v, w)))
            .collect::<Result<_>>()?;
        for (i, v, w) in results {
            let wex = match &w {
                Some(w) => Some(fam.members(w).len().checked_sub(r).ok_or_else(|| {
                    Error::Internal("witness smaller than the smallest element".into())
                })?),
                None => None,
            };
            found[i].witness_excess.push((v, wex));
            if let (Some(w), Some(e)) = (w, wex) {
                if e > level && e <= x {
                    pending.entry(e).or_default().push(w);
                }
            }
        }
    }

    let mut union = VertexSet::new(n);
    for f in &found {
        union.union_with(&f.members);
    }

    let m = (0..=x)
        .map(|i| {
            found
                .iter()
                .filter(|f| f.excess <= i)
                .map(|f| {
                    let kept = if f.excess == i {
                        f.hat.len()
                    } else {
                        f.witness_excess
                            .iter()
                            .filter(|(v, wex)| f.hat.contains(*v) && wex.is_none_or(|e| e > i))
                            .count()
                    };
                    (1u64 << (i - f.excess)) * kept as u64
                })
                .sum()
        })
        .collect();

    let levels = levels
        .into_iter()
        .map(|idx| {
            idx.into_iter()
                .map(|i| PrincipalSet {
                    members: found[i].members.to_vec(),
                    excess: found[i].excess,
                    hat: found[i].hat.to_vec(),
                })
                .collect()
        })
        .collect();

    Ok(PrincipalFamilyReport {
        r,
        x,
        levels,
        union,
        m,
        witness_calls,
    })
}

/// Union of all sets of excess at most `x`, computed as the union of the
/// principal ones.
pub fn union_of_excess<F: FamilyAccess>(fam: &F, x: usize) -> Result<VertexSet> {
    Ok(enumerate_principal(fam, x)?.union)
}
