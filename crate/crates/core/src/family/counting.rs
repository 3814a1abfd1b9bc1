use serde::Serialize;

use super::{derive_structure, EnumeratedFamily, FamilyAccess, FamilyStructure};
use crate::error::{Error, Result};

/// One evaluated inequality `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub label: String,
    pub lhs: u64,
    pub rhs: u64,
}

impl InequalityCheck {
    fn new(label: String, lhs: u64, rhs: u64) -> Self {
        InequalityCheck { label, lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CountingReport {
    pub r: usize,
    pub x: usize,
    /// `M(0..=x)`.
    pub m: Vec<u64>,
    /// `M(i) <= 2^i r`.
    pub level_bound: Vec<InequalityCheck>,
    /// `M(i+1) <= 2 M(i)`.
    pub doubling: Vec<InequalityCheck>,
    /// `|hat(S)| <= Σ_{v ∈ Vis(S)∖S} 2^{ex(S) - ex(S(v))}` per element.
    pub hat_bound: Vec<InequalityCheck>,
    /// `Σ_{S ∈ E_{i+1}∖E_i} |hat(S)| <= Σ_{S ∈ E_i} 2^{i-ex(S)+1} |hat_i(S) ∖ hat_{i+1}(S)|`.
    pub transfer: Vec<InequalityCheck>,
    /// Elements where `hat(S) != S ∖ Vis(S)`.
    pub hat_vis_mismatches: Vec<usize>,
}

impl CountingReport {
    pub fn all_hold(&self) -> bool {
        self.level_bound
            .iter()
            .chain(&self.doubling)
            .chain(&self.hat_bound)
            .chain(&self.transfer)
            .all(InequalityCheck::holds)
            && self.hat_vis_mismatches.is_empty()
    }
}

fn pow2(e: usize) -> u64 {
    1u64.checked_shl(e as u32).unwrap_or(u64::MAX)
}

/// `M(i) = Σ_{S ∈ E_i} 2^{i - ex(S)} |hat_i(S)|`.
pub fn level_mass(fam: &EnumeratedFamily, st: &FamilyStructure, i: usize) -> u64 {
    let Some(ex) = &st.excess else { return 0 };
    st.level_set(i)
        .into_iter()
        .map(|s| pow2(i - ex[s]) * st.hat_x(fam, s, i).len() as u64)
        .sum()
}

/// Evaluates the hat/level counting inequalities on a complete family up to
/// excess `x`.
pub fn counting_audit(fam: &EnumeratedFamily, x: usize) -> Result<CountingReport> {
    let st = derive_structure(fam)?;
    let sm = st
        .smallest
        .ok_or_else(|| Error::InconsistentOrder("no unique smallest element".into()))?;
    let ex = st
        .excess
        .clone()
        .ok_or_else(|| Error::InconsistentOrder("an element is smaller than sm".into()))?;
    let r = fam.element(sm).len();
    if r == 0 {
        return Err(Error::DegenerateFamily);
    }

    let m: Vec<u64> = (0..=x).map(|i| level_mass(fam, &st, i)).collect();
    let level_bound = (0..=x)
        .map(|i| InequalityCheck::new(format!("M({i}) <= 2^{i} r"), m[i], pow2(i) * r as u64))
        .collect();
    let doubling = (0..x)
        .map(|i| InequalityCheck::new(format!("M({}) <= 2 M({i})", i + 1), m[i + 1], 2 * m[i]))
        .collect();

    let mut hat_bound = Vec::new();
    for s in st.level_set(x).into_iter().filter(|&s| s != sm) {
        let outside = st.vis[s].difference(fam.element(s));
        let mut rhs = 0u64;
        for v in outside.iter() {
            // S(v): a predecessor holding v in its hat whose witness at v is S.
            let origin = fam
                .predecessors(s)
                .find(|&p| st.hat[p].contains(v) && fam.witness(&p, v).ok().flatten() == Some(s));
            if let Some(p) = origin {
                rhs += ex[s].checked_sub(ex[p]).map_or(0, pow2);
            }
        }
        hat_bound.push(InequalityCheck::new(
            format!("|hat({{{}}})| bound", fam.element(s)),
            st.hat[s].len() as u64,
            rhs,
        ));
    }

    let mut transfer = Vec::new();
    for i in 0..x {
        let lhs: u64 = st
            .level_set(i)
            .into_iter()
            .map(|s| {
                let lost = st.hat_x(fam, s, i).difference(&st.hat_x(fam, s, i + 1));
                pow2(i + 1 - ex[s]) * lost.len() as u64
            })
            .sum();
        let rhs: u64 = st
            .level_set(i + 1)
            .into_iter()
            .filter(|&s| ex[s] == i + 1)
            .map(|s| st.hat[s].len() as u64)
            .sum();
        transfer.push(InequalityCheck::new(
            format!("new hats at excess {}", i + 1),
            rhs,
            lhs,
        ));
    }

    let hat_vis_mismatches = (0..fam.len())
        .filter(|&s| st.hat[s] != fam.element(s).difference(&st.vis[s]))
        .collect();

    Ok(CountingReport {
        r,
        x,
        m,
        level_bound,
        doubling,
        hat_bound,
        transfer,
        hat_vis_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(8, vs.iter().copied())
    }

    #[test]
    fn single_element_mass_is_constant() {
        let fam = EnumeratedFamily::new(8, vec![set(&[1, 2, 3])], []).unwrap();
        let rep = counting_audit(&fam, 3).unwrap();
        assert_eq!(rep.m, vec![3, 6, 12, 24]);
        assert!(rep.all_hold());
    }

    #[test]
    fn lowerbound_one_one() {
        // {a} ≺ {b,c}: hat_1({a}) is empty since {b,c} drops a.
        let fam = EnumeratedFamily::new(8, vec![set(&[1]), set(&[2, 3])], [(0, 1)]).unwrap();
        let rep = counting_audit(&fam, 1).unwrap();
        assert_eq!(rep.m, vec![1, 2]);
        assert!(rep.all_hold(), "{rep:?}");
        assert_eq!(rep.hat_bound.len(), 1);
        assert_eq!((rep.hat_bound[0].lhs, rep.hat_bound[0].rhs), (2, 2));
    }
}
