use std::fmt;

use serde::Serialize;

use super::{derive_structure, EnumeratedFamily};
use crate::error::Result;
use crate::graph::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// Smallest element.
    SE,
    /// Strict monotonicity.
    SM,
    /// Single witness.
    SW,
    /// Transitive elimination.
    TE,
    /// Large visible set.
    LVS,
    /// Distinct visible set.
    DVS,
    /// Efficient computability, checked as agreement of an engine with the
    /// enumerated family.
    EC,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::SE,
        Condition::SM,
        Condition::SW,
        Condition::TE,
        Condition::LVS,
        Condition::DVS,
        Condition::EC,
    ];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub status: Status,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub results: Vec<ConditionResult>,
}

impl AxiomReport {
    pub fn get(&self, c: Condition) -> &ConditionResult {
        self.results
            .iter()
            .find(|r| r.condition == c)
            .expect("every condition is reported")
    }

    pub fn passed(&self, c: Condition) -> bool {
        self.get(c).status != Status::Fail
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn pass_count(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.status == Status::Pass)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            write!(f, "{}={status}", r.condition)?;
            if let Some(c) = &r.counterexample {
                write!(f, " counterexample: {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An engine whose `sm`, witness and precedence answers are compared against
/// the enumerated family for the EC condition.
pub trait EcProbe {
    fn sm(&self) -> Result<Option<VertexSet>>;
    fn witness(&self, s: &VertexSet, v: usize) -> Result<Option<VertexSet>>;
    fn precedes(&self, a: &VertexSet, b: &VertexSet) -> Result<bool>;
}

fn show(s: &VertexSet) -> String {
    format!("{{{s}}}")
}

/// Checks the six structural conditions on `fam`, and EC against `engine`
/// when one is supplied. The first counterexample of each failing condition
/// is reported.
pub fn check_axioms(fam: &EnumeratedFamily, engine: Option<&dyn EcProbe>) -> Result<AxiomReport> {
    let st = derive_structure(fam)?;
    let m = fam.len();
    let el = |i: usize| fam.element(i);
    let mut results = Vec::new();
    let mut push = |condition, cex: Option<String>| {
        results.push(ConditionResult {
            condition,
            status: if cex.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            counterexample: cex,
        })
    };

    let se = match st.smallest {
        Some(_) => None,
        None if m == 0 => Some("family is empty".to_string()),
        None => Some("no unique element precedes all others".to_string()),
    };
    push(Condition::SE, se);

    let sm = (0..m)
        .flat_map(|i| fam.successors(i).map(move |j| (i, j)))
        .find(|&(i, j)| el(i).len() >= el(j).len())
        .map(|(i, j)| {
            format!(
                "{} ≺ {} but sizes {} >= {}",
                show(el(i)),
                show(el(j)),
                el(i).len(),
                el(j).len()
            )
        });
    push(Condition::SM, sm);

    let sw = (0..m)
        .flat_map(|i| el(i).iter().map(move |v| (i, v)))
        .find_map(|(i, v)| {
            let c = fam.witness_candidates(i, v);
            (c.len() > 1).then(|| {
                let list: Vec<String> = c.iter().map(|&j| show(el(j))).collect();
                format!(
                    "vertex {v} of {} has witnesses {}",
                    show(el(i)),
                    list.join(", ")
                )
            })
        });
    push(Condition::SW, sw);

    let mut te = None;
    'te: for s2 in 0..m {
        for s1 in fam.predecessors(s2) {
            let dropped = el(s1).difference(el(s2));
            if dropped.is_empty() {
                continue;
            }
            for s3 in fam.successors(s2) {
                if let Some(v) = dropped.intersection(el(s3)).first() {
                    te = Some(format!(
                        "{} ≺ {} ≺ {} and vertex {v} returns",
                        show(el(s1)),
                        show(el(s2)),
                        show(el(s3))
                    ));
                    break 'te;
                }
            }
        }
    }
    push(Condition::TE, te);

    let lvs = (0..m)
        .flat_map(|j| st.pred[j].iter().map(move |&p| (j, p)))
        .find(|&(j, p)| el(p).len() > st.vis[j].len())
        .map(|(j, p)| {
            format!(
                "predecessor {} of {} is larger than Vis = {}",
                show(el(p)),
                show(el(j)),
                show(&st.vis[j])
            )
        });
    push(Condition::LVS, lvs);

    let dvs = (0..m)
        .filter(|&j| Some(j) != st.smallest)
        .find(|&j| st.vis[j].is_strict_subset(el(j)))
        .map(|j| {
            format!(
                "Vis = {} is a proper subset of {}",
                show(&st.vis[j]),
                show(el(j))
            )
        });
    push(Condition::DVS, dvs);

    match engine {
        None => results.push(ConditionResult {
            condition: Condition::EC,
            status: Status::Skipped,
            counterexample: None,
        }),
        Some(engine) => push(Condition::EC, check_engine(fam, engine, st.smallest)?),
    }

    Ok(AxiomReport { results })
}

fn check_engine(
    fam: &EnumeratedFamily,
    engine: &dyn EcProbe,
    smallest: Option<usize>,
) -> Result<Option<String>> {
    let expected = smallest.map(|i| fam.element(i).clone());
    let got = engine.sm()?;
    if got != expected {
        return Ok(Some(format!(
            "engine sm = {got:?}, family sm = {expected:?}"
        )));
    }
    for i in 0..fam.len() {
        let s = fam.element(i);
        for v in s.iter() {
            let expected = match fam.witness_candidates(i, v).as_slice() {
                [] => None,
                [w] => Some(fam.element(*w).clone()),
                _ => continue,
            };
            let got = engine.witness(s, v)?;
            if got != expected {
                return Ok(Some(format!(
                    "witness of {v} w.r.t. {}: engine {got:?}, family {expected:?}",
                    show(s)
                )));
            }
        }
        for j in 0..fam.len() {
            if engine.precedes(s, fam.element(j))? != fam.lt(i, j) {
                return Ok(Some(format!(
                    "precedence of {} and {} disagrees",
                    show(s),
                    show(fam.element(j))
                )));
            }
        }
    }
    Ok(None)
}
