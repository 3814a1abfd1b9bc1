mod common;

use common::separator_corpus;
use mwc_core::family::{check_axioms, counting_audit, SeparatorFamily};
use mwc_core::graph::SeparatorInstance;
use mwc_core::separator::{min_separator_size, precedes, smallest_important_separator, Separator};

/// Internal-vertex masks of the inclusion-minimal X–Y paths.
fn minimal_paths(si: &SeparatorInstance) -> Vec<u64> {
    let mut masks = Vec::new();
    fn walk(si: &SeparatorInstance, v: usize, internal: u64, visited: u64, masks: &mut Vec<u64>) {
        for &w in si.graph().neighbors(v) {
            if visited >> w & 1 == 1 {
                continue;
            }
            if si.sink().contains(w) {
                masks.push(internal);
            } else if !si.source().contains(w) {
                walk(si, w, internal | 1 << w, visited | 1 << w, masks);
            }
        }
    }
    for x in si.source().iter() {
        walk(
            si,
            x,
            0,
            si.source().iter().fold(0, |m, t| m | 1 << t),
            &mut masks,
        );
    }
    masks.sort_unstable();
    masks.dedup();
    let all = masks.clone();
    masks.retain(|&m| !all.iter().any(|&o| o != m && o & m == o));
    masks
}

fn max_packing(paths: &[u64], used: u64) -> usize {
    let Some((&first, rest)) = paths.split_first() else {
        return 0;
    };
    let skip = max_packing(rest, used);
    if first & used == 0 {
        skip.max(1 + max_packing(rest, used | first))
    } else {
        skip
    }
}

#[test]
fn menger_duality() {
    for case in separator_corpus(150, 5, 9, 21) {
        let paths = minimal_paths(&case.si);
        let n = case.si.graph().vertex_count();
        let cut = min_separator_size(case.si.graph(), case.si.source(), case.si.sink(), n).unwrap();
        assert_eq!(cut, max_packing(&paths, 0), "seed {}", case.seed);
    }
}

#[test]
fn brute_families_are_is_families() {
    for case in separator_corpus(200, 5, 11, 22) {
        let engine = SeparatorFamily::from_shared(case.si.clone());
        let report = check_axioms(&case.family, Some(&engine)).unwrap();
        assert!(report.all_passed(), "seed {}\n{report}", case.seed);
    }
}

#[test]
fn smallest_is_unique_and_first() {
    for case in separator_corpus(150, 5, 11, 23) {
        let sizes: Vec<usize> = case.family.elements().iter().map(|e| e.len()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == case.r).count(), 1);
        let sm = smallest_important_separator(&case.si).unwrap().unwrap();
        for e in case.family.elements() {
            if e != sm.vertices() {
                let other = Separator::new(&case.si, e.clone()).unwrap();
                assert!(precedes(&sm, &other).unwrap());
                assert!(other.len() > sm.len());
            }
        }
    }
}

#[test]
fn counting_inequalities() {
    for case in separator_corpus(150, 5, 11, 24) {
        for x in 0..=3 {
            let report = counting_audit(&case.family, x).unwrap();
            assert!(report.all_hold(), "seed {} x {x}: {report:?}", case.seed);
            assert!(report.m[x] <= (1 << x) * case.r as u64);
        }
    }
}
