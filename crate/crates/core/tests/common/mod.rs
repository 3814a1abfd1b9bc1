#![allow(dead_code)]

use std::sync::Arc;

use mwc_core::family::EnumeratedFamily;
use mwc_core::graph::{generate_random, generate_random_separator, MwcInstance, SeparatorInstance};
use mwc_core::oracle::{enum_important, OracleBudget};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random separator instance whose X and Y are connected but not
/// adjacent, together with its complete brute-force family.
pub struct SepCase {
    pub seed: u64,
    pub si: Arc<SeparatorInstance>,
    pub family: EnumeratedFamily,
    pub r: usize,
}

pub fn separator_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<SepCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = OracleBudget::with_max_n(max_n);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_n..=max_n);
        let p = rng.gen_range(0.15..0.45);
        let xs = rng.gen_range(1..=2);
        let ys = rng.gen_range(1..=2);
        let s = rng.gen();
        let si = generate_random_separator(n, p, xs, ys, s).unwrap();
        if si.has_direct_edge() {
            continue;
        }
        let family = enum_important(&si, n, &budget).unwrap();
        let r = family.element(family.smallest_index().unwrap()).len();
        if r == 0 {
            continue;
        }
        out.push(SepCase {
            seed: s,
            si: Arc::new(si),
            family,
            r,
        });
    }
    out
}

pub fn mwc_corpus(
    count: usize,
    max_n: usize,
    max_t: usize,
    max_k: usize,
    seed: u64,
) -> Vec<MwcInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(6..=max_n);
        let p = rng.gen_range(0.12..0.4);
        let t = rng.gen_range(2..=max_t);
        let k = rng.gen_range(0..=max_k);
        let inst = generate_random(n, p, t, k, rng.gen()).unwrap();
        if inst.is_feasible() {
            out.push(inst);
        }
    }
    out
}

/// Sparse instances with many terminals, so that forcing actually fires.
pub fn forcing_corpus(count: usize, seed: u64) -> Vec<MwcInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(8..=14);
        let t = rng.gen_range(4..=n / 2 + 1);
        let k = rng.gen_range(1..=2);
        let p = rng.gen_range(0.15..0.3);
        let inst = generate_random(n, p, t, k, rng.gen()).unwrap();
        if inst.is_feasible() {
            out.push(inst);
        }
    }
    out
}
