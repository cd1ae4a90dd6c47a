//! Shared test support: a deterministic random-hypergraph corpus and the
//! definitional oracles the detectors are checked against. The oracles are
//! deliberately naive (subset scans and permutation sweeps) and share no
//! code with the implementations under test.
#![allow(dead_code)] // each test binary uses its own subset

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use itertools::Itertools;
use turanlab::hypergraph::{Hypergraph, HypergraphBuilder};

pub const CORPUS_SEED: u64 = 0x7453_u64;

/// Deterministic corpus: alternating r in {2, 3}, n in 4..=8, edge density
/// swept from sparse to dense.
pub fn corpus(count: usize) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let r = if i % 2 == 0 { 2 } else { 3 };
        let n = 4 + (i / 2) % 5;
        let density = 0.05 + 0.9 * ((i % 23) as f64 / 22.0);
        let mut b = HypergraphBuilder::new(n as u32, r as u32).unwrap();
        for combo in (0..n as u32).combinations(r) {
            if rng.random_bool(density) {
                b.add_edge(&combo).unwrap();
            }
        }
        out.push(b.build());
    }
    out
}

/// Definitional brute force: some (l+1)-subset of the vertices has every
/// pair inside a common edge.
pub fn oracle_contains_k_family(h: &Hypergraph, l: u64) -> bool {
    let k = l as usize + 1;
    if k > h.n() as usize {
        return false;
    }
    (0..h.n()).combinations(k).any(|core| {
        core.iter()
            .tuple_combinations()
            .all(|(&x, &y)| h.edges().iter().any(|e| e.contains(x) && e.contains(y)))
    })
}

/// Exhaustive matching number: scans all 2^m edge subsets.
pub fn oracle_matching_number(h: &Hypergraph) -> usize {
    let masks: Vec<u64> = h.edge_masks().expect("corpus stays below 64 vertices");
    let m = masks.len();
    assert!(m <= 20, "oracle is exponential in the edge count");
    let mut best = 0;
    'subsets: for subset in 0u32..(1u32 << m) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut seen = 0u64;
        for (i, mask) in masks.iter().enumerate() {
            if subset & (1 << i) != 0 {
                if seen & mask != 0 {
                    continue 'subsets;
                }
                seen |= mask;
            }
        }
        best = size;
    }
    best
}

/// The 7 lines of the plane, also kept independently of the library.
const LINES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [2, 3, 4],
    [0, 4, 5],
    [0, 3, 6],
    [1, 4, 6],
    [2, 5, 6],
    [1, 3, 5],
];

/// Naive plane embedding: tries every injection of the 7 points into the
/// host (all 7-permutations at n = 7).
pub fn oracle_contains_fano(h: &Hypergraph) -> bool {
    assert_eq!(h.r(), 3);
    let n = h.n();
    if n < 7 {
        return false;
    }
    (0..n).permutations(7).any(|image| {
        LINES.iter().all(|line| {
            let mapped = [image[line[0]], image[line[1]], image[line[2]]];
            h.contains_edge(&mapped)
        })
    })
}
