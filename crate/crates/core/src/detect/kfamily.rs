//! Pair-covered core detection.
//!
//! A hypergraph hosts a member of the (l+1)-core family exactly when some
//! (l+1)-set of vertices has every pair inside a common edge, i.e. when the
//! co-occurrence graph has a clique of that size: picking one covering edge
//! per pair of such a clique yields a member, and conversely the core of
//! any member is such a clique. So detection is clique search with the
//! pivoted Bron-Kerbosch recursion, cut off as soon as the target size is
//! reached.

use fixedbitset::FixedBitSet;

use crate::detect::{DetectError, Witness};
use crate::hypergraph::{CoOccurrenceGraph, Hypergraph};

/// Finds a core of size `l + 1`, or None when the hypergraph is free of
/// the family. `l >= r` is required; below that the family is undefined.
pub fn contains_k_family(h: &Hypergraph, l: u64) -> Result<Option<Witness>, DetectError> {
    if l < h.r() as u64 {
        return Err(DetectError::FamilyUndefined { l, r: h.r() });
    }
    let want = l as usize + 1;
    if want > h.n() as usize {
        return Ok(None);
    }
    let co = h.co_occurrence();
    let Some(mut core) = find_clique(&co, want) else {
        return Ok(None);
    };
    core.sort_unstable();

    // one covering edge per pair of the core, smallest index first
    let mut covering_edges = Vec::new();
    for i in 0..core.len() {
        for j in (i + 1)..core.len() {
            let idx = h
                .edges()
                .iter()
                .position(|e| e.contains(core[i]) && e.contains(core[j]))
                .expect("clique pairs are covered");
            covering_edges.push(idx);
        }
    }
    Ok(Some(Witness::KFamily {
        core,
        covering_edges,
    }))
}

/// First clique of exactly `want` vertices found by the deterministic
/// pivoted expansion, if any.
pub fn find_clique(co: &CoOccurrenceGraph, want: usize) -> Option<Vec<u32>> {
    if want == 0 {
        return Some(Vec::new());
    }
    let n = co.n() as usize;
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let mut r = Vec::new();
    expand(co, &mut r, p, want)
}

fn expand(
    co: &CoOccurrenceGraph,
    r: &mut Vec<u32>,
    p: FixedBitSet,
    want: usize,
) -> Option<Vec<u32>> {
    if r.len() == want {
        return Some(r.clone());
    }
    if r.len() + p.count_ones(..) < want {
        return None;
    }
    // pivot on the candidate with the most candidate neighbours
    let pivot = p
        .ones()
        .max_by_key(|&u| {
            let mut common = p.clone();
            common.intersect_with(co.neighbors(u as u32));
            (common.count_ones(..), usize::MAX - u)
        })
        .expect("p nonempty past the bound check");
    let mut outside = p.clone();
    outside.difference_with(co.neighbors(pivot as u32));

    let mut p = p;
    for v in outside.ones().collect::<Vec<_>>() {
        let mut next = p.clone();
        next.intersect_with(co.neighbors(v as u32));
        r.push(v as u32);
        if let Some(found) = expand(co, r, next, want) {
            return Some(found);
        }
        r.pop();
        p.remove(v);
    }
    None
}

/// Is there a clique of size `want` containing both endpoints of `pair`?
/// `rows[v]` is the u64 neighbourhood mask of v. The search engine calls
/// this for each pair newly covered by a candidate edge.
pub fn clique_through_pair(rows: &[u64], pair: (u32, u32), want: usize) -> bool {
    let (x, y) = pair;
    if rows[x as usize] & (1 << y) == 0 {
        return false;
    }
    if want <= 2 {
        return true;
    }
    let candidates = rows[x as usize] & rows[y as usize];
    clique_in_mask(rows, candidates, want - 2)
}

fn clique_in_mask(rows: &[u64], mut candidates: u64, want: usize) -> bool {
    if want == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < want {
        return false;
    }
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if clique_in_mask(rows, candidates & rows[v], want - 1) {
            return true;
        }
    }
    false
}
