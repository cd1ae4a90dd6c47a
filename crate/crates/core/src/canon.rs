//! Canonical forms for small hypergraphs.
//!
//! The canonical form of `H` is the lexicographically least byte encoding
//! of its sorted edge list over all vertex relabelings, so two hypergraphs
//! get equal forms exactly when they are isomorphic. Minimization is a full
//! permutation sweep seeded with a degree-sorted relabeling, which makes
//! the early-exit comparison tight; it is intended for the uniqueness
//! checks at micro scale, not as a general-purpose canonical labeler.

use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Permutation sweeps get unreasonable past this many vertices.
pub const DEFAULT_CANON_CAP: u32 = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonicalization budget exceeded: n = {n} > cap = {cap}")]
    BudgetExceeded { n: u32, cap: u32 },
}

/// Canonical byte string under the default vertex cap.
pub fn canonical_form(h: &Hypergraph) -> Result<Vec<u8>, CanonError> {
    canonical_form_with_cap(h, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(h: &Hypergraph, cap: u32) -> Result<Vec<u8>, CanonError> {
    let n = h.n();
    if n > cap || n > 64 {
        return Err(CanonError::BudgetExceeded {
            n,
            cap: cap.min(64),
        });
    }
    let edges: Vec<Vec<u32>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();

    // Seed with a degree-descending relabeling: usually close to minimal,
    // so most permutations lose the comparison within a few edges.
    let mut order: Vec<u32> = (0..n).collect();
    let degs = h.degrees();
    order.sort_by_key(|&v| (std::cmp::Reverse(degs[v as usize]), v));
    let mut seed_perm = vec![0u32; n as usize];
    for (pos, &v) in order.iter().enumerate() {
        seed_perm[v as usize] = pos as u32;
    }
    let mut best = encode(n, h.r(), &relabel(&edges, &seed_perm));

    let mut perm: Vec<u32> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let enc = encode(n, h.r(), &relabel(&edges, p));
        if enc < best {
            best = enc;
        }
    });
    Ok(best)
}

fn relabel(edges: &[Vec<u32>], perm: &[u32]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = edges
        .iter()
        .map(|e| {
            let mut m: Vec<u32> = e.iter().map(|&v| perm[v as usize]).collect();
            m.sort_unstable();
            m
        })
        .collect();
    out.sort_unstable();
    out
}

fn encode(n: u32, r: u32, sorted_edges: &[Vec<u32>]) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(2 + sorted_edges.len() * r as usize);
    bytes.push(n as u8);
    bytes.push(r as u8);
    for e in sorted_edges {
        for &v in e {
            bytes.push(v as u8);
        }
    }
    bytes
}

fn permute_all(perm: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
