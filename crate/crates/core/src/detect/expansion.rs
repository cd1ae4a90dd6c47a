//! Detection of expanded cliques.
//!
//! The expanded (l+1)-clique consists of one edge per core pair, each
//! carrying r-2 private vertices. A host copy therefore needs an (l+1)-set
//! of core vertices, and for every core pair an edge meeting the core in
//! exactly that pair, with the leftover parts pairwise disjoint. Cores are
//! enumerated as cliques of the co-occurrence graph; the leftover
//! disjointness is an exact set-packing search over the candidate edges of
//! each pair, which stays tiny for the l in play.

use fixedbitset::FixedBitSet;

use crate::detect::{DetectError, Witness};
use crate::hypergraph::Hypergraph;

pub fn contains_expansion(h: &Hypergraph, l: u64) -> Result<Option<Witness>, DetectError> {
    if l < h.r() as u64 {
        return Err(DetectError::FamilyUndefined { l, r: h.r() });
    }
    let k = l as usize + 1;
    let n = h.n() as usize;
    let r = h.r() as usize;
    let pair_count = k * (k - 1) / 2;
    // every fresh vertex is private, so the host must be large enough
    if k > n || n < k + pair_count * (r - 2) || h.edge_count() < pair_count {
        return Ok(None);
    }
    let co = h.co_occurrence();
    let mut core = Vec::with_capacity(k);
    let mut found = None;
    enumerate_clique_cores(&co, 0, &mut core, k, &mut |core| {
        if let Some(picked) = pack_pairs(h, core) {
            found = Some(Witness::Embedding {
                vertex_map: core.to_vec(),
                edge_map: picked,
            });
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Ascending enumeration of k-cliques; stops when the visitor returns true.
fn enumerate_clique_cores(
    co: &crate::hypergraph::CoOccurrenceGraph,
    from: u32,
    core: &mut Vec<u32>,
    k: usize,
    visit: &mut impl FnMut(&[u32]) -> bool,
) -> bool {
    if core.len() == k {
        return visit(core);
    }
    let left = k - core.len();
    let n = co.n();
    for v in from..n {
        if n - v < left as u32 {
            break;
        }
        if !core.iter().all(|&u| co.adjacent(u, v)) {
            continue;
        }
        core.push(v);
        if enumerate_clique_cores(co, v + 1, core, k, visit) {
            return true;
        }
        core.pop();
    }
    false
}

/// For each core pair in lexicographic order, picks one host edge whose
/// core intersection is exactly the pair and whose leftover vertices avoid
/// everything chosen so far. Returns the edge indices on success.
fn pack_pairs(h: &Hypergraph, core: &[u32]) -> Option<Vec<usize>> {
    let n = h.n() as usize;
    let mut in_core = FixedBitSet::with_capacity(n);
    for &v in core {
        in_core.insert(v as usize);
    }

    let mut pairs = Vec::new();
    for i in 0..core.len() {
        for j in (i + 1)..core.len() {
            pairs.push((core[i], core[j]));
        }
    }
    // candidate edges per pair: contain the pair, meet the core only there
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(pairs.len());
    for &(x, y) in &pairs {
        let cand: Vec<usize> = h
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                e.contains(x)
                    && e.contains(y)
                    && e.vertices()
                        .iter()
                        .filter(|&&v| in_core.contains(v as usize))
                        .count()
                        == 2
            })
            .map(|(i, _)| i)
            .collect();
        if cand.is_empty() {
            return None;
        }
        candidates.push(cand);
    }

    let mut used = FixedBitSet::with_capacity(n);
    let mut picked = Vec::with_capacity(pairs.len());
    if pack(h, &in_core, &candidates, 0, &mut used, &mut picked) {
        Some(picked)
    } else {
        None
    }
}

fn pack(
    h: &Hypergraph,
    in_core: &FixedBitSet,
    candidates: &[Vec<usize>],
    at: usize,
    used: &mut FixedBitSet,
    picked: &mut Vec<usize>,
) -> bool {
    if at == candidates.len() {
        return true;
    }
    'next: for &idx in &candidates[at] {
        let leftover: Vec<usize> = h.edges()[idx]
            .vertices()
            .iter()
            .map(|&v| v as usize)
            .filter(|&v| !in_core.contains(v))
            .collect();
        for &v in &leftover {
            if used.contains(v) {
                continue 'next;
            }
        }
        for &v in &leftover {
            used.insert(v);
        }
        picked.push(idx);
        if pack(h, in_core, candidates, at + 1, used, picked) {
            return true;
        }
        picked.pop();
        for &v in &leftover {
            used.remove(v);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn expansion_embeds_in_itself() {
        let h = constructions::expansion(3, 3).unwrap();
        let w = contains_expansion(&h, 3).unwrap().expect("identity");
        assert!(w.validates_expansion(&h, 3));
    }

    #[test]
    fn complete_3_graph_with_spares_hosts_one() {
        let h = constructions::complete_r_graph(10, 3).unwrap();
        let w = contains_expansion(&h, 3)
            .unwrap()
            .expect("6 spare vertices suffice");
        assert!(w.validates_expansion(&h, 3));
    }

    #[test]
    fn conjecture_witness_stays_free() {
        let w = constructions::conjecture_witness(12, 3, 2, 3).unwrap();
        assert!(contains_expansion(&w.hypergraph, 3).unwrap().is_none());
    }

    #[test]
    fn small_hosts_cannot_fit_the_private_vertices() {
        // a 4-core expansion at r = 3 needs 4 + 6 = 10 vertices
        let h = constructions::complete_r_graph(9, 3).unwrap();
        assert!(contains_expansion(&h, 3).unwrap().is_none());
    }

    #[test]
    fn undefined_below_uniformity() {
        let h = constructions::complete_r_graph(5, 3).unwrap();
        assert!(contains_expansion(&h, 2).is_err());
    }
}
