//! Structural predicates: independence, high-degree vertex sets, link
//! freeness.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::detect::{kfamily, DetectError, Witness};
use crate::hypergraph::Hypergraph;

/// A set is weakly independent when it contains no full edge. Returns the
/// violating edge index otherwise.
pub fn is_weakly_independent(h: &Hypergraph, set: &BTreeSet<u32>) -> (bool, Option<Witness>) {
    for (i, e) in h.edges().iter().enumerate() {
        if e.vertices().iter().all(|v| set.contains(v)) {
            return (false, Some(Witness::EdgeInside { edge: i }));
        }
    }
    (true, None)
}

/// A set is strongly independent when no edge contains two of its
/// vertices.
pub fn is_strongly_independent(h: &Hypergraph, set: &BTreeSet<u32>) -> (bool, Option<Witness>) {
    for (i, e) in h.edges().iter().enumerate() {
        let hits: Vec<u32> = e
            .vertices()
            .iter()
            .copied()
            .filter(|v| set.contains(v))
            .collect();
        if hits.len() >= 2 {
            return (
                false,
                Some(Witness::SharedEdge {
                    edge: i,
                    vertices: hits,
                }),
            );
        }
    }
    (true, None)
}

/// The exact integer threshold r(s+1)n^{r-2} and the vertices whose degree
/// exceeds it. In a hypergraph with matching number at most s there are at
/// most s such vertices.
pub fn high_degree_vertices(h: &Hypergraph, s: u64) -> (Vec<u32>, BigUint) {
    let n = BigUint::from(h.n());
    let mut threshold = BigUint::from(h.r()) * BigUint::from(s + 1);
    for _ in 2..h.r() {
        threshold *= &n;
    }
    let degrees = h.degrees();
    let vertices = (0..h.n())
        .filter(|&v| BigUint::from(degrees[v as usize]) > threshold)
        .collect();
    (vertices, threshold)
}

/// Every vertex link of a core-free hypergraph must itself be core-free
/// one level down: checks that no link hosts an l-core family member.
pub fn link_freeness_check(h: &Hypergraph, l: u64) -> Result<bool, DetectError> {
    if l < h.r() as u64 {
        return Err(DetectError::FamilyUndefined { l, r: h.r() });
    }
    for v in h.vertices() {
        let link = h.link(v).expect("vertex in range");
        if kfamily::contains_k_family(&link.edges, l - 1)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn independence_on_the_main_construction() {
        let g = constructions::main_extremal(12, 3, 2, 3).unwrap();
        let v0: BTreeSet<u32> = g.parts[0].iter().copied().collect();
        let u: BTreeSet<u32> = (2..12).collect();
        assert!(is_strongly_independent(&g.hypergraph, &v0).0);
        assert!(is_weakly_independent(&g.hypergraph, &u).0);
        // U is not strongly independent: edges carry two U vertices
        let (ok, w) = is_strongly_independent(&g.hypergraph, &u);
        assert!(!ok);
        assert!(w.unwrap().validates(&g.hypergraph));
    }

    #[test]
    fn empty_set_is_both() {
        let fano = constructions::fano_plane();
        assert!(is_weakly_independent(&fano, &BTreeSet::new()).0);
        assert!(is_strongly_independent(&fano, &BTreeSet::new()).0);
    }

    #[test]
    fn high_degree_picks_out_the_special_part() {
        // V_0 degrees are t_2(n-s, 2) ~ n^2/4, far above 3(s+1)n
        let g = constructions::main_extremal(28, 3, 1, 3).unwrap();
        let (vs, _) = high_degree_vertices(&g.hypergraph, 1);
        assert_eq!(vs, vec![0]);

        let g = constructions::main_extremal(42, 3, 2, 3).unwrap();
        let (vs, _) = high_degree_vertices(&g.hypergraph, 2);
        assert_eq!(vs, vec![0, 1]);

        let empty = Hypergraph::empty(9, 3).unwrap();
        assert!(high_degree_vertices(&empty, 2).0.is_empty());
    }

    #[test]
    fn graph_threshold_uses_no_n_factor() {
        // r = 2: threshold is r(s+1)
        let k5 = constructions::complete_r_graph(5, 2).unwrap();
        let (vs, threshold) = high_degree_vertices(&k5, 0);
        assert_eq!(threshold, BigUint::from(2u32));
        assert_eq!(vs.len(), 5);
    }

    #[test]
    fn link_freeness_matches_the_named_cases() {
        let t = constructions::generalized_turan(9, 3, 3).unwrap();
        assert!(link_freeness_check(&t.hypergraph, 3).unwrap());

        let g = constructions::main_extremal(12, 3, 2, 3).unwrap();
        assert!(link_freeness_check(&g.hypergraph, 3).unwrap());

        let k5 = constructions::complete_r_graph(5, 3).unwrap();
        assert!(!link_freeness_check(&k5, 3).unwrap());
    }
}
