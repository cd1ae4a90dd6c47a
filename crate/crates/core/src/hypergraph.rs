//! Uniform hypergraphs and their structural primitives.
//!
//! Vertices are dense integers `0..n`. Edges are `r`-subsets stored as
//! strictly increasing vertex lists, kept in lexicographic order and
//! duplicate-free. All derived objects (links, co-occurrence graph, line
//! graph, induced subhypergraphs) are built from this one representation;
//! hot paths convert edges to `u64` bitmasks on entry when `n <= 64`.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("edge {edge:?} has {got} distinct vertices, expected {expected}")]
    WrongEdgeSize {
        edge: Vec<u32>,
        got: usize,
        expected: u32,
    },
    #[error("uniformity must be at least 1")]
    ZeroUniformity,
    #[error("root vertices must be distinct")]
    DuplicateRoots,
    #[error("restriction set overlaps the root vertices")]
    RootsOverlapRestriction,
    #[error("{got} roots given, uniformity is {r}")]
    TooManyRoots { got: usize, r: u32 },
}

/// An edge: a strictly increasing list of vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(Vec<u32>);

impl Edge {
    /// Builds an edge from any iterable of vertices; sorts and rejects repeats.
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Result<Edge, HypergraphError> {
        let mut vs: Vec<u32> = vertices.into_iter().collect();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            let got = {
                let mut d = vs.clone();
                d.dedup();
                d.len()
            };
            return Err(HypergraphError::WrongEdgeSize {
                edge: vs.clone(),
                got,
                expected: vs.len() as u32,
            });
        }
        Ok(Edge(vs))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn contains_all(&self, vs: &[u32]) -> bool {
        vs.iter().all(|&v| self.contains(v))
    }

    /// Sorted intersection size of two edges.
    pub fn intersection_size(&self, other: &Edge) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn intersects(&self, other: &Edge) -> bool {
        self.intersection_size(other) > 0
    }

    /// Bitmask over vertices; only valid when every vertex is < 64.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.0.last().is_none_or(|&v| v < 64));
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An `n`-vertex `r`-uniform hypergraph. Immutable once built; construct
/// through [`HypergraphBuilder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: u32,
    r: u32,
    edges: Vec<Edge>,
}

/// Accumulates edges for a [`Hypergraph`]. Duplicate insertion is
/// idempotent: constructions generated from overlapping index ranges must
/// not fail spuriously.
pub struct HypergraphBuilder {
    n: u32,
    r: u32,
    edges: BTreeSet<Edge>,
}

impl HypergraphBuilder {
    pub fn new(n: u32, r: u32) -> Result<HypergraphBuilder, HypergraphError> {
        if r == 0 {
            return Err(HypergraphError::ZeroUniformity);
        }
        Ok(HypergraphBuilder {
            n,
            r,
            edges: BTreeSet::new(),
        })
    }

    /// Inserts an edge; returns false if it was already present.
    pub fn add_edge(&mut self, vertices: &[u32]) -> Result<bool, HypergraphError> {
        let edge = Edge::new(vertices.iter().copied())?;
        if edge.len() != self.r as usize {
            return Err(HypergraphError::WrongEdgeSize {
                edge: edge.0,
                got: vertices.len(),
                expected: self.r,
            });
        }
        if let Some(&v) = edge.vertices().last() {
            if v >= self.n {
                return Err(HypergraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        Ok(self.edges.insert(edge))
    }

    pub fn build(self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            r: self.r,
            edges: self.edges.into_iter().collect(),
        }
    }
}

impl Hypergraph {
    /// An edgeless hypergraph.
    pub fn empty(n: u32, r: u32) -> Result<Hypergraph, HypergraphError> {
        Ok(HypergraphBuilder::new(n, r)?.build())
    }

    pub fn from_edges<I, E>(n: u32, r: u32, edges: I) -> Result<Hypergraph, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        let mut b = HypergraphBuilder::new(n, r)?;
        for e in edges {
            b.add_edge(e.as_ref())?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in lexicographic order of their sorted vertex lists.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, vertices: &[u32]) -> bool {
        match Edge::new(vertices.iter().copied()) {
            Ok(e) => self.edges.binary_search(&e).is_ok(),
            Err(_) => false,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n
    }

    /// Edge bitmasks, parallel to `edges()`. Available only when `n <= 64`.
    pub fn edge_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.edges.iter().map(Edge::mask).collect())
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: u32) -> Result<usize, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// Degrees of all vertices in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n as usize];
        for e in &self.edges {
            for &v in e.vertices() {
                d[v as usize] += 1;
            }
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Edges containing every root whose remaining vertices all lie in `a`.
    pub fn restricted_degree(
        &self,
        roots: &[u32],
        a: &BTreeSet<u32>,
    ) -> Result<usize, HypergraphError> {
        if roots.is_empty() || roots.len() > self.r as usize {
            return Err(HypergraphError::TooManyRoots {
                got: roots.len(),
                r: self.r,
            });
        }
        let root_set: BTreeSet<u32> = roots.iter().copied().collect();
        if root_set.len() != roots.len() {
            return Err(HypergraphError::DuplicateRoots);
        }
        for &v in roots {
            if v >= self.n {
                return Err(HypergraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if !root_set.is_disjoint(a) {
            return Err(HypergraphError::RootsOverlapRestriction);
        }
        let count = self
            .edges
            .iter()
            .filter(|e| {
                e.contains_all(roots)
                    && e.vertices()
                        .iter()
                        .all(|v| root_set.contains(v) || a.contains(v))
            })
            .count();
        Ok(count)
    }

    /// The link of `v`: the (r-1)-graph of edge remainders through `v`,
    /// kept on the same vertex universe.
    pub fn link(&self, v: u32) -> Result<VertexLink, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut b = HypergraphBuilder::new(self.n, self.r - 1).expect("r >= 2 for links");
        for e in &self.edges {
            if e.contains(v) {
                let rest: Vec<u32> = e.vertices().iter().copied().filter(|&u| u != v).collect();
                b.add_edge(&rest)?;
            }
        }
        Ok(VertexLink {
            owner: v,
            edges: b.build(),
        })
    }

    /// The pair-coverage relation: x ~ y iff some edge contains both.
    pub fn co_occurrence(&self) -> CoOccurrenceGraph {
        let n = self.n as usize;
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for e in &self.edges {
            let vs = e.vertices();
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    rows[vs[i] as usize].insert(vs[j] as usize);
                    rows[vs[j] as usize].insert(vs[i] as usize);
                }
            }
        }
        CoOccurrenceGraph { n: self.n, rows }
    }

    /// Intersection graph of the edge set.
    pub fn line_graph(&self) -> LineGraph {
        let m = self.edges.len();
        let mut rows = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            for j in (i + 1)..m {
                if self.edges[i].intersects(&self.edges[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        LineGraph { m, rows }
    }

    /// Subhypergraph induced on `keep`, relabeled `0..keep.len()` with an
    /// order-preserving map. Vertices outside `0..n` are ignored.
    pub fn induced(&self, keep: &BTreeSet<u32>) -> Hypergraph {
        let kept: Vec<u32> = keep.iter().copied().filter(|&v| v < self.n).collect();
        let mut relabel = vec![u32::MAX; self.n as usize];
        for (new, &old) in kept.iter().enumerate() {
            relabel[old as usize] = new as u32;
        }
        let mut b = HypergraphBuilder::new(kept.len() as u32, self.r).expect("r >= 1");
        for e in &self.edges {
            if e.vertices()
                .iter()
                .all(|&v| relabel[v as usize] != u32::MAX)
            {
                let mapped: Vec<u32> = e.vertices().iter().map(|&v| relabel[v as usize]).collect();
                b.add_edge(&mapped).expect("relabeled edge is valid");
            }
        }
        b.build()
    }

    /// Relabels vertices by `perm` (vertex v goes to `perm[v]`).
    pub fn apply_permutation(&self, perm: &[u32]) -> Hypergraph {
        assert_eq!(perm.len(), self.n as usize);
        let mut b = HypergraphBuilder::new(self.n, self.r).expect("r >= 1");
        for e in &self.edges {
            let mapped: Vec<u32> = e.vertices().iter().map(|&v| perm[v as usize]).collect();
            b.add_edge(&mapped).expect("permuted edge is valid");
        }
        b.build()
    }

    /// Re-checks every structural invariant; used by tests and the search
    /// engine before emitting witnesses.
    pub fn validate(&self) -> Result<(), HypergraphError> {
        for e in &self.edges {
            if e.len() != self.r as usize {
                return Err(HypergraphError::WrongEdgeSize {
                    edge: e.vertices().to_vec(),
                    got: e.len(),
                    expected: self.r,
                });
            }
            if let Some(&v) = e.vertices().last() {
                if v >= self.n {
                    return Err(HypergraphError::VertexOutOfRange {
                        vertex: v,
                        n: self.n,
                    });
                }
            }
        }
        for w in self.edges.windows(2) {
            assert!(w[0] < w[1], "edges out of order or duplicated");
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypergraph(n={}, r={}, m={})",
            self.n,
            self.r,
            self.edges.len()
        )
    }
}

/// Link of one vertex: an (r-1)-uniform hypergraph on the parent universe
/// with the owner excluded from every edge.
#[derive(Clone, Debug)]
pub struct VertexLink {
    pub owner: u32,
    pub edges: Hypergraph,
}

impl VertexLink {
    pub fn size(&self) -> usize {
        self.edges.edge_count()
    }
}

/// Symmetric irreflexive pair relation over the vertex set.
#[derive(Clone, Debug)]
pub struct CoOccurrenceGraph {
    n: u32,
    rows: Vec<FixedBitSet>,
}

impl CoOccurrenceGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn adjacent(&self, x: u32, y: u32) -> bool {
        x != y && self.rows[x as usize].contains(y as usize)
    }

    pub fn neighbors(&self, v: u32) -> &FixedBitSet {
        &self.rows[v as usize]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }
}

/// Intersection graph of a hypergraph's edges; vertex i is edge i.
#[derive(Clone, Debug)]
pub struct LineGraph {
    m: usize,
    rows: Vec<FixedBitSet>,
}

impl LineGraph {
    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.rows[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones(..)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = HypergraphBuilder::new(5, 3).unwrap();
        assert!(matches!(
            b.add_edge(&[0, 1]),
            Err(HypergraphError::WrongEdgeSize { .. })
        ));
        assert!(matches!(
            b.add_edge(&[0, 1, 5]),
            Err(HypergraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            b.add_edge(&[0, 1, 1]),
            Err(HypergraphError::WrongEdgeSize { .. })
        ));
    }

    #[test]
    fn duplicate_insertion_is_idempotent() {
        let mut b = HypergraphBuilder::new(5, 3).unwrap();
        assert!(b.add_edge(&[0, 1, 2]).unwrap());
        assert!(!b.add_edge(&[2, 0, 1]).unwrap());
        assert_eq!(b.build().edge_count(), 1);
    }

    #[test]
    fn edges_come_out_in_lex_order() {
        let h = Hypergraph::from_edges(5, 3, [[1, 2, 3], [0, 2, 3], [0, 1, 4], [0, 1, 2]]).unwrap();
        let listed: Vec<&[u32]> = h.edges().iter().map(|e| e.vertices()).collect();
        assert_eq!(
            listed,
            vec![&[0, 1, 2][..], &[0, 1, 4], &[0, 2, 3], &[1, 2, 3]]
        );
    }

    #[test]
    fn degree_on_fano_and_empty() {
        let fano = constructions::fano_plane();
        for v in 0..7 {
            assert_eq!(fano.degree(v).unwrap(), 3);
        }
        let empty = Hypergraph::empty(4, 3).unwrap();
        assert_eq!(empty.degree(2).unwrap(), 0);
        assert!(empty.degree(4).is_err());
    }

    #[test]
    fn degree_on_complete_3_graph() {
        let k53 = constructions::complete_r_graph(5, 3).unwrap();
        // every vertex lies in C(4,2) triples
        for v in 0..5 {
            assert_eq!(k53.degree(v).unwrap(), 6);
        }
    }

    #[test]
    fn restricted_degree_edge_cases() {
        let fano = constructions::fano_plane();
        let others: BTreeSet<u32> = (2..7).collect();
        // each pair of points lies on exactly one line
        assert_eq!(fano.restricted_degree(&[0, 1], &others).unwrap(), 1);

        // roots = a full edge, A = empty
        let h = Hypergraph::from_edges(4, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(
            h.restricted_degree(&[0, 1, 2], &BTreeSet::new()).unwrap(),
            1
        );
        assert_eq!(
            h.restricted_degree(&[0, 1, 3], &BTreeSet::new()).unwrap(),
            0
        );

        assert!(matches!(
            h.restricted_degree(&[0, 1, 2, 3], &BTreeSet::new()),
            Err(HypergraphError::TooManyRoots { .. })
        ));
        assert!(matches!(
            h.restricted_degree(&[0], &BTreeSet::from([0, 2])),
            Err(HypergraphError::RootsOverlapRestriction)
        ));
        assert!(matches!(
            h.restricted_degree(&[0, 0], &BTreeSet::new()),
            Err(HypergraphError::DuplicateRoots)
        ));
    }

    #[test]
    fn fano_links_are_pairwise_disjoint_perfect_matchings() {
        let fano = constructions::fano_plane();
        let link = fano.link(0).unwrap();
        assert_eq!(link.size(), 3);
        assert_eq!(link.edges.r(), 2);
        // the 3 lines through a point partition the remaining 6 points
        let mut seen = BTreeSet::new();
        for e in link.edges.edges() {
            for &v in e.vertices() {
                assert!(v != 0);
                assert!(seen.insert(v));
            }
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn isolated_vertex_has_empty_link() {
        let h = Hypergraph::from_edges(5, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.link(4).unwrap().size(), 0);
    }

    #[test]
    fn co_occurrence_of_single_edge_is_a_triangle() {
        let h = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        let co = h.co_occurrence();
        assert!(co.adjacent(0, 1) && co.adjacent(1, 2) && co.adjacent(0, 2));
        assert!(!co.adjacent(1, 1));
        assert_eq!(co.edge_count(), 3);
    }

    #[test]
    fn co_occurrence_of_fano_is_complete() {
        let co = constructions::fano_plane().co_occurrence();
        assert_eq!(co.edge_count(), 21);
    }

    #[test]
    fn line_graph_shapes() {
        let matching = constructions::matching_hypergraph(3, 3).unwrap();
        let lg = matching.line_graph();
        assert_eq!(lg.vertex_count(), 3);
        assert_eq!((0..3).map(|i| lg.degree(i)).max().unwrap(), 0);

        let fano_lg = constructions::fano_plane().line_graph();
        assert_eq!(fano_lg.vertex_count(), 7);
        for i in 0..7 {
            assert_eq!(fano_lg.degree(i), 6);
        }

        // all 3-sets through vertex 0 of [6]: a 10-vertex complete line graph
        let star = constructions::frankl_star(6, 3, 1).unwrap();
        let star_lg = star.line_graph();
        assert_eq!(star_lg.vertex_count(), 10);
        for i in 0..10 {
            assert_eq!(star_lg.degree(i), 9);
        }
    }

    #[test]
    fn induced_relabels_order_preserving() {
        let h = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        let sub = h.induced(&BTreeSet::from([0, 1]));
        assert_eq!(sub.n(), 2);
        assert!(sub.is_empty());

        let k5 = constructions::complete_r_graph(5, 3).unwrap();
        let sub = k5.induced(&BTreeSet::from([0, 2, 3, 4]));
        assert_eq!(sub.n(), 4);
        assert_eq!(sub.edge_count(), 4);
    }

    #[test]
    fn handshake_on_fano() {
        let fano = constructions::fano_plane();
        let total: usize = fano.degrees().iter().sum();
        assert_eq!(total, 3 * fano.edge_count());
    }
}
