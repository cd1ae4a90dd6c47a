//! Deterministic generators for the named extremal hypergraphs.
//!
//! Partitioned constructions number their vertices part by part: the
//! special part (the bounded side) takes `0..s`, then the remaining parts
//! follow consecutively. Balanced splits give the extra vertices to the
//! lower-indexed parts. Both conventions exist so that repeated runs emit
//! byte-identical `.hg` files.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::formulas::balanced_parts;
use crate::hypergraph::{Hypergraph, HypergraphBuilder, HypergraphError};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("unknown construction `{0}`")]
    Unknown(String),
    #[error("construction `{name}` needs parameter --{param}")]
    MissingParam {
        name: &'static str,
        param: &'static str,
    },
    #[error("construction `{name}`: {msg}")]
    Domain { name: &'static str, msg: String },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A hypergraph together with an ordered partition of its vertex set.
#[derive(Debug, Clone)]
pub struct PartitionedHypergraph {
    pub hypergraph: Hypergraph,
    pub parts: Vec<Vec<u32>>,
}

impl PartitionedHypergraph {
    pub fn part_sizes(&self) -> Vec<u64> {
        self.parts.iter().map(|p| p.len() as u64).collect()
    }

    /// Checks that the parts are disjoint and cover `0..n`.
    pub fn validate(&self) -> Result<(), ConstructError> {
        let n = self.hypergraph.n() as usize;
        let mut seen = vec![false; n];
        for part in &self.parts {
            for &v in part {
                if (v as usize) >= n || seen[v as usize] {
                    return Err(ConstructError::Domain {
                        name: "partition",
                        msg: format!("vertex {v} missing or repeated in partition"),
                    });
                }
                seen[v as usize] = true;
            }
        }
        if seen.iter().all(|&b| b) {
            Ok(())
        } else {
            Err(ConstructError::Domain {
                name: "partition",
                msg: "parts do not cover the vertex set".into(),
            })
        }
    }
}

fn consecutive_parts(sizes: &[u64], offset: u32) -> Vec<Vec<u32>> {
    let mut parts = Vec::with_capacity(sizes.len());
    let mut next = offset;
    for &sz in sizes {
        parts.push((next..next + sz as u32).collect());
        next += sz as u32;
    }
    parts
}

fn checked_n(name: &'static str, n: u64) -> Result<u32, ConstructError> {
    u32::try_from(n).map_err(|_| ConstructError::Domain {
        name,
        msg: format!("n = {n} too large"),
    })
}

/// All r-sets taking at most one vertex from each part.
fn crossing_edges(
    b: &mut HypergraphBuilder,
    parts: &[Vec<u32>],
    r: usize,
) -> Result<(), ConstructError> {
    let nonempty: Vec<&Vec<u32>> = parts.iter().filter(|p| !p.is_empty()).collect();
    for chosen in nonempty.iter().combinations(r) {
        for combo in chosen
            .iter()
            .map(|p| p.iter().copied())
            .multi_cartesian_product()
        {
            b.add_edge(&combo)?;
        }
    }
    Ok(())
}

/// Balanced complete l-partite graph on n vertices.
pub fn turan_graph(n: u64, l: u64) -> Result<PartitionedHypergraph, ConstructError> {
    if l == 0 && n > 0 {
        return Err(ConstructError::Domain {
            name: "turan",
            msg: "l = 0 with n > 0".into(),
        });
    }
    let nn = checked_n("turan", n)?;
    let parts = if l == 0 {
        Vec::new()
    } else {
        consecutive_parts(&balanced_parts(n, l), 0)
    };
    let mut b = HypergraphBuilder::new(nn, 2)?;
    crossing_edges(&mut b, &parts, 2)?;
    Ok(PartitionedHypergraph {
        hypergraph: b.build(),
        parts,
    })
}

/// All crossing r-sets of the balanced l-partition of the vertex set.
pub fn generalized_turan(n: u64, l: u64, r: u64) -> Result<PartitionedHypergraph, ConstructError> {
    if r < 2 || l < r {
        return Err(ConstructError::Domain {
            name: "gen-turan",
            msg: format!("needs l >= r >= 2, got l = {l}, r = {r}"),
        });
    }
    let nn = checked_n("gen-turan", n)?;
    let parts = consecutive_parts(&balanced_parts(n, l), 0);
    let mut b = HypergraphBuilder::new(nn, r as u32)?;
    crossing_edges(&mut b, &parts, r as usize)?;
    Ok(PartitionedHypergraph {
        hypergraph: b.build(),
        parts,
    })
}

/// Complete l-partite graph with one part of size n-s; the other l-1 parts
/// split an s-set the way a balanced (l-1)-partition would.
pub fn alon_frankl_graph(n: u64, l: u64, s: u64) -> Result<PartitionedHypergraph, ConstructError> {
    if l < 2 {
        return Err(ConstructError::Domain {
            name: "alon-frankl",
            msg: "l must be at least 2".into(),
        });
    }
    if n < s {
        return Err(ConstructError::Domain {
            name: "alon-frankl",
            msg: format!("n = {n} < s = {s}"),
        });
    }
    let nn = checked_n("alon-frankl", n)?;
    let mut parts = consecutive_parts(&balanced_parts(s, l - 1), 0);
    parts.push((s as u32..nn).collect());
    let mut b = HypergraphBuilder::new(nn, 2)?;
    crossing_edges(&mut b, &parts, 2)?;
    Ok(PartitionedHypergraph {
        hypergraph: b.build(),
        parts,
    })
}

/// The bounded-matching extremal r-graph: an s-set V_0 plus a balanced
/// (l-1)-partition of the rest; every edge takes exactly one vertex of V_0
/// and a crossing (r-1)-set of the other parts, so each V_0 link is the
/// full generalized Turán (r-1)-graph.
pub fn main_extremal(
    n: u64,
    l: u64,
    s: u64,
    r: u64,
) -> Result<PartitionedHypergraph, ConstructError> {
    if r < 3 || l < r || s == 0 || n < s + l {
        return Err(ConstructError::Domain {
            name: "main-extremal",
            msg: format!(
                "needs l >= r >= 3, s >= 1, n >= s + l; got n = {n}, l = {l}, s = {s}, r = {r}"
            ),
        });
    }
    let nn = checked_n("main-extremal", n)?;
    let v0: Vec<u32> = (0..s as u32).collect();
    let rest = consecutive_parts(&balanced_parts(n - s, l - 1), s as u32);
    let mut b = HypergraphBuilder::new(nn, r as u32)?;
    let nonempty: Vec<&Vec<u32>> = rest.iter().filter(|p| !p.is_empty()).collect();
    for chosen in nonempty.iter().combinations(r as usize - 1) {
        for combo in chosen
            .iter()
            .map(|p| p.iter().copied())
            .multi_cartesian_product()
        {
            for &v in &v0 {
                let mut edge = combo.clone();
                edge.push(v);
                b.add_edge(&edge)?;
            }
        }
    }
    let mut parts = vec![v0];
    parts.extend(rest);
    Ok(PartitionedHypergraph {
        hypergraph: b.build(),
        parts,
    })
}

/// The 7-point projective plane of order 2 as a 3-graph.
pub fn fano_plane() -> Hypergraph {
    let lines = [
        [0, 1, 2],
        [2, 3, 4],
        [4, 5, 0],
        [0, 6, 3],
        [1, 6, 4],
        [2, 6, 5],
        [1, 3, 5],
    ];
    Hypergraph::from_edges(7, 3, lines).expect("the seven lines are valid")
}

/// The Fano-free extremal 3-graph: every triple with exactly one or
/// exactly two vertices in a fixed s-set X.
pub fn fano_extremal(n: u64, s: u64) -> Result<PartitionedHypergraph, ConstructError> {
    if n <= s {
        return Err(ConstructError::Domain {
            name: "fano-extremal",
            msg: format!("needs n > s, got n = {n}, s = {s}"),
        });
    }
    let nn = checked_n("fano-extremal", n)?;
    let x_end = s as u32;
    let mut b = HypergraphBuilder::new(nn, 3)?;
    for x1 in 0..x_end {
        for x2 in (x1 + 1)..x_end {
            for y in x_end..nn {
                b.add_edge(&[x1, x2, y])?;
            }
        }
    }
    for x in 0..x_end {
        for y1 in x_end..nn {
            for y2 in (y1 + 1)..nn {
                b.add_edge(&[x, y1, y2])?;
            }
        }
    }
    let parts = vec![(0..x_end).collect(), (x_end..nn).collect()];
    Ok(PartitionedHypergraph {
        hypergraph: b.build(),
        parts,
    })
}

/// K_{l+1} with every edge enlarged by r-2 fresh vertices, all fresh
/// vertices distinct. The object is well formed for any l >= 1, including
/// the triangle expansion at l = 2 < r.
pub fn expansion(l: u64, r: u64) -> Result<Hypergraph, ConstructError> {
    if r < 2 || l < 1 {
        return Err(ConstructError::Domain {
            name: "expansion",
            msg: format!("needs l >= 1 and r >= 2, got l = {l}, r = {r}"),
        });
    }
    let core = l as u32 + 1;
    let pairs = (l + 1) * l / 2;
    let n = checked_n("expansion", (l + 1) + pairs * (r - 2))?;
    let mut b = HypergraphBuilder::new(n, r as u32)?;
    let mut fresh = core;
    for i in 0..core {
        for j in (i + 1)..core {
            let mut edge = vec![i, j];
            for _ in 0..(r - 2) {
                edge.push(fresh);
                fresh += 1;
            }
            b.add_edge(&edge)?;
        }
    }
    Ok(b.build())
}

/// All r-sets of the vertex set meeting the fixed s-set {0, ..., s-1}.
pub fn frankl_star(n: u64, r: u64, s: u64) -> Result<Hypergraph, ConstructError> {
    if n < r || s > n {
        return Err(ConstructError::Domain {
            name: "frankl-star",
            msg: format!("needs n >= r and s <= n, got n = {n}, r = {r}, s = {s}"),
        });
    }
    let nn = checked_n("frankl-star", n)?;
    let mut b = HypergraphBuilder::new(nn, r as u32)?;
    for combo in (0..nn).combinations(r as usize) {
        if combo[0] < s as u32 {
            b.add_edge(&combo)?;
        }
    }
    Ok(b.build())
}

/// k pairwise disjoint r-edges on exactly k*r vertices.
pub fn matching_hypergraph(k: u64, r: u64) -> Result<Hypergraph, ConstructError> {
    if r == 0 {
        return Err(ConstructError::Domain {
            name: "matching",
            msg: "r must be positive".into(),
        });
    }
    let nn = checked_n("matching", k * r)?;
    let mut b = HypergraphBuilder::new(nn, r as u32)?;
    for i in 0..k as u32 {
        let edge: Vec<u32> = (i * r as u32..(i + 1) * r as u32).collect();
        b.add_edge(&edge)?;
    }
    Ok(b.build())
}

/// All C(n, r) edges.
pub fn complete_r_graph(n: u64, r: u64) -> Result<Hypergraph, ConstructError> {
    if r == 0 || n < r {
        return Err(ConstructError::Domain {
            name: "complete",
            msg: format!("needs n >= r >= 1, got n = {n}, r = {r}"),
        });
    }
    let nn = checked_n("complete", n)?;
    let mut b = HypergraphBuilder::new(nn, r as u32)?;
    for combo in (0..nn).combinations(r as usize) {
        b.add_edge(&combo)?;
    }
    Ok(b.build())
}

/// The main extremal construction plus one extra edge holding r-1 vertices
/// of V_0 and the first vertex of V_1. The extra edge is the
/// lexicographically least valid choice; any other choice is isomorphic.
pub fn conjecture_witness(
    n: u64,
    l: u64,
    s: u64,
    r: u64,
) -> Result<PartitionedHypergraph, ConstructError> {
    if s + 1 < l {
        return Err(ConstructError::Domain {
            name: "conjecture-witness",
            msg: format!("needs s >= l - 1, got l = {l}, s = {s}"),
        });
    }
    if s + 1 < r {
        return Err(ConstructError::Domain {
            name: "conjecture-witness",
            msg: format!("the extra edge needs s >= r - 1, got s = {s}, r = {r}"),
        });
    }
    let base = main_extremal(n, l, s, r).map_err(|e| match e {
        ConstructError::Domain { msg, .. } => ConstructError::Domain {
            name: "conjecture-witness",
            msg,
        },
        other => other,
    })?;
    let mut extra: Vec<u32> = (0..r as u32 - 1).collect();
    extra.push(s as u32);
    let mut b = HypergraphBuilder::new(base.hypergraph.n(), base.hypergraph.r())?;
    for e in base.hypergraph.edges() {
        b.add_edge(e.vertices())?;
    }
    if !b.add_edge(&extra)? {
        return Err(ConstructError::Domain {
            name: "conjecture-witness",
            msg: "extra edge already present".into(),
        });
    }
    Ok(PartitionedHypergraph {
        hypergraph: b.build(),
        parts: base.parts,
    })
}

/// Parameter bundle for registry-driven generation.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct ConstructionParams {
    pub n: Option<u64>,
    pub l: Option<u64>,
    pub s: Option<u64>,
    pub r: Option<u64>,
}

impl ConstructionParams {
    fn need(&self, name: &'static str, param: &'static str) -> Result<u64, ConstructError> {
        let v = match param {
            "n" => self.n,
            "l" => self.l,
            "s" => self.s,
            "r" => self.r,
            _ => unreachable!(),
        };
        v.ok_or(ConstructError::MissingParam { name, param })
    }
}

/// Output of a registered construction; `parts` is present for the
/// partitioned kinds and becomes the `#parts` sidecar on disk.
#[derive(Debug, Clone)]
pub struct Generated {
    pub hypergraph: Hypergraph,
    pub parts: Option<Vec<Vec<u32>>>,
}

impl From<PartitionedHypergraph> for Generated {
    fn from(p: PartitionedHypergraph) -> Generated {
        Generated {
            hypergraph: p.hypergraph,
            parts: Some(p.parts),
        }
    }
}

impl From<Hypergraph> for Generated {
    fn from(h: Hypergraph) -> Generated {
        Generated {
            hypergraph: h,
            parts: None,
        }
    }
}

/// One named generator, selectable at runtime.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn generate(&self, p: &ConstructionParams) -> Result<Generated, ConstructError>;
}

macro_rules! construction_strategy {
    ($ty:ident, $name:literal, |$p:ident| $body:expr) => {
        struct $ty;
        impl Construction for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn generate(&self, $p: &ConstructionParams) -> Result<Generated, ConstructError> {
                $body
            }
        }
    };
}

construction_strategy!(Turan, "turan", |p| {
    Ok(turan_graph(p.need("turan", "n")?, p.need("turan", "l")?)?.into())
});
construction_strategy!(GenTuran, "gen-turan", |p| {
    Ok(generalized_turan(
        p.need("gen-turan", "n")?,
        p.need("gen-turan", "l")?,
        p.need("gen-turan", "r")?,
    )?
    .into())
});
construction_strategy!(AlonFranklGraph, "alon-frankl", |p| {
    Ok(alon_frankl_graph(
        p.need("alon-frankl", "n")?,
        p.need("alon-frankl", "l")?,
        p.need("alon-frankl", "s")?,
    )?
    .into())
});
construction_strategy!(MainExtremal, "main-extremal", |p| {
    Ok(main_extremal(
        p.need("main-extremal", "n")?,
        p.need("main-extremal", "l")?,
        p.need("main-extremal", "s")?,
        p.need("main-extremal", "r")?,
    )?
    .into())
});
construction_strategy!(FanoPlane, "fano", |_p| Ok(fano_plane().into()));
construction_strategy!(FanoExtremal, "fano-extremal", |p| {
    Ok(fano_extremal(p.need("fano-extremal", "n")?, p.need("fano-extremal", "s")?)?.into())
});
construction_strategy!(Expansion, "expansion", |p| {
    Ok(expansion(p.need("expansion", "l")?, p.need("expansion", "r")?)?.into())
});
construction_strategy!(FranklStar, "frankl-star", |p| {
    Ok(frankl_star(
        p.need("frankl-star", "n")?,
        p.need("frankl-star", "r")?,
        p.need("frankl-star", "s")?,
    )?
    .into())
});
construction_strategy!(MatchingKind, "matching", |p| {
    Ok(matching_hypergraph(p.need("matching", "s")?, p.need("matching", "r")?)?.into())
});
construction_strategy!(CompleteKind, "complete", |p| {
    Ok(complete_r_graph(p.need("complete", "n")?, p.need("complete", "r")?)?.into())
});
construction_strategy!(ConjectureWitness, "conjecture-witness", |p| {
    Ok(conjecture_witness(
        p.need("conjecture-witness", "n")?,
        p.need("conjecture-witness", "l")?,
        p.need("conjecture-witness", "s")?,
        p.need("conjecture-witness", "r")?,
    )?
    .into())
});

/// Name-keyed registry of every construction.
pub struct ConstructionRegistry {
    by_name: BTreeMap<&'static str, Box<dyn Construction>>,
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        let mut by_name: BTreeMap<&'static str, Box<dyn Construction>> = BTreeMap::new();
        for c in [
            Box::new(Turan) as Box<dyn Construction>,
            Box::new(GenTuran),
            Box::new(AlonFranklGraph),
            Box::new(MainExtremal),
            Box::new(FanoPlane),
            Box::new(FanoExtremal),
            Box::new(Expansion),
            Box::new(FranklStar),
            Box::new(MatchingKind),
            Box::new(CompleteKind),
            Box::new(ConjectureWitness),
        ] {
            by_name.insert(c.name(), c);
        }
        ConstructionRegistry { by_name }
    }
}

impl ConstructionRegistry {
    pub fn get(&self, name: &str) -> Result<&dyn Construction, ConstructError> {
        self.by_name
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| ConstructError::Unknown(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.by_name.keys().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas;
    use num_bigint::BigUint;
    use std::collections::BTreeSet;

    fn count(h: &Hypergraph) -> BigUint {
        BigUint::from(h.edge_count())
    }

    #[test]
    fn turan_small_cases() {
        let c4 = turan_graph(4, 2).unwrap();
        assert_eq!(c4.hypergraph.edge_count(), 4);
        let k23 = turan_graph(5, 2).unwrap();
        assert_eq!(k23.hypergraph.edge_count(), 6);
        assert_eq!(k23.parts[0].len(), 3);
        let triangle = turan_graph(3, 3).unwrap();
        assert_eq!(triangle.hypergraph.edge_count(), 3);
        assert!(turan_graph(3, 0).is_err());
        assert_eq!(turan_graph(0, 0).unwrap().hypergraph.edge_count(), 0);
    }

    #[test]
    fn generalized_turan_small_cases() {
        assert_eq!(
            generalized_turan(6, 3, 3).unwrap().hypergraph.edge_count(),
            8
        );
        let t733 = generalized_turan(7, 3, 3).unwrap();
        assert_eq!(t733.part_sizes(), vec![3, 2, 2]);
        assert_eq!(t733.hypergraph.edge_count(), 12);
        assert!(generalized_turan(6, 2, 3).is_err());
    }

    #[test]
    fn generalized_turan_specializes_to_turan_at_r2() {
        for n in 0..=12 {
            for l in 2..=5 {
                let a = generalized_turan(n, l, 2).unwrap().hypergraph;
                let b = turan_graph(n, l).unwrap().hypergraph;
                assert_eq!(a, b, "n = {n}, l = {l}");
            }
        }
    }

    #[test]
    fn alon_frankl_graph_cases() {
        let star = alon_frankl_graph(5, 2, 1).unwrap();
        assert_eq!(star.hypergraph.edge_count(), 4);
        assert_eq!(star.hypergraph.degree(0).unwrap(), 4);

        let g632 = alon_frankl_graph(6, 3, 2).unwrap();
        assert_eq!(g632.hypergraph.edge_count(), 9);
        assert_eq!(g632.part_sizes(), vec![1, 1, 4]);

        assert_eq!(
            alon_frankl_graph(7, 2, 0).unwrap().hypergraph.edge_count(),
            0
        );
        assert!(alon_frankl_graph(3, 2, 5).is_err());
    }

    #[test]
    fn main_extremal_counts_match_formula_examples() {
        assert_eq!(
            main_extremal(7, 3, 1, 3).unwrap().hypergraph.edge_count(),
            9
        );
        assert_eq!(
            main_extremal(12, 3, 2, 3).unwrap().hypergraph.edge_count(),
            50
        );
        assert_eq!(
            main_extremal(8, 4, 1, 4).unwrap().hypergraph.edge_count(),
            12
        );
        assert!(main_extremal(3, 3, 1, 3).is_err());
    }

    #[test]
    fn main_extremal_edge_structure() {
        let g = main_extremal(12, 3, 2, 3).unwrap();
        g.validate().unwrap();
        let v0: BTreeSet<u32> = g.parts[0].iter().copied().collect();
        for e in g.hypergraph.edges() {
            assert_eq!(e.vertices().iter().filter(|v| v0.contains(v)).count(), 1);
            for part in &g.parts[1..] {
                let ps: BTreeSet<u32> = part.iter().copied().collect();
                assert!(e.vertices().iter().filter(|v| ps.contains(v)).count() <= 1);
            }
        }
        // the rest of the vertex set spans no edge
        let u: BTreeSet<u32> = (2..12).collect();
        assert!(g.hypergraph.induced(&u).is_empty());
    }

    #[test]
    fn main_extremal_links_are_generalized_turan() {
        let g = main_extremal(10, 3, 2, 3).unwrap();
        let u: BTreeSet<u32> = (2..10).collect();
        let expected = generalized_turan(8, 2, 2).unwrap().hypergraph;
        for &v in &g.parts[0] {
            let link = g.hypergraph.link(v).unwrap();
            assert_eq!(link.size(), g.hypergraph.degree(v).unwrap());
            assert_eq!(link.edges.induced(&u), expected);
            assert_eq!(
                g.hypergraph.restricted_degree(&[v], &u).unwrap(),
                16 // t_2(8, 2)
            );
        }
    }

    #[test]
    fn fano_plane_structure() {
        let fano = fano_plane();
        assert_eq!(fano.n(), 7);
        assert_eq!(fano.edge_count(), 7);
        for v in 0..7 {
            assert_eq!(fano.degree(v).unwrap(), 3);
        }
        // every pair covered exactly once
        let mut pair_cover = BTreeMap::new();
        for e in fano.edges() {
            let vs = e.vertices();
            for i in 0..3 {
                for j in (i + 1)..3 {
                    *pair_cover.entry((vs[i], vs[j])).or_insert(0) += 1;
                }
            }
        }
        assert_eq!(pair_cover.len(), 21);
        assert!(pair_cover.values().all(|&c| c == 1));
        // any two lines meet in exactly one point
        for (i, a) in fano.edges().iter().enumerate() {
            for b in fano.edges().iter().skip(i + 1) {
                assert_eq!(a.intersection_size(b), 1);
            }
        }
    }

    #[test]
    fn fano_extremal_cases() {
        let f = fano_extremal(10, 2).unwrap();
        assert_eq!(f.hypergraph.edge_count(), 64);
        assert_eq!(fano_extremal(9, 0).unwrap().hypergraph.edge_count(), 0);
        assert_eq!(fano_extremal(5, 1).unwrap().hypergraph.edge_count(), 6);
        assert!(fano_extremal(3, 3).is_err());
        // Y spans no edge
        let y: BTreeSet<u32> = (2..10).collect();
        assert!(f.hypergraph.induced(&y).is_empty());
    }

    #[test]
    fn expansion_cases() {
        let h = expansion(2, 3).unwrap();
        assert_eq!((h.n(), h.edge_count()), (6, 3));
        let h = expansion(3, 3).unwrap();
        assert_eq!((h.n(), h.edge_count()), (10, 6));
        for l in 2..=5 {
            let h = expansion(l, 2).unwrap();
            assert_eq!(h.n() as u64, l + 1);
            assert_eq!(h.edge_count() as u64, (l + 1) * l / 2);
        }
        assert!(expansion(0, 3).is_err());
        assert!(expansion(3, 1).is_err());
    }

    #[test]
    fn frankl_star_cases() {
        assert_eq!(frankl_star(6, 3, 1).unwrap().edge_count(), 10);
        assert_eq!(frankl_star(6, 3, 0).unwrap().edge_count(), 0);
        assert_eq!(frankl_star(5, 3, 5).unwrap().edge_count(), 10);
        assert!(frankl_star(2, 3, 1).is_err());
    }

    #[test]
    fn matching_and_complete() {
        let m = matching_hypergraph(3, 3).unwrap();
        assert_eq!((m.n(), m.edge_count()), (9, 3));
        assert_eq!(matching_hypergraph(0, 3).unwrap().edge_count(), 0);
        assert_eq!(complete_r_graph(5, 3).unwrap().edge_count(), 10);
        assert!(complete_r_graph(2, 3).is_err());
    }

    #[test]
    fn conjecture_witness_counts() {
        let w = conjecture_witness(12, 3, 2, 3).unwrap();
        assert_eq!(w.hypergraph.edge_count(), 51);
        assert!(w.hypergraph.contains_edge(&[0, 1, 2]));
        assert!(conjecture_witness(12, 3, 1, 3).is_err());
    }

    #[test]
    fn counts_agree_with_formulas_on_a_spot_grid() {
        for n in 4..=16u64 {
            for l in 2..=5u64 {
                assert_eq!(
                    count(&turan_graph(n, l).unwrap().hypergraph),
                    formulas::t(n, l).unwrap()
                );
                for s in 0..=3u64.min(n) {
                    assert_eq!(
                        count(&alon_frankl_graph(n, l, s).unwrap().hypergraph),
                        formulas::g(n, l, s).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn balanced_parts_differ_by_at_most_one() {
        for n in 0..30 {
            for l in 1..=6 {
                let sizes = balanced_parts(n, l);
                let max = *sizes.iter().max().unwrap();
                let min = *sizes.iter().min().unwrap();
                assert!(max - min <= 1);
                assert_eq!(sizes.iter().sum::<u64>(), n);
            }
        }
    }

    #[test]
    fn registry_knows_all_kinds() {
        let reg = ConstructionRegistry::default();
        let names: Vec<&str> = reg.names().collect();
        assert_eq!(names.len(), 11);
        let fano = reg
            .get("fano")
            .unwrap()
            .generate(&ConstructionParams::default())
            .unwrap();
        assert_eq!(fano.hypergraph.edge_count(), 7);
        assert!(fano.parts.is_none());
        let p = ConstructionParams {
            n: Some(12),
            l: Some(3),
            s: Some(2),
            r: Some(3),
        };
        let g = reg.get("main-extremal").unwrap().generate(&p).unwrap();
        assert_eq!(g.hypergraph.edge_count(), 50);
        assert!(g.parts.is_some());
        assert!(reg.get("bogus").is_err());
        assert!(matches!(
            reg.get("turan")
                .unwrap()
                .generate(&ConstructionParams::default()),
            Err(ConstructError::MissingParam {
                name: "turan",
                param: "n"
            })
        ));
    }
}
