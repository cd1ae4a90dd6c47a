//! Embedding detection for the 7-point plane.
//!
//! Backtracks over images for the 7 points in a fixed order, pruning by
//! host degree (every point lies on 3 lines), pairwise co-occurrence (every
//! pair of points shares a line) and by checking each line as soon as its
//! three images are assigned. The incremental variant pins one line to a
//! given host edge; the plane's line-transitive symmetry makes that
//! restriction lossless.

use crate::detect::{DetectError, Witness};
use crate::hypergraph::{CoOccurrenceGraph, Hypergraph};

/// Lines of the plane over points 0..7, in the order used by edge maps.
pub const FANO_LINES: [[u32; 3]; 7] = [
    [0, 1, 2],
    [2, 3, 4],
    [0, 4, 5],
    [0, 3, 6],
    [1, 4, 6],
    [2, 5, 6],
    [1, 3, 5],
];

// lines fully contained in the first k+1 points, newly complete at point k
const COMPLETED_AT: [&[usize]; 7] = [&[], &[], &[0], &[], &[1], &[2, 6], &[3, 4, 5]];

pub fn contains_fano(h: &Hypergraph) -> Result<Option<Witness>, DetectError> {
    if h.r() != 3 {
        return Err(DetectError::UniformityMismatch {
            expected: 3,
            got: h.r(),
        });
    }
    if h.n() < 7 || h.edge_count() < 7 {
        return Ok(None);
    }
    let co = h.co_occurrence();
    let degrees = h.degrees();
    let mut images = Vec::with_capacity(7);
    let mut used = vec![false; h.n() as usize];
    Ok(embed(h, &co, &degrees, &mut images, &mut used)
        .map(|vertex_map| witness_from_map(h, vertex_map)))
}

/// Embedding that must use `forced` (an edge index of `h`) as the image of
/// some line. Used by the search engine: a hypergraph that was free stays
/// free unless the new edge participates.
pub fn contains_fano_using(h: &Hypergraph, forced: usize) -> Result<Option<Witness>, DetectError> {
    if h.r() != 3 {
        return Err(DetectError::UniformityMismatch {
            expected: 3,
            got: h.r(),
        });
    }
    if h.n() < 7 || h.edge_count() < 7 {
        return Ok(None);
    }
    let co = h.co_occurrence();
    let degrees = h.degrees();
    let forced_vs = h.edges()[forced].vertices().to_vec();
    // line 0 is {0,1,2}; try the six assignments of the forced edge onto it
    let orders = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for ord in orders {
        let mut images = vec![forced_vs[ord[0]], forced_vs[ord[1]], forced_vs[ord[2]]];
        if images.iter().any(|&v| degrees[v as usize] < 3) {
            continue;
        }
        let mut used = vec![false; h.n() as usize];
        for &v in &images {
            used[v as usize] = true;
        }
        if let Some(map) = embed(h, &co, &degrees, &mut images, &mut used) {
            return Ok(Some(witness_from_map(h, map)));
        }
    }
    Ok(None)
}

fn witness_from_map(h: &Hypergraph, vertex_map: Vec<u32>) -> Witness {
    let edge_map = FANO_LINES
        .iter()
        .map(|line| {
            let mapped: Vec<u32> = line.iter().map(|&p| vertex_map[p as usize]).collect();
            h.edges()
                .iter()
                .position(|e| e.contains_all(&mapped))
                .expect("embedded line is an edge")
        })
        .collect();
    Witness::Embedding {
        vertex_map,
        edge_map,
    }
}

fn embed(
    h: &Hypergraph,
    co: &CoOccurrenceGraph,
    degrees: &[usize],
    images: &mut Vec<u32>,
    used: &mut [bool],
) -> Option<Vec<u32>> {
    let k = images.len();
    if k > 0 && !lines_ok(h, images, k - 1) {
        return None;
    }
    if k == 7 {
        return Some(images.clone());
    }
    for v in 0..h.n() {
        if used[v as usize] || degrees[v as usize] < 3 {
            continue;
        }
        // every pair of points shares a line, so images must pairwise co-occur
        if !images.iter().all(|&u| co.adjacent(u, v)) {
            continue;
        }
        images.push(v);
        used[v as usize] = true;
        if let Some(found) = embed(h, co, degrees, images, used) {
            return Some(found);
        }
        images.pop();
        used[v as usize] = false;
    }
    None
}

fn lines_ok(h: &Hypergraph, images: &[u32], newest: usize) -> bool {
    COMPLETED_AT[newest].iter().all(|&li| {
        let line = FANO_LINES[li];
        let mapped = [
            images[line[0] as usize],
            images[line[1] as usize],
            images[line[2] as usize],
        ];
        h.contains_edge(&mapped)
    })
}
