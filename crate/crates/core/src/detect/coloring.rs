//! Greedy proper edge coloring.
//!
//! Colors the edges in lexicographic order, giving each the lowest color
//! unused among earlier intersecting edges, which is greedy vertex coloring
//! of the line graph. Since a line-graph vertex has degree at most
//! r(Δ - 1), the coloring never needs more than r(Δ - 1) + 1 colors.

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    /// Color of each edge, parallel to the edge list.
    pub colors: Vec<usize>,
    pub color_count: usize,
    /// r(Δ - 1) + 1, the guaranteed ceiling (0 for an edgeless input).
    pub bound: usize,
}

pub fn greedy_edge_coloring(h: &Hypergraph) -> EdgeColoring {
    let m = h.edge_count();
    if m == 0 {
        return EdgeColoring {
            colors: Vec::new(),
            color_count: 0,
            bound: 0,
        };
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n() as usize];
    let mut colors = vec![usize::MAX; m];
    let mut color_count = 0;
    let mut taken = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        taken.clear();
        taken.resize(color_count + 1, false);
        for &v in e.vertices() {
            for &j in &incident[v as usize] {
                taken[colors[j]] = true;
            }
        }
        let c = taken
            .iter()
            .position(|&t| !t)
            .expect("one spare slot is kept");
        colors[i] = c;
        color_count = color_count.max(c + 1);
        for &v in e.vertices() {
            incident[v as usize].push(i);
        }
    }
    let bound = h.r() as usize * (h.max_degree() - 1) + 1;
    // a line-graph vertex has at most r(max_degree - 1) neighbours, so the
    // greedy color index can never reach the bound
    debug_assert!(color_count <= bound);
    EdgeColoring {
        colors,
        color_count,
        bound,
    }
}

impl EdgeColoring {
    /// Equal colors must mean disjoint edges.
    pub fn is_proper(&self, h: &Hypergraph) -> bool {
        let edges = h.edges();
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if self.colors[i] == self.colors[j] && edges[i].intersects(&edges[j]) {
                    return false;
                }
            }
        }
        true
    }
}
