//! Exact maximum matching by branch and bound.
//!
//! Branching follows the edges through a minimum positive-degree vertex:
//! either one of them is in the matching, or none is and the vertex can be
//! deleted. The bound combines the remaining edge count with a
//! vertex-capacity estimate; a greedy disjoint packing seeds the incumbent.
//! All tie-breaking is by index, so the returned witness is reproducible.

use fixedbitset::FixedBitSet;

use crate::hypergraph::Hypergraph;

/// Result of a matching computation. `size` is exact unless `capped` is
/// set, in which case a matching of size `cap + 1` was found and the search
/// stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingOutcome {
    pub size: usize,
    /// Edge indices of a maximum (or cap-reaching) matching, ascending.
    pub witness: Vec<usize>,
    pub capped: bool,
}

struct Solver<'a> {
    masks: &'a [FixedBitSet],
    r: usize,
    stop_at: Option<usize>,
    best: usize,
    best_witness: Vec<usize>,
}

pub fn matching_number(h: &Hypergraph, cap: Option<usize>) -> MatchingOutcome {
    let n = h.n() as usize;
    let masks: Vec<FixedBitSet> = h
        .edges()
        .iter()
        .map(|e| {
            let mut m = FixedBitSet::with_capacity(n);
            for &v in e.vertices() {
                m.insert(v as usize);
            }
            m
        })
        .collect();

    let mut solver = Solver {
        masks: &masks,
        r: h.r() as usize,
        stop_at: cap.map(|c| c + 1),
        best: 0,
        best_witness: Vec::new(),
    };

    // greedy packing: good incumbent, often already optimal
    let mut used = FixedBitSet::with_capacity(n);
    let mut greedy = Vec::new();
    for (i, m) in masks.iter().enumerate() {
        if used.is_disjoint(m) {
            used.union_with(m);
            greedy.push(i);
        }
        if let Some(stop) = solver.stop_at {
            if greedy.len() >= stop {
                greedy.truncate(stop);
                break;
            }
        }
    }
    solver.best = greedy.len();
    solver.best_witness = greedy;

    if !solver.reached_cap() {
        let active: Vec<usize> = (0..masks.len()).collect();
        let mut chosen = Vec::new();
        solver.branch(&active, &mut chosen);
    }

    let capped = solver.reached_cap();
    let mut witness = solver.best_witness;
    witness.sort_unstable();
    MatchingOutcome {
        size: solver.best,
        witness,
        capped,
    }
}

impl Solver<'_> {
    fn reached_cap(&self) -> bool {
        self.stop_at.is_some_and(|stop| self.best >= stop)
    }

    fn record(&mut self, chosen: &[usize]) {
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.best_witness = chosen.to_vec();
        }
    }

    fn branch(&mut self, active: &[usize], chosen: &mut Vec<usize>) {
        if self.reached_cap() {
            return;
        }
        self.record(chosen);
        if active.is_empty() {
            return;
        }
        // capacity bound: disjoint edges cannot exceed live vertices / r
        let mut live = FixedBitSet::with_capacity(self.masks[active[0]].len());
        for &i in active {
            live.union_with(&self.masks[i]);
        }
        let cap_bound = (live.count_ones(..) / self.r).min(active.len());
        if chosen.len() + cap_bound <= self.best {
            return;
        }

        // min positive-degree vertex, smallest id on ties
        let mut deg = vec![0usize; live.len()];
        for &i in active {
            for v in self.masks[i].ones() {
                deg[v] += 1;
            }
        }
        let v = deg
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .min_by_key(|&(v, &d)| (d, v))
            .map(|(v, _)| v)
            .expect("active edges exist");

        // take one of the edges through v
        let through: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&i| self.masks[i].contains(v))
            .collect();
        for &e in &through {
            let next: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&i| self.masks[i].is_disjoint(&self.masks[e]))
                .collect();
            chosen.push(e);
            self.branch(&next, chosen);
            chosen.pop();
            if self.reached_cap() {
                return;
            }
        }

        // or delete v entirely
        let without: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&i| !self.masks[i].contains(v))
            .collect();
        self.branch(&without, chosen);
    }
}

/// Decision variant over u64 edge masks (vertex universe of at most 64):
/// is there a set of `want` pairwise disjoint edges? Used in the search
/// inner loop where allocation-free checks matter.
pub fn has_disjoint_edges(masks: &[u64], r: usize, want: usize) -> bool {
    if want == 0 {
        return true;
    }
    if masks.len() < want {
        return false;
    }
    fn go(masks: &[u64], r: usize, want: usize, start: usize, used: u64, have: usize) -> bool {
        if have == want {
            return true;
        }
        let remaining_vertices = 64 - used.count_ones() as usize;
        if have + (remaining_vertices / r).min(masks.len() - start) < want {
            return false;
        }
        for i in start..masks.len() {
            if masks[i] & used == 0 && go(masks, r, want, i + 1, used | masks[i], have + 1) {
                return true;
            }
        }
        false
    }
    go(masks, r, want, 0, 0, 0)
}
