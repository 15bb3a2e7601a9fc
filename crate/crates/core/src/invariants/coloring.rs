//! Exact chromatic number by DSATUR branch and bound.
//!
//! The branching vertex is the uncoloured vertex of maximum saturation, then
//! maximum degree into the uncoloured part, then lowest index. The search is
//! seeded with a clique lower bound and a greedy DSATUR upper bound.

use serde::{Deserialize, Serialize};

use super::clique::{full_mask, maximum_clique_in};
use crate::error::{ensure_size, Error, Result};
use crate::graph::Graph;

pub const CHROMATIC_MAX_N: usize = 64;

/// Search-node budget used by [`chromatic_number`].
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiBounds {
    pub lower: usize,
    pub upper: usize,
}

impl ChiBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    colour: Vec<usize>,
    // count[u * 64 + c]: neighbours of u currently coloured c
    count: Vec<u8>,
    sat: Vec<u64>,
    uncoloured: u64,
    best: usize,
    best_colouring: Vec<usize>,
    lower: usize,
    nodes: u64,
    limit: u64,
    aborted: bool,
}

impl Search<'_> {
    fn pick(&self) -> usize {
        let mut best_v = usize::MAX;
        let mut key = (0u32, 0u32);
        let mut rest = self.uncoloured;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let k = (self.sat[v].count_ones(), (self.adj[v] & self.uncoloured).count_ones());
            if best_v == usize::MAX || k > key {
                best_v = v;
                key = k;
            }
        }
        best_v
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured &= !(1 << v);
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let slot = &mut self.count[u * 64 + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = usize::MAX;
        self.uncoloured |= 1 << v;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let slot = &mut self.count[u * 64 + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] &= !(1 << c);
            }
        }
    }

    fn run(&mut self, used: usize) {
        if self.uncoloured == 0 {
            if used < self.best {
                self.best = used;
                self.best_colouring = self.colour.clone();
            }
            return;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            self.aborted = true;
            return;
        }
        let v = self.pick();
        for c in 0..=used {
            if c == used && used + 1 >= self.best {
                break;
            }
            if c < used && self.sat[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            self.run(used.max(c + 1));
            self.unassign(v, c);
            if self.aborted || self.best <= self.lower {
                return;
            }
        }
    }
}

fn greedy_dsatur(adj: &[u64], n: usize) -> Vec<usize> {
    let mut colour = vec![usize::MAX; n];
    let mut sat = vec![0u64; n];
    let mut uncoloured = full_mask(n);
    while uncoloured != 0 {
        let mut best_v = usize::MAX;
        let mut key = (0u32, 0u32);
        let mut rest = uncoloured;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let k = (sat[v].count_ones(), (adj[v] & uncoloured).count_ones());
            if best_v == usize::MAX || k > key {
                best_v = v;
                key = k;
            }
        }
        let c = (!sat[best_v]).trailing_zeros() as usize;
        colour[best_v] = c;
        uncoloured &= !(1 << best_v);
        let mut nb = adj[best_v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            sat[u] |= 1 << c;
        }
    }
    colour
}

/// Proper colouring with the fewest colours found within `node_limit` search
/// nodes, plus the bounds on χ established by the search.
pub fn colouring_with_limit(g: &Graph, node_limit: u64) -> Result<(Vec<usize>, ChiBounds)> {
    ensure_size("vertex count for exact colouring", g.n(), CHROMATIC_MAX_N)?;
    let n = g.n();
    if n == 0 {
        return Ok((vec![], ChiBounds { lower: 0, upper: 0 }));
    }
    let adj = g.neighbor_masks()?;
    let lower = maximum_clique_in(&adj, full_mask(n)).count_ones() as usize;
    let greedy = greedy_dsatur(&adj, n);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    if upper == lower {
        return Ok((greedy, ChiBounds { lower, upper }));
    }
    let mut s = Search {
        adj: &adj,
        n,
        colour: vec![usize::MAX; n],
        count: vec![0; n * 64],
        sat: vec![0; n],
        uncoloured: full_mask(n),
        best: upper,
        best_colouring: greedy,
        lower,
        nodes: 0,
        limit: node_limit,
        aborted: false,
    };
    s.run(0);
    debug_assert_eq!(s.best_colouring.len(), s.n);
    let bounds = if s.aborted {
        ChiBounds { lower, upper: s.best }
    } else {
        ChiBounds { lower: s.best, upper: s.best }
    };
    Ok((s.best_colouring, bounds))
}

pub fn chromatic_bounds(g: &Graph, node_limit: u64) -> Result<ChiBounds> {
    Ok(colouring_with_limit(g, node_limit)?.1)
}

/// An optimal proper colouring, colours `0..χ`.
pub fn optimal_colouring(g: &Graph) -> Result<Vec<usize>> {
    let (colouring, bounds) = colouring_with_limit(g, DEFAULT_NODE_LIMIT)?;
    if !bounds.is_exact() {
        return Err(Error::BudgetExceeded {
            needed: DEFAULT_NODE_LIMIT as u128 + 1,
            budget: DEFAULT_NODE_LIMIT as u128,
        });
    }
    Ok(colouring)
}

/// Exact χ. Fails with `BudgetExceeded` if the search outgrows
/// [`DEFAULT_NODE_LIMIT`]; use [`chromatic_bounds`] to get partial answers.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(optimal_colouring(g)?.iter().max().map_or(0, |&c| c + 1))
}
