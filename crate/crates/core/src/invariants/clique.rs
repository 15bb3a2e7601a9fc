//! Maximum clique by branch and bound with greedy-colouring bounds over
//! 64-bit candidate sets.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum clique inside `candidates`, as a vertex mask.
pub(crate) fn maximum_clique_in(adj: &[u64], candidates: u64) -> u64 {
    let mut best = 0u64;
    let mut best_size = 0u32;
    expand(adj, 0, 0, candidates, &mut best, &mut best_size);
    best
}

fn expand(adj: &[u64], current: u64, size: u32, mut p: u64, best: &mut u64, best_size: &mut u32) {
    let (order, bounds) = colour_order(adj, p);
    for i in (0..order.len()).rev() {
        if size + bounds[i] <= *best_size {
            return;
        }
        let v = order[i];
        let with_v = current | 1 << v;
        let next = p & adj[v];
        if next == 0 {
            if size + 1 > *best_size {
                *best = with_v;
                *best_size = size + 1;
            }
        } else {
            expand(adj, with_v, size + 1, next, best, best_size);
        }
        p &= !(1 << v);
    }
}

// Greedy sequential colouring of `p`; vertices come out grouped by colour,
// `bounds[i]` is the colour of `order[i]`, an upper bound on any clique
// among `order[..=i]`.
fn colour_order(adj: &[u64], p: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncoloured = p;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !adj[v];
            uncoloured &= !(1 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn masks(g: &Graph) -> Result<Vec<u64>> {
    g.neighbor_masks().map_err(|e| match e {
        Error::SizeLimitExceeded { size, limit, .. } => Error::SizeLimitExceeded {
            what: "vertex count for clique search",
            size,
            limit,
        },
        other => other,
    })
}

/// A maximum clique, sorted. Graphs up to 64 vertices.
pub fn maximum_clique(g: &Graph) -> Result<Vec<usize>> {
    let adj = masks(g)?;
    Ok(mask_to_vec(maximum_clique_in(&adj, full_mask(g.n()))))
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique(g)?.len())
}

/// A maximum independent set, sorted.
pub fn maximum_independent_set(g: &Graph) -> Result<Vec<usize>> {
    maximum_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(maximum_independent_set(g)?.len())
}
