//! Graphs of twin number `t` as `OR(J) XOR parity(I)` of clique-plus-isolated
//! graphs.

use super::{constant, Decomposition};
use crate::boolfn::{BooleanFunction, MAX_ARITY};
use crate::classes::ClassTag;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::twin_classes;

pub const DEFAULT_TWIN_BUDGET: usize = MAX_ARITY;

pub fn twin_decomposition(g: &Graph) -> Result<Decomposition> {
    twin_decomposition_with_budget(g, DEFAULT_TWIN_BUDGET)
}

/// With twin classes `V_1..V_t` (ordered by minimum vertex): one part with
/// clique `V_i ∪ V_j` for every complete pair `{i,j}` (the set `J`), and one
/// part with clique `V_i` for every class whose inside disagrees with the
/// union of the first group (the set `I`). The function is the OR of the
/// first group XOR the parity of the second.
///
/// Fails with `BudgetExceeded` when `|J| + |I|` exceeds `budget` (itself
/// capped at the maximum arity).
pub fn twin_decomposition_with_budget(g: &Graph, budget: usize) -> Result<Decomposition> {
    let classes = twin_classes(g);
    let blocks = classes.blocks();
    let t = blocks.len();
    let complete_pairs: Vec<(usize, usize)> = (0..t)
        .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(blocks[i][0], blocks[j][0]))
        .collect();
    let mut in_union_clique = vec![false; t];
    for &(i, j) in &complete_pairs {
        in_union_clique[i] = true;
        in_union_clique[j] = true;
    }
    let flips: Vec<usize> = (0..t)
        .filter(|&i| blocks[i].len() >= 2 && g.has_edge(blocks[i][0], blocks[i][1]) != in_union_clique[i])
        .collect();

    let needed = complete_pairs.len() + flips.len();
    let budget = budget.min(MAX_ARITY);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            needed: needed as u128,
            budget: budget as u128,
        });
    }

    let clique_on = |vs: Vec<usize>| Graph::empty(g.n()).subgraph_complement(&vs).expect("vertices in range");
    let mut parts = Vec::with_capacity(needed);
    for &(i, j) in &complete_pairs {
        let mut vs = blocks[i].clone();
        vs.extend(&blocks[j]);
        parts.push((clique_on(vs), ClassTag::ClassC));
    }
    for &i in &flips {
        parts.push((clique_on(blocks[i].clone()), ClassTag::ClassC));
    }
    let j = complete_pairs.len();
    let f = if needed == 0 {
        constant(false)
    } else {
        BooleanFunction::from_fn(needed, |x| {
            let union = x & ((1 << j) - 1) != 0;
            let parity = (x >> j).count_ones() % 2 == 1;
            union != parity
        })?
    };
    Decomposition::certify(g, f, parts)
}
