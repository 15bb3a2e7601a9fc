//! Exact graph parameters.

mod clique;
mod coloring;
mod perfect;
mod structure;

use serde::{Deserialize, Serialize};

pub(crate) use clique::{full_mask, mask_to_vec, maximum_clique_in};
pub use clique::{clique_number, independence_number, maximum_clique, maximum_independent_set};
pub use coloring::{
    chromatic_bounds, chromatic_number, colouring_with_limit, optimal_colouring, ChiBounds, CHROMATIC_MAX_N,
    DEFAULT_NODE_LIMIT,
};
pub use perfect::{
    find_odd_hole, find_odd_hole_or_antihole, is_perfect, perfect_by_subsets, OddWitness, WitnessKind,
    CROSS_CHECK_MAX_N, PERFECT_MAX_N,
};
pub(crate) use structure::binomial;
pub use structure::{
    are_twins, biclique_number, chain_number, degeneracy, max_degree, neighborhood_complexity,
    neighborhood_complexity_with_budget, strong_chain_number, trace_count, twin_classes, twin_number,
    vc_dimension, BICLIQUE_MAX_N, CHAIN_MAX_N, NEIGHBORHOOD_SUBSET_BUDGET, VC_MAX_N,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamReport {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub biclique: usize,
    pub chain: usize,
    pub strong_chain: usize,
    pub twin_number: usize,
    pub perfect: bool,
}

/// Every parameter at once. Limited by the chain-number search to
/// [`CHAIN_MAX_N`] vertices.
pub fn param_report(g: &Graph) -> Result<ParamReport> {
    Ok(ParamReport {
        omega: clique_number(g)?,
        alpha: independence_number(g)?,
        chi: chromatic_number(g)?,
        max_degree: g.max_degree(),
        degeneracy: degeneracy(g),
        biclique: biclique_number(g)?,
        chain: chain_number(g)?,
        strong_chain: strong_chain_number(g)?,
        twin_number: twin_number(g),
        perfect: is_perfect(g)?,
    })
}

/// The nested homogeneous sets `S_1 ⊇ S_2 ⊇ ...`: `S_i` is a largest clique or
/// independent set of `graphs[i]` inside `S_{i-1}` (clique on ties).
pub fn nested_homogeneous_sets(graphs: &[Graph]) -> Result<Vec<Vec<usize>>> {
    let n = graphs.first().ok_or(Error::EmptyInput)?.n();
    let mut current = full_mask(n);
    let mut out = Vec::with_capacity(graphs.len());
    for g in graphs {
        if g.n() != n {
            return Err(Error::MismatchedVertexCount { expected: n, found: g.n() });
        }
        let adj = g.neighbor_masks()?;
        let co: Vec<u64> = adj.iter().enumerate().map(|(v, &r)| !r & full_mask(n) & !(1 << v)).collect();
        let clique = maximum_clique_in(&adj, current);
        let indep = maximum_clique_in(&co, current);
        current = if clique.count_ones() >= indep.count_ones() { clique } else { indep };
        out.push(mask_to_vec(current));
    }
    Ok(out)
}

/// A vertex set on which every input graph is complete or edgeless.
pub fn common_homogeneous_set(graphs: &[Graph]) -> Result<Vec<usize>> {
    Ok(nested_homogeneous_sets(graphs)?.pop().expect("nonempty input"))
}
