//! Boolean dimension by exhaustive search: the least `k` such that a graph is
//! a boolean function of `k` members of a class.
//!
//! Parts are enumerated as multisets (nondecreasing index tuples over the
//! members sorted by graph6), since any function absorbs a permutation of its
//! arguments. For a tuple, a suitable function exists iff no two vertex pairs
//! with the same membership vector disagree in the target, so functions are
//! never enumerated.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::{BooleanFunction, MAX_ARITY};
use crate::classes::{enumerate, ClassTag};
use crate::error::{ensure_size, Error, Result};
use crate::graph::{apply_boolean, CombineOp, Graph};
use crate::invariants::binomial;
use crate::io::to_graph6;

/// Default bound on the number of part multisets examined per arity.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "BOOLCOMB_BUDGET";

/// Graphs with at most this many vertices fit one pair mask per member.
pub const BOOLDIM_MAX_N: usize = 11;

pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimWitness {
    pub k: usize,
    pub f: BooleanFunction,
    pub parts: Vec<Graph>,
    pub tag: ClassTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum DimResult {
    Found(DimWitness),
    NoneUpTo { exhausted_k: usize },
}

impl DimResult {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            DimResult::Found(w) => Some(w.k),
            DimResult::NoneUpTo { .. } => None,
        }
    }
}

struct Space {
    target: u64,
    members: Vec<Graph>,
    masks: Vec<u64>,
}

pub(crate) fn pair_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let mut p = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                mask |= 1 << p;
            }
            p += 1;
        }
    }
    mask
}

fn space(g: &Graph, tag: ClassTag, mode: Option<CombineOp>) -> Result<Space> {
    ensure_size("vertex count for dimension search", g.n(), BOOLDIM_MAX_N)?;
    let target = pair_mask(g);
    let mut keyed: Vec<(String, Graph)> = enumerate(tag, g.n())?
        .map(|h| Ok((to_graph6(&h)?, h)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    let mut members: Vec<Graph> = keyed.into_iter().map(|(_, h)| h).collect();
    // a union can only use subgraphs of the target, an intersection supergraphs
    match mode {
        Some(CombineOp::Union) => members.retain(|h| pair_mask(h) & !target == 0),
        Some(CombineOp::Intersect) => members.retain(|h| target & !pair_mask(h) == 0),
        _ => {}
    }
    let masks = members.iter().map(pair_mask).collect();
    Ok(Space { target, members, masks })
}

/// Whether the membership vectors determine the target: refine the pair set
/// into cells by each mask, then every cell must be inside or outside it.
fn single_valued(target: u64, all: u64, masks: &[u64]) -> bool {
    let mut cells = vec![all];
    for &m in masks {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for c in cells {
            for part in [c & m, c & !m] {
                if part != 0 {
                    next.push(part);
                }
            }
        }
        cells = next;
    }
    cells.iter().all(|&c| c & target == 0 || c & !target == 0)
}

fn accepts(space: &Space, all: u64, mode: Option<CombineOp>, idx: &[usize]) -> bool {
    let masks: Vec<u64> = idx.iter().map(|&i| space.masks[i]).collect();
    match mode {
        None => single_valued(space.target, all, &masks),
        Some(op) => masks[1..].iter().fold(masks[0], |acc, &m| op.apply(acc, m)) & all == space.target,
    }
}

fn search_from(space: &Space, all: u64, mode: Option<CombineOp>, k: usize, idx: &mut Vec<usize>) -> bool {
    if idx.len() == k {
        return accepts(space, all, mode, idx);
    }
    let start = *idx.last().unwrap_or(&0);
    for i in start..space.masks.len() {
        idx.push(i);
        if search_from(space, all, mode, k, idx) {
            return true;
        }
        idx.pop();
    }
    false
}

fn witness_function(g: &Graph, parts: &[Graph], mode: Option<CombineOp>) -> Result<BooleanFunction> {
    let k = parts.len();
    if let Some(op) = mode {
        return op.as_function(k);
    }
    let mut table = vec![false; 1 << k];
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let key: usize = parts.iter().enumerate().map(|(i, h)| (h.has_edge(u, v) as usize) << i).sum();
            table[key] = g.has_edge(u, v);
        }
    }
    BooleanFunction::from_fn(k, |x| table[x])
}

/// A witness that `g` is a function of `k` members of the class (or of the
/// fold of `mode` when given), or `None` if the exhaustive search finds none.
pub fn exists_representation_with(
    g: &Graph,
    tag: ClassTag,
    k: usize,
    mode: Option<CombineOp>,
    budget: u128,
) -> Result<Option<DimWitness>> {
    if k == 0 {
        return Err(Error::SizeLimitExceeded {
            what: "arity (must be at least 1)",
            size: 0,
            limit: 0,
        });
    }
    ensure_size("arity", k, MAX_ARITY)?;
    let space = space(g, tag, mode)?;
    let count = space.masks.len();
    let needed = binomial(count + k - 1, k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if count == 0 {
        return Ok(None);
    }
    let pairs = g.n() * g.n().saturating_sub(1) / 2;
    let all = if pairs == 64 { !0 } else { (1u64 << pairs) - 1 };
    let found = (0..count).into_par_iter().find_map_first(|first| {
        let mut idx = vec![first];
        search_from(&space, all, mode, k, &mut idx).then_some(idx)
    });
    let Some(idx) = found else {
        return Ok(None);
    };
    let parts: Vec<Graph> = idx.iter().map(|&i| space.members[i].clone()).collect();
    let f = witness_function(g, &parts, mode)?;
    if apply_boolean(&f, &parts)? != *g {
        return Err(Error::CertificationFailed("dimension witness does not recombine".into()));
    }
    Ok(Some(DimWitness { k, f, parts, tag }))
}

pub fn exists_representation(g: &Graph, tag: ClassTag, k: usize) -> Result<Option<DimWitness>> {
    exists_representation_with(g, tag, k, None, budget_from_env())
}

fn ascend(g: &Graph, tag: ClassTag, mode: Option<CombineOp>, k_max: usize) -> Result<DimResult> {
    let budget = budget_from_env();
    for k in 1..=k_max {
        if let Some(w) = exists_representation_with(g, tag, k, mode, budget)? {
            return Ok(DimResult::Found(w));
        }
    }
    Ok(DimResult::NoneUpTo { exhausted_k: k_max })
}

/// Smallest `k ≤ k_max` with a representation by an arbitrary function.
pub fn boolean_dimension(g: &Graph, tag: ClassTag, k_max: usize) -> Result<DimResult> {
    ascend(g, tag, None, k_max)
}

/// Smallest `k ≤ k_max` with `g` the union, intersection or XOR of `k` members.
pub fn restricted_dimension(g: &Graph, tag: ClassTag, mode: CombineOp, k_max: usize) -> Result<DimResult> {
    ascend(g, tag, Some(mode), k_max)
}
