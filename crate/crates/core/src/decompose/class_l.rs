//! Graphs with a twin class covering all but `p` vertices as functions of the
//! `p` graphs `C_a` (clique on `V \ {a}`, `a` isolated).

use super::Decomposition;
use crate::boolfn::{BooleanFunction, MAX_ARITY};
use crate::classes::ClassTag;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::twin_classes;

pub const DEFAULT_CLASS_L_BUDGET: usize = MAX_ARITY;

pub fn class_l_decomposition(g: &Graph) -> Result<Decomposition> {
    class_l_decomposition_with_budget(g, DEFAULT_CLASS_L_BUDGET)
}

/// Let `Q` be a largest twin class (lowest minimum vertex on ties) and
/// `P = V \ Q = {a_1..a_p}`, split into `P_1` (anticomplete to `Q`) and `P_2`
/// (complete to `Q`). With `x_i = C_{a_i}(u, v)` and `C_U = AND of x_a over U`,
///
/// `G'' = (C_{P_1} ∧ ¬C_{P_2}) [∨ C_P if Q is a clique]`,
/// `G = (G'' ∨ OR_{E_1} H_ab) ∧ AND_{E_2} ¬H_ab`, `H_ab = ¬x_a ∧ ¬x_b`,
///
/// where `E_1`/`E_2` are the pairs inside `P` that `G''` misses/adds.
pub fn class_l_decomposition_with_budget(g: &Graph, budget: usize) -> Result<Decomposition> {
    let n = g.n();
    let budget = budget.min(MAX_ARITY);
    let classes = twin_classes(g);
    let q: Vec<usize> = classes
        .blocks()
        .iter()
        .max_by_key(|b| (b.len(), std::cmp::Reverse(b[0])))
        .cloned()
        .unwrap_or_default();
    let p_set: Vec<usize> = (0..n).filter(|v| !q.contains(v)).collect();
    let p = p_set.len();
    if p > budget {
        return Err(Error::NoBigTwinClass { remainder: p, budget });
    }
    let q_clique = q.len() >= 2 && g.has_edge(q[0], q[1]);
    // variable index of each vertex of P; masks below are over these indices
    let p1: u32 = (0..p).filter(|&i| q.first().is_some_and(|&r| !g.has_edge(p_set[i], r))).map(|i| 1 << i).sum();
    let p2: u32 = (0..p).filter(|&i| q.first().is_some_and(|&r| g.has_edge(p_set[i], r))).map(|i| 1 << i).sum();
    let all: u32 = (1u32 << p) - 1;
    let c_of = |x: u32, set: u32| x & set == set;
    let g2 = |x: u32| (c_of(x, p1) && !c_of(x, p2)) || (q_clique && c_of(x, all));

    // on a pair {a_i, a_j} inside P every variable except x_i, x_j is 1
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            let x = all & !(1 << i) & !(1 << j);
            match (g2(x), g.has_edge(p_set[i], p_set[j])) {
                (false, true) => e1.push((i, j)),
                (true, false) => e2.push((i, j)),
                _ => {}
            }
        }
    }
    let h = |x: u32, (i, j): (usize, usize)| x >> i & 1 == 0 && x >> j & 1 == 0;
    let f = BooleanFunction::from_fn(p, |x| {
        let x = x as u32;
        (g2(x) || e1.iter().any(|&e| h(x, e))) && e2.iter().all(|&e| !h(x, e))
    })?;
    let parts = p_set
        .iter()
        .map(|&a| {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a).collect();
            (Graph::empty(n).subgraph_complement(&rest).expect("in range"), ClassTag::ClassL)
        })
        .collect();
    Decomposition::certify(g, f, parts)
}
