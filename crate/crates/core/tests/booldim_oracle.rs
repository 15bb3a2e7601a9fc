//! Exhaustive dimension search checked against a slow enumerator over ordered
//! tuples and every function, on all graphs with at most 4 vertices.

use boolcomb::booldim::{boolean_dimension, restricted_dimension};
use boolcomb::classes::ClassTag;
use boolcomb::{BooleanFunction, CombineOp, Graph};

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|m| Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e)).unwrap())
        .collect()
}

fn is_equivalence(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| a == c || !(g.has_edge(a, b) && g.has_edge(b, c)) || g.has_edge(a, c))))
}

fn is_matching(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) <= 1)
}

fn has_induced_p4(g: &Graph) -> bool {
    let n = g.n();
    let e = |a: usize, b: usize| g.has_edge(a, b);
    (0..n).any(|a| {
        (0..n).any(|b| {
            (0..n).any(|c| {
                (0..n).any(|d| {
                    let distinct = [a, b, c, d].iter().enumerate().all(|(i, x)| [a, b, c, d][i + 1..].iter().all(|y| x != y));
                    distinct && e(a, b) && e(b, c) && e(c, d) && !e(a, c) && !e(b, d) && !e(a, d)
                })
            })
        })
    })
}

fn members(tag: ClassTag, n: usize) -> Vec<Graph> {
    let all = all_graphs(n);
    match tag {
        ClassTag::Equivalence => all.into_iter().filter(is_equivalence).collect(),
        ClassTag::Matching => all.into_iter().filter(is_matching).collect(),
        ClassTag::Cograph => all.into_iter().filter(|g| !has_induced_p4(g)).collect(),
        _ => unreachable!(),
    }
}

fn evaluate(f: &BooleanFunction, parts: &[&Graph], n: usize) -> Graph {
    Graph::from_fn(n, |u, v| f.eval_index(parts.iter().enumerate().map(|(i, h)| (h.has_edge(u, v) as usize) << i).sum()))
}

/// Least k ≤ 2 such that some ordered tuple and some function gives `g`.
fn slow_dimension(g: &Graph, class: &[Graph]) -> Option<usize> {
    let n = g.n();
    let f1: Vec<BooleanFunction> = (0..4).map(|t| BooleanFunction::from_table(1, t).unwrap()).collect();
    if class.iter().any(|a| f1.iter().any(|f| evaluate(f, &[a], n) == *g)) {
        return Some(1);
    }
    let f2: Vec<BooleanFunction> = (0..16).map(|t| BooleanFunction::from_table(2, t).unwrap()).collect();
    for a in class {
        for b in class {
            if f2.iter().any(|f| evaluate(f, &[a, b], n) == *g) {
                return Some(2);
            }
        }
    }
    None
}

fn slow_restricted(g: &Graph, class: &[Graph], op: CombineOp, k_max: usize) -> Option<usize> {
    let n = g.n();
    let fold = |parts: &[&Graph]| {
        Graph::from_fn(n, |u, v| {
            let bits = parts.iter().map(|h| h.has_edge(u, v));
            match op {
                CombineOp::Union => bits.fold(false, |a, b| a | b),
                CombineOp::Intersect => bits.fold(true, |a, b| a & b),
                CombineOp::Xor => bits.fold(false, |a, b| a ^ b),
            }
        })
    };
    for k in 1..=k_max {
        let mut idx = vec![0; k];
        loop {
            let parts: Vec<&Graph> = idx.iter().map(|&i| &class[i]).collect();
            if fold(&parts) == *g {
                return Some(k);
            }
            let mut pos = 0;
            while pos < k {
                idx[pos] += 1;
                if idx[pos] < class.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    None
}

#[test]
fn boolean_dimension_matches_slow_search() {
    for tag in [ClassTag::Equivalence, ClassTag::Matching, ClassTag::Cograph] {
        for n in 1..=4 {
            let class = members(tag, n);
            for g in all_graphs(n) {
                let fast = boolean_dimension(&g, tag, 2).unwrap().dimension();
                assert_eq!(fast, slow_dimension(&g, &class), "{tag} on {g:?}");
            }
        }
    }
}

#[test]
fn restricted_dimension_matches_slow_search() {
    for tag in [ClassTag::Equivalence, ClassTag::Matching] {
        for n in 1..=4 {
            let class = members(tag, n);
            for g in all_graphs(n) {
                let general = boolean_dimension(&g, tag, 3).unwrap().dimension();
                for op in [CombineOp::Union, CombineOp::Intersect, CombineOp::Xor] {
                    let fast = restricted_dimension(&g, tag, op, 3).unwrap().dimension();
                    assert_eq!(fast, slow_restricted(&g, &class, op, 3), "{tag} {op} on {g:?}");
                    if let (Some(b), Some(r)) = (general, fast) {
                        assert!(b <= r);
                    }
                }
            }
        }
    }
}

#[test]
fn equivalence_graphs_have_dimension_one() {
    for n in 1..=5 {
        for g in members(ClassTag::Equivalence, n) {
            for op in [CombineOp::Union, CombineOp::Intersect, CombineOp::Xor] {
                assert_eq!(restricted_dimension(&g, ClassTag::Equivalence, op, 1).unwrap().dimension(), Some(1));
            }
        }
    }
}
