//! Degeneracy, biclique and chain numbers, twin classes, VC dimension and
//! neighbourhood complexity.

use std::collections::{HashMap, HashSet};

use super::clique::full_mask;
use crate::error::{ensure_size, Error, Result};
use crate::graph::{Graph, Partition};

pub const BICLIQUE_MAX_N: usize = 16;
pub const CHAIN_MAX_N: usize = 12;
pub const VC_MAX_N: usize = 14;

/// Default bound on the number of `m`-subsets examined by
/// [`neighborhood_complexity`].
pub const NEIGHBORHOOD_SUBSET_BUDGET: u128 = 20_000_000;

/// Smallest `d` such that every subgraph has a vertex of degree at most `d`.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| deg[v]).unwrap();
        best = best.max(deg[v]);
        removed[v] = true;
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    best
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Largest `k` with disjoint `A`, `B` of size `k`, every `a ∈ A` adjacent to
/// every `b ∈ B`.
pub fn biclique_number(g: &Graph) -> Result<usize> {
    ensure_size("vertex count for biclique search", g.n(), BICLIQUE_MAX_N)?;
    let adj = g.neighbor_masks()?;
    let mut best = 0;
    // A grows in increasing vertex order; B is any k-subset of the common
    // neighbourhood, which is automatically disjoint from A.
    fn grow(adj: &[u64], next: usize, size: usize, common: u64, best: &mut usize) {
        let c = common.count_ones() as usize;
        *best = (*best).max(size.min(c));
        if c <= *best {
            return;
        }
        for v in next..adj.len() {
            grow(adj, v + 1, size + 1, common & adj[v], best);
        }
    }
    for v in 0..g.n() {
        grow(&adj, v + 1, 1, adj[v], &mut best);
    }
    Ok(best)
}

fn chain_search(g: &Graph, strong: bool) -> Result<usize> {
    ensure_size("vertex count for chain search", g.n(), CHAIN_MAX_N)?;
    let adj = g.neighbor_masks()?;
    let all = full_mask(g.n());
    let mut best = 0;

    // Pairs are appended at the end of the sequence. A new a must miss every
    // earlier b; a new b must see every earlier a.
    #[allow(clippy::too_many_arguments)]
    fn extend(adj: &[u64], strong: bool, k: usize, used: u64, miss_b: u64, see_a: u64, all: u64, best: &mut usize) {
        let cand_a = all & !used & !miss_b;
        let cand_b = all & !used & see_a;
        let bound = k + (cand_a.count_ones().min(cand_b.count_ones()) as usize);
        if bound <= *best {
            return;
        }
        let mut ra = cand_a;
        while ra != 0 {
            let a = ra.trailing_zeros() as usize;
            ra &= ra - 1;
            let mut rb = cand_b & !(1 << a);
            if !strong {
                rb &= adj[a];
            }
            while rb != 0 {
                let b = rb.trailing_zeros() as usize;
                rb &= rb - 1;
                *best = (*best).max(k + 1);
                extend(adj, strong, k + 1, used | 1 << a | 1 << b, miss_b | adj[b], see_a & adj[a], all, best);
            }
        }
    }
    extend(&adj, strong, 0, 0, 0, all, all, &mut best);
    Ok(best)
}

/// Largest `k` with disjoint `a_1..a_k`, `b_1..b_k` such that `a_i ~ b_j`
/// exactly when `i ≤ j`; 0 for edgeless graphs.
pub fn chain_number(g: &Graph) -> Result<usize> {
    chain_search(g, false)
}

/// As [`chain_number`] but the pairs `(a_i, b_i)` are unconstrained.
pub fn strong_chain_number(g: &Graph) -> Result<usize> {
    chain_search(g, true)
}

/// Classes of the twin relation `N(a) \ {b} = N(b) \ {a}`.
///
/// Non-adjacent twins share their open neighbourhood and adjacent twins their
/// closed one, so hashing both kinds of rows finds every twin pair.
pub fn twin_classes(g: &Graph) -> Partition {
    let n = g.n();
    let mut label: Vec<usize> = (0..n).collect();
    let mut open: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut closed: HashMap<Vec<u64>, usize> = HashMap::new();
    for v in 0..n {
        let row = g.row(v).to_vec();
        let mut closed_row = row.clone();
        closed_row[v / 64] |= 1 << (v % 64);
        if let Some(&u) = open.get(&row) {
            label[v] = label[u];
        } else {
            open.insert(row, v);
        }
        if let Some(&u) = closed.get(&closed_row) {
            label[v] = label[u];
        } else {
            closed.insert(closed_row, v);
        }
    }
    Partition::from_labels(&label)
}

pub fn twin_number(g: &Graph) -> usize {
    twin_classes(g).num_blocks()
}

pub fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    (0..g.n()).all(|w| w == a || w == b || g.has_edge(a, w) == g.has_edge(b, w))
}

/// Number of distinct traces `N(v) ∩ A` over all vertices `v`.
pub fn trace_count(adj: &[u64], set: u64) -> usize {
    let mut seen: HashSet<u64> = HashSet::new();
    for &row in adj {
        seen.insert(row & set);
    }
    seen.len()
}

fn for_each_subset(n: usize, m: usize, mut visit: impl FnMut(u64) -> bool) {
    fn go(n: usize, m: usize, start: usize, acc: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if m == 0 {
            return visit(acc);
        }
        for v in start..=n - m {
            if !go(n, m - 1, v + 1, acc | 1 << v, visit) {
                return false;
            }
        }
        true
    }
    if m <= n {
        go(n, m, 0, 0, &mut visit);
    }
}

/// VC dimension of the neighbourhood set system.
pub fn vc_dimension(g: &Graph) -> Result<usize> {
    ensure_size("vertex count for VC dimension", g.n(), VC_MAX_N)?;
    let adj = g.neighbor_masks()?;
    let mut dim = 0;
    for d in 1..=g.n() {
        let mut found = false;
        for_each_subset(g.n(), d, |s| {
            found = trace_count(&adj, s) == 1 << d;
            !found
        });
        if !found {
            break;
        }
        dim = d;
    }
    Ok(dim)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Shatter function of the neighbourhood set system at `m`: the maximum over
/// `m`-subsets `A` of the number of traces `N(v) ∩ A`.
pub fn neighborhood_complexity(g: &Graph, m: usize) -> Result<usize> {
    neighborhood_complexity_with_budget(g, m, NEIGHBORHOOD_SUBSET_BUDGET)
}

pub fn neighborhood_complexity_with_budget(g: &Graph, m: usize, budget: u128) -> Result<usize> {
    let adj = g.neighbor_masks()?;
    if m > g.n() {
        return Err(Error::SizeLimitExceeded {
            what: "subset size",
            size: m,
            limit: g.n(),
        });
    }
    let needed = binomial(g.n(), m);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut best = 0;
    for_each_subset(g.n(), m, |s| {
        best = best.max(trace_count(&adj, s));
        true
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn half_graph(k: usize) -> Graph {
        // a_i = i, b_j = k + j
        Graph::from_fn(2 * k, |u, v| u < k && v >= k && u <= v - k)
    }

    fn brute_degeneracy(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| s != 0)
            .map(|s| {
                let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                let sub = g.induced_subgraph(&vs).unwrap();
                (0..sub.n()).map(|v| sub.degree(v)).min().unwrap()
            })
            .max()
            .unwrap_or(0)
    }

    fn brute_biclique(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for a in 0u32..1 << n {
            let common = (0..n)
                .filter(|&b| a >> b & 1 == 0 && (0..n).all(|x| a >> x & 1 == 0 || g.has_edge(x, b)))
                .count();
            best = best.max((a.count_ones() as usize).min(common));
        }
        best
    }

    // all ordered sequences of disjoint pairs, checked against the definition
    fn brute_chain(g: &Graph, strong: bool) -> usize {
        fn go(g: &Graph, strong: bool, a: &mut Vec<usize>, b: &mut Vec<usize>, best: &mut usize) {
            let k = a.len();
            let ok = (0..k).all(|i| {
                (0..k).all(|j| {
                    let e = g.has_edge(a[i], b[j]);
                    if strong {
                        (i >= j || e) && (i <= j || !e)
                    } else {
                        e == (i <= j)
                    }
                })
            });
            if !ok {
                return;
            }
            *best = (*best).max(k);
            for x in 0..g.n() {
                for y in 0..g.n() {
                    if x != y && !a.contains(&x) && !a.contains(&y) && !b.contains(&x) && !b.contains(&y) {
                        a.push(x);
                        b.push(y);
                        go(g, strong, a, b, best);
                        a.pop();
                        b.pop();
                    }
                }
            }
        }
        let mut best = 0;
        go(g, strong, &mut vec![], &mut vec![], &mut best);
        best
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&Graph::complete(4)), 3);
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(degeneracy(&tree), 1);
        assert_eq!(brute_degeneracy(&Graph::cycle(6)), 2);
        assert_eq!(degeneracy(&Graph::cycle(6)), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = Graph::from_fn(rng.gen_range(1..9), |_, _| rng.gen_bool(0.4));
            assert_eq!(degeneracy(&g), brute_degeneracy(&g));
        }
    }

    #[test]
    fn biclique_examples() {
        assert_eq!(biclique_number(&Graph::complete_bipartite(3, 3)).unwrap(), 3);
        assert_eq!(biclique_number(&Graph::empty(5)).unwrap(), 0);
        assert_eq!(brute_biclique(&Graph::cycle(5)), 1);
        assert_eq!(biclique_number(&Graph::cycle(5)).unwrap(), 1);
        assert_eq!(biclique_number(&Graph::complete(6)).unwrap(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let g = Graph::from_fn(rng.gen_range(1..10), |_, _| rng.gen_bool(0.5));
            assert_eq!(biclique_number(&g).unwrap(), brute_biclique(&g));
        }
    }

    #[test]
    fn chain_examples() {
        assert_eq!(chain_number(&half_graph(3)).unwrap(), 3);
        assert_eq!(brute_chain(&half_graph(3), false), 3);
        assert_eq!(chain_number(&Graph::empty(5)).unwrap(), 0);
        assert_eq!(strong_chain_number(&Graph::empty(5)).unwrap(), 1);
        let k33m = Graph::from_fn(6, |u, v| u < 3 && v >= 3 && v - 3 != u);
        let ch = chain_number(&k33m).unwrap();
        let sch = strong_chain_number(&k33m).unwrap();
        assert!(sch / 2 <= ch && ch <= sch);
        assert_eq!(ch, brute_chain(&k33m, false));
        assert_eq!(sch, brute_chain(&k33m, true));
    }

    #[test]
    fn chain_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let g = Graph::from_fn(rng.gen_range(1..=7), |_, _| rng.gen_bool(0.5));
            assert_eq!(chain_number(&g).unwrap(), brute_chain(&g, false), "{g:?}");
            assert_eq!(strong_chain_number(&g).unwrap(), brute_chain(&g, true), "{g:?}");
        }
    }

    #[test]
    fn twin_examples() {
        assert_eq!(twin_number(&Graph::complete(6)), 1);
        assert_eq!(twin_number(&Graph::cycle(5)), 5);
        for a in 0..5 {
            for b in a + 1..5 {
                assert!(!are_twins(&Graph::cycle(5), a, b));
            }
        }
        let k23 = Graph::complete_bipartite(2, 3);
        assert_eq!(twin_classes(&k23).blocks(), &[vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn twin_classes_are_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let n = rng.gen_range(1..9);
            let p = rng.gen_range(0.0..1.0);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            let part = twin_classes(&g);
            let lab = part.labels();
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        assert_eq!(lab[a] == lab[b], are_twins(&g, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn vc_examples() {
        assert_eq!(vc_dimension(&Graph::empty(5)).unwrap(), 0);
        assert_eq!(vc_dimension(&Graph::star(3)).unwrap(), 1);
        assert_eq!(vc_dimension(&Graph::complete(5)).unwrap(), 1);
        let c5 = Graph::cycle(5);
        assert_eq!(vc_dimension(&c5).unwrap(), 2);
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn sauer_shelah_and_single_traces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.5));
            let d = vc_dimension(&g).unwrap();
            assert!(neighborhood_complexity(&g, 1).unwrap() <= 2);
            for m in 0..=n.min(4) {
                let nu = neighborhood_complexity(&g, m).unwrap();
                let bound: u128 = (0..=d).map(|i| binomial(m, i)).sum();
                assert!(nu as u128 <= bound);
            }
        }
    }

    #[test]
    fn neighborhood_budget() {
        let g = Graph::empty(40);
        assert!(matches!(
            neighborhood_complexity_with_budget(&g, 20, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
