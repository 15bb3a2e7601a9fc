//! Perfectness via odd holes and odd antiholes, with an independent
//! subset-DP check of χ = ω on every induced subgraph for small graphs.

use serde::{Deserialize, Serialize};

use super::clique::full_mask;
use crate::error::{ensure_size, Error, Result};
use crate::graph::Graph;

pub const PERFECT_MAX_N: usize = 14;

/// Up to this size [`is_perfect`] also runs the subset-DP oracle and fails
/// loudly if the two disagree.
pub const CROSS_CHECK_MAX_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Hole,
    Antihole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddWitness {
    pub kind: WitnessKind,
    /// Vertices in cyclic order (in the graph for a hole, in its complement
    /// for an antihole).
    pub cycle: Vec<usize>,
}

/// An induced cycle of odd length at least 5, in cyclic order.
///
/// Induced paths are grown from their minimum vertex `s`; every path vertex
/// after the second must miss all earlier path vertices except its
/// predecessor, and a vertex that sees `s` closes the cycle.
pub fn find_odd_hole(g: &Graph) -> Result<Option<Vec<usize>>> {
    ensure_size("vertex count for odd-hole search", g.n(), 64)?;
    let adj = g.neighbor_masks()?;
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let above = full_mask(n) & !full_mask(s + 1);
        path.clear();
        path.push(s);
        if grow(&adj, above, 0, &mut path) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

// `blocked`: closed neighbourhoods of path vertices strictly before the
// predecessor, excluding the start, which is checked separately.
fn grow(adj: &[u64], above: u64, blocked: u64, path: &mut Vec<usize>) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let len = path.len();
    let mut on_path = 0u64;
    for &p in path.iter() {
        on_path |= 1 << p;
    }
    let mut cands = adj[last] & above & !blocked & !on_path;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if len >= 2 && adj[w] >> s & 1 == 1 {
            // w closes a cycle of len + 1 vertices
            if len + 1 >= 5 && (len + 1) % 2 == 1 {
                path.push(w);
                return true;
            }
            continue;
        }
        let next_blocked = if len >= 2 { blocked | adj[last] | 1 << last } else { blocked };
        path.push(w);
        if grow(adj, above, next_blocked & !(1 << s), path) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn find_odd_hole_or_antihole(g: &Graph) -> Result<Option<OddWitness>> {
    ensure_size("vertex count for perfectness", g.n(), PERFECT_MAX_N)?;
    if let Some(cycle) = find_odd_hole(g)? {
        return Ok(Some(OddWitness { kind: WitnessKind::Hole, cycle }));
    }
    Ok(find_odd_hole(&g.complement())?.map(|cycle| OddWitness {
        kind: WitnessKind::Antihole,
        cycle,
    }))
}

/// Whether χ(H) = ω(H) for every induced subgraph `H`, by dynamic programming
/// over all vertex subsets. Exponential; intended for `n ≤ 10`.
pub fn perfect_by_subsets(g: &Graph) -> Result<bool> {
    ensure_size("vertex count for the subset oracle", g.n(), 12)?;
    let adj = g.neighbor_masks()?;
    let n = g.n();
    let size = 1usize << n;
    let mut omega = vec![0u8; size];
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        omega[s] = omega[rest].max(1 + omega[rest & adj[v] as usize]);
        independent[s] = independent[rest] && rest as u64 & adj[v] == 0;
    }
    let mut chi = vec![u8::MAX; size];
    chi[0] = 0;
    for s in 1..size {
        // colour classes containing the lowest vertex of s
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut t = rest;
        loop {
            let class = t | low;
            if independent[class] {
                chi[s] = chi[s].min(1 + chi[s ^ class]);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        if chi[s] != omega[s] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Perfectness by the Strong Perfect Graph Theorem. For `n ≤ 9` the answer is
/// cross-checked against [`perfect_by_subsets`].
pub fn is_perfect(g: &Graph) -> Result<bool> {
    let spgt = find_odd_hole_or_antihole(g)?.is_none();
    if g.n() <= CROSS_CHECK_MAX_N && perfect_by_subsets(g)? != spgt {
        return Err(Error::OracleDisagreement(format!("{:?}", g.edges())));
    }
    Ok(spgt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn is_induced_odd_cycle(g: &Graph, c: &[usize]) -> bool {
        let k = c.len();
        k >= 5
            && k % 2 == 1
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let d = (i + k - j) % k;
                    i == j || g.has_edge(c[i], c[j]) == (d == 1 || d == k - 1)
                })
            })
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        assert!(!is_perfect(&c5).unwrap());
        let w = find_odd_hole_or_antihole(&c5).unwrap().unwrap();
        assert_eq!(w.kind, WitnessKind::Hole);
        assert!(is_induced_odd_cycle(&c5, &w.cycle));

        assert!(is_perfect(&Graph::complete_bipartite(3, 4)).unwrap());
        assert!(is_perfect(&Graph::cycle(6)).unwrap());
        assert!(is_perfect(&Graph::petersen()).is_ok());
        assert!(!is_perfect(&Graph::petersen()).unwrap());

        let anti7 = Graph::cycle(7).complement();
        assert!(!perfect_by_subsets(&anti7).unwrap());
        let w = find_odd_hole_or_antihole(&anti7).unwrap().unwrap();
        assert_eq!(w.kind, WitnessKind::Antihole);
        assert!(is_induced_odd_cycle(&anti7.complement(), &w.cycle));
    }

    #[test]
    fn random_bipartite_graphs_are_perfect() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let n = rng.gen_range(2..=14);
            let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            let g = Graph::from_fn(n, |u, v| side[u] != side[v] && rng.gen_bool(0.5));
            assert!(is_perfect(&g).unwrap());
        }
    }

    #[test]
    fn oracles_agree_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1500 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.2..0.8);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            let spgt = find_odd_hole_or_antihole(&g).unwrap();
            assert_eq!(spgt.is_none(), perfect_by_subsets(&g).unwrap(), "{g:?}");
            if let Some(w) = spgt {
                let h = if w.kind == WitnessKind::Hole { g.clone() } else { g.complement() };
                assert!(is_induced_odd_cycle(&h, &w.cycle));
            }
        }
    }

    #[test]
    fn long_holes_are_found() {
        for k in [5, 7, 9, 11, 13] {
            let g = Graph::cycle(k);
            assert!(find_odd_hole(&g).unwrap().is_some());
        }
        for k in [6, 8, 10, 12, 14] {
            assert!(is_perfect(&Graph::cycle(k)).unwrap());
        }
        assert!(matches!(is_perfect(&Graph::empty(15)), Err(Error::SizeLimitExceeded { .. })));
    }
}
