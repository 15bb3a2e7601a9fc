//! Graph classes: membership tests, exhaustive enumeration of labeled members
//! and seeded random sampling.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ensure_size, Error, Result};
use crate::graph::{check_permutation, Graph, Partition};
use crate::invariants::binomial;

/// Largest `n` for enumerating equivalence graphs (set partitions) and the
/// classes built from them.
pub const ENUM_PARTITION_MAX_N: usize = 9;

/// Largest number of vertex pairs for classes enumerated by filtering all
/// labeled graphs.
pub const ENUM_FILTER_MAX_PAIRS: usize = 21;

/// Bound on the number of edge subsets listed for `AtMostEdges`.
pub const ENUM_EDGE_SUBSET_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// Every component is a clique.
    Equivalence,
    /// Complements of equivalence graphs.
    CompleteMultipartite,
    Split,
    /// No induced `P_4`.
    Cograph,
    /// Maximum degree at most 1.
    Matching,
    BoundedDegree(usize),
    AtMostEdges(usize),
    /// A complete graph, or a clique plus one isolated vertex.
    ClassL,
    /// A clique plus isolated vertices.
    ClassC,
    ClassCOrMatching,
    Complete,
    Empty,
}

impl ClassTag {
    pub fn is_intersection_closed(self) -> bool {
        matches!(
            self,
            ClassTag::Equivalence
                | ClassTag::Matching
                | ClassTag::BoundedDegree(_)
                | ClassTag::AtMostEdges(_)
                | ClassTag::ClassC
                | ClassTag::ClassCOrMatching
                | ClassTag::Complete
                | ClassTag::Empty
        )
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Equivalence => f.write_str("equiv"),
            ClassTag::CompleteMultipartite => f.write_str("multipartite"),
            ClassTag::Split => f.write_str("split"),
            ClassTag::Cograph => f.write_str("cograph"),
            ClassTag::Matching => f.write_str("d1"),
            ClassTag::BoundedDegree(k) => write!(f, "dk:{k}"),
            ClassTag::AtMostEdges(k) => write!(f, "ek:{k}"),
            ClassTag::ClassL => f.write_str("L"),
            ClassTag::ClassC => f.write_str("C"),
            ClassTag::ClassCOrMatching => f.write_str("C|d1"),
            ClassTag::Complete => f.write_str("complete"),
            ClassTag::Empty => f.write_str("empty"),
        }
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::UnsupportedTag(s.to_string()))
        };
        Ok(match s {
            "equiv" => ClassTag::Equivalence,
            "multipartite" => ClassTag::CompleteMultipartite,
            "split" => ClassTag::Split,
            "cograph" => ClassTag::Cograph,
            "d1" => ClassTag::Matching,
            "L" => ClassTag::ClassL,
            "C" => ClassTag::ClassC,
            "C|d1" => ClassTag::ClassCOrMatching,
            "complete" => ClassTag::Complete,
            "empty" => ClassTag::Empty,
            _ => {
                if let Some(rest) = s.strip_prefix("dk:") {
                    ClassTag::BoundedDegree(param(rest)?)
                } else if let Some(rest) = s.strip_prefix("ek:") {
                    ClassTag::AtMostEdges(param(rest)?)
                } else {
                    return Err(Error::UnsupportedTag(s.to_string()));
                }
            }
        })
    }
}

impl Serialize for ClassTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_equivalence(g: &Graph) -> bool {
    Partition::of_equivalence_graph(g).is_ok()
}

/// The clique and independent set of a split partition, if `g` is split.
///
/// Hammer–Simeone: with degrees `d_1 ≥ ... ≥ d_n` and `m = max{i : d_i ≥ i-1}`,
/// `g` is split iff `Σ_{i≤m} d_i = m(m-1) + Σ_{i>m} d_i`; the `m` highest-degree
/// vertices then form the clique.
pub fn split_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    let deg = g.degrees();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let m = (0..g.n()).filter(|&i| deg[order[i]] >= i).count();
    let head: usize = order[..m].iter().map(|&v| deg[v]).sum();
    let tail: usize = order[m..].iter().map(|&v| deg[v]).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = order[..m].to_vec();
    let mut indep = order[m..].to_vec();
    clique.sort_unstable();
    indep.sort_unstable();
    Some((clique, indep))
}

pub fn is_cograph(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let comps = g.components();
    if comps.len() > 1 {
        return comps.iter().all(|c| is_cograph(&g.induced_subgraph(c).unwrap()));
    }
    let co = g.complement();
    let cocomps = co.components();
    if cocomps.len() > 1 {
        return cocomps.iter().all(|c| is_cograph(&g.induced_subgraph(c).unwrap()));
    }
    false
}

fn big_components(g: &Graph) -> Vec<Vec<usize>> {
    g.components().into_iter().filter(|c| c.len() > 1).collect()
}

pub fn is_member(tag: ClassTag, g: &Graph) -> bool {
    match tag {
        ClassTag::Equivalence => is_equivalence(g),
        ClassTag::CompleteMultipartite => is_equivalence(&g.complement()),
        ClassTag::Split => split_partition(g).is_some(),
        ClassTag::Cograph => is_cograph(g),
        ClassTag::Matching => g.max_degree() <= 1,
        ClassTag::BoundedDegree(k) => g.max_degree() <= k,
        ClassTag::AtMostEdges(k) => g.edge_count() <= k,
        ClassTag::ClassL => {
            if g.is_complete() {
                return true;
            }
            let comps = g.components();
            comps.len() == 2 && comps.iter().any(|c| c.len() == 1) && is_equivalence(g)
        }
        ClassTag::ClassC => is_equivalence(g) && big_components(g).len() <= 1,
        ClassTag::ClassCOrMatching => is_member(ClassTag::ClassC, g) || g.max_degree() <= 1,
        ClassTag::Complete => g.is_complete(),
        ClassTag::Empty => g.is_edgeless(),
    }
}

/// Set partitions of `{0..n-1}` as restricted-growth strings, in
/// lexicographic order.
pub struct SetPartitions {
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.rgs.clone();
        // advance: bump the last position that may still grow
        let n = self.rgs.len();
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i - 1]);
        }
        self.done = true;
        for i in (1..n).rev() {
            if self.rgs[i] <= prefix_max[i] {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                self.done = false;
                break;
            }
        }
        Some(out)
    }
}

pub fn set_partitions(n: usize) -> Result<SetPartitions> {
    ensure_size("vertex count for set-partition enumeration", n, ENUM_PARTITION_MAX_N)?;
    Ok(SetPartitions {
        rgs: vec![0; n],
        done: false,
    })
}

/// Every labeled equivalence graph on `n` vertices with its partition.
pub fn equivalence_graphs(n: usize) -> Result<impl Iterator<Item = (Partition, Graph)>> {
    Ok(set_partitions(n)?.map(|rgs| {
        let p = Partition::from_labels(&rgs);
        let g = p.equivalence_graph();
        (p, g)
    }))
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn filtered_all_graphs(n: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    let pairs = all_pairs(n);
    ensure_size("vertex pairs for exhaustive enumeration", pairs.len(), ENUM_FILTER_MAX_PAIRS)?;
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .expect("pairs in range");
        if keep(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

fn matchings(n: usize) -> Vec<Graph> {
    fn go(n: usize, v: usize, used: &mut Vec<bool>, edges: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        if v == n {
            out.push(Graph::from_edges(n, edges.iter().copied()).unwrap());
            return;
        }
        if used[v] {
            return go(n, v + 1, used, edges, out);
        }
        go(n, v + 1, used, edges, out);
        for u in v + 1..n {
            if !used[u] {
                used[u] = true;
                edges.push((v, u));
                go(n, v + 1, used, edges, out);
                edges.pop();
                used[u] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

fn class_c(n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(n)];
    for mask in 0u64..1 << n {
        if mask.count_ones() >= 2 {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            out.push(Graph::empty(n).subgraph_complement(&members).unwrap());
        }
    }
    out
}

fn class_l(n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::complete(n)];
    if n >= 2 {
        for v in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let g = Graph::empty(n).subgraph_complement(&rest).unwrap();
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

fn at_most_edges(n: usize, k: usize) -> Result<Vec<Graph>> {
    let pairs = all_pairs(n);
    let k = k.min(pairs.len());
    let needed: u128 = (0..=k).map(|i| binomial(pairs.len(), i)).sum();
    if needed > ENUM_EDGE_SUBSET_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: ENUM_EDGE_SUBSET_BUDGET,
        });
    }
    let mut out = Vec::with_capacity(needed as usize);
    fn go(n: usize, pairs: &[(usize, usize)], start: usize, left: usize, chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        out.push(Graph::from_edges(n, chosen.iter().copied()).unwrap());
        if left == 0 {
            return;
        }
        for i in start..pairs.len() {
            chosen.push(pairs[i]);
            go(n, pairs, i + 1, left - 1, chosen, out);
            chosen.pop();
        }
    }
    go(n, &pairs, 0, k, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Every labeled member of the class on `{0..n-1}`, each exactly once.
pub fn enumerate(tag: ClassTag, n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    let partition_bound = |n| ensure_size("vertex count for enumeration", n, ENUM_PARTITION_MAX_N);
    Ok(match tag {
        ClassTag::Equivalence => Box::new(equivalence_graphs(n)?.map(|(_, g)| g)),
        ClassTag::CompleteMultipartite => Box::new(equivalence_graphs(n)?.map(|(_, g)| g.complement())),
        ClassTag::Matching => {
            partition_bound(n)?;
            Box::new(matchings(n).into_iter())
        }
        ClassTag::ClassC => {
            partition_bound(n)?;
            Box::new(class_c(n).into_iter())
        }
        ClassTag::ClassL => {
            partition_bound(n)?;
            Box::new(class_l(n).into_iter())
        }
        ClassTag::ClassCOrMatching => {
            partition_bound(n)?;
            let extra = matchings(n).into_iter().filter(|g| g.edge_count() >= 2);
            Box::new(class_c(n).into_iter().chain(extra))
        }
        ClassTag::Complete => Box::new(std::iter::once(Graph::complete(n))),
        ClassTag::Empty => Box::new(std::iter::once(Graph::empty(n))),
        ClassTag::AtMostEdges(k) => Box::new(at_most_edges(n, k)?.into_iter()),
        ClassTag::BoundedDegree(_) | ClassTag::Split | ClassTag::Cograph => {
            Box::new(filtered_all_graphs(n, |g| is_member(tag, g))?.into_iter())
        }
    })
}

/// Random set partition by sequential insertion: vertex `i` joins an existing
/// block with probability proportional to its size, or opens a new block with
/// probability `1/(i+1)`. Not uniform over partitions.
pub fn random_partition(n: usize, rng: &mut impl Rng) -> Partition {
    let mut labels = Vec::with_capacity(n);
    let mut sizes: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut r = rng.gen_range(0..=i);
        let mut block = sizes.len();
        for (b, &s) in sizes.iter().enumerate() {
            if r < s {
                block = b;
                break;
            }
            r -= s;
        }
        if block == sizes.len() {
            sizes.push(0);
        }
        sizes[block] += 1;
        labels.push(block);
    }
    Partition::from_labels(&labels)
}

/// A random split graph with its clique side: each vertex joins the clique
/// with probability 1/2, and clique–independent pairs are edges with
/// probability 1/2.
pub fn random_split(n: usize, rng: &mut impl Rng) -> (Graph, Vec<bool>) {
    let in_clique: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let g = Graph::from_fn(n, |u, v| match (in_clique[u], in_clique[v]) {
        (true, true) => true,
        (false, false) => false,
        _ => rng.gen_bool(0.5),
    });
    (g, in_clique)
}

pub fn random_member_with(tag: ClassTag, n: usize, rng: &mut impl Rng) -> Result<Graph> {
    Ok(match tag {
        ClassTag::Equivalence => random_partition(n, rng).equivalence_graph(),
        ClassTag::CompleteMultipartite => random_partition(n, rng).equivalence_graph().complement(),
        ClassTag::Split => random_split(n, rng).0,
        ClassTag::Matching => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let m = rng.gen_range(0..=n / 2);
            Graph::from_edges(n, (0..m).map(|i| (order[2 * i], order[2 * i + 1])))?
        }
        ClassTag::BoundedDegree(k) => {
            let mut pairs = all_pairs(n);
            pairs.shuffle(rng);
            let mut deg = vec![0; n];
            let mut edges = Vec::new();
            for (u, v) in pairs {
                if deg[u] < k && deg[v] < k && rng.gen_bool(0.5) {
                    deg[u] += 1;
                    deg[v] += 1;
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, edges)?
        }
        ClassTag::ClassC => {
            let members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            Graph::empty(n).subgraph_complement(&members)?
        }
        ClassTag::AtMostEdges(k) => {
            let mut pairs = all_pairs(n);
            pairs.shuffle(rng);
            let m = rng.gen_range(0..=k.min(pairs.len()));
            Graph::from_edges(n, pairs.into_iter().take(m))?
        }
        ClassTag::Complete => Graph::complete(n),
        ClassTag::Empty => Graph::empty(n),
        other => return Err(Error::UnsupportedTag(other.to_string())),
    })
}

/// A seeded random member; the same `(tag, n, seed)` always gives the same graph.
pub fn random_member(tag: ClassTag, n: usize, seed: u64) -> Result<Graph> {
    random_member_with(tag, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// The inversion graph of `pi`: `i ~ j` iff `(i - j)(pi(i) - pi(j)) < 0`.
pub fn permutation_graph(pi: &[usize]) -> Result<Graph> {
    check_permutation(pi, pi.len())?;
    Ok(Graph::from_fn(pi.len(), |i, j| pi[i] > pi[j]))
}
