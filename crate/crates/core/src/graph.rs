//! Labeled simple graphs on `{0..n-1}` and the boolean operations on them.
//!
//! Adjacency is stored as bit-packed rows, so union, intersection, XOR and
//! arbitrary boolean functions are word-parallel row operations. Graphs are
//! immutable values: every operation returns a fresh graph.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfn::BooleanFunction;
use crate::error::{ensure_size, Error, Result};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 1 << 16;

/// Default size bound for [`is_isomorphic`].
pub const ISOMORPHISM_MAX_N: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// The edgeless graph `O_n`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds {MAX_VERTICES}");
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        ensure_size("vertex count", n, MAX_VERTICES)?;
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRangeVertex { vertex: w, n });
                }
            }
            if u != v {
                g.set(u, v, true);
            }
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate, evaluated once per pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// The cycle `C_n` on `0-1-...-(n-1)-0` (`n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// The path `P_n` on `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// `K_{a,b}` with parts `{0..a-1}` and `{a..a+b-1}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Graph {
        let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
        Graph::from_edges(10, edges).expect("static edge list")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(u + shift, v + shift, true);
        }
        g
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, value: bool) {
        let (iu, bu) = (u * self.words + v / 64, 1u64 << (v % 64));
        let (iv, bv) = (v * self.words + u / 64, 1u64 << (u % 64));
        if value {
            self.rows[iu] |= bu;
            self.rows[iv] |= bv;
        } else {
            self.rows[iu] &= !bu;
            self.rows[iv] &= !bv;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// The packed adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Adjacency rows as single words; only for graphs on at most 64 vertices.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        ensure_size("vertex count for word-mask algorithms", self.n, 64)?;
        Ok(if self.words == 1 {
            self.rows.clone()
        } else {
            vec![0; self.n]
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        Ok(g)
    }

    fn clear_diagonal_and_tail(&mut self) {
        let tail = self.n % 64;
        for v in 0..self.n {
            let base = v * self.words;
            self.rows[base + v / 64] &= !(1u64 << (v % 64));
            if tail != 0 {
                self.rows[base + self.words - 1] &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            words: self.words,
            rows: self.rows.iter().map(|w| !w).collect(),
        };
        g.clear_diagonal_and_tail();
        g
    }

    fn check_vertices(&self, set: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(Error::OutOfRangeVertex { vertex: v, n: self.n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(())
    }

    /// Complements the edges inside `set`.
    pub fn subgraph_complement(&self, set: &[usize]) -> Result<Graph> {
        for &v in set {
            if v >= self.n {
                return Err(Error::OutOfRangeVertex { vertex: v, n: self.n });
            }
        }
        let mut mask = vec![0u64; self.words];
        for &v in set {
            mask[v / 64] |= 1 << (v % 64);
        }
        let mut g = self.clone();
        for &v in set {
            let base = v * self.words;
            for (w, m) in mask.iter().enumerate() {
                g.rows[base + w] ^= m;
            }
        }
        // rows of duplicated vertices were flipped twice; rebuild from the unique set
        if set.len() != mask.iter().map(|w| w.count_ones() as usize).sum::<usize>() {
            let mut unique: Vec<usize> = set.to_vec();
            unique.sort_unstable();
            unique.dedup();
            return self.subgraph_complement(&unique);
        }
        g.clear_diagonal_and_tail();
        Ok(g)
    }

    /// Local complementation centred at `v`: complements the subgraph on `N(v)`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::OutOfRangeVertex { vertex: v, n: self.n });
        }
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        self.subgraph_complement(&nbrs)
    }

    /// Complements the edges inside every block of `p`.
    pub fn partition_complement(&self, p: &Partition) -> Result<Graph> {
        if p.n() != self.n {
            return Err(Error::MismatchedVertexCount {
                expected: self.n,
                found: p.n(),
            });
        }
        combine(CombineOp::Xor, &[self.clone(), p.equivalence_graph()])
    }

    /// The subgraph induced by the ordered vertex list `set`; vertex `i` of the
    /// result is `set[i]`.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Graph> {
        self.check_vertices(set)?;
        let mut g = Graph::empty(set.len());
        for (i, &u) in set.iter().enumerate() {
            for (j, &v) in set.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.non_edge_count() == 0
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    /// Complete or edgeless.
    pub fn is_homogeneous(&self) -> bool {
        self.is_complete() || self.is_edgeless()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

/// A partition of `{0..n-1}` into nonempty blocks, blocks sorted internally and
/// ordered by minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v >= n {
                    return Err(Error::OutOfRangeVertex { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two blocks")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { n, blocks })
    }

    /// Builds the partition whose blocks are the level sets of `labels`.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        let mut blocks: Vec<Vec<usize>> = by_label.into_values().collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            n,
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// The one-block partition (empty when `n = 0`).
    pub fn whole(n: usize) -> Partition {
        Partition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    /// The blocks of an equivalence graph, i.e. its connected components.
    pub fn of_equivalence_graph(g: &Graph) -> Result<Partition> {
        let blocks = g.components();
        for block in &blocks {
            for (i, &u) in block.iter().enumerate() {
                if block[i + 1..].iter().any(|&v| !g.has_edge(u, v)) {
                    return Err(Error::NotEquivalenceGraph);
                }
            }
        }
        Ok(Partition { n: g.n(), blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = i;
            }
        }
        labels
    }

    /// The equivalence graph whose maximal cliques are the blocks.
    pub fn equivalence_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for block in &self.blocks {
            let mut mask = vec![0u64; g.words];
            for &v in block {
                mask[v / 64] |= 1 << (v % 64);
            }
            for &v in block {
                let base = v * g.words;
                g.rows[base..base + g.words].copy_from_slice(&mask);
            }
        }
        g.clear_diagonal_and_tail();
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CombineOp {
    Union,
    Intersect,
    Xor,
}

impl CombineOp {
    #[inline]
    pub fn apply(self, a: u64, b: u64) -> u64 {
        match self {
            CombineOp::Union => a | b,
            CombineOp::Intersect => a & b,
            CombineOp::Xor => a ^ b,
        }
    }

    /// The fold of this operation as a boolean function of arity `k`.
    pub fn as_function(self, k: usize) -> Result<BooleanFunction> {
        match self {
            CombineOp::Union => BooleanFunction::or(k),
            CombineOp::Intersect => BooleanFunction::and(k),
            CombineOp::Xor => BooleanFunction::parity(k),
        }
    }
}

impl fmt::Display for CombineOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CombineOp::Union => "union",
            CombineOp::Intersect => "intersect",
            CombineOp::Xor => "xor",
        })
    }
}

impl std::str::FromStr for CombineOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "union" | "or" => Ok(CombineOp::Union),
            "intersect" | "intersection" | "and" => Ok(CombineOp::Intersect),
            "xor" => Ok(CombineOp::Xor),
            _ => Err(Error::UnsupportedExpression(s.to_string())),
        }
    }
}

fn common_n(graphs: &[Graph]) -> Result<usize> {
    let first = graphs.first().ok_or(Error::EmptyInput)?;
    for g in graphs {
        if g.n != first.n {
            return Err(Error::MismatchedVertexCount {
                expected: first.n,
                found: g.n,
            });
        }
    }
    Ok(first.n)
}

/// The k-union, k-intersection or k-XOR of `graphs`.
pub fn combine(op: CombineOp, graphs: &[Graph]) -> Result<Graph> {
    common_n(graphs)?;
    let mut out = graphs[0].clone();
    for g in &graphs[1..] {
        for (a, b) in out.rows.iter_mut().zip(&g.rows) {
            *a = op.apply(*a, *b);
        }
    }
    Ok(out)
}

/// Applies `f` entrywise: `result(u,v) = f(H_1(u,v), ..., H_k(u,v))` for `u != v`.
///
/// An arity-0 function needs the vertex count separately; see
/// [`apply_boolean_on`].
pub fn apply_boolean(f: &BooleanFunction, graphs: &[Graph]) -> Result<Graph> {
    if f.arity() != graphs.len() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: graphs.len(),
        });
    }
    let n = common_n(graphs)?;
    apply_boolean_on(n, f, graphs)
}

/// Like [`apply_boolean`], but with an explicit vertex count so that constant
/// (arity-0) functions are allowed.
pub fn apply_boolean_on(n: usize, f: &BooleanFunction, graphs: &[Graph]) -> Result<Graph> {
    if f.arity() != graphs.len() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: graphs.len(),
        });
    }
    for g in graphs {
        if g.n != n {
            return Err(Error::MismatchedVertexCount {
                expected: n,
                found: g.n,
            });
        }
    }
    let mut out = Graph::empty(n);
    let minterms: Vec<usize> = (0..f.table_len()).filter(|&i| f.eval_index(i)).collect();
    for (w, slot) in out.rows.iter_mut().enumerate() {
        let mut acc = 0u64;
        for &m in &minterms {
            let mut term = !0u64;
            for (i, g) in graphs.iter().enumerate() {
                let x = g.rows[w];
                term &= if m >> i & 1 == 1 { x } else { !x };
            }
            acc |= term;
        }
        *slot = acc;
    }
    out.clear_diagonal_and_tail();
    Ok(out)
}

/// Isomorphism test for graphs up to [`ISOMORPHISM_MAX_N`] vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with_limit(g, h, ISOMORPHISM_MAX_N)
}

/// Colour refinement on both graphs with a shared colour dictionary, then a
/// backtracking search for a colour-preserving adjacency-preserving bijection.
pub fn is_isomorphic_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    ensure_size("vertex count for isomorphism", g.n.max(h.n), limit)?;
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let n = g.n;
    let (cg, ch) = refine_colors(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(false);
    }
    // map g-vertices in order of rarest colour first
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &cg {
        *count.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (count[&cg[v]], cg[v], v));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_iso(g, h, &cg, &ch, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_iso(g, h, cg, ch, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

fn refine_colors(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = g.degrees();
    let mut ch: Vec<usize> = h.degrees();
    loop {
        let mut dict: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let signature = |graph: &Graph, colors: &[usize], v: usize| {
            let mut s: Vec<usize> = graph.neighbors(v).map(|u| colors[u]).collect();
            s.sort_unstable();
            (colors[v], s)
        };
        let sg: Vec<_> = (0..g.n).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n).map(|v| signature(h, &ch, v)).collect();
        for s in sg.iter().chain(&sh) {
            let next = dict.len();
            dict.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| dict[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| dict[s]).collect();
        let before = distinct(&cg, &ch);
        let after = distinct(&ng, &nh);
        cg = ng;
        ch = nh;
        if after == before {
            return (cg, ch);
        }
    }
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        Graph::from_fn(n, |_, _| rng.gen_bool(0.5))
    }

    #[test]
    fn xor_of_c5_and_k5_is_complement() {
        let c5 = Graph::cycle(5);
        let x = combine(CombineOp::Xor, &[c5.clone(), Graph::complete(5)]).unwrap();
        assert_eq!(x, c5.complement());
        assert!(is_isomorphic(&x, &c5).unwrap());
    }

    #[test]
    fn union_is_idempotent() {
        let g = Graph::petersen();
        assert_eq!(combine(CombineOp::Union, &[g.clone(), g.clone()]).unwrap(), g);
    }

    #[test]
    fn two_matchings_xor_to_c4() {
        let m1 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let m2 = Graph::from_edges(4, [(1, 2), (3, 0)]).unwrap();
        let x = combine(CombineOp::Xor, &[m1, m2]).unwrap();
        assert_eq!(x, Graph::cycle(4));
    }

    #[test]
    fn combine_errors() {
        assert_eq!(combine(CombineOp::Union, &[]), Err(Error::EmptyInput));
        assert!(matches!(
            combine(CombineOp::Union, &[Graph::empty(3), Graph::empty(4)]),
            Err(Error::MismatchedVertexCount { .. })
        ));
    }

    #[test]
    fn apply_boolean_examples() {
        let one = BooleanFunction::constant(1, true).unwrap();
        assert_eq!(apply_boolean(&one, &[Graph::path(3)]).unwrap(), Graph::complete(3));

        // x1 AND NOT x2 on table index x1 + 2*x2: only index 1 is true
        let f = BooleanFunction::from_table(2, 0b0010).unwrap();
        let e01 = Graph::from_edges(3, [(0, 1)]).unwrap();
        let g = apply_boolean(&f, &[Graph::complete(3), e01]).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);

        assert!(matches!(
            apply_boolean(&f, &[Graph::complete(3)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn apply_boolean_matches_entrywise_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..80);
            let k = rng.gen_range(1..4);
            let table = rng.gen_range(0..1u64 << (1 << k));
            let f = BooleanFunction::from_table(k, table).unwrap();
            let hs: Vec<Graph> = (0..k).map(|_| random_graph(n, &mut rng)).collect();
            let g = apply_boolean(&f, &hs).unwrap();
            for u in 0..n {
                assert!(!g.has_edge(u, u));
                for v in 0..n {
                    if u != v {
                        let idx = hs
                            .iter()
                            .enumerate()
                            .map(|(i, h)| (h.has_edge(u, v) as usize) << i)
                            .sum::<usize>();
                        assert_eq!(g.has_edge(u, v), f.eval_index(idx));
                    }
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(6).complement(), Graph::empty(6));
        let g = Graph::petersen();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement(), combine(CombineOp::Xor, &[g.clone(), Graph::complete(10)]).unwrap());
        // crosses a word boundary
        let big = Graph::path(130);
        assert_eq!(big.complement().edge_count(), 130 * 129 / 2 - 129);
        assert_eq!(big.complement().complement(), big);
    }

    fn local_complement_direct(g: &Graph, v: usize) -> Graph {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        Graph::from_fn(g.n(), |a, b| {
            let inside = nbrs.contains(&a) && nbrs.contains(&b);
            g.has_edge(a, b) != inside
        })
    }

    #[test]
    fn subgraph_complement_examples() {
        let g = Graph::cycle(6);
        assert_eq!(g.subgraph_complement(&[]).unwrap(), g);
        assert_eq!(g.subgraph_complement(&[3]).unwrap(), g);
        assert_eq!(Graph::empty(5).subgraph_complement(&[0, 1, 2, 3, 4]).unwrap(), Graph::complete(5));
        assert!(matches!(g.subgraph_complement(&[6]), Err(Error::OutOfRangeVertex { .. })));

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_graph(8, &mut rng);
            let v = rng.gen_range(0..8);
            assert_eq!(g.local_complement(v).unwrap(), local_complement_direct(&g, v));
        }
    }

    #[test]
    fn partition_complement_examples() {
        let g = Graph::petersen();
        assert_eq!(g.partition_complement(&Partition::singletons(10)).unwrap(), g);
        assert_eq!(Graph::empty(7).partition_complement(&Partition::whole(7)).unwrap(), Graph::complete(7));
        let p = Partition::new(10, vec![vec![0, 4, 5], vec![1, 2], vec![3, 6, 7, 8, 9]]).unwrap();
        let once = g.partition_complement(&p).unwrap();
        assert_ne!(once, g);
        assert_eq!(once.partition_complement(&p).unwrap(), g);
        assert!(matches!(
            g.partition_complement(&Partition::singletons(3)),
            Err(Error::MismatchedVertexCount { .. })
        ));
        // one non-singleton block reduces to subgraph complementation
        let q = Partition::new(10, vec![vec![1, 3, 8], vec![0], vec![2], vec![4], vec![5], vec![6], vec![7], vec![9]]).unwrap();
        assert_eq!(g.partition_complement(&q).unwrap(), g.subgraph_complement(&[1, 3, 8]).unwrap());
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = Graph::petersen();
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        assert_eq!(Graph::complete(5).induced_subgraph(&[0, 1]).unwrap(), Graph::complete(2));
        let c5 = Graph::cycle(5);
        let p4 = Graph::path(4);
        for skip in 0..5 {
            let s: Vec<usize> = (0..5).filter(|&v| v != skip).collect();
            assert!(is_isomorphic(&c5.induced_subgraph(&s).unwrap(), &p4).unwrap());
        }
        assert_eq!(g.induced_subgraph(&[1, 1]), Err(Error::DuplicateVertex(1)));
        assert!(matches!(g.induced_subgraph(&[10]), Err(Error::OutOfRangeVertex { .. })));
    }

    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        fn permute(k: usize, perm: &mut Vec<usize>, g: &Graph, h: &Graph) -> bool {
            if k == perm.len() {
                return g.relabel(perm).unwrap() == *h;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if permute(k + 1, perm, g, h) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        g.n() == h.n() && permute(0, &mut (0..g.n()).collect(), g, h)
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = Graph::cycle(5);
        assert!(brute_isomorphic(&c5, &c5.complement()));
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(n, &mut rng);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert!(is_isomorphic(&g, &g.relabel(&perm).unwrap()).unwrap());
        }
        assert!(matches!(
            is_isomorphic(&Graph::empty(13), &Graph::empty(13)),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn isomorphism_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let g = random_graph(n, &mut rng);
            let h = random_graph(n, &mut rng);
            assert_eq!(is_isomorphic(&g, &h).unwrap(), brute_isomorphic(&g, &h), "{g:?} {h:?}");
        }
        // regular graphs defeat colour refinement alone
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!is_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        let p = Partition::new(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(Partition::of_equivalence_graph(&p.equivalence_graph()).unwrap(), p);
        assert_eq!(Partition::of_equivalence_graph(&Graph::path(3)), Err(Error::NotEquivalenceGraph));
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(n: usize) -> impl Strategy<Value = Graph> {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    }

    fn arb_pair() -> impl Strategy<Value = (Graph, Graph)> {
        (1usize..20).prop_flat_map(|n| (arb_graph(n), arb_graph(n)))
    }

    proptest! {
        #[test]
        fn xor_commutes_and_cancels((g, h) in arb_pair()) {
            let gh = combine(CombineOp::Xor, &[g.clone(), h.clone()]).unwrap();
            let hg = combine(CombineOp::Xor, &[h, g.clone()]).unwrap();
            prop_assert_eq!(gh, hg);
            prop_assert!(combine(CombineOp::Xor, &[g.clone(), g]).unwrap().is_edgeless());
        }

        #[test]
        fn projection_returns_input((g, h) in arb_pair(), i in 0usize..2) {
            let f = BooleanFunction::projection(2, i + 1).unwrap();
            let out = apply_boolean(&f, &[g.clone(), h.clone()]).unwrap();
            prop_assert_eq!(out, if i == 0 { g } else { h });
        }

        #[test]
        fn apply_commutes_with_induced_subgraph(
            (g, h) in arb_pair(),
            table in 0u64..16,
            picks in proptest::collection::vec(any::<proptest::sample::Index>(), 0..8),
        ) {
            let f = BooleanFunction::from_table(2, table).unwrap();
            let mut s: Vec<usize> = picks.iter().map(|i| i.index(g.n())).collect();
            s.sort_unstable();
            s.dedup();
            let whole = apply_boolean(&f, &[g.clone(), h.clone()]).unwrap();
            let parts = [g.induced_subgraph(&s).unwrap(), h.induced_subgraph(&s).unwrap()];
            let n = s.len();
            prop_assert_eq!(
                whole.induced_subgraph(&s).unwrap(),
                apply_boolean_on(n, &f, &parts).unwrap()
            );
        }
    }
}
