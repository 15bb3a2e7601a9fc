//! Matchings decomposition from a (Δ+1)-edge-colouring (Misra–Gries).

use super::{constant, Decomposition};
use crate::boolfn::BooleanFunction;
use crate::classes::ClassTag;
use crate::error::{ensure_size, Result};
use crate::graph::Graph;

pub const VIZING_MAX_N: usize = 4096;

const NONE: u32 = u32::MAX;

struct Colouring {
    k: usize,
    // at[v * k + c]: the neighbour joined to v by an edge of colour c
    at: Vec<u32>,
}

impl Colouring {
    fn new(n: usize, k: usize) -> Colouring {
        Colouring { k, at: vec![NONE; n * k] }
    }

    fn nb(&self, v: usize, c: usize) -> Option<usize> {
        let x = self.at[v * self.k + c];
        (x != NONE).then_some(x as usize)
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v * self.k + c] == NONE
    }

    fn free(&self, v: usize) -> usize {
        (0..self.k).find(|&c| self.is_free(v, c)).expect("a vertex of degree ≤ Δ has a free colour among Δ+1")
    }

    fn colour_of(&self, u: usize, v: usize) -> Option<usize> {
        (0..self.k).find(|&c| self.at[u * self.k + c] == v as u32)
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.at[u * self.k + c] = v as u32;
        self.at[v * self.k + c] = u as u32;
    }

    fn unset(&mut self, u: usize, v: usize, c: usize) {
        self.at[u * self.k + c] = NONE;
        self.at[v * self.k + c] = NONE;
    }

    fn is_fan(&self, x: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| match self.colour_of(x, w[1]) {
            Some(c) => self.is_free(w[0], c),
            None => false,
        })
    }

    fn colour_edge(&mut self, x: usize, v: usize) {
        // maximal fan at x starting with the uncoloured edge xv
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = (0..self.k).find_map(|c| {
                let z = self.nb(x, c)?;
                (self.is_free(last, c) && !fan.contains(&z)).then_some(z)
            });
            match next {
                Some(z) => fan.push(z),
                None => break,
            }
        }
        let c = self.free(x);
        let d = self.free(*fan.last().unwrap());

        // invert the cd-path starting at x
        let mut path = Vec::new();
        let (mut cur, mut col) = (x, d);
        while let Some(next) = self.nb(cur, col) {
            path.push((cur, next, col));
            cur = next;
            col = if col == d { c } else { d };
        }
        for &(a, b, col) in &path {
            self.unset(a, b, col);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }

        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan(x, &fan[..=i]))
            .expect("Misra–Gries guarantees a fan prefix ending at a vertex missing d");
        // rotate the prefix, then colour its last edge d
        for i in 0..w {
            let ci = self.colour_of(x, fan[i + 1]).expect("fan edges are coloured");
            if let Some(old) = self.colour_of(x, fan[i]) {
                self.unset(x, fan[i], old);
            }
            self.unset(x, fan[i + 1], ci);
            self.set(x, fan[i], ci);
        }
        if let Some(old) = self.colour_of(x, fan[w]) {
            self.unset(x, fan[w], old);
        }
        self.set(x, fan[w], d);
    }
}

/// A proper edge colouring with at most Δ+1 colours; `colour[i]` belongs to
/// `g.edges()[i]`.
pub fn edge_colouring(g: &Graph) -> Result<Vec<usize>> {
    ensure_size("vertex count for edge colouring", g.n(), VIZING_MAX_N)?;
    let k = g.max_degree() + 1;
    let mut col = Colouring::new(g.n(), k);
    let edges = g.edges();
    for &(u, v) in &edges {
        col.colour_edge(u, v);
    }
    // empty the extra colour where a lower one is free at both ends
    if k > 1 {
        let top = k - 1;
        for &(u, v) in &edges {
            if col.colour_of(u, v) == Some(top) {
                if let Some(c) = (0..top).find(|&c| col.is_free(u, c) && col.is_free(v, c)) {
                    col.unset(u, v, top);
                    col.set(u, v, c);
                }
            }
        }
    }
    Ok(edges.iter().map(|&(u, v)| col.colour_of(u, v).expect("all edges coloured")).collect())
}

fn matchings_from(g: &Graph, colours: &[usize]) -> Vec<Graph> {
    let edges = g.edges();
    let k = colours.iter().max().map_or(0, |&c| c + 1);
    (0..k)
        .map(|c| {
            Graph::from_edges(g.n(), edges.iter().zip(colours).filter(|(_, &x)| x == c).map(|(&e, _)| e))
                .expect("edges in range")
        })
        .filter(|m| !m.is_edgeless())
        .collect()
}

fn decompose_with(g: &Graph, colour: impl Fn(&Graph) -> Result<Vec<usize>>) -> Result<Decomposition> {
    let co = g.complement();
    let negate = g.max_degree() > co.max_degree();
    let base = if negate { &co } else { g };
    let parts = matchings_from(base, &colour(base)?);
    let f = if parts.is_empty() {
        constant(negate)
    } else {
        let or = BooleanFunction::or(parts.len())?;
        if negate {
            or.negate()
        } else {
            or
        }
    };
    Decomposition::certify(g, f, parts.into_iter().map(|m| (m, ClassTag::Matching)).collect())
}

/// `g` (or its complement, whichever has the smaller maximum degree; ties go to
/// `g`) as the union of at most Δ+1 matchings; `f` is OR, negated in the
/// complement case. Fails with `SizeLimitExceeded` when more matchings are
/// needed than a boolean function can take.
pub fn vizing_matchings(g: &Graph) -> Result<Decomposition> {
    decompose_with(g, edge_colouring)
}

/// Like [`vizing_matchings`] but colouring edges greedily, which may need up to
/// 2Δ−1 matchings.
pub fn greedy_matchings(g: &Graph) -> Result<Decomposition> {
    decompose_with(g, |h| {
        let k = (2 * h.max_degree()).max(1);
        let mut col = Colouring::new(h.n(), k);
        let edges = h.edges();
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            let c = (0..k).find(|&c| col.is_free(u, c) && col.is_free(v, c)).expect("2Δ−1 colours suffice");
            col.set(u, v, c);
            out.push(c);
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::chromatic_number;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn proper(g: &Graph, colours: &[usize]) -> bool {
        let edges = g.edges();
        (0..edges.len()).all(|i| {
            (i + 1..edges.len()).all(|j| {
                let (a, b) = (edges[i], edges[j]);
                let share = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
                !share || colours[i] != colours[j]
            })
        })
    }

    // chromatic index via the line graph
    fn chromatic_index(g: &Graph) -> usize {
        let e = g.edges();
        let line = Graph::from_fn(e.len(), |i, j| {
            let (a, b) = (e[i], e[j]);
            a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
        });
        chromatic_number(&line).unwrap()
    }

    #[test]
    fn examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(edge_colouring(&c4).unwrap().iter().max().unwrap() + 1, 2);
        // Δ(C_4) = 2 > Δ(2K_2) = 1: one matching, negated
        let d = vizing_matchings(&c4).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert!(d.alpha);
        let d = vizing_matchings(&Graph::path(5)).unwrap();
        assert!(d.parts.len() <= 3);
        assert!(!d.alpha);

        let k4 = Graph::complete(4);
        assert_eq!(chromatic_index(&k4), 3);
        // K_4 has Δ = 3 but its complement is edgeless, so the complement branch is taken
        let d = vizing_matchings(&k4).unwrap();
        assert!(d.certified && d.alpha && d.parts.is_empty());
        let cols = edge_colouring(&k4).unwrap();
        assert_eq!(cols.iter().max().unwrap() + 1, 3);

        let p = Graph::petersen();
        let d = vizing_matchings(&p).unwrap();
        assert!(d.certified && !d.alpha);
        assert!(d.parts.len() <= 4);
    }

    #[test]
    fn colourings_are_proper_and_within_vizing_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let n = rng.gen_range(1..=16);
            let p = rng.gen_range(0.05..0.95);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            let cols = edge_colouring(&g).unwrap();
            assert!(proper(&g, &cols));
            assert!(cols.iter().all(|&c| c <= g.max_degree()));
        }
    }

    #[test]
    fn decompositions_certify() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..200 {
            let n = rng.gen_range(1..=14);
            let mut g = bounded_degree(n, rng.gen_range(0..=6), &mut rng);
            if rng.gen_bool(0.5) {
                g = g.complement();
            }
            let d = vizing_matchings(&g).unwrap();
            let branch = if d.alpha { g.complement() } else { g.clone() };
            assert!(d.parts.len() <= branch.max_degree() + 1);
            if 2 * branch.max_degree() <= 8 {
                let greedy = greedy_matchings(&g).unwrap();
                assert!(greedy.certified);
                assert!(greedy.parts.len() <= (2 * branch.max_degree()).max(1));
            }
        }
    }

    fn bounded_degree(n: usize, cap: usize, rng: &mut ChaCha8Rng) -> Graph {
        let mut edges = Vec::new();
        let mut deg = vec![0; n];
        for _ in 0..n * cap {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && deg[u] < cap && deg[v] < cap && !edges.contains(&(u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u.min(v), u.max(v)));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn larger_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let g = Graph::from_fn(300, |_, _| rng.gen_bool(0.05));
        let cols = edge_colouring(&g).unwrap();
        assert!(cols.iter().all(|&c| c <= g.max_degree()));
        assert!(matches!(vizing_matchings(&g), Err(crate::Error::SizeLimitExceeded { .. })));
        let sparse = bounded_degree(300, 6, &mut rng);
        let d = vizing_matchings(&sparse).unwrap();
        assert!(d.certified && d.parts.len() <= sparse.max_degree() + 1);
    }
}
