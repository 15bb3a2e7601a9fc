//! Finite checks of the structural claims, run deterministically from a seed.
//!
//! Every failing check carries a JSON counterexample built from graph6
//! strings and function tables, so it can be re-checked by hand.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::booldim::{budget_from_env, exists_representation_with, pair_mask};
use crate::boolfn::{enumerate_functions, BooleanFunction};
use crate::classes::{equivalence_graphs, random_partition, random_split, ClassTag};
use crate::error::{Error, Result};
use crate::extremal::{Binding, ClassExpr};
use crate::graph::{apply_boolean, combine, CombineOp, Graph};
use crate::invariants::{
    chain_number, chromatic_number, clique_number, is_perfect, nested_homogeneous_sets, neighborhood_complexity,
    strong_chain_number,
};
use crate::io::to_graph6;

pub use crate::extremal::TheoremCheck;

/// Ids accepted by [`verify_theorem`], in the order [`verify_all`] reports them.
pub const CATALOGUE: [&str; 10] = [
    "perfect-2fn-equiv",
    "forbidden-multipartite",
    "c5-not-2fn-equiv",
    "speed-bound",
    "chain-sandwich",
    "nbhd-product",
    "eh-extraction",
    "e1-characterization",
    "empty-characterization",
    "meyniel-split",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessConfig {
    pub seed: u64,
    /// Largest n for the exhaustive checks over equivalence, E_0 and E_1 graphs.
    pub exhaustive_max_n: usize,
    pub speed_max_n: usize,
    pub chain_samples: usize,
    pub chain_max_n: usize,
    pub nbhd_samples: usize,
    pub nbhd_n: usize,
    pub nbhd_max_m: usize,
    pub eh_samples: usize,
    pub eh_max_n: usize,
    pub split_samples: usize,
    pub split_max_n: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            seed: 0,
            exhaustive_max_n: 6,
            speed_max_n: 5,
            chain_samples: 300,
            chain_max_n: 10,
            nbhd_samples: 200,
            nbhd_n: 8,
            nbhd_max_m: 4,
            eh_samples: 200,
            eh_max_n: 60,
            split_samples: 200,
            split_max_n: 10,
        }
    }
}

pub fn verify_theorem(id: &str) -> Result<TheoremCheck> {
    verify_theorem_with(id, &HarnessConfig::default())
}

pub fn verify_theorem_seeded(id: &str, seed: u64) -> Result<TheoremCheck> {
    verify_theorem_with(id, &HarnessConfig { seed, ..HarnessConfig::default() })
}

pub fn verify_theorem_with(id: &str, cfg: &HarnessConfig) -> Result<TheoremCheck> {
    match id {
        "perfect-2fn-equiv" => perfect_two_functions(cfg.exhaustive_max_n),
        "forbidden-multipartite" => forbidden_multipartite(),
        "c5-not-2fn-equiv" => c5_not_two_function(),
        "speed-bound" => speed_bound(cfg.speed_max_n),
        "chain-sandwich" => chain_sandwich(cfg.chain_samples, cfg.chain_max_n, cfg.seed),
        "nbhd-product" => neighborhood_product(cfg.nbhd_samples, cfg.nbhd_n, cfg.nbhd_max_m, cfg.seed),
        "eh-extraction" => eh_extraction(cfg.eh_samples, cfg.eh_max_n, cfg.seed),
        "e1-characterization" => e1_characterization(cfg.exhaustive_max_n),
        "empty-characterization" => empty_characterization(cfg.exhaustive_max_n),
        "meyniel-split" => split_intersections(cfg.split_samples, 4..=cfg.split_max_n, cfg.seed),
        other => Err(Error::UnknownTheorem(other.to_string())),
    }
}

/// Every catalogue check, run in parallel and reported in catalogue order.
pub fn verify_all(seed: u64) -> Result<Vec<TheoremCheck>> {
    let cfg = HarnessConfig { seed, ..HarnessConfig::default() };
    CATALOGUE.par_iter().map(|id| verify_theorem_with(id, &cfg)).collect()
}

fn check(id: &str, scope: String, instances: u64, counterexample: Option<serde_json::Value>) -> TheoremCheck {
    TheoremCheck {
        id: id.to_string(),
        scope,
        passed: counterexample.is_none(),
        counterexample,
        instances,
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).expect("harness graphs are small")
}

fn from_pair_mask(n: usize, mask: u64) -> Graph {
    let mut p = 0;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask >> p & 1 == 1 {
                edges.push((u, v));
            }
            p += 1;
        }
    }
    Graph::from_edges(n, edges).expect("in range")
}

fn all_pairs_mask(n: usize) -> u64 {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs == 64 {
        !0
    } else {
        (1u64 << pairs) - 1
    }
}

/// Applies a binary function to two pair masks.
fn apply2(f: &BooleanFunction, a: u64, b: u64, all: u64) -> u64 {
    let mut out = 0;
    for x in 0..4 {
        if f.eval_index(x) {
            let pa = if x & 1 == 1 { a } else { !a };
            let pb = if x & 2 == 2 { b } else { !b };
            out |= pa & pb;
        }
    }
    out & all
}

fn equivalence_masks(n: usize) -> Result<Vec<u64>> {
    Ok(equivalence_graphs(n)?.map(|(_, g)| pair_mask(&g)).collect())
}

/// All 16 binary functions of all ordered pairs of equivalence graphs on
/// `n ≤ max_n` vertices are perfect.
pub fn perfect_two_functions(max_n: usize) -> Result<TheoremCheck> {
    let functions: Vec<BooleanFunction> = enumerate_functions(2)?.collect();
    let mut instances = 0u64;
    for n in 1..=max_n {
        let all = all_pairs_mask(n);
        let masks = equivalence_masks(n)?;
        // one representative input per distinct result
        let mut results: Vec<(u64, usize, usize, usize)> = Vec::new();
        let mut seen = HashSet::new();
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                for (fi, f) in functions.iter().enumerate() {
                    instances += 1;
                    let r = apply2(f, a, b, all);
                    if seen.insert(r) {
                        results.push((r, i, j, fi));
                    }
                }
            }
        }
        let bad = results
            .par_iter()
            .map(|&(r, i, j, fi)| Ok((!is_perfect(&from_pair_mask(n, r))?).then_some((r, i, j, fi))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        if let Some((r, i, j, fi)) = bad {
            let ce = json!({
                "f": functions[fi],
                "parts": [g6(&from_pair_mask(n, masks[i])), g6(&from_pair_mask(n, masks[j]))],
                "graph": g6(&from_pair_mask(n, r)),
            });
            return Ok(check("perfect-2fn-equiv", format!("n <= {max_n}, all ordered pairs, 16 functions"), instances, Some(ce)));
        }
    }
    Ok(check("perfect-2fn-equiv", format!("n <= {max_n}, all ordered pairs, 16 functions"), instances, None))
}

/// Whether `target` is the intersection of two complete multipartite graphs
/// on its vertex set, by exhaustive search over all pairs.
pub fn is_two_multipartite_intersection(target: &Graph) -> Result<Option<(Graph, Graph)>> {
    let n = target.n();
    let all = all_pairs_mask(n);
    let t = pair_mask(target);
    let masks: Vec<u64> = equivalence_masks(n)?.into_iter().map(|m| !m & all).collect();
    for &a in &masks {
        if t & !a != 0 {
            continue;
        }
        for &b in &masks {
            if a & b == t {
                return Ok(Some((from_pair_mask(n, a), from_pair_mask(n, b))));
            }
        }
    }
    Ok(None)
}

fn forbidden_multipartite() -> Result<TheoremCheck> {
    let k3_o1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
    let three_k2 = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)])?;
    // representable graphs one step smaller, as positive controls
    let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)])?;
    let k2_o1 = Graph::complete(2).disjoint_union(&Graph::empty(1));
    let mut instances = 0;
    for forbidden in [&k3_o1, &three_k2] {
        instances += 1;
        if let Some((a, b)) = is_two_multipartite_intersection(forbidden)? {
            let ce = json!({ "graph": g6(forbidden), "parts": [g6(&a), g6(&b)], "op": "intersect" });
            return Ok(check("forbidden-multipartite", "t = 2, K_3+O_1 and 3K_2".into(), instances, Some(ce)));
        }
    }
    for control in [&two_k2, &k2_o1] {
        instances += 1;
        if is_two_multipartite_intersection(control)?.is_none() {
            let ce = json!({ "graph": g6(control), "note": "expected a representation, none found" });
            return Ok(check("forbidden-multipartite", "t = 2, K_3+O_1 and 3K_2".into(), instances, Some(ce)));
        }
    }
    Ok(check("forbidden-multipartite", "t = 2, K_3+O_1 and 3K_2, with 2K_2 and K_2+O_1 as controls".into(), instances, None))
}

fn c5_not_two_function() -> Result<TheoremCheck> {
    let c5 = Graph::cycle(5);
    let w = exists_representation_with(&c5, ClassTag::Equivalence, 2, None, budget_from_env())?;
    let ce = w.map(|w| json!({ "graph": g6(&c5), "f": w.f, "parts": w.parts }));
    Ok(check("c5-not-2fn-equiv", "all multisets of 2 equivalence graphs on 5 vertices".into(), 1, ce))
}

/// Distinct graphs obtainable as XOR, and as any binary function, of two
/// equivalence graphs on `n` vertices, with `|X^n|`.
pub fn two_function_counts(n: usize) -> Result<(usize, usize, usize)> {
    let all = all_pairs_mask(n);
    let masks = equivalence_masks(n)?;
    let functions: Vec<BooleanFunction> = enumerate_functions(2)?.collect();
    let mut xor = HashSet::new();
    let mut any = HashSet::new();
    for &a in &masks {
        for &b in &masks {
            xor.insert(a ^ b);
            for f in &functions {
                any.insert(apply2(f, a, b, all));
            }
        }
    }
    Ok((masks.len(), xor.len(), any.len()))
}

fn speed_bound(max_n: usize) -> Result<TheoremCheck> {
    for n in 1..=max_n {
        let (x, y_xor, y_any) = two_function_counts(n)?;
        let bound = 2.0 * (x as f64).log2() + 4.0;
        for (name, y) in [("xor", y_xor), ("any", y_any)] {
            if (y as f64).log2() > bound + 1e-9 {
                let ce = json!({ "n": n, "x": x, "y": y, "functions": name });
                return Ok(check("speed-bound", format!("n <= {max_n}"), n as u64, Some(ce)));
            }
        }
    }
    Ok(check("speed-bound", format!("n <= {max_n}, 2-XOR and all 2-functions of equivalence graphs"), max_n as u64, None))
}

fn chain_sandwich(samples: usize, max_n: usize, seed: u64) -> Result<TheoremCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.0..=1.0);
            Graph::from_fn(n, |_, _| rng.gen_bool(p))
        })
        .collect();
    let bad = graphs
        .par_iter()
        .map(|g| {
            let (ch, sch) = (chain_number(g)?, strong_chain_number(g)?);
            Ok((sch / 2 > ch || ch > sch).then(|| json!({ "graph": g6(g), "ch": ch, "sch": sch })))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(check("chain-sandwich", format!("{samples} random graphs, n <= {max_n}, seed {seed}"), samples as u64, bad))
}

fn traces(adj: &[u64], set: u64, outside_only: bool) -> usize {
    let mut seen = HashSet::new();
    for (v, &row) in adj.iter().enumerate() {
        if !(outside_only && set >> v & 1 == 1) {
            seen.insert(row & set);
        }
    }
    seen.len()
}

fn subsets(n: usize, m: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == m).collect()
}

/// `ν_X(m)` for equivalence graphs on `n` vertices, `m = 0..=max_m`.
pub fn equivalence_neighborhood_complexity(n: usize, max_m: usize) -> Result<Vec<usize>> {
    let graphs: Vec<Graph> = equivalence_graphs(n)?.map(|(_, g)| g).collect();
    (0..=max_m)
        .map(|m| {
            graphs
                .par_iter()
                .map(|g| neighborhood_complexity(g, m))
                .try_reduce(|| 0, |a, b| Ok(a.max(b)))
        })
        .collect()
}

/// For sampled pairs of equivalence graphs and binary functions: traces of
/// outside vertices are bounded per subset by the product of the parts'
/// traces, and `ν_G(m) ≤ ν_X(m)^2` with `ν_X` taken over all equivalence
/// graphs on the same vertex count.
fn neighborhood_product(samples: usize, n: usize, max_m: usize, seed: u64) -> Result<TheoremCheck> {
    let nu_x = equivalence_neighborhood_complexity(n, max_m)?;
    let functions: Vec<BooleanFunction> = enumerate_functions(2)?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<(BooleanFunction, Graph, Graph)> = (0..samples)
        .map(|_| {
            let f = functions[rng.gen_range(0..functions.len())];
            let a = random_partition(n, &mut rng).equivalence_graph();
            let b = random_partition(n, &mut rng).equivalence_graph();
            (f, a, b)
        })
        .collect();
    let per_m: Vec<Vec<u64>> = (1..=max_m).map(|m| subsets(n, m)).collect();
    let bad = tuples
        .par_iter()
        .map(|(f, a, b)| -> Result<Option<serde_json::Value>> {
            let g = apply_boolean(f, &[a.clone(), b.clone()])?;
            let (ga, aa, ba) = (g.neighbor_masks()?, a.neighbor_masks()?, b.neighbor_masks()?);
            for (i, sets) in per_m.iter().enumerate() {
                let m = i + 1;
                let mut nu_g = 0;
                for &s in sets {
                    let outside = traces(&ga, s, true);
                    let bound = traces(&aa, s, true) * traces(&ba, s, true);
                    if outside > bound {
                        return Ok(Some(json!({ "f": f, "parts": [g6(a), g6(b)], "subset": s, "traces": outside, "bound": bound })));
                    }
                    nu_g = nu_g.max(traces(&ga, s, false));
                }
                if nu_g > nu_x[m] * nu_x[m] {
                    return Ok(Some(json!({ "f": f, "parts": [g6(a), g6(b)], "m": m, "nu": nu_g, "nu_x": nu_x[m] })));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(check(
        "nbhd-product",
        format!("{samples} pairs of equivalence graphs with random binary f, n = {n}, m <= {max_m}, seed {seed}"),
        samples as u64,
        bad,
    ))
}

/// Nested extraction on up to three equivalence graphs: the final set is
/// homogeneous in every input, each step keeps at least the square root of the
/// previous set, and the size is at least `n^(δ^r)` for the smallest observed
/// per-step exponent `δ`.
fn eh_extraction(samples: usize, max_n: usize, seed: u64) -> Result<TheoremCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n = max_n.min(64);
    for _ in 0..samples {
        let n = rng.gen_range(2..=max_n);
        let r = rng.gen_range(1..=3);
        let graphs: Vec<Graph> = (0..r).map(|_| random_partition(n, &mut rng).equivalence_graph()).collect();
        let sets = nested_homogeneous_sets(&graphs)?;
        let last = sets.last().expect("r >= 1");
        let homogeneous = graphs.iter().all(|g| g.induced_subgraph(last).map(|h| h.is_homogeneous()).unwrap_or(false));
        let mut sizes = vec![n];
        sizes.extend(sets.iter().map(|s| s.len()));
        let step_ok = sizes.windows(2).all(|w| w[1] * w[1] >= w[0]);
        let delta = sizes
            .windows(2)
            .map(|w| if w[0] <= 1 { 1.0 } else { (w[1] as f64).ln() / (w[0] as f64).ln() })
            .fold(1.0f64, f64::min);
        let size_ok = last.len() as f64 + 1e-9 >= (n as f64).powf(delta.powi(r));
        if !(homogeneous && step_ok && size_ok) {
            let ce = json!({ "parts": graphs.iter().map(g6).collect::<Vec<_>>(), "set": last, "sizes": sizes });
            return Ok(check("eh-extraction", format!("{samples} samples"), samples as u64, Some(ce)));
        }
    }
    Ok(check("eh-extraction", format!("{samples} samples, r <= 3 equivalence graphs, n <= {max_n}, seed {seed}"), samples as u64, None))
}

fn edge_graphs(n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(n)];
    for u in 0..n {
        for v in u + 1..n {
            out.push(Graph::from_edges(n, [(u, v)]).expect("in range"));
        }
    }
    out
}

/// Both directions at `t = 4`: every 2-function of E_1 graphs has at most 4
/// edges or at most 4 non-edges, and every graph with at most 4 edges (non-edges)
/// is the OR (NOR) of its single-edge (single-non-edge) graphs.
fn e1_characterization(max_n: usize) -> Result<TheoremCheck> {
    let t = 4;
    let functions: Vec<BooleanFunction> = enumerate_functions(2)?.collect();
    let mut instances = 0u64;
    let scope = format!("n <= {max_n}, t = {t}");
    for n in 1..=max_n {
        let all = all_pairs_mask(n);
        let pairs = all.count_ones() as usize;
        let masks: Vec<u64> = edge_graphs(n).iter().map(pair_mask).collect();
        for &a in &masks {
            for &b in &masks {
                for f in &functions {
                    instances += 1;
                    let r = apply2(f, a, b, all);
                    let edges = r.count_ones() as usize;
                    if edges > t && pairs - edges > t {
                        let ce = json!({ "f": f, "parts": [g6(&from_pair_mask(n, a)), g6(&from_pair_mask(n, b))] });
                        return Ok(check("e1-characterization", scope, instances, Some(ce)));
                    }
                }
            }
        }
        for mask in 0..=all {
            let edges = mask.count_ones() as usize;
            let complemented = edges > t;
            if complemented && pairs - edges > t {
                continue;
            }
            instances += 1;
            let g = from_pair_mask(n, mask);
            let base = if complemented { g.complement() } else { g.clone() };
            let singles: Vec<Graph> = base.edges().into_iter().map(|e| Graph::from_edges(n, [e]).expect("in range")).collect();
            let rebuilt = if singles.is_empty() {
                base.clone()
            } else {
                combine(CombineOp::Union, &singles)?
            };
            let rebuilt = if complemented { rebuilt.complement() } else { rebuilt };
            if rebuilt != g {
                return Ok(check("e1-characterization", scope, instances, Some(json!({ "graph": g6(&g) }))));
            }
        }
    }
    Ok(check("e1-characterization", scope, instances, None))
}

/// Every function of arity at most 3 applied to edgeless graphs gives a
/// complete or an edgeless graph, and both arise.
fn empty_characterization(max_n: usize) -> Result<TheoremCheck> {
    let mut instances = 0u64;
    for n in 1..=max_n {
        let mut seen_complete = false;
        let mut seen_empty = false;
        for k in 1..=3 {
            let parts = vec![Graph::empty(n); k];
            for f in enumerate_functions(k)? {
                instances += 1;
                let g = apply_boolean(&f, &parts)?;
                seen_complete |= g.is_complete();
                seen_empty |= g.is_edgeless();
                if !g.is_complete() && !g.is_edgeless() {
                    let ce = json!({ "f": f, "n": n, "graph": g6(&g) });
                    return Ok(check("empty-characterization", format!("n <= {max_n}, arity <= 3"), instances, Some(ce)));
                }
            }
        }
        if !(seen_complete && seen_empty) {
            let ce = json!({ "n": n, "note": "K_n or O_n not reached" });
            return Ok(check("empty-characterization", format!("n <= {max_n}, arity <= 3"), instances, Some(ce)));
        }
    }
    Ok(check("empty-characterization", format!("n <= {max_n}, all functions of arity <= 3"), instances, None))
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("visited");
            for v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        stack.push(v);
                    }
                    Some(sv) if sv == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// The colour classes `H_b` of an intersection of split graphs with known
/// clique sides: bit `i` of `b` is set when both ends lie in clique `i`.
pub fn split_colour_classes(parts: &[(Graph, Vec<bool>)]) -> Result<Vec<Graph>> {
    let graphs: Vec<Graph> = parts.iter().map(|(g, _)| g.clone()).collect();
    let h = combine(CombineOp::Intersect, &graphs)?;
    let t = parts.len();
    let mut classes = vec![Vec::new(); 1 << t];
    for (u, v) in h.edges() {
        let b: usize = parts
            .iter()
            .enumerate()
            .map(|(i, (_, q))| ((q[u] && q[v]) as usize) << i)
            .sum();
        classes[b].push((u, v));
    }
    classes.into_iter().map(|e| Graph::from_edges(h.n(), e)).collect()
}

/// 2-intersections of random split graphs: `χ ≤ ω^4`, every colour class with
/// a 0 coordinate is bipartite (so has no odd cycle at all) and perfect, the
/// all-ones class is the clique on `Q_1 ∩ Q_2`, and the classes cover `H`.
pub fn split_intersections(samples: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Result<TheoremCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scope = format!("{samples} samples, n in {}..={}, seed {seed}", n_range.start(), n_range.end());
    let tuples: Vec<[(Graph, Vec<bool>); 2]> = (0..samples)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            [random_split(n, &mut rng), random_split(n, &mut rng)]
        })
        .collect();
    let binding = Binding::Power(2);
    let bad = tuples
        .par_iter()
        .map(|parts| -> Result<Option<serde_json::Value>> {
            let graphs = [parts[0].0.clone(), parts[1].0.clone()];
            let h = combine(CombineOp::Intersect, &graphs)?;
            let fail = |why: &str| json!({ "parts": [g6(&graphs[0]), g6(&graphs[1])], "cliques": [&parts[0].1, &parts[1].1], "reason": why });
            let (omega, chi) = (clique_number(&h)?, chromatic_number(&h)?);
            if chi as u128 > binding.eval(omega) {
                return Ok(Some(fail("chi exceeds omega^4")));
            }
            let classes = split_colour_classes(parts)?;
            let mut covered = 0;
            for (b, hb) in classes.iter().enumerate() {
                covered += hb.edge_count();
                if b != 3 && !(is_bipartite(hb) && is_perfect(hb)?) {
                    return Ok(Some(fail(&format!("class {b:02b} has an odd cycle"))));
                }
            }
            let q: Vec<usize> = (0..h.n()).filter(|&v| parts[0].1[v] && parts[1].1[v]).collect();
            let expected = Graph::empty(h.n()).subgraph_complement(&q)?;
            if classes[3] != expected {
                return Ok(Some(fail("class 11 is not the clique on Q_1 and Q_2")));
            }
            if covered != h.edge_count() {
                return Ok(Some(fail("classes do not cover H")));
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(check("meyniel-split", scope, samples as u64, bad))
}

/// Smallest arity in `1..=3` at which C_5 is the XOR of equivalence graphs,
/// and whether any function of 3 equivalence graphs gives C_5. Exploratory
/// only; nothing is asserted about the outcome.
pub fn explore_c5_xor() -> Result<serde_json::Value> {
    let c5 = Graph::cycle(5);
    let budget = budget_from_env();
    let mut xor_dim = None;
    for k in 1..=3 {
        if let Some(w) = exists_representation_with(&c5, ClassTag::Equivalence, k, Some(CombineOp::Xor), budget)? {
            xor_dim = Some(json!({ "k": k, "parts": w.parts }));
            break;
        }
    }
    let any3 = exists_representation_with(&c5, ClassTag::Equivalence, 3, None, budget)?;
    Ok(json!({
        "xor": xor_dim,
        "any_function_arity_3": any3.map(|w| json!({ "f": w.f, "parts": w.parts })),
    }))
}

/// The χ-binding experiments run with default sizes; kept beside the
/// catalogue for the CLI.
pub fn chi_binding_suite(seed: u64) -> Result<Vec<TheoremCheck>> {
    let mut out = Vec::new();
    for t in 2..=4 {
        let expr = ClassExpr { op: CombineOp::Union, tag: ClassTag::Equivalence, t };
        out.push(crate::extremal::verify_chi_binding(expr, Binding::Linear(t), 500, 12, seed)?);
    }
    let multi = ClassExpr { op: CombineOp::Intersect, tag: ClassTag::CompleteMultipartite, t: 2 };
    out.push(crate::extremal::verify_chi_binding(multi, Binding::MultipartiteLinear(2), 500, 10, seed)?);
    Ok(out)
}
