//! The graphs `H(n, k)` and randomized χ-binding experiments.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classes::{random_member_with, ClassTag};
use crate::error::{ensure_size, Error, Result};
use crate::graph::{combine, CombineOp, Graph};
use crate::invariants::{chromatic_bounds, clique_number, independence_number, DEFAULT_NODE_LIMIT};

pub const HNK_MAX_VERTICES: usize = 4096;

/// [`hnk_report`] needs exact clique and independence numbers.
pub const HNK_REPORT_MAX_VERTICES: usize = 64;

fn vertex_count(n: usize, k: usize) -> Result<usize> {
    let mut total: usize = 1;
    for _ in 0..k {
        total = total.saturating_mul(n);
        if total > HNK_MAX_VERTICES {
            break;
        }
    }
    ensure_size("n^k for H(n,k)", total, HNK_MAX_VERTICES)?;
    Ok(total)
}

/// Coordinates of vertex `v` of `H(n, k)`; the first coordinate is the most
/// significant digit.
pub fn hnk_tuple(v: usize, n: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    let mut rest = v;
    for d in digits.iter_mut().rev() {
        *d = rest % n;
        rest /= n;
    }
    digits
}

/// `H(n, k)` on `[n]^k`: two tuples are adjacent iff they agree on an odd
/// number of coordinates.
pub fn hnk(n: usize, k: usize) -> Result<Graph> {
    let total = vertex_count(n, k)?;
    let tuples: Vec<Vec<usize>> = (0..total).map(|v| hnk_tuple(v, n, k)).collect();
    Ok(Graph::from_fn(total, |u, v| {
        tuples[u].iter().zip(&tuples[v]).filter(|(a, b)| a == b).count() % 2 == 1
    }))
}

/// The coordinate equivalence graphs `G_1..G_k` whose XOR is `H(n, k)`.
pub fn hnk_as_xor(n: usize, k: usize) -> Result<Vec<Graph>> {
    let total = vertex_count(n, k)?;
    let tuples: Vec<Vec<usize>> = (0..total).map(|v| hnk_tuple(v, n, k)).collect();
    Ok((0..k)
        .map(|i| Graph::from_fn(total, |u, v| tuples[u][i] == tuples[v][i]))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HnkReport {
    pub n: usize,
    pub k: usize,
    pub omega: usize,
    pub alpha: usize,
    /// Exact χ when `chi_exact`, otherwise the best lower bound found.
    pub chi: usize,
    pub chi_exact: bool,
    pub omega_bound: f64,
    pub alpha_bound: f64,
    pub chi_lower: usize,
}

/// Clique bound `nk` for even `k`, `(2en)^((k-1)/2)` for odd `k`.
pub fn hnk_omega_bound(n: usize, k: usize) -> f64 {
    if k.is_multiple_of(2) {
        (n * k) as f64
    } else {
        (2.0 * std::f64::consts::E * n as f64).powi(((k - 1) / 2) as i32)
    }
}

/// Independence bound `(2en)^(k/2)` for even `k`, `nk` for odd `k`.
pub fn hnk_alpha_bound(n: usize, k: usize) -> f64 {
    if k.is_multiple_of(2) {
        (2.0 * std::f64::consts::E * n as f64).powi((k / 2) as i32)
    } else {
        (n * k) as f64
    }
}

pub fn hnk_report(n: usize, k: usize) -> Result<HnkReport> {
    hnk_report_with_limit(n, k, DEFAULT_NODE_LIMIT)
}

pub fn hnk_report_with_limit(n: usize, k: usize, node_limit: u64) -> Result<HnkReport> {
    let g = hnk(n, k)?;
    ensure_size("n^k for an H(n,k) report", g.n(), HNK_REPORT_MAX_VERTICES)?;
    let omega = clique_number(&g)?;
    let alpha = independence_number(&g)?;
    let chi_lower = if alpha == 0 { 0 } else { g.n().div_ceil(alpha) };
    let bounds = chromatic_bounds(&g, node_limit)?;
    let chi_exact = bounds.is_exact();
    Ok(HnkReport {
        n,
        k,
        omega,
        alpha,
        chi: if chi_exact { bounds.upper } else { bounds.lower.max(chi_lower) },
        chi_exact,
        omega_bound: hnk_omega_bound(n, k),
        alpha_bound: hnk_alpha_bound(n, k),
        chi_lower,
    })
}

/// Result of one finite check of a claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub scope: String,
    pub passed: bool,
    pub counterexample: Option<serde_json::Value>,
    pub instances: u64,
}

/// `t`-fold union or intersection of members of one class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassExpr {
    pub op: CombineOp,
    pub tag: ClassTag,
    pub t: usize,
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{} of {}", self.t, self.op, self.tag)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Binding {
    /// `t·x`
    Linear(usize),
    /// `x^(2^t)`
    Power(usize),
    /// `x^t`, the product of `t` identity bindings
    Product(usize),
    /// `t^(2^t)·x`
    MultipartiteLinear(usize),
}

impl Binding {
    pub fn eval(self, x: usize) -> u128 {
        let x = x as u128;
        match self {
            Binding::Linear(t) => t as u128 * x,
            Binding::Power(t) => x.saturating_pow(1 << t),
            Binding::Product(t) => x.saturating_pow(t as u32),
            Binding::MultipartiteLinear(t) => (t as u128).saturating_pow(1 << t).saturating_mul(x),
        }
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Linear(t) => write!(f, "{t}x"),
            Binding::Power(t) => write!(f, "x^{}", 1u64 << t),
            Binding::Product(t) => write!(f, "x^{t}"),
            Binding::MultipartiteLinear(t) => write!(f, "{}x", (*t as u128).pow(1 << t)),
        }
    }
}

/// Samples `samples` random `t`-combinations on `n` vertices and checks
/// `χ ≤ binding(ω)` on each with exact solvers. The first violation (in
/// sample order) is reported.
pub fn verify_chi_binding(expr: ClassExpr, binding: Binding, samples: usize, n: usize, seed: u64) -> Result<TheoremCheck> {
    if expr.op == CombineOp::Xor || expr.t == 0 {
        return Err(Error::UnsupportedExpression(expr.to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tuples = Vec::with_capacity(samples);
    for _ in 0..samples {
        let parts = (0..expr.t)
            .map(|_| random_member_with(expr.tag, n, &mut rng))
            .collect::<Result<Vec<Graph>>>()
            .map_err(|_| Error::UnsupportedExpression(expr.to_string()))?;
        tuples.push(parts);
    }
    let outcomes: Vec<Result<Option<serde_json::Value>>> = tuples
        .par_iter()
        .map(|parts| {
            let g = combine(expr.op, parts)?;
            let omega = clique_number(&g)?;
            let chi = crate::invariants::chromatic_number(&g)?;
            let bound = binding.eval(omega);
            Ok((chi as u128 > bound).then(|| {
                json!({ "parts": parts, "graph": g, "omega": omega, "chi": chi, "bound": bound.to_string() })
            }))
        })
        .collect();
    let mut counterexample = None;
    for o in outcomes {
        if let Some(c) = o? {
            counterexample = Some(c);
            break;
        }
    }
    Ok(TheoremCheck {
        id: format!("chi-binding:{expr}"),
        scope: format!("{samples} samples, n = {n}, seed {seed}, bound chi <= {binding}"),
        passed: counterexample.is_none(),
        counterexample,
        instances: samples as u64,
    })
}
