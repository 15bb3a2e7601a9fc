//! XOR normal form over intersection-closed classes, and partition
//! complementation sequences.

use serde::{Deserialize, Serialize};

use crate::boolfn::BooleanFunction;
use crate::classes::{is_member, ClassTag};
use crate::error::{Error, Result};
use crate::graph::{apply_boolean, combine, CombineOp, Graph, Partition};

/// `G = alpha XOR parts[0] XOR parts[1] XOR ...`, where `alpha` complements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XorNormalForm {
    pub alpha: bool,
    pub parts: Vec<Graph>,
    pub tag: ClassTag,
    pub certified: bool,
}

impl XorNormalForm {
    pub fn recombine(&self, n: usize) -> Graph {
        let xor = if self.parts.is_empty() {
            Graph::empty(n)
        } else {
            combine(CombineOp::Xor, &self.parts).expect("parts share n")
        };
        if self.alpha {
            xor.complement()
        } else {
            xor
        }
    }
}

/// Rewrites `f(H_1..H_k)` as a XOR of intersections `AND_{i ∈ I} H_i`, one per
/// nonempty monomial of the algebraic normal form of `f`. The constant
/// monomial becomes a `K_n` part when `K_n` is in the class, and the
/// complement flag `alpha` otherwise.
pub fn xor_normal_form(f: &BooleanFunction, graphs: &[Graph], tag: ClassTag) -> Result<XorNormalForm> {
    if !tag.is_intersection_closed() {
        return Err(Error::NotIntersectionClosed(tag.to_string()));
    }
    let target = apply_boolean(f, graphs)?;
    if let Some(i) = graphs.iter().position(|g| !is_member(tag, g)) {
        return Err(Error::NotInClass(format!("{tag} (input {})", i + 1)));
    }
    let n = target.n();
    let anf = f.anf();
    let mut parts = Vec::with_capacity(anf.monomials.len());
    let mut alpha = false;
    for &m in &anf.monomials {
        if m == 0 {
            alpha = true;
            continue;
        }
        let chosen: Vec<Graph> = (0..f.arity()).filter(|i| m >> i & 1 == 1).map(|i| graphs[i].clone()).collect();
        parts.push(combine(CombineOp::Intersect, &chosen)?);
    }
    let complete = Graph::complete(n);
    if alpha && is_member(tag, &complete) {
        parts.insert(0, complete);
        alpha = false;
    }
    let mut form = XorNormalForm {
        alpha,
        parts,
        tag,
        certified: false,
    };
    if form.parts.len() > 1 << f.arity() {
        return Err(Error::CertificationFailed(format!("{} parts for arity {}", form.parts.len(), f.arity())));
    }
    if let Some(i) = form.parts.iter().position(|g| !is_member(tag, g)) {
        return Err(Error::CertificationFailed(format!("part {i} is not in class {tag}")));
    }
    if form.recombine(n) != target {
        return Err(Error::CertificationFailed("XOR normal form differs from the target".into()));
    }
    form.certified = true;
    Ok(form)
}

/// The block partitions of equivalence graphs, in order. Folding
/// [`Graph::partition_complement`] over them from `O_n` gives the XOR of the
/// inputs.
pub fn partition_complementation_sequence(parts: &[Graph]) -> Result<Vec<Partition>> {
    if let Some(first) = parts.first() {
        if let Some(g) = parts.iter().find(|g| g.n() != first.n()) {
            return Err(Error::MismatchedVertexCount {
                expected: first.n(),
                found: g.n(),
            });
        }
    }
    parts.iter().map(Partition::of_equivalence_graph).collect()
}

pub fn fold_partition_complements(n: usize, partitions: &[Partition]) -> Result<Graph> {
    partitions
        .iter()
        .try_fold(Graph::empty(n), |g, p| g.partition_complement(p))
}
