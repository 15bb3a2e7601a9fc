//! Constructive decompositions of a graph into a boolean function of graphs
//! from a simple class. Every decomposition is certified by recombination
//! before it is returned.

mod class_l;
mod twin;
mod vizing;
mod xornf;

use serde::{Deserialize, Serialize};

pub use class_l::{class_l_decomposition, class_l_decomposition_with_budget, DEFAULT_CLASS_L_BUDGET};
pub use twin::{twin_decomposition, twin_decomposition_with_budget, DEFAULT_TWIN_BUDGET};
pub use vizing::{edge_colouring, greedy_matchings, vizing_matchings, VIZING_MAX_N};
pub use xornf::{fold_partition_complements, partition_complementation_sequence, xor_normal_form, XorNormalForm};

use crate::boolfn::BooleanFunction;
use crate::classes::{is_member, ClassTag};
use crate::error::{Error, Result};
use crate::graph::{apply_boolean_on, Graph};

/// A target graph written as `f(H_1, ..., H_k)` with each `H_i` in a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(skip_serializing, default = "empty_graph")]
    pub target: Graph,
    pub f: BooleanFunction,
    /// `f(0, ..., 0)`: set when the target is the complement of a combination
    /// that vanishes on the all-zero input.
    pub alpha: bool,
    pub parts: Vec<(Graph, ClassTag)>,
    pub certified: bool,
}

fn empty_graph() -> Graph {
    Graph::empty(0)
}

impl Decomposition {
    /// Builds and certifies; a failed certificate is an error, never a value.
    pub(crate) fn certify(target: &Graph, f: BooleanFunction, parts: Vec<(Graph, ClassTag)>) -> Result<Decomposition> {
        let mut d = Decomposition {
            target: target.clone(),
            alpha: f.eval_index(0),
            f,
            parts,
            certified: false,
        };
        if let Some((i, (_, tag))) = d.parts.iter().enumerate().find(|(_, (g, tag))| !is_member(*tag, g)) {
            return Err(Error::CertificationFailed(format!("part {i} is not in class {tag}")));
        }
        if d.recombine()? != *target {
            return Err(Error::CertificationFailed("recombination differs from the target".into()));
        }
        d.certified = true;
        Ok(d)
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.parts.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn recombine(&self) -> Result<Graph> {
        apply_boolean_on(self.target.n(), &self.f, &self.graphs())
    }
}

pub(crate) fn constant(value: bool) -> BooleanFunction {
    BooleanFunction::constant(0, value).expect("arity 0")
}
