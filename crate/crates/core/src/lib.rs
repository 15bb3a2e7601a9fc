//! Boolean combinations of graphs: combination operators, exact invariants,
//! decompositions into simple classes, and small-scale verification tooling.

pub mod booldim;
pub mod boolfn;
pub mod classes;
pub mod decompose;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod labeling;

pub use boolfn::{enumerate_functions, AnfForm, BooleanFunction};
pub use error::{Error, Result};
pub use graph::{apply_boolean, combine, is_isomorphic, CombineOp, Graph, Partition};
pub use classes::ClassTag;
pub use invariants::ParamReport;
