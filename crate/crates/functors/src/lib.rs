//! Polynomial functors over F₂ evaluated as explicit bases and matrices.
//!
//! An expression is evaluated at `F₂ᵏ` to a labeled basis, and a linear map
//! `f: F₂ᵃ → F₂ᵇ` induces a matrix between two evaluations. Natural
//! transformations are families of such matrices indexed by `k`.

mod combin;
pub mod division;
pub mod eval;
pub mod expr;
pub mod gl;
pub mod grass;
pub mod jw;
pub mod nat;
pub mod weyl;

pub use combin::binom;
pub use eval::{apply_map, apply_map_evals, apply_map_sparse, dualize, evaluate, Evaluation};
pub use expr::{FunctorExpr, NatTransId};
pub use nat::NatTrans;

use gf2_linalg::LinalgError;
use partitions::PartitionError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FunctorError {
    #[error("parse error at position {pos} in {text:?}: {msg}")]
    Parse { text: String, pos: usize, msg: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not natural: {0}")]
    NotNatural(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
