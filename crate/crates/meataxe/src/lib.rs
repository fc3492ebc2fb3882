//! Composition factors of `GL_k(F₂)`-modules.
//!
//! Modules are given by the matrices of the standard generators. Chopping
//! uses Norton's irreducibility criterion on random group-algebra elements;
//! simples are compared by the standard-basis method and labelled against a
//! catalog of Schur-functor quotients `W_λ / rad`.

mod catalog;
mod chop;
mod iso;
mod module;

pub use catalog::{cached_catalog, constituents, label_module, schur_module, simple_catalog, Catalog, ConstituentTable, Factor, Label};
pub use chop::{chop, chop_with, is_irreducible, ChopConfig};
pub use functors::gl::gl_generators_dense as gl_generators;
pub use iso::{fingerprint, iso_simple};
pub use module::{spin, GModule};

use partitions::Partition;

#[derive(Debug, thiserror::Error)]
pub enum MeatAxeError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("subspace is not invariant under the generators")]
    NotInvariant,
    #[error("cannot spin the zero vector")]
    ZeroSeed,
    #[error("module of dimension {0} is reducible")]
    Reducible(usize),
    #[error("irreducibility undecided for a module of dimension {dim} after {attempts} random elements")]
    Undecided { dim: usize, attempts: usize },
    #[error("incompatible modules: {0}")]
    Mismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("catalog entries ({0}) and ({1}) are isomorphic")]
    CatalogCollision(Partition, Partition),
    #[error(transparent)]
    Functor(#[from] functors::FunctorError),
    #[error(transparent)]
    Linalg(#[from] gf2_linalg::LinalgError),
}
