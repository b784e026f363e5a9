//! Higher zigzag algebras, their quasi-hereditary covers and duals, computed exactly.

pub mod engine;
pub mod ext;
pub mod linalg;
pub mod module;
pub mod pbw;
pub mod presentation;
pub mod qh;
pub mod quiver;
pub mod report;
pub mod filtration;
pub mod koszul;
pub mod resolution;
pub mod suite;

pub use engine::{compute_basis, AlgebraInstance, DEFAULT_MAX_LEN};
pub use presentation::{Bideg, Element, Path, Presentation};
pub use quiver::{Dist, OrderData, Quiver, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("invalid path {0}")]
    InvalidPath(String),
    #[error("no termination: length {max_len} still has {top_dim} basis elements")]
    NonTermination { max_len: usize, top_dim: usize },
    #[error("resolution truncated after {steps} steps")]
    Truncated { steps: usize },
}
