//! Exact computations with finite-group Hopf algebras, R-pairs and
//! Peter-Weyl style decompositions, plus a small quantum sl2 toolkit.

pub mod cli;
pub mod error;
pub mod groebner;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod phi;
pub mod peter_weyl;
pub mod poly;
pub mod reps;
pub mod scalar;
pub mod search;
pub mod uq;

pub use error::{Error, Result};
pub use groups::{make_group, Group, GroupSpec};
pub use linalg::{Matrix, Subspace};
pub use scalar::{Field, Scalar};
