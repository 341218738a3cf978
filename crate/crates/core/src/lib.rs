//! Exact computations in twisted bialgebras of graphs with
//! extraction-contraction coproducts, set compositions, quasishuffle
//! algebras and coloured Fock functors.

pub mod algebra;
pub mod compositions;
pub mod error;
pub mod fock;
pub mod graphs;
pub mod json;
pub mod monoid;
pub mod partitions;
pub mod quasishuffle;
pub mod twisted;
pub mod verify;

pub use algebra::{LinComb, Rational, Tensor2, Tensor3};
pub use error::{Error, Result};
