//! Exact Hodge and Poincare polynomials of moduli spaces of rank-2 bundles
//! and holomorphic triples on a smooth projective curve.

pub mod cli;
pub mod error;
pub mod hodge;
pub mod polyring;
pub mod rank2_bundles;
pub mod triples22;
pub mod triples_low_rank;
pub mod varieties;
pub mod verify;
pub mod xseries;

pub use error::{Error, Result};
pub use hodge::HodgeResult;
pub use polyring::{BiLaurent, Exponent, Substitution};
