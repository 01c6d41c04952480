//! Normal ordering in the Weyl algebra `DU = UD + 1` and its deformations
//! `DU = q·UD + 1`, `DU = UD + c` and `DU = UD + c·U^i`.
//!
//! Coefficients are computed three independent ways: by rewriting
//! ([`rewrite`]), by counting rooks on the Ferrers board a word outlines
//! ([`rookorder`]), and by finite differences of the factored rook polynomial
//! ([`factorize`]). [`binom`] covers the normal order of `(D+U)^n`.

pub mod binom;
pub mod board;
pub mod cli;
pub mod error;
pub mod expr;
pub mod factorize;
pub mod qpoly;
pub mod rewrite;
pub mod rookorder;

pub use board::{FerrersBoard, Placement};
pub use error::{Error, Result};
pub use expr::{Expr, Letter, Word, WordSum};
pub use qpoly::{Poly, QPoly, XPoly};
pub use rewrite::{AlgebraParams, NormalForm, QMode};
