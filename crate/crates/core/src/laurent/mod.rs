//! Exact Laurent-polynomial arithmetic and matrices over it.

pub mod matrix;
pub mod poly;

pub use matrix::LaurentMatrix;
pub use poly::{LaurentPoly, UNIT_MODULUS_TOLERANCE};
