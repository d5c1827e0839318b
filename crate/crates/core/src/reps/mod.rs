//! Laurent-matrix images of braids: the reduced Burau representation (one
//! variable `t`), the Lawrence–Krammer–Bigelow representation (variables
//! `q, t`), and the one-variable specialization of the Fox Jacobian.

mod burau;
mod fox_spec;
mod lkb;

pub use burau::burau_reduced;
pub use fox_spec::specialize_fox;
pub use lkb::lkb_matrix;

use num_bigint::BigUint;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentMatrix;

/// Which representation a matrix came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepKind {
    /// Reduced Burau: dimension `n-1`, variable `t`.
    BurauReduced,
    /// Lawrence–Krammer–Bigelow: dimension `n(n-1)/2`, variables `q, t`.
    Lkb,
    /// Fox Jacobian specialized by `x_j -> t`: dimension `n`, variable `t`.
    FoxSpecialized,
}

impl RepKind {
    pub fn dimension(self, n: usize) -> usize {
        match self {
            RepKind::BurauReduced => n - 1,
            RepKind::Lkb => n * (n - 1) / 2,
            RepKind::FoxSpecialized => n,
        }
    }

    pub fn var_count(self) -> usize {
        match self {
            RepKind::Lkb => 2,
            _ => 1,
        }
    }

    /// Variable names in exponent-vector order.
    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            RepKind::Lkb => &["q", "t"],
            _ => &["t"],
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "burau" => Ok(RepKind::BurauReduced),
            "lkb" => Ok(RepKind::Lkb),
            "fox" => Ok(RepKind::FoxSpecialized),
            other => Err(Error::Parse(format!(
                "unknown representation kind {other:?} (expected burau|lkb|fox)"
            ))),
        }
    }
}

/// A representation matrix bundled with the braid and kind it came from.
#[derive(Debug, Clone)]
pub struct RepMatrixBundle {
    pub kind: RepKind,
    pub matrix: LaurentMatrix,
    pub braid: BraidWord,
}

/// Computes the representation of the given kind.
pub fn rep_matrix(kind: RepKind, b: &BraidWord) -> Result<RepMatrixBundle> {
    match kind {
        RepKind::BurauReduced => burau_reduced(b),
        RepKind::Lkb => lkb_matrix(b),
        RepKind::FoxSpecialized => specialize_fox(b),
    }
}

/// Size of the standard basis indexed by weak compositions of `m` into
/// `n-1` parts: `binomial(n+m-2, m)`.
pub fn dim_basis(n: u64, m: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Domain(format!("dim_basis needs n >= 2, got {n}")));
    }
    Ok(num_integer::binomial(
        BigUint::from(n + m - 2),
        BigUint::from(m),
    ))
}
