//! Specialization of the Fox Jacobian: every free generator `x_j` maps to
//! the single variable `t`, turning the `n x n` group-ring matrix into a
//! one-variable Laurent matrix (the unreduced Burau form).

use crate::braid::BraidWord;
use crate::error::Result;
use crate::fox::fox_matrix;
use crate::laurent::LaurentMatrix;
use crate::reps::{RepKind, RepMatrixBundle};

pub fn specialize_fox(b: &BraidWord) -> Result<RepMatrixBundle> {
    let n = b.n();
    let gm = fox_matrix(b);
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            entries.push(gm.entry(r, c).to_laurent_t()?);
        }
    }
    Ok(RepMatrixBundle {
        kind: RepKind::FoxSpecialized,
        matrix: LaurentMatrix::new(n, n, entries)?,
        braid: b.clone(),
    })
}
