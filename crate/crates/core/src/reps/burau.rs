//! Reduced Burau matrices.
//!
//! Normative convention (one of several equivalent ones; spectral radii on
//! the torus do not depend on the choice): the generator `sigma_i` acts on
//! the `(n-1)`-dimensional space by the 3x3 block
//!
//! ```text
//!            col i-1  col i  col i+1
//! row i-1  [   1       0       0   ]
//! row i    [   t      -t       1   ]
//! row i+1  [   0       0       1   ]
//! ```
//!
//! placed at rows/columns `(i-1, i, i+1)` of the identity, with rows and
//! columns outside `1..=n-1` truncated. In `B_3` this gives
//! `sigma_1 -> [[-t, 1], [0, 1]]` and `sigma_2 -> [[1, 0], [t, -t]]`.
//! Inverse letters use the exact Laurent inverse
//! `row i: [1, -t^-1, t^-1]` of the block. A word maps to the product of
//! its letters' matrices in word order.

use num_bigint::BigInt;
use num_traits::One;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::reps::{RepKind, RepMatrixBundle};

fn mono(exp: i32, coeff: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, &[exp], BigInt::from(coeff)).expect("one variable")
}

/// Generator image of `sigma_i^{±1}` in the reduced Burau representation.
pub(crate) fn burau_generator(n: usize, i: usize, inverse: bool) -> LaurentMatrix {
    let d = n - 1;
    let mut m = LaurentMatrix::identity(d, 1);
    let row = i - 1; // 0-based index of basis vector i
    let (diag, left, right) = if inverse {
        (
            mono(-1, -1),
            LaurentPoly::constant(1, BigInt::one()),
            mono(-1, 1),
        )
    } else {
        (
            mono(1, -1),
            mono(1, 1),
            LaurentPoly::constant(1, BigInt::one()),
        )
    };
    m.set_entry(row, row, diag).expect("var count");
    if i >= 2 {
        m.set_entry(row, row - 1, left).expect("var count");
    }
    if i < d {
        m.set_entry(row, row + 1, right).expect("var count");
    }
    m
}

/// Reduced Burau matrix of a braid word.
pub fn burau_reduced(b: &BraidWord) -> Result<RepMatrixBundle> {
    let n = b.n();
    let mut m = LaurentMatrix::identity(n - 1, 1);
    for &g in b.letters() {
        let gen = burau_generator(n, g.unsigned_abs() as usize, g < 0);
        m = m.mul(&gen)?;
    }
    Ok(RepMatrixBundle {
        kind: RepKind::BurauReduced,
        matrix: m,
        braid: b.clone(),
    })
}
