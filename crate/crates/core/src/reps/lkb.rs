//! Lawrence–Krammer–Bigelow matrices.
//!
//! Basis: `v_{j,k}` for `1 <= j < k <= n`, ordered lexicographically, so the
//! dimension is `n(n-1)/2`. Variables are `(q, t)` in that order. The
//! generator action is the standard published one:
//!
//! ```text
//! sigma_i . v_{j,k} =
//!   v_{j,k}                                        i not in {j-1, j, k-1, k}
//!   q v_{i,k} + (q^2-q) v_{i,j} + (1-q) v_{j,k}    i = j-1
//!   v_{j+1,k}                                      i = j,   k != j+1
//!   q v_{j,i} + (1-q) v_{j,k} - (q^2-q) t v_{i,k}  i = k-1, i != j
//!   v_{j,k+1}                                      i = k
//!   -t q^2 v_{j,k}                                 i = j = k-1
//! ```
//!
//! Inverse letters use the exact Laurent-matrix inverse of the generator
//! image (the determinants are unit monomials). A word maps to the product
//! of its letters' matrices in word order.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::reps::{RepKind, RepMatrixBundle};

fn mono(qe: i32, te: i32, coeff: i64) -> LaurentPoly {
    LaurentPoly::monomial(2, &[qe, te], BigInt::from(coeff)).expect("two variables")
}

fn add(terms: &[LaurentPoly]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(2);
    for t in terms {
        acc = acc.add(t).expect("two variables");
    }
    acc
}

/// Lexicographic pair basis of the representation space.
pub(crate) fn pair_basis(n: usize) -> Vec<(usize, usize)> {
    let mut basis = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..=n {
        for k in (j + 1)..=n {
            basis.push((j, k));
        }
    }
    basis
}

fn pair_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < k && k <= n);
    // Pairs (1,2)..(1,n), (2,3)..: offset of block j plus position of k.
    (j - 1) * n - j * (j - 1) / 2 + (k - j - 1)
}

/// Generator image of `sigma_i` (positive letter).
pub(crate) fn lkb_generator(n: usize, i: usize) -> LaurentMatrix {
    let basis = pair_basis(n);
    let d = basis.len();
    let mut m = LaurentMatrix::zero(d, d, 2);
    let one = LaurentPoly::one(2);
    for (row, &(j, k)) in basis.iter().enumerate() {
        let mut put = |jj: usize, kk: usize, poly: LaurentPoly| {
            let col = pair_index(n, jj, kk);
            let merged = m.entry(row, col).add(&poly).expect("two variables");
            m.set_entry(row, col, merged).expect("two variables");
        };
        if i == j && i == k - 1 {
            put(j, k, mono(2, 1, -1)); // -t q^2
        } else if i == j - 1 {
            put(i, k, mono(1, 0, 1)); // q
            put(i, j, add(&[mono(2, 0, 1), mono(1, 0, -1)])); // q^2 - q
            put(j, k, add(&[one.clone(), mono(1, 0, -1)])); // 1 - q
        } else if i == j {
            put(j + 1, k, one.clone());
        } else if i == k - 1 {
            put(j, i, mono(1, 0, 1)); // q
            put(j, k, add(&[one.clone(), mono(1, 0, -1)])); // 1 - q
            put(i, k, add(&[mono(2, 1, -1), mono(1, 1, 1)])); // -(q^2 - q) t
        } else if i == k {
            put(j, k + 1, one.clone());
        } else {
            put(j, k, one.clone());
        }
    }
    m
}

/// Lawrence–Krammer–Bigelow matrix of a braid word.
pub fn lkb_matrix(b: &BraidWord) -> Result<RepMatrixBundle> {
    let n = b.n();
    let d = n * (n - 1) / 2;
    let mut m = LaurentMatrix::identity(d, 2);
    let mut inverses: HashMap<usize, LaurentMatrix> = HashMap::new();
    for &g in b.letters() {
        let i = g.unsigned_abs() as usize;
        if g > 0 {
            m = m.mul(&lkb_generator(n, i))?;
        } else {
            if let std::collections::hash_map::Entry::Vacant(slot) = inverses.entry(i) {
                slot.insert(lkb_generator(n, i).inverse()?);
            }
            m = m.mul(&inverses[&i])?;
        }
    }
    Ok(RepMatrixBundle {
        kind: RepKind::Lkb,
        matrix: m,
        braid: b.clone(),
    })
}
