//! Spectral radius of small dense complex matrices.

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest admissible dimension; the tolerance contract is stated for small
/// well-conditioned matrices.
pub const MAX_EIG_DIM: usize = 64;

/// Maximum eigenvalue modulus, to about `1e-9` absolute accuracy for
/// well-conditioned inputs of admissible size.
///
/// The QR iteration runs with a bounded iteration budget. Exactly
/// symmetric inputs (permutation matrices arise at special torus points)
/// can make the shifted iteration cycle; in that case the matrix is
/// retried under a fixed diagonal-phase similarity, which leaves the
/// spectrum unchanged but breaks the symmetry.
pub fn spectral_radius(m: &DMatrix<Complex64>) -> Result<f64> {
    if m.nrows() != m.ncols() {
        return Err(Error::NonSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    if n > MAX_EIG_DIM {
        return Err(Error::Domain(format!(
            "matrix dimension {n} exceeds the eigenvalue limit {MAX_EIG_DIM}"
        )));
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    if n == 0 {
        return Ok(0.0);
    }
    if n == 1 {
        return Ok(m[(0, 0)].norm());
    }

    // The iteration budget is cumulative over all deflation steps; a few
    // torus points need far more than the typical count.
    const HARD_BUDGET: usize = 100_000;
    let fast_budget = 200 * n;
    if let Some(sr) = schur_radius(m.clone(), f64::EPSILON, fast_budget) {
        return Ok(sr);
    }
    if let Some(sr) = schur_radius(m.clone(), f64::EPSILON, HARD_BUDGET) {
        return Ok(sr);
    }
    // Fixed-phase similarity D m D^-1 with D = diag(e^{i j phi}).
    let phi = 0.71537438129; // any fixed angle incommensurate with pi
    let twisted = DMatrix::from_fn(n, n, |r, c| {
        m[(r, c)] * Complex64::from_polar(1.0, phi * (r as f64 - c as f64))
    });
    if let Some(sr) = schur_radius(twisted.clone(), f64::EPSILON, HARD_BUDGET) {
        return Ok(sr);
    }
    // Last resort: relax the deflation threshold, still far below the
    // 1e-9 accuracy contract.
    schur_radius(twisted, 1e-13, HARD_BUDGET)
        .ok_or_else(|| Error::Numeric("eigenvalue iteration did not converge".into()))
}

fn schur_radius(m: DMatrix<Complex64>, eps: f64, max_iter: usize) -> Option<f64> {
    let schur = Schur::try_new(m, eps, max_iter)?;
    let eig = schur.eigenvalues()?;
    Some(eig.iter().map(|z| z.norm()).fold(0.0f64, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn golden_two_by_two() {
        // [[2,1],[1,1]] has characteristic polynomial x^2 - 3x + 1.
        let m = DMatrix::from_row_slice(2, 2, &[c(2., 0.), c(1., 0.), c(1., 0.), c(1., 0.)]);
        let want = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((spectral_radius(&m).unwrap() - want).abs() < 1e-9);
    }

    #[test]
    fn identity_and_nilpotent() {
        let id = DMatrix::<Complex64>::identity(5, 5);
        assert!((spectral_radius(&id).unwrap() - 1.0).abs() < 1e-12);
        let nil = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        assert!(spectral_radius(&nil).unwrap().abs() < 1e-12);
    }

    #[test]
    fn permutation_matrices_converge() {
        // Cyclic permutation matrices stall the plain shifted iteration.
        for n in 3..=8 {
            let m = DMatrix::from_fn(
                n,
                n,
                |r, c| {
                    if (r + 1) % n == c {
                        c64(1.0)
                    } else {
                        c64(0.0)
                    }
                },
            );
            let sr = spectral_radius(&m).unwrap();
            assert!((sr - 1.0).abs() < 1e-9, "n = {n}: {sr}");
        }
        fn c64(x: f64) -> Complex64 {
            Complex64::new(x, 0.0)
        }
    }

    #[test]
    fn agrees_with_trace_on_random_matrices() {
        // Sum of eigenvalues equals the trace; use it as an independent
        // correctness signal for the full spectrum path.
        let mut x = 0.37f64;
        let mut next = move || {
            x = (x * 997.0 + 0.123).fract();
            2.0 * x - 1.0
        };
        for n in [3usize, 5, 10, 17] {
            let m = DMatrix::from_fn(n, n, |_, _| Complex64::new(next(), next()));
            let schur = Schur::try_new(m.clone(), f64::EPSILON, 1000).unwrap();
            let eig = schur.eigenvalues().unwrap();
            let tr: Complex64 = m.diagonal().iter().sum();
            let s: Complex64 = eig.iter().sum();
            assert!((tr - s).norm() < 1e-10 * n as f64);
            let sr = spectral_radius(&m).unwrap();
            let max = eig.iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!((sr - max).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let wide = DMatrix::<Complex64>::zeros(2, 3);
        assert!(matches!(
            spectral_radius(&wide),
            Err(Error::NonSquare { .. })
        ));
        let nan = DMatrix::from_row_slice(1, 1, &[c(f64::NAN, 0.)]);
        assert!(matches!(spectral_radius(&nan), Err(Error::Numeric(_))));
        let big = DMatrix::<Complex64>::zeros(65, 65);
        assert!(matches!(spectral_radius(&big), Err(Error::Domain(_))));
    }
}
