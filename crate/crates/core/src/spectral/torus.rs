//! Supremum of the spectral radius over unit-modulus substitutions.
//!
//! The scan is a uniform grid on the torus followed by local refinement
//! rounds around the incumbent. It probes finitely many points, so the
//! result is a lower bound for the true supremum; no attainment claim is
//! made. Angles are `2*pi*j/grid`, so `t = -1` is probed exactly whenever
//! the grid is even, and power-of-two grids nest.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::poly::PowerTables;
use crate::laurent::LaurentMatrix;
use crate::spectral::eig::spectral_radius;

/// Hard cap on the number of base-grid points.
pub const MAX_GRID_POINTS: u64 = 10_000_000;

/// Width of the refinement window in previous-grid steps, on each side.
const REFINE_WINDOW_STEPS: i64 = 2;
/// Resolution multiplier per refinement round.
const REFINE_FACTOR: i64 = 4;

#[derive(Debug, Clone)]
pub struct TorusSupResult {
    /// Best spectral radius seen; a lower bound for the supremum, and an
    /// upper bound for the value at every probed point.
    pub sup_value: f64,
    /// Unit-modulus point achieving `sup_value`.
    pub argmax: Vec<Complex64>,
    /// The same point as angles in radians.
    pub argmax_angles: Vec<f64>,
    pub grid: u32,
    pub refine_rounds: u32,
}

pub fn torus_sup_sr(a: &LaurentMatrix, grid: u32, refine_rounds: u32) -> Result<TorusSupResult> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let vars = a.var_count();
    if vars > 3 {
        return Err(Error::Domain(format!(
            "torus scan supports at most 3 variables, got {vars}"
        )));
    }
    if grid < 8 {
        return Err(Error::Domain(format!("grid must be >= 8, got {grid}")));
    }
    let total = (grid as u64).checked_pow(vars as u32).unwrap_or(u64::MAX);
    if total > MAX_GRID_POINTS {
        return Err(Error::ResourceGuard {
            what: "torus grid points",
            requested: total,
            cap: MAX_GRID_POINTS,
        });
    }

    let ranges = a.exponent_ranges();
    let value_at = |angles: &[f64]| -> Result<f64> {
        let point: Vec<Complex64> = angles
            .iter()
            .map(|&t| Complex64::from_polar(1.0, t))
            .collect();
        let tables = PowerTables::from_ranges(&ranges, &point);
        spectral_radius(&a.eval_with_tables(&tables))
    };

    // Base scan. Chunks are scanned independently and merged in order, with
    // strict improvement only, so ties resolve to the lexicographically
    // smallest grid index regardless of thread count.
    const CHUNK: u64 = 1024;
    let n_chunks = total.div_ceil(CHUNK);
    let chunk_best: Vec<(f64, u64)> = (0..n_chunks)
        .into_par_iter()
        .map(|ci| -> Result<(f64, u64)> {
            let lo = ci * CHUNK;
            let hi = (lo + CHUNK).min(total);
            let mut best = (f64::NEG_INFINITY, lo);
            let mut angles = vec![0.0f64; vars];
            for idx in lo..hi {
                decode_angles(idx, grid, vars, &mut angles);
                let v = value_at(&angles)?;
                if v > best.0 {
                    best = (v, idx);
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut best_val = f64::NEG_INFINITY;
    let mut best_idx = 0u64;
    for (v, idx) in chunk_best {
        if v > best_val {
            best_val = v;
            best_idx = idx;
        }
    }
    let mut best_angles = vec![0.0f64; vars];
    decode_angles(best_idx, grid, vars, &mut best_angles);

    // Local refinement around the incumbent; offset 0 re-probes it, so the
    // value never decreases.
    let mut step = TAU / grid as f64;
    for _ in 0..refine_rounds {
        let fine = step / REFINE_FACTOR as f64;
        let span = REFINE_WINDOW_STEPS * REFINE_FACTOR;
        let width = (2 * span + 1) as u64;
        let combos = width.pow(vars as u32);
        let mut round_best = (best_val, best_angles.clone());
        let mut angles = vec![0.0f64; vars];
        for code in 0..combos {
            let mut c = code;
            for v in (0..vars).rev() {
                let o = (c % width) as i64 - span;
                c /= width;
                angles[v] = best_angles[v] + o as f64 * fine;
            }
            let v = value_at(&angles)?;
            if v > round_best.0 {
                round_best = (v, angles.clone());
            }
        }
        best_val = round_best.0;
        best_angles = round_best.1;
        step = fine;
    }

    let argmax: Vec<Complex64> = best_angles
        .iter()
        .map(|&t| Complex64::from_polar(1.0, t))
        .collect();
    Ok(TorusSupResult {
        sup_value: best_val,
        argmax,
        argmax_angles: best_angles,
        grid,
        refine_rounds,
    })
}

/// Decodes a base-grid index into angles, most significant digit first.
fn decode_angles(idx: u64, grid: u32, vars: usize, out: &mut [f64]) {
    let mut rest = idx;
    for v in (0..vars).rev() {
        let j = rest % grid as u64;
        rest /= grid as u64;
        out[v] = TAU * j as f64 / grid as f64;
    }
}
