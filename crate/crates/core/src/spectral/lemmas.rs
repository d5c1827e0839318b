//! Supporting exact and numeric facts: partition counts with the
//! largest-part recursion, the sine product identity, and the coefficient
//! bound of polynomials against their supremum on the torus.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_bigint::BigUint;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laurent::poly::big_to_f64_unsigned;
use crate::laurent::LaurentPoly;

/// Table of partition counts: `s_mk[m][k]` counts partitions of `m` with
/// largest part exactly `k`, and `s[m]` is their sum over `k`.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    pub s: Vec<u128>,
    pub s_mk: Vec<Vec<u128>>,
}

/// Builds the table up to `m_max` from the recursion
/// `S_{m+1,k+1} = S_{m,k} + S_{m-k,k+1}`.
pub fn partition_counts(m_max: usize) -> PartitionTable {
    let mut s_mk = vec![vec![0u128; m_max + 1]; m_max + 1];
    s_mk[0][0] = 1;
    for m in 1..=m_max {
        for k in 1..=m {
            let from_smaller_part = s_mk[m - 1][k - 1];
            let from_same_part = if m >= k { s_mk[m - k][k] } else { 0 };
            s_mk[m][k] = from_smaller_part + from_same_part;
        }
    }
    let s = (0..=m_max)
        .map(|m| if m == 0 { 1 } else { s_mk[m].iter().sum() })
        .collect();
    PartitionTable { s, s_mk }
}

/// `S_m` alone.
pub fn partition_count(m: usize) -> u128 {
    partition_counts(m).s[m]
}

/// Independent oracle: directly enumerates tuples `(n_1, ..., n_m)` of
/// nonnegative integers with `sum i * n_i = m`.
pub fn partition_count_brute(m: usize) -> u128 {
    fn rec(part: usize, rem: usize) -> u128 {
        if rem == 0 {
            return 1;
        }
        if part > rem {
            return 0;
        }
        let mut acc = 0u128;
        let mut used = 0;
        while used <= rem {
            acc += rec(part + 1, rem - used);
            used += part;
        }
        acc
    }
    rec(1, m)
}

/// `prod_{k=1}^{M} 2 sin(k pi / (M+1))`; equals `M + 1`.
pub fn sine_product(m: u32) -> f64 {
    let theta = PI / (m as f64 + 1.0);
    (1..=m).map(|k| 2.0 * (k as f64 * theta).sin()).product()
}

/// Outcome of checking `sum |a_I| <= (M+1)^n * sup_{torus} |f|` on a finite
/// grid; the right side carries a 1.02 factor because a grid supremum
/// under-approximates the true one.
#[derive(Debug, Clone)]
pub struct CoefficientBound {
    pub lhs: BigUint,
    pub rhs: f64,
    pub sup_on_grid: f64,
    pub degree_span: u32,
    pub holds: bool,
}

pub fn coefficient_bound_check(f: &LaurentPoly, grid: u32) -> Result<CoefficientBound> {
    let span = f.max_degree_span();
    let needed = 8 * (span + 1);
    if grid < needed {
        return Err(Error::Domain(format!(
            "grid {grid} too small: need at least {needed} per variable"
        )));
    }
    // Shift to polynomial form; the norm is shift-invariant.
    let shifted = match f.exponent_ranges() {
        Some(ranges) => {
            let shift: Vec<i32> = ranges.iter().map(|(lo, _)| -lo).collect();
            f.shift(&shift)?
        }
        None => f.clone(),
    };
    let sup = sup_abs_on_grid(&shifted, grid);
    let lhs = f.norm();
    let rhs = ((span as f64) + 1.0).powi(f.var_count() as i32) * sup * 1.02;
    Ok(CoefficientBound {
        holds: big_to_f64_unsigned(&lhs) <= rhs,
        lhs,
        rhs,
        sup_on_grid: sup,
        degree_span: span,
    })
}

/// Maximum of `|f|` over the uniform grid, evaluating one variable at a
/// time so dense grids stay affordable.
fn sup_abs_on_grid(f: &LaurentPoly, grid: u32) -> f64 {
    let terms: Vec<(Vec<i32>, Complex64)> = f
        .terms()
        .iter()
        .map(|(e, c)| {
            (
                e.clone(),
                Complex64::new(crate::laurent::poly::big_to_f64(c), 0.0),
            )
        })
        .collect();
    let max_exp = terms
        .iter()
        .flat_map(|(e, _)| e.iter().copied())
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let roots: Vec<Complex64> = (0..grid)
        .map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / grid as f64))
        .collect();
    // Powers 0..=max_exp of every grid root.
    let pow_table: Vec<Vec<Complex64>> = roots
        .iter()
        .map(|&z| {
            let mut row = Vec::with_capacity(max_exp + 1);
            let mut acc = Complex64::new(1.0, 0.0);
            for _ in 0..=max_exp {
                row.push(acc);
                acc *= z;
            }
            row
        })
        .collect();
    rec_sup(&terms, &pow_table)
}

fn rec_sup(terms: &[(Vec<i32>, Complex64)], pow_table: &[Vec<Complex64>]) -> f64 {
    if terms.is_empty() {
        return 0.0;
    }
    let vars = terms[0].0.len();
    if vars == 0 {
        let total: Complex64 = terms.iter().map(|(_, c)| *c).sum();
        return total.norm();
    }
    let mut best = 0.0f64;
    for row in pow_table {
        let mut collapsed: HashMap<Vec<i32>, Complex64> = HashMap::with_capacity(terms.len());
        for (e, c) in terms {
            let last = e[vars - 1] as usize;
            let key = e[..vars - 1].to_vec();
            *collapsed.entry(key).or_insert(Complex64::new(0.0, 0.0)) += c * row[last];
        }
        let sub: Vec<(Vec<i32>, Complex64)> = collapsed.into_iter().collect();
        best = best.max(rec_sup(&sub, pow_table));
    }
    best
}
