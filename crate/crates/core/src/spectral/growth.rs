//! Growth-rate estimation for nonnegative sequences and for the exact
//! trace-power sequences of Laurent matrices.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::laurent::LaurentMatrix;

/// Finite-sample growth estimate of a sequence `a_1..a_K`.
///
/// The estimate is `max(1, max a_k^{1/k})` over the trailing `window`
/// indices; per-step ratios are reported as diagnostics only (entries with
/// a zero denominator are skipped).
#[derive(Debug, Clone)]
pub struct GrowthEstimate {
    pub values: Vec<f64>,
    pub root_estimates: Vec<f64>,
    pub ratio_estimates: Vec<Option<f64>>,
    pub estimate: f64,
    pub window: usize,
}

/// Default window: the trailing third of the sequence, rounded up. Robust
/// to small-`k` transients while matching the limit on eventually-geometric
/// sequences.
pub fn default_window(len: usize) -> usize {
    len.div_ceil(3).max(1)
}

pub fn growth_estimate(values: &[f64], window: usize) -> Result<GrowthEstimate> {
    if values.is_empty() {
        return Err(Error::Domain(
            "growth estimate needs a nonempty sequence".into(),
        ));
    }
    if values.len() < 3 {
        return Err(Error::Domain(format!(
            "growth estimate needs at least 3 values, got {}",
            values.len()
        )));
    }
    if window == 0 || window > values.len() {
        return Err(Error::Domain(format!(
            "window {window} out of range 1..={}",
            values.len()
        )));
    }
    for &v in values {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Domain(format!(
                "sequence value {v} is not a nonnegative real"
            )));
        }
    }
    let root_estimates: Vec<f64> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if v == 0.0 {
                0.0
            } else {
                v.powf(1.0 / (i + 1) as f64)
            }
        })
        .collect();
    let ratio_estimates: Vec<Option<f64>> = values
        .windows(2)
        .map(|w| if w[0] > 0.0 { Some(w[1] / w[0]) } else { None })
        .collect();
    let tail_max = root_estimates[values.len() - window..]
        .iter()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    Ok(GrowthEstimate {
        values: values.to_vec(),
        root_estimates,
        ratio_estimates,
        estimate: tail_max.max(1.0),
        window,
    })
}

/// Natural log of a big integer, usable far beyond the `f64` range.
pub(crate) fn approx_ln(v: &BigUint) -> f64 {
    if let Some(f) = v.to_f64() {
        if f.is_finite() && f > 0.0 {
            return f.ln();
        }
    }
    let bits = v.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let lead = (v >> (bits.saturating_sub(64))).to_f64().unwrap_or(1.0);
    lead.ln() + (bits.saturating_sub(64)) as f64 * std::f64::consts::LN_2
}

/// Growth estimate of an exact integer sequence.
pub fn growth_estimate_big(values: &[BigUint], window: usize) -> Result<GrowthEstimate> {
    let all_small = values
        .iter()
        .all(|v| v.to_f64().map(|f| f.is_finite()).unwrap_or(false));
    if all_small {
        let vals: Vec<f64> = values.iter().map(|v| v.to_f64().unwrap()).collect();
        return growth_estimate(&vals, window);
    }
    if values.len() < 3 || window == 0 || window > values.len() {
        return Err(Error::Domain("bad sequence length or window".into()));
    }
    // Work in log space for astronomically large counts.
    let zero = BigUint::default();
    let lns: Vec<Option<f64>> = values
        .iter()
        .map(|v| if *v == zero { None } else { Some(approx_ln(v)) })
        .collect();
    let values_f: Vec<f64> = values
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let root_estimates: Vec<f64> = lns
        .iter()
        .enumerate()
        .map(|(i, ln)| ln.map(|l| (l / (i + 1) as f64).exp()).unwrap_or(0.0))
        .collect();
    let ratio_estimates: Vec<Option<f64>> = lns
        .windows(2)
        .map(|w| match (w[0], w[1]) {
            (Some(a), Some(b)) => Some((b - a).exp()),
            (Some(_), None) => Some(0.0),
            (None, _) => None,
        })
        .collect();
    let tail_max = root_estimates[values.len() - window..]
        .iter()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    Ok(GrowthEstimate {
        values: values_f,
        root_estimates,
        ratio_estimates,
        estimate: tail_max.max(1.0),
        window,
    })
}

/// Exact trace sequences of `A^k` for `k = 1..=kmax`, with growth
/// estimates for both `norm(tr A^k)` and `tr(norm A^k)`.
#[derive(Debug, Clone)]
pub struct TracePowerGrowth {
    pub norm_of_trace_seq: Vec<BigUint>,
    pub trace_of_norm_seq: Vec<BigUint>,
    pub norm_of_trace_growth: GrowthEstimate,
    pub trace_of_norm_growth: GrowthEstimate,
}

pub fn trace_power_growth(
    a: &LaurentMatrix,
    kmax: usize,
    term_cap: u64,
) -> Result<TracePowerGrowth> {
    if kmax < 3 {
        return Err(Error::Domain(format!("kmax must be >= 3, got {kmax}")));
    }
    if !a.is_square() {
        return Err(Error::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut power = LaurentMatrix::identity(a.rows(), a.var_count());
    let mut norm_of_trace_seq = Vec::with_capacity(kmax);
    let mut trace_of_norm_seq = Vec::with_capacity(kmax);
    for _ in 0..kmax {
        power = power.mul(a)?;
        let terms = power.total_term_count() as u64;
        if terms > term_cap {
            return Err(Error::ResourceGuard {
                what: "matrix power term count",
                requested: terms,
                cap: term_cap,
            });
        }
        norm_of_trace_seq.push(power.norm_of_trace()?);
        trace_of_norm_seq.push(power.trace_of_norm()?);
    }
    let window = default_window(kmax);
    Ok(TracePowerGrowth {
        norm_of_trace_growth: growth_estimate_big(&norm_of_trace_seq, window)?,
        trace_of_norm_growth: growth_estimate_big(&trace_of_norm_seq, window)?,
        norm_of_trace_seq,
        trace_of_norm_seq,
    })
}
