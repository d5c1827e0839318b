//! User-facing pipeline: dilatation bounds per braid, sharpness
//! diagnostics, the 3-braid oracle, and trace-growth summaries.
//!
//! Every bound reported here is a LOWER bound for the dilatation (or its
//! square, for the two-variable representation); equality is only claimed
//! where the oracle covers it.

pub mod checks;
pub mod oracle;
pub mod render;

pub use checks::{run_suite, CheckResult, Suite, SuiteReport};
pub use oracle::{b3_oracle, B3Oracle, BraidClass};

use num_complex::Complex64;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::fox::{zeta1_trace_data, DEFAULT_TERM_CAP};
use crate::reps::{burau_reduced, lkb_matrix};
use crate::spectral::{default_window, growth_estimate_big, spectral_radius, torus_sup_sr};

/// Tolerance for declaring the torus supremum attained at `t = -1`.
pub const SHARPNESS_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub grid: u32,
    pub refine: u32,
    pub kmax: u64,
    pub with_zeta1: bool,
    pub with_lkb: bool,
    pub with_timings: bool,
    pub term_cap: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            grid: 256,
            refine: 3,
            kmax: 10,
            with_zeta1: false,
            with_lkb: false,
            with_timings: false,
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

/// Rounds to 10 significant digits; reported floats all pass through here
/// so JSON output is reproducible.
pub fn round_sig10(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mag = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(9 - mag);
    (x * factor).round() / factor
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexParts {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BurauBound {
    pub sup: f64,
    pub argmax_t: ComplexParts,
}

#[derive(Debug, Clone, Serialize)]
pub struct LkbBound {
    pub sup: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    pub burau: BurauBound,
    pub lkb: Option<LkbBound>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sharpness {
    pub at_minus1: bool,
    pub gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthSummary {
    pub estimate: f64,
    pub window: usize,
    pub root_estimates: Vec<f64>,
    pub ratio_estimates: Vec<Option<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaSummary {
    pub k_values: Vec<u64>,
    pub trace_of_norms: Vec<String>,
    pub norm_of_collected_trace: Vec<String>,
    /// Growth of the `trace_of_norms` sequence.
    pub growth_estimate: GrowthSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub burau_ms: f64,
    pub lkb_ms: Option<f64>,
    pub zeta1_ms: Option<f64>,
    pub total_ms: f64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct StageErrors {
    pub lkb: Option<String>,
    pub zeta1: Option<String>,
}

/// Per-braid dilatation bounds with diagnostics. Field order is the JSON
/// key order.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub schema_version: u32,
    pub braid: String,
    pub n: usize,
    pub bounds: Bounds,
    pub sharpness: Sharpness,
    pub oracle: Option<B3Oracle>,
    pub zeta1: Option<ZetaSummary>,
    pub timings_ms: Option<Timings>,
    pub errors: StageErrors,
    /// True when an optional stage failed on a resource guard; the CLI maps
    /// this to its own exit code. Not part of the JSON schema.
    #[serde(skip)]
    pub guard_tripped: bool,
}

/// Runs the full pipeline. The Burau stage is mandatory and failures there
/// propagate; optional stages record their errors in the report instead of
/// aborting it.
pub fn analyze(b: &BraidWord, opts: &AnalyzeOptions) -> Result<BoundReport> {
    let start = std::time::Instant::now();

    let burau_start = std::time::Instant::now();
    let burau = burau_reduced(b)?;
    let sup = torus_sup_sr(&burau.matrix, opts.grid, opts.refine)?;
    let at_minus_one = spectral_radius(&burau.matrix.eval(&[Complex64::new(-1.0, 0.0)])?)?;
    let burau_ms = burau_start.elapsed().as_secs_f64() * 1e3;

    let gap = (sup.sup_value - at_minus_one).abs();
    let mut errors = StageErrors::default();
    let mut guard_tripped = false;

    let oracle = if b.n() == 3 {
        let mut o = b3_oracle(b)?;
        o.dilatation = o.dilatation.map(round_sig10);
        Some(o)
    } else {
        None
    };

    let mut lkb_ms = None;
    let lkb = if opts.with_lkb {
        let stage = std::time::Instant::now();
        match lkb_stage(b, opts) {
            Ok(bound) => {
                lkb_ms = Some(stage.elapsed().as_secs_f64() * 1e3);
                Some(bound)
            }
            Err(e) => {
                guard_tripped |= matches!(e, Error::ResourceGuard { .. });
                errors.lkb = Some(e.to_string());
                None
            }
        }
    } else {
        None
    };

    let mut zeta1_ms = None;
    let zeta1 = if opts.with_zeta1 {
        let stage = std::time::Instant::now();
        match zeta_summary(b, opts.kmax, opts.term_cap) {
            Ok(z) => {
                zeta1_ms = Some(stage.elapsed().as_secs_f64() * 1e3);
                Some(z)
            }
            Err(e) => {
                guard_tripped |= matches!(e, Error::ResourceGuard { .. });
                errors.zeta1 = Some(e.to_string());
                None
            }
        }
    } else {
        None
    };

    let timings_ms = opts.with_timings.then(|| Timings {
        burau_ms: round_sig10(burau_ms),
        lkb_ms: lkb_ms.map(round_sig10),
        zeta1_ms: zeta1_ms.map(round_sig10),
        total_ms: round_sig10(start.elapsed().as_secs_f64() * 1e3),
    });

    Ok(BoundReport {
        schema_version: 1,
        braid: b.to_text(),
        n: b.n(),
        bounds: Bounds {
            burau: BurauBound {
                sup: round_sig10(sup.sup_value),
                argmax_t: ComplexParts {
                    re: round_sig10(sup.argmax[0].re),
                    im: round_sig10(sup.argmax[0].im),
                },
            },
            lkb,
        },
        sharpness: Sharpness {
            at_minus1: gap < SHARPNESS_TOLERANCE,
            gap: round_sig10(gap),
        },
        oracle,
        zeta1,
        timings_ms,
        errors,
        guard_tripped,
    })
}

fn lkb_stage(b: &BraidWord, opts: &AnalyzeOptions) -> Result<LkbBound> {
    let bundle = lkb_matrix(b)?;
    let sup = torus_sup_sr(&bundle.matrix, opts.grid, opts.refine)?;
    Ok(LkbBound {
        sup: round_sig10(sup.sup_value),
        bound: round_sig10(sup.sup_value.sqrt()),
    })
}

/// Trace sequences of iterated powers with a growth estimate, in report
/// form.
pub fn zeta_summary(b: &BraidWord, kmax: u64, term_cap: u64) -> Result<ZetaSummary> {
    let points = zeta1_trace_data(b, kmax, term_cap)?;
    let seq: Vec<num_bigint::BigUint> = points
        .iter()
        .map(|p| num_bigint::BigUint::from(p.trace_of_norms))
        .collect();
    let growth = growth_estimate_big(&seq, default_window(seq.len()))?;
    Ok(ZetaSummary {
        k_values: points.iter().map(|p| p.k).collect(),
        trace_of_norms: points
            .iter()
            .map(|p| p.trace_of_norms.to_string())
            .collect(),
        norm_of_collected_trace: points
            .iter()
            .map(|p| p.norm_of_collected_trace.to_string())
            .collect(),
        growth_estimate: GrowthSummary {
            estimate: round_sig10(growth.estimate),
            window: growth.window,
            root_estimates: growth
                .root_estimates
                .iter()
                .map(|&x| round_sig10(x))
                .collect(),
            ratio_estimates: growth
                .ratio_estimates
                .iter()
                .map(|r| r.map(round_sig10))
                .collect(),
        },
    })
}
