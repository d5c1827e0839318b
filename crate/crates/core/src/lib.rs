//! Exact braid-group representation matrices and spectral dilatation
//! bounds.
//!
//! The pipeline: parse a braid word, realize it as an exact matrix (the
//! group-ring Fox Jacobian, its one-variable specialization, the reduced
//! Burau representation, or the Lawrence–Krammer–Bigelow representation),
//! then turn spectral radii over unit-modulus substitutions and the growth
//! of iterated trace norms into lower bounds for the braid's dilatation.
//!
//! All symbolic arithmetic is exact (big integers); floating point enters
//! only through eigenvalue computations and growth-rate roots.

pub mod braid;
pub mod error;
pub mod fox;
pub mod laurent;
pub mod report;
pub mod reps;
pub mod sampling;
pub mod spectral;

pub use braid::{BraidWord, Permutation};
pub use error::{Error, Result};
pub use fox::{
    artin_image, fox_derivative, fox_matrix, zeta1_trace_data, ArtinAction, FreeWord, GammaElement,
    GroupRingElement, GroupRingMatrix, ZetaTracePoint, DEFAULT_TERM_CAP,
};
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use report::{
    analyze, b3_oracle, run_suite, AnalyzeOptions, B3Oracle, BoundReport, BraidClass, Suite,
    SuiteReport,
};
pub use reps::{
    burau_reduced, dim_basis, lkb_matrix, rep_matrix, specialize_fox, RepKind, RepMatrixBundle,
};
pub use spectral::{
    coefficient_bound_check, default_window, growth_estimate, growth_estimate_big, partition_count,
    partition_count_brute, partition_counts, sine_product, spectral_radius, torus_sup_sr,
    trace_power_growth, GrowthEstimate, PartitionTable, TorusSupResult, TracePowerGrowth,
};
