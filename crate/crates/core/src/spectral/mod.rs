//! Spectral radius, torus suprema, growth-rate estimation, and the
//! supporting counting and bounding facts.

pub mod eig;
pub mod growth;
pub mod lemmas;
pub mod torus;

pub use eig::{spectral_radius, MAX_EIG_DIM};
pub use growth::{
    default_window, growth_estimate, growth_estimate_big, trace_power_growth, GrowthEstimate,
    TracePowerGrowth,
};
pub use lemmas::{
    coefficient_bound_check, partition_count, partition_count_brute, partition_counts,
    sine_product, CoefficientBound, PartitionTable,
};
pub use torus::{torus_sup_sr, TorusSupResult, MAX_GRID_POINTS};
