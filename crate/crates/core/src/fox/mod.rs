//! Free-group words, the Artin action, Fox derivatives, and the group ring
//! of the braid's mapping-torus group.

pub mod ring;
pub mod word;
pub mod zeta;

pub use ring::{fox_derivative, fox_matrix, GammaElement, GroupRingElement, GroupRingMatrix};
pub use word::{artin_image, ArtinAction, FreeWord};
pub use zeta::{zeta1_trace_data, ZetaTracePoint, DEFAULT_TERM_CAP};
