//! Univariate hypergeometric series and sequence acceleration.

pub mod accel;
pub mod config;
pub mod gauss;
pub mod pfq;

pub use accel::{accelerate_limit, levin_u};
pub use config::{EvalConfig, EvalResult, Status};
pub use gauss::{connection_coeffs_at_1, euler_transform_2f1, eval_2f1, gauss_at_1, GaussParams};
pub use pfq::{eval_pfq, PfqParams};
