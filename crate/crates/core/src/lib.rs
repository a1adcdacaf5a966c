//! Appell's bivariate hypergeometric functions, their restrictions to the
//! singular curves of their PDE systems, and a harness that checks identities
//! between them numerically.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: complex Gamma, Pochhammer symbols, branch-aware powers
//! - [`series`]: `pFq`, Gauss's `2F1` with its transformations, acceleration
//! - [`appell`]: the double series F1–F4, closed forms, boundary limits
//! - [`kdf`]: the Kampé de Fériet series and the generalized Clausen identity
//! - [`catalog`]: registered identities, verification sweeps, reports
//! - [`cli`]: the `appell` command-line front end

pub mod appell;
pub mod arith;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod kdf;
pub mod series;

pub use arith::{BranchConvention, Complex};
pub use error::{Error, Result};
pub use series::{EvalConfig, EvalResult, Status};
