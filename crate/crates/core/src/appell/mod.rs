//! Appell's F1–F4: double series inside their convergence regions, the
//! elementary closed form of `F2(a; 1, 1; 2, 2)` and its restrictions,
//! boundary limits, and the audit helpers for the naive restriction formulas.

mod branch;
mod closed;
mod double;
mod edge;
mod naive;
mod params;
mod region;
mod special;

pub use branch::{branch_fit, chebyshev_abscissae, BranchFit, FIT_COND_LIMIT};
pub use closed::{f2_closed, f2_restriction_closed, Curve};
pub use double::RowTrace;
pub(crate) use double::DoubleSeries;
pub use edge::{f2_formal_row_expansion, restricted_edge_series, RowCoefficient};
pub use naive::{naive_rhs, WrongFormula};
pub use params::{AppellParams, Family};
pub use region::{in_convergence_region, region_measure};
pub use special::{f1_special_identities, f4_connection_rhs, F1Identity, F4Connection, Sides};

use crate::arith::Complex;
use crate::error::{Error, Result};
use crate::series::{accelerate_limit, EvalConfig, EvalResult, Status};

/// Sums the Appell series at `(u, v)` row by row: the outer index runs over
/// powers of `u`, each row being a univariate series in `v`.
pub fn eval_appell(p: &AppellParams, u: Complex, v: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    eval_appell_traced(p, u, v, cfg).map(|t| t.result)
}

/// [`eval_appell`] with the number of inner terms used by every row.
pub fn eval_appell_traced(
    p: &AppellParams,
    u: Complex,
    v: Complex,
    cfg: &EvalConfig,
) -> Result<RowTrace> {
    region::check_region(p, u, v)?;
    p.validate()?;
    DoubleSeries::from(p).sum_rows(u, v, cfg)
}

/// Slack allowed when deciding that `(u, v)` lies on the region's closure.
const CLOSURE_TOL: f64 = 1e-12;

/// Limit of the series along `t·(u, v)` as `t → 1⁻`.
///
/// Samples at `t_k = 1 − base^k`, `k = 1..=accel_depth`, are extrapolated
/// with Wynn's epsilon algorithm.
pub fn radial_boundary_value(
    p: &AppellParams,
    u: Complex,
    v: Complex,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    let measure = region_measure(p.family(), u, v);
    if measure > 1.0 + CLOSURE_TOL {
        return Err(Error::OutsideDomain(format!(
            "({u}, {v}) is outside the closure of the {} region (measure {measure})",
            p.family()
        )));
    }
    if cfg.accel_depth < 3 {
        return Err(Error::InvalidParameter("accel_depth must be at least 3".into()));
    }
    let mut samples = Vec::with_capacity(cfg.accel_depth);
    let mut status = Status::Converged;
    let mut terms = 0;
    for k in 1..=cfg.accel_depth {
        let t = 1.0 - cfg.accel_base.powi(k as i32);
        // a boundary point of F1/F3 scaled by t can sit on the edge only if t·measure ≥ 1
        let r = eval_appell(p, u * t, v * t, cfg)?;
        status = status.worst(r.status);
        terms += r.terms_used;
        samples.push(r.value);
    }
    let limit = accelerate_limit(&samples)?;
    Ok(EvalResult {
        value: limit.value,
        abs_err_estimate: limit.abs_err_estimate,
        terms_used: terms,
        status: status.worst(limit.status),
    })
}
