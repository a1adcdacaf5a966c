//! Row-wise summation of double hypergeometric series.
//!
//! Every series handled here has the term
//!
//! ```text
//!   Π(α)_{i+j} Π(β)_i Π(γ)_j
//!  --------------------------  u^i v^j
//!   Π(δ)_{i+j} Π(ε)_i Π(ζ)_j i! j!
//! ```
//!
//! so row `i` is a scalar coefficient times the univariate series
//! `pFq(α+i, γ; δ+i, ζ; v)`, which is summed to tolerance before the next row.
//! The coefficient is folded into the first inner term to keep rows finite.

use crate::arith::{nonpositive_integer, Complex, POLE_TOL};
use crate::error::{Error, Result};
use crate::series::pfq::{eval_pfq_scaled, Accumulator, PfqParams};
use crate::series::{EvalConfig, EvalResult, Status};

use super::params::AppellParams;

#[derive(Debug, Clone, Default)]
pub(crate) struct DoubleSeries {
    pub joint_upper: Vec<Complex>,
    pub row_upper: Vec<Complex>,
    pub col_upper: Vec<Complex>,
    pub joint_lower: Vec<Complex>,
    pub row_lower: Vec<Complex>,
    pub col_lower: Vec<Complex>,
}

impl From<&AppellParams> for DoubleSeries {
    fn from(p: &AppellParams) -> Self {
        match *p {
            AppellParams::F1 { a, b1, b2, c } => Self {
                joint_upper: vec![a],
                row_upper: vec![b1],
                col_upper: vec![b2],
                joint_lower: vec![c],
                ..Default::default()
            },
            AppellParams::F2 { a, b1, b2, c1, c2 } => Self {
                joint_upper: vec![a],
                row_upper: vec![b1],
                col_upper: vec![b2],
                row_lower: vec![c1],
                col_lower: vec![c2],
                ..Default::default()
            },
            AppellParams::F3 { a1, a2, b1, b2, c } => Self {
                row_upper: vec![a1, b1],
                col_upper: vec![a2, b2],
                joint_lower: vec![c],
                ..Default::default()
            },
            AppellParams::F4 { a, b, c1, c2 } => Self {
                joint_upper: vec![a, b],
                row_lower: vec![c1],
                col_lower: vec![c2],
                ..Default::default()
            },
        }
    }
}

/// Result of a row-wise summation with the per-row inner term counts.
#[derive(Debug, Clone)]
pub struct RowTrace {
    pub result: EvalResult,
    pub row_terms: Vec<usize>,
}

impl DoubleSeries {
    fn row_params(&self, i: usize) -> PfqParams {
        let shift = i as f64;
        let upper = self
            .joint_upper
            .iter()
            .map(|&a| a + shift)
            .chain(self.col_upper.iter().copied())
            .collect::<Vec<_>>();
        let lower = self
            .joint_lower
            .iter()
            .map(|&d| d + shift)
            .chain(self.col_lower.iter().copied())
            .collect::<Vec<_>>();
        PfqParams::new(upper, lower)
    }

    /// `R_{i+1} / R_i` without the `u` factor.
    fn row_ratio(&self, i: usize) -> Result<Complex> {
        let k = i as f64;
        let mut r = Complex::new(1.0 / (k + 1.0), 0.0);
        for &a in self.joint_upper.iter().chain(self.row_upper.iter()) {
            r *= a + k;
        }
        if r.norm() == 0.0 {
            return Ok(r);
        }
        for &d in self.joint_lower.iter().chain(self.row_lower.iter()) {
            if nonpositive_integer(d + k, POLE_TOL).is_some() {
                return Err(Error::UndefinedCoefficient(format!(
                    "row denominator {d} vanishes at row {}",
                    i + 1
                )));
            }
            r /= d + k;
        }
        Ok(r)
    }

    pub(crate) fn sum_rows(&self, u: Complex, v: Complex, cfg: &EvalConfig) -> Result<RowTrace> {
        cfg.validate()?;
        let mut outer = Accumulator::new(cfg.rel_tol);
        // row coefficient as mantissa · e^log_coef
        let mut coef = Complex::new(1.0, 0.0);
        let mut log_coef = 0.0;
        let mut inner_err = 0.0;
        let mut status = Status::Converged;
        let mut row_terms = Vec::new();
        let mut total_terms = 0;
        let mut i = 0;
        let converged = loop {
            let inner = eval_pfq_scaled(&self.row_params(i), v, (coef, log_coef), cfg)?;
            status = status.worst(inner.status);
            row_terms.push(inner.terms_used);
            total_terms += inner.terms_used;
            inner_err += inner.abs_err_estimate;
            if outer.add(inner.value) {
                break true;
            }
            if outer.count >= cfg.max_terms {
                break false;
            }
            coef *= self.row_ratio(i)? * u;
            i += 1;
            let mag = coef.norm();
            if mag == 0.0 {
                break true;
            }
            coef /= mag;
            log_coef += mag.ln();
        };
        let summed = outer.finish(converged);
        let result = EvalResult {
            value: summed.value,
            abs_err_estimate: summed.abs_err_estimate + inner_err,
            terms_used: total_terms,
            status: status.worst(summed.status),
        }
        .settle(cfg.rel_tol);
        Ok(RowTrace { result, row_terms })
    }
}
