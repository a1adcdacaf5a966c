use serde::{Deserialize, Serialize};

use crate::arith::Complex;
use crate::error::Error;

/// Tolerance and budget knobs shared by every series evaluator.
///
/// `max_terms` caps each univariate series, including each row of a
/// double series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub accel_depth: usize,
    pub accel_base: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_terms: 100_000,
            accel_depth: 12,
            accel_base: 0.5,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter("rel_tol must be positive".into()));
        }
        if self.max_terms < 1 {
            return Err(Error::InvalidParameter("max_terms must be at least 1".into()));
        }
        if !(self.accel_base > 0.0 && self.accel_base < 1.0) {
            return Err(Error::InvalidParameter("accel_base must lie in (0, 1)".into()));
        }
        Ok(())
    }

    pub fn with_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_accel_depth(mut self, depth: usize) -> Self {
        self.accel_depth = depth;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Converged,
    Truncated,
    OutsideDomain,
    PoleEncountered,
    UndefinedCoefficient,
}

impl Status {
    /// The status a caller reports when an evaluator failed with `err`.
    pub fn from_error(err: &Error) -> Self {
        match err {
            Error::PoleEncountered(_) => Status::PoleEncountered,
            Error::UndefinedCoefficient(_) | Error::DegenerateCoefficient(_) => {
                Status::UndefinedCoefficient
            }
            Error::NumericalBreakdown(_) => Status::Truncated,
            _ => Status::OutsideDomain,
        }
    }

    /// The less trustworthy of two statuses.
    pub fn worst(self, other: Status) -> Status {
        if self == Status::Converged {
            other
        } else {
            self
        }
    }
}

/// A value with its error estimate and bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex,
    pub abs_err_estimate: f64,
    pub terms_used: usize,
    pub status: Status,
}

impl EvalResult {
    pub fn exact(value: Complex) -> Self {
        Self {
            value,
            abs_err_estimate: 0.0,
            terms_used: 1,
            status: Status::Converged,
        }
    }

    pub fn is_converged(&self) -> bool {
        self.status == Status::Converged
    }

    /// Scales value and error by a known factor.
    pub fn scaled(self, factor: Complex) -> Self {
        Self {
            value: self.value * factor,
            abs_err_estimate: self.abs_err_estimate * factor.norm(),
            ..self
        }
    }

    /// Marks the result converged iff the error estimate meets `rel_tol`.
    pub(crate) fn settle(mut self, rel_tol: f64) -> Self {
        if self.status == Status::Converged
            && self.abs_err_estimate > rel_tol * (1.0 + self.value.norm())
        {
            self.status = Status::Truncated;
        }
        self
    }
}
