//! Two F1 reductions that hold as identities near `x = 0`, and the local
//! expansions at `x = 0` of two F4 functions restricted to `(x², (1−x)²)`.

use std::f64::consts::PI;

use crate::arith::{gamma_ratio, pow_principal, real, BranchConvention, Complex};
use crate::error::{Error, Result};
use crate::series::{eval_2f1, EvalConfig, EvalResult, GaussParams};

use super::eval_appell;
use super::params::AppellParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum F1Identity {
    /// `F1(a; b1, b2; c; x, x) = 2F1(a, b1+b2; c; x)`
    XIII,
    /// `F1(a; 2b, a−b; 1+b; x, x²) = (1−x)^{−2a} 2F1(a, ½; 1+b; −4x/(x−1)²)`
    XIV,
}

/// Both sides of a special F1 identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: EvalResult,
    pub rhs: EvalResult,
}

impl Sides {
    /// `|lhs − rhs| / (1 + |lhs|)`
    pub fn residual(&self) -> f64 {
        (self.lhs.value - self.rhs.value).norm() / (1.0 + self.lhs.value.norm())
    }
}

const MATCH_TOL: f64 = 1e-12;

/// Evaluates both sides of identity (xiii) or (xiv).
///
/// For XIV the parameters must have the shape `F1(a; 2b, a−b; 1+b)`, see
/// [`AppellParams::f1_pair_xiv`].
pub fn f1_special_identities(which: F1Identity, p: &AppellParams, x: Complex, cfg: &EvalConfig) -> Result<Sides> {
    let AppellParams::F1 { a, b1, b2, c } = *p else {
        return Err(Error::InvalidParameter(format!("{which:?} needs F1 parameters, got {}", p.family())));
    };
    match which {
        F1Identity::XIII => {
            let lhs = eval_appell(p, x, x, cfg)?;
            let rhs = eval_2f1(&GaussParams::new(a, b1 + b2, c), x, cfg)?;
            Ok(Sides { lhs, rhs })
        }
        F1Identity::XIV => {
            let b = c - 1.0;
            if (b1 - 2.0 * b).norm() > MATCH_TOL || (b2 - (a - b)).norm() > MATCH_TOL {
                return Err(Error::InvalidParameter(format!("{p:?} is not of the form F1(a; 2b, a−b; 1+b)")));
            }
            if (x - 1.0).norm() == 0.0 {
                return Err(Error::OutsideDomain("XIV is singular at x = 1".into()));
            }
            let lhs = eval_appell(p, x, x * x, cfg)?;
            let w = -4.0 * x / ((x - 1.0) * (x - 1.0));
            let f = eval_2f1(&GaussParams::new(a, real(0.5), c), w, cfg)?;
            let pre = pow_principal(1.0 - x, -2.0 * a, BranchConvention::default())?;
            Ok(Sides { lhs, rhs: f.scaled(pre) })
        }
    }
}

/// Local forms at `x = 0` of restricted F4 functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum F4Connection {
    /// Bailey's `F4(a; b; c, a+b−c+1; x², (1−x)²)` with `2F1(1−x)` eliminated.
    B2A,
    /// `F4(a; b; c, a+b−c+3/2; x², (1−x)²)` through `2F1(…; x)` and `2F1(…; 1−x)`.
    SA,
    /// The same function through two local solutions at `x = 0`.
    SB,
}

fn cos_pi(z: Complex) -> Complex {
    (PI * z).cos()
}

fn sin_pi(z: Complex) -> Complex {
    (PI * z).sin()
}

fn f21(a: Complex, b: Complex, c: Complex, x: Complex, cfg: &EvalConfig) -> Result<Complex> {
    Ok(eval_2f1(&GaussParams::new(a, b, c), x, cfg)?.value)
}

/// Right-hand side of one of the connection formulas for `x ∈ (0, 1)`.
pub fn f4_connection_rhs(
    formula: F4Connection,
    a: Complex,
    b: Complex,
    c: Complex,
    x: Complex,
    cfg: &EvalConfig,
) -> Result<Complex> {
    if x.im != 0.0 || !(x.re > 0.0 && x.re < 1.0) {
        return Err(Error::OutsideDomain(format!("connection formulas need x in (0, 1), got {x}")));
    }
    if c.re >= 1.0 {
        return Err(Error::OutsideDomain(format!("connection formulas need Re c < 1, got {c}")));
    }
    let gap = c - a - b;
    let needed = if formula == F4Connection::B2A { 0.0 } else { 0.5 };
    if gap.re <= needed {
        return Err(Error::OutsideDomain(format!(
            "{formula:?} needs Re(c−a−b) > {needed}, got {gap}"
        )));
    }
    let branch = BranchConvention::default();
    match formula {
        F4Connection::B2A => {
            let d = a + b - c + 1.0;
            let f = f21(a, b, c, x, cfg)?;
            let g = f21(a - c + 1.0, b - c + 1.0, 2.0 - c, x, cfg)?;
            let k1 = gamma_ratio(&[d, 1.0 - c], &[a - c + 1.0, b - c + 1.0])?;
            let k2 = gamma_ratio(&[d, c - 1.0], &[a, b])?;
            Ok(k1 * f * f + k2 * pow_principal(x, 1.0 - c, branch)? * f * g)
        }
        F4Connection::SA | F4Connection::SB => {
            let d = a + b - c + 1.5;
            let denom = cos_pi(a) * cos_pi(b);
            if denom.norm() < 1e-300 {
                return Err(Error::PoleEncountered(format!("cos πa cos πb vanishes at a = {a}, b = {b}")));
            }
            let head = gamma_ratio(&[d, 1.5 - c], &[a - c + 1.5, b - c + 1.5])?;
            let f0 = f21(2.0 * a, 2.0 * b, 2.0 * c - 1.0, x, cfg)?;
            if formula == F4Connection::SA {
                let k1 = head * cos_pi(c) * cos_pi(gap) / denom;
                let k2 = gamma_ratio(&[c, gap], &[c - a, c - b])? * sin_pi(c) * sin_pi(gap) / denom;
                let f1 = f21(2.0 * a, 2.0 * b, 2.0 * a + 2.0 * b - 2.0 * c + 2.0, 1.0 - x, cfg)?;
                Ok(k1 * f0 + k2 * f1)
            } else {
                let k2 = gamma_ratio(&[c, d, 2.0 * c - 2.0], &[c - a, c - b, 2.0 * a, 2.0 * b])?
                    * pow_principal(real(2.0), 2.0 * a + 2.0 * b - 2.0 * c + 1.0, branch)?
                    * PI.sqrt()
                    * sin_pi(c)
                    / denom;
                let f1 = f21(2.0 * a - 2.0 * c + 2.0, 2.0 * b - 2.0 * c + 2.0, 3.0 - 2.0 * c, x, cfg)?;
                Ok(head * f0 + k2 * pow_principal(x, 2.0 - 2.0 * c, branch)? * f1)
            }
        }
    }
}
