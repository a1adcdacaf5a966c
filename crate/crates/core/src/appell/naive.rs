//! Right-hand sides of four restriction formulas that were once claimed for
//! F2 and F4 on their singular curves. They are kept so that the claims can
//! be audited numerically against the true restricted values.

use crate::arith::{gamma_ratio, pow_principal, real, BranchConvention, Complex};
use crate::error::{Error, Result};
use crate::series::{eval_2f1, eval_pfq, EvalConfig, EvalResult, GaussParams, PfqParams};

use super::params::AppellParams;

/// Which of the naive restriction formulas to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum WrongFormula {
    /// `F2(x, 1) ≟ Γ-factor · 3F2(a, b1, a−c2+1; c1, a+b2−c2+1; x)`
    W1,
    /// `F2(x, 1−x) ≟ Γ-factor · (1−x)^{−a} · 3F2(a, c1−b1, a−c2+1; c1, a+b2−c2+1; x/(x−1))`
    W2,
    /// `F4(a; b; c+½, ½; x², (1−x)²) ≟ Γ-factor · 3F2(2a, 2b, c; a+b+½, 2c; x)`
    W3,
    /// `F4(2c−½; 3c−1; c+½, c+½; x², (1−x)²) ≟ Γ-factor · 2F1(c, 3c−1; 2c; x)²`
    W4,
}

const MATCH_TOL: f64 = 1e-12;

fn outside(msg: String) -> Error {
    Error::OutsideDomain(msg)
}

fn mismatch(formula: WrongFormula, p: &AppellParams) -> Error {
    Error::InvalidParameter(format!("{formula:?} does not apply to {p:?}"))
}

/// Evaluates the right-hand side of a naive formula at `x`.
///
/// W1 and W2 take general F2 parameters. W3 expects `F4(a; b; c+½, ½)` and
/// W4 expects `F4(2c−½; 3c−1; c+½, c+½)`; `c` is read off `c1`.
pub fn naive_rhs(formula: WrongFormula, p: &AppellParams, x: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    match (formula, *p) {
        (WrongFormula::W1 | WrongFormula::W2, AppellParams::F2 { a, b1, b2, c1, c2 }) => {
            let gap = c2 - a - b2;
            if gap.re <= 0.0 {
                return Err(outside(format!("{formula:?} needs Re(c2−a−b2) > 0, got {gap}")));
            }
            let g = gamma_ratio(&[c2, gap], &[c2 - a, c2 - b2])?;
            let lower = vec![c1, a + b2 - c2 + 1.0];
            if formula == WrongFormula::W1 {
                let f = eval_pfq(&PfqParams::new(vec![a, b1, a - c2 + 1.0], lower), x, cfg)?;
                Ok(f.scaled(g))
            } else {
                let w = x / (x - 1.0);
                let f = eval_pfq(&PfqParams::new(vec![a, c1 - b1, a - c2 + 1.0], lower), w, cfg)?;
                let pre = pow_principal(1.0 - x, -a, BranchConvention::default())?;
                Ok(f.scaled(g * pre))
            }
        }
        (WrongFormula::W3, AppellParams::F4 { a, b, c1, c2 }) => {
            if (c2 - 0.5).norm() > MATCH_TOL {
                return Err(mismatch(formula, p));
            }
            if (a + b).re >= 0.5 {
                return Err(outside(format!("W3 needs Re(a+b) < 1/2, got {}", a + b)));
            }
            let c = c1 - 0.5;
            let half = real(0.5);
            let g = gamma_ratio(&[half, half - a - b], &[half - a, half - b])?;
            let f = eval_pfq(&PfqParams::new(vec![2.0 * a, 2.0 * b, c], vec![a + b + 0.5, 2.0 * c]), x, cfg)?;
            Ok(f.scaled(g))
        }
        (WrongFormula::W4, AppellParams::F4 { a, b, c1, c2 }) => {
            let c = c1 - 0.5;
            let expected = AppellParams::f4_pair_x(c);
            let AppellParams::F4 { a: ea, b: eb, c2: ec2, .. } = expected else { unreachable!() };
            if (a - ea).norm() > MATCH_TOL || (b - eb).norm() > MATCH_TOL || (c2 - ec2).norm() > MATCH_TOL {
                return Err(mismatch(formula, p));
            }
            if c.re >= 0.5 {
                return Err(outside(format!("W4 needs Re c < 1/2, got {c}")));
            }
            let g = gamma_ratio(&[c + 0.5, 2.0 - 4.0 * c], &[1.0 - c, 1.5 - 2.0 * c])?;
            let f = eval_2f1(&GaussParams::new(c, 3.0 * c - 1.0, 2.0 * c), x, cfg)?;
            Ok(EvalResult {
                value: g * f.value * f.value,
                abs_err_estimate: 2.0 * g.norm() * f.value.norm() * f.abs_err_estimate,
                ..f
            })
        }
        _ => Err(mismatch(formula, p)),
    }
}
