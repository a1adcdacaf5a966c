//! Power series in `x` of Appell functions restricted to `v = 1`, with each
//! coefficient obtained from Gauss' summation formula.

use crate::arith::Complex;
use crate::error::{Error, Result};
use crate::series::pfq::Accumulator;
use crate::series::{gauss_at_1, EvalConfig, EvalResult};

use super::params::{AppellParams, Family};

/// Coefficient of `x^k` in the formal expansion of `F2(x, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum RowCoefficient {
    Defined(Complex),
    /// The `2F1(1)` factor diverges: `Re(c2 − a − b2) ≤ k`.
    Undefined,
}

impl RowCoefficient {
    pub fn value(&self) -> Option<Complex> {
        match *self {
            Self::Defined(v) => Some(v),
            Self::Undefined => None,
        }
    }
}

/// Coefficients `(a)_k (b1)_k / ((c1)_k k!) · 2F1(a+k, b2; c2; 1)` for `k = 0..=kmax`.
///
/// Once `k ≥ Re(c2 − a − b2)` the Gauss series no longer converges and the
/// coefficient is reported as [`RowCoefficient::Undefined`].
pub fn f2_formal_row_expansion(p: &AppellParams, kmax: usize) -> Result<Vec<(usize, RowCoefficient)>> {
    let AppellParams::F2 { a, b1, b2, c1, c2 } = *p else {
        return Err(Error::InvalidParameter(format!(
            "row expansion is defined for F2, got {}",
            p.family()
        )));
    };
    let margin = (c2 - a - b2).re;
    let mut out = Vec::with_capacity(kmax + 1);
    let mut prefactor = Complex::new(1.0, 0.0);
    for k in 0..=kmax {
        if k > 0 {
            let m = (k - 1) as f64;
            prefactor *= (a + m) * (b1 + m) / ((c1 + m) * k as f64);
        }
        let coef = if margin > k as f64 {
            RowCoefficient::Defined(prefactor * gauss_at_1(a + k as f64, b2, c2)?)
        } else {
            RowCoefficient::Undefined
        };
        out.push((k, coef));
    }
    Ok(out)
}

/// Sums the `v = 1` edge series of F3 or F1 termwise:
///
/// ```text
/// F3(x, 1) = Σ (a1)_k (b1)_k / ((c)_k k!) · 2F1(a2, b2; c+k; 1) x^k
/// F1(x, 1) = Σ (a)_k (b1)_k / ((c)_k k!) · 2F1(a+k, b2; c+k; 1) x^k
/// ```
pub fn restricted_edge_series(
    family: Family,
    p: &AppellParams,
    x: Complex,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    p.validate()?;
    if x.norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("edge series needs |x| < 1, got {x}")));
    }
    // (row numerator pair, c, gauss parameters at row k)
    let (n1, n2, c, gauss): (Complex, Complex, Complex, Box<dyn Fn(f64) -> Result<Complex>>) =
        match (family, *p) {
            (Family::F3, AppellParams::F3 { a1, a2, b1, b2, c }) => {
                if (c - a2 - b2).re <= 0.0 {
                    return Err(Error::OutsideDomain(format!(
                        "F3 edge needs Re(c−a2−b2) > 0, got {}",
                        c - a2 - b2
                    )));
                }
                (a1, b1, c, Box::new(move |k| gauss_at_1(a2, b2, c + k)))
            }
            (Family::F1, AppellParams::F1 { a, b1, b2, c }) => {
                if (c - a - b2).re <= 0.0 {
                    return Err(Error::OutsideDomain(format!(
                        "F1 edge needs Re(c−a−b2) > 0, got {}",
                        c - a - b2
                    )));
                }
                (a, b1, c, Box::new(move |k| gauss_at_1(a + k, b2, c + k)))
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "edge series is defined for F1 and F3 with matching parameters, got {family} and {}",
                    p.family()
                )))
            }
        };
    let mut acc = Accumulator::new(cfg.rel_tol);
    let mut prefactor = Complex::new(1.0, 0.0);
    let mut k = 0usize;
    let converged = loop {
        let kf = k as f64;
        if acc.add(prefactor * gauss(kf)?) {
            break true;
        }
        if acc.count >= cfg.max_terms {
            break false;
        }
        prefactor *= (n1 + kf) * (n2 + kf) / ((c + kf) * (kf + 1.0)) * x;
        if prefactor.norm() == 0.0 {
            break true;
        }
        k += 1;
    };
    Ok(acc.finish(converged))
}
