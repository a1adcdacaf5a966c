//! Gauss's 2F1: evaluation with the transformations needed to keep the
//! series argument small, summation at unit argument, the two-term
//! connection formula around `z = 1`, and Euler's transformation.

use crate::arith::{
    gamma_ratio, nonpositive_integer, pow_principal, BranchConvention, Complex, POLE_TOL,
};
use crate::error::{Error, Result};
use crate::series::config::{EvalConfig, EvalResult};
use crate::series::pfq::{eval_pfq, PfqParams};

/// Integer gaps closer than this are treated as the logarithmic case.
pub const INTEGER_GAP_TOL: f64 = 1e-8;

/// Largest series argument the dispatcher accepts without a transformation.
const DIRECT_ACCEPT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussParams {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
}

impl GaussParams {
    pub fn new(a: Complex, b: Complex, c: Complex) -> Self {
        Self { a, b, c }
    }

    pub fn real(a: f64, b: f64, c: f64) -> Self {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn as_pfq(&self) -> PfqParams {
        PfqParams::new(vec![self.a, self.b], vec![self.c])
    }

    /// `c - a - b`
    pub fn gap(&self) -> Complex {
        self.c - self.a - self.b
    }

    fn terminates(&self) -> bool {
        nonpositive_integer(self.a, POLE_TOL).is_some()
            || nonpositive_integer(self.b, POLE_TOL).is_some()
    }
}

fn near_integer(z: Complex) -> bool {
    (z - Complex::new(z.re.round(), 0.0)).norm() < INTEGER_GAP_TOL
}

/// `2F1(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b))` for `Re(c−a−b) > 0`.
pub fn gauss_at_1(a: Complex, b: Complex, c: Complex) -> Result<Complex> {
    let gap = c - a - b;
    if gap.re <= 0.0 {
        return Err(Error::DomainError(format!(
            "Gauss summation needs Re(c-a-b) > 0, got {gap}"
        )));
    }
    gamma_ratio(&[c, gap], &[c - a, c - b])
}

/// Coefficients `(A, B)` of
/// `2F1(a,b;c;z) = A·2F1(a,b;a+b−c+1;1−z) + B·(1−z)^(c−a−b)·2F1(c−a,c−b;c−a−b+1;1−z)`.
pub fn connection_coeffs_at_1(a: Complex, b: Complex, c: Complex) -> Result<(Complex, Complex)> {
    let gap = c - a - b;
    if near_integer(gap) {
        return Err(Error::DegenerateCase(format!(
            "c-a-b = {gap} is an integer"
        )));
    }
    let coef_a = gamma_ratio(&[c, gap], &[c - a, c - b])?;
    let coef_b = gamma_ratio(&[c, -gap], &[a, b])?;
    Ok((coef_a, coef_b))
}

/// `2F1(a,b;c;z) = (1−z)^(c−a−b) · 2F1(c−a, c−b; c; z)`: returns the factor
/// and the transformed parameters.
pub fn euler_transform_2f1(p: &GaussParams, z: Complex) -> Result<(Complex, GaussParams)> {
    let one_minus = Complex::new(1.0, 0.0) - z;
    if one_minus.norm() == 0.0 {
        return Err(Error::DomainError("Euler's transformation needs z != 1".into()));
    }
    let factor = pow_principal(one_minus, p.gap(), BranchConvention::default())?;
    Ok((factor, GaussParams::new(p.c - p.a, p.c - p.b, p.c)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Route {
    Direct,
    Connection,
    Pfaff,
}

/// Evaluates `2F1(a, b; c; z)`.
///
/// The plain series is used for `|z| <= 0.5`; otherwise the route with the
/// smallest series argument among the plain series, the connection formula
/// at `z = 1`, and Pfaff's transformation `z → z/(z−1)` is taken.
pub fn eval_2f1(p: &GaussParams, z: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if nonpositive_integer(p.c, POLE_TOL).is_some() && !p.terminates() {
        return Err(Error::UndefinedCoefficient(format!(
            "c = {} is a non-positive integer",
            p.c
        )));
    }
    eval_2f1_inner(p, z, cfg, 0)
}

fn eval_2f1_inner(p: &GaussParams, z: Complex, cfg: &EvalConfig, depth: u8) -> Result<EvalResult> {
    if p.terminates() {
        return eval_pfq(&p.as_pfq(), z, cfg);
    }
    let one = Complex::new(1.0, 0.0);
    if (z - one).norm() == 0.0 {
        return gauss_at_1(p.a, p.b, p.c).map(EvalResult::exact);
    }
    let r_direct = z.norm();
    if r_direct <= DIRECT_ACCEPT {
        return eval_pfq(&p.as_pfq(), z, cfg);
    }

    let degenerate = near_integer(p.gap());
    let mut best = (Route::Direct, if r_direct < 1.0 { r_direct } else { f64::INFINITY });
    let r_conn = (one - z).norm();
    if !degenerate && r_conn < best.1 {
        best = (Route::Connection, r_conn);
    }
    if depth == 0 {
        let w = z / (z - one);
        let pfaff_gap_ok = !near_integer(p.b - p.a);
        let r_pfaff = if pfaff_gap_ok {
            w.norm().min((one - w).norm())
        } else {
            w.norm()
        };
        if r_pfaff < best.1 {
            best = (Route::Pfaff, r_pfaff);
        }
    }

    if !best.1.is_finite() || best.1 >= 1.0 {
        return Err(if degenerate && r_conn < 1.0 {
            Error::LogarithmicCase(format!(
                "z = {z} needs the connection formula but c-a-b = {} is an integer",
                p.gap()
            ))
        } else {
            Error::DomainError(format!("no convergent route for 2F1 at z = {z}"))
        });
    }

    match best.0 {
        Route::Direct => eval_pfq(&p.as_pfq(), z, cfg),
        Route::Connection => eval_by_connection(p, z, cfg),
        Route::Pfaff => {
            let w = z / (z - one);
            let factor = pow_principal(one - z, -p.a, BranchConvention::default())?;
            let q = GaussParams::new(p.a, p.c - p.b, p.c);
            Ok(eval_2f1_inner(&q, w, cfg, depth + 1)?.scaled(factor))
        }
    }
}

fn eval_by_connection(p: &GaussParams, z: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    let (coef_a, coef_b) = connection_coeffs_at_1(p.a, p.b, p.c)?;
    let w = Complex::new(1.0, 0.0) - z;
    let gap = p.gap();
    let first = eval_pfq(
        &PfqParams::new(vec![p.a, p.b], vec![Complex::new(1.0, 0.0) - gap]),
        w,
        cfg,
    )?;
    let second = if coef_b.norm() == 0.0 {
        None
    } else {
        Some(eval_pfq(
            &PfqParams::new(vec![p.c - p.a, p.c - p.b], vec![gap + 1.0]),
            w,
            cfg,
        )?)
    };
    let term_a = coef_a * first.value;
    let mut value = term_a;
    let mut err = coef_a.norm() * first.abs_err_estimate + f64::EPSILON * term_a.norm();
    let mut status = first.status;
    let mut terms = first.terms_used;
    if let Some(second) = second {
        let factor = coef_b * pow_principal(w, gap, BranchConvention::default())?;
        let term_b = factor * second.value;
        value += term_b;
        err += factor.norm() * second.abs_err_estimate + f64::EPSILON * term_b.norm();
        status = status.worst(second.status);
        terms += second.terms_used;
    }
    Ok(EvalResult {
        value,
        abs_err_estimate: err,
        terms_used: terms,
        status,
    }
    .settle(cfg.rel_tol))
}
