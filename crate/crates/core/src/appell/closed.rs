//! Elementary closed form of `F2(a; 1, 1; 2, 2; x, y)` and its restrictions
//! to the singular curves `y = 1` and `y = 1 − x`.

use crate::arith::{log_branch, on_cut, pow_principal, real, BranchConvention, Complex};
use crate::error::{Error, Result};

/// Singular curve a restriction is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Curve {
    /// `y = 1`
    Y1,
    /// `y = 1 − x`
    DIAG,
}

/// Half-width below which `a` is treated as sitting on a removable singularity.
const NEAR_INTEGER: f64 = 1e-6;
/// Step of the symmetric Richardson limit in `a`.
const LIMIT_STEP: f64 = 1e-5;

fn branch_for(w: Complex, branch: Option<BranchConvention>, what: &str) -> Result<BranchConvention> {
    match branch {
        Some(b) => Ok(b),
        None if on_cut(w) => Err(Error::DomainError(format!(
            "{what} = {w} lies on the branch cut and no branch was given"
        ))),
        None => Ok(BranchConvention::default()),
    }
}

fn power(w: Complex, s: Complex, branch: Option<BranchConvention>, what: &str) -> Result<Complex> {
    pow_principal(w, s, branch_for(w, branch, what)?)
}

fn log(w: Complex, branch: Option<BranchConvention>, what: &str) -> Result<Complex> {
    if w.norm() == 0.0 {
        return Err(Error::DomainError(format!("log of zero in {what}")));
    }
    Ok(log_branch(w, branch_for(w, branch, what)?))
}

/// `w ln w` with the continuous value 0 at `w = 0`.
fn xlogx(w: Complex, branch: Option<BranchConvention>, what: &str) -> Result<Complex> {
    if w.norm() == 0.0 {
        Ok(real(0.0))
    } else {
        Ok(w * log(w, branch, what)?)
    }
}

/// Evaluates `g` at `a` directly, or by a symmetric two-point Richardson limit
/// when `a` is within [`NEAR_INTEGER`] of one of `poles`.
fn removing_poles(a: Complex, poles: &[f64], exact: impl Fn(Complex) -> Result<Complex>) -> Result<Complex> {
    let near = poles
        .iter()
        .any(|&p| (a - p).norm() < NEAR_INTEGER && (a - p).norm() > 0.0);
    if !near {
        return exact(a);
    }
    let sym = |h: f64| -> Result<Complex> { Ok(0.5 * (exact(a + h)? + exact(a - h)?)) };
    let g1 = sym(LIMIT_STEP)?;
    let g2 = sym(2.0 * LIMIT_STEP)?;
    Ok((4.0 * g1 - g2) / 3.0)
}

/// `2F1(a, 1; 2; x) = (1 − (1−x)^{1−a}) / ((1−a) x)`, with `−ln(1−x)/x` at `a = 1`.
fn gauss_a12(a: Complex, x: Complex, branch: Option<BranchConvention>) -> Result<Complex> {
    if x.norm() == 0.0 {
        return Ok(real(1.0));
    }
    let w = 1.0 - x;
    if a == real(1.0) {
        return Ok(-log(w, branch, "1−x")? / x);
    }
    Ok((1.0 - power(w, 1.0 - a, branch, "1−x")?) / ((1.0 - a) * x))
}

fn lemma_exact(a: Complex, x: Complex, y: Complex, branch: Option<BranchConvention>) -> Result<Complex> {
    if y.norm() == 0.0 {
        return gauss_a12(a, x, branch);
    }
    if x.norm() == 0.0 {
        return gauss_a12(a, y, branch);
    }
    let (wx, wy, wxy) = (1.0 - x, 1.0 - y, 1.0 - x - y);
    let xy = x * y;
    if a == real(1.0) {
        let num = xlogx(wxy, branch, "1−x−y")? - xlogx(wx, branch, "1−x")? - xlogx(wy, branch, "1−y")?;
        return Ok(num / xy);
    }
    if a == real(2.0) {
        let num = log(wx, branch, "1−x")? + log(wy, branch, "1−y")? - log(wxy, branch, "1−x−y")?;
        return Ok(num / xy);
    }
    let s = 2.0 - a;
    let num = 1.0 - power(wx, s, branch, "1−x")? - power(wy, s, branch, "1−y")?
        + power(wxy, s, branch, "1−x−y")?;
    Ok(num / ((1.0 - a) * s * xy))
}

/// `F2(a; 1, 1; 2, 2; x, y)` in closed form.
///
/// Logarithmic forms are used at `a ∈ {1, 2}`; within `1e-6` of those values
/// the result is a Richardson limit in `a`. `x = 0` or `y = 0` gives the
/// univariate `2F1(a, 1; 2; ·)`. `branch` selects `log` on the negative axis
/// and is required when one of `1−x`, `1−y`, `1−x−y` lies there.
pub fn f2_closed(a: Complex, x: Complex, y: Complex, branch: Option<BranchConvention>) -> Result<Complex> {
    removing_poles(a, &[1.0, 2.0], |a| lemma_exact(a, x, y, branch))
}

fn restriction_exact(a: Complex, x: Complex, curve: Curve, branch: Option<BranchConvention>) -> Result<Complex> {
    let s = 2.0 - a;
    let head = 1.0 - power(1.0 - x, s, branch, "1−x")?;
    match curve {
        Curve::Y1 => Ok((head + power(-x, s, branch, "−x")?) / ((1.0 - a) * s * x)),
        Curve::DIAG => Ok((head - power(x, s, branch, "x")?) / ((1.0 - a) * s * x * (1.0 - x))),
    }
}

/// `F2(a; 1, 1; 2, 2)` restricted to `y = 1` or `y = 1 − x`, for `Re a < 2`.
///
/// The removable singularity at `a = 1` is handled by a Richardson limit.
/// For [`Curve::Y1`] with `x > 0` the power `(−x)^{2−a}` needs an explicit branch.
pub fn f2_restriction_closed(
    a: Complex,
    x: Complex,
    curve: Curve,
    branch: Option<BranchConvention>,
) -> Result<Complex> {
    if a.re >= 2.0 {
        return Err(Error::DomainError(format!("restriction needs Re a < 2, got a = {a}")));
    }
    if x.norm() == 0.0 || (x - 1.0).norm() == 0.0 {
        return Err(Error::DomainError(format!("restriction is singular at x = {x}")));
    }
    if (a - 1.0).norm() < NEAR_INTEGER {
        let sym = |h: f64| -> Result<Complex> {
            Ok(0.5 * (restriction_exact(a + h, x, curve, branch)? + restriction_exact(a - h, x, curve, branch)?))
        };
        let g1 = sym(LIMIT_STEP)?;
        let g2 = sym(2.0 * LIMIT_STEP)?;
        return Ok((4.0 * g1 - g2) / 3.0);
    }
    restriction_exact(a, x, curve, branch)
}
