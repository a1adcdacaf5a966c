//! Complex Gamma-family functions, Pochhammer symbols and branch-aware powers.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The universal value type.
pub type Complex = Complex64;

/// Distance from a non-positive integer below which Gamma reports a pole.
pub const POLE_TOL: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Branch of `log(w)` used for `w` on the negative real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub enum BranchConvention {
    /// `log(-r) = ln r + iπ`
    #[default]
    PrincipalUpper,
    /// `log(-r) = ln r - iπ`
    PrincipalLower,
}

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// Returns the non-positive integer `z` sits on, if any (within `tol`).
pub fn nonpositive_integer(z: Complex, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if n <= 0.0 && (z - real(n)).norm() < tol {
        Some(n as i64)
    } else {
        None
    }
}

pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

fn lanczos_sum(z: Complex) -> Complex {
    // z is already shifted by -1
    let mut acc = real(LANCZOS_COEFFS[0]);
    for (i, &p) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += p / (z + i as f64);
    }
    acc
}

/// Lanczos Gamma on Re z >= 0.5.
fn gamma_right(z: Complex) -> Complex {
    let z = z - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let log_part = (z + 0.5) * t.ln() - t + LN_SQRT_2PI;
    log_part.exp() * lanczos_sum(z)
}

/// Complex Gamma function. Uses reflection on `Re z < 0.5`.
pub fn gamma(z: Complex) -> Result<Complex> {
    if let Some(n) = nonpositive_integer(z, POLE_TOL) {
        return Err(Error::PoleEncountered(format!("Gamma at {n}")));
    }
    let value = if z.re < 0.5 {
        PI / ((PI * z).sin() * gamma_right(1.0 - z))
    } else {
        gamma_right(z)
    };
    if is_finite(value) {
        Ok(value)
    } else {
        Err(Error::DomainError(format!("Gamma overflow at {z}")))
    }
}

/// `1/Γ(z)`, which is entire; returns exactly zero at the poles of Gamma.
pub fn rgamma(z: Complex) -> Complex {
    if nonpositive_integer(z, POLE_TOL).is_some() {
        return Complex::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        (PI * z).sin() * gamma_right(1.0 - z) / PI
    } else {
        1.0 / gamma_right(z)
    }
}

/// Log-Gamma on the right half-plane, continuous in `z`.
pub fn log_gamma(z: Complex) -> Result<Complex> {
    if z.re <= 0.0 {
        return Err(Error::DomainError(format!(
            "log_gamma requires Re z > 0, got {z}"
        )));
    }
    if z.re < 0.5 {
        return Ok(log_gamma_right(z + 1.0) - z.ln());
    }
    Ok(log_gamma_right(z))
}

fn log_gamma_right(z: Complex) -> Complex {
    let z = z - 1.0;
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + lanczos_sum(z).ln()
}

/// `Π Γ(num) / Π Γ(den)`.
///
/// Poles in the denominator give zero; poles in the numerator are errors.
/// Large arguments on the right half-plane go through `log_gamma`.
pub fn gamma_ratio(num: &[Complex], den: &[Complex]) -> Result<Complex> {
    for &z in num {
        if let Some(n) = nonpositive_integer(z, POLE_TOL) {
            return Err(Error::PoleEncountered(format!("Gamma at {n} in numerator")));
        }
    }
    if den.iter().any(|&z| nonpositive_integer(z, POLE_TOL).is_some()) {
        return Ok(Complex::new(0.0, 0.0));
    }
    let all = num.iter().chain(den.iter());
    let large = all.clone().any(|z| z.norm() > 100.0);
    if large && all.clone().all(|z| z.re > 0.0) {
        let mut acc = Complex::new(0.0, 0.0);
        for &z in num {
            acc += log_gamma(z)?;
        }
        for &z in den {
            acc -= log_gamma(z)?;
        }
        return Ok(acc.exp());
    }
    // alternate numerator and denominator factors so partial products stay moderate
    let mut acc = Complex::new(1.0, 0.0);
    for i in 0..num.len().max(den.len()) {
        if let Some(&z) = num.get(i) {
            acc *= gamma(z)?;
        }
        if let Some(&z) = den.get(i) {
            acc *= rgamma(z);
        }
    }
    if is_finite(acc) {
        Ok(acc)
    } else {
        Err(Error::DomainError("Gamma ratio overflow".into()))
    }
}

/// Rising factorial `a(a+1)...(a+k-1)` as an explicit product.
pub fn pochhammer(a: Complex, k: u32) -> Complex {
    let mut acc = Complex::new(1.0, 0.0);
    for m in 0..k {
        acc *= a + m as f64;
    }
    acc
}

/// `log w` with the requested treatment of the negative real axis.
pub fn log_branch(w: Complex, branch: BranchConvention) -> Complex {
    if w.im == 0.0 && w.re < 0.0 {
        let arg = match branch {
            BranchConvention::PrincipalUpper => PI,
            BranchConvention::PrincipalLower => -PI,
        };
        return Complex::new((-w.re).ln(), arg);
    }
    w.ln()
}

/// `w^s = exp(s log w)` under the given branch; real positive bases give real powers.
pub fn pow_principal(w: Complex, s: Complex, branch: BranchConvention) -> Result<Complex> {
    if w.re == 0.0 && w.im == 0.0 {
        return if s.re > 0.0 {
            Ok(Complex::new(0.0, 0.0))
        } else {
            Err(Error::DomainError(format!("0^{s} is undefined")))
        };
    }
    if w.im == 0.0 && w.re > 0.0 && s.im == 0.0 {
        return Ok(real(w.re.powf(s.re)));
    }
    Ok((s * log_branch(w, branch)).exp())
}

/// True when `w` lies on the negative real axis, where the branch matters.
pub fn on_cut(w: Complex) -> bool {
    w.im == 0.0 && w.re < 0.0
}

/// `|x - y| <= tol * max(1, |y|)`
pub fn close(x: Complex, y: Complex, tol: f64) -> bool {
    (x - y).norm() <= tol * y.norm().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex, b: Complex) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn gamma_small_values() {
        assert!(rel(gamma(real(1.0)).unwrap(), real(1.0)) < 1e-14);
        assert!(rel(gamma(real(5.0)).unwrap(), real(24.0)) < 1e-14);
        assert!(rel(gamma(real(0.5)).unwrap(), real(PI.sqrt())) < 1e-14);
        // Γ(-0.5) = -2√π
        assert!(rel(gamma(real(-0.5)).unwrap(), real(-2.0 * PI.sqrt())) < 1e-13);
    }

    #[test]
    fn gamma_poles() {
        for n in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma(real(n)), Err(Error::PoleEncountered(_))));
            assert_eq!(rgamma(real(n)), real(0.0));
        }
        assert!(gamma(real(-3.0 + 1e-9)).is_ok());
    }

    #[test]
    fn gamma_against_factorials_on_strip() {
        let mut fact = 1.0_f64;
        for n in 1..25 {
            let g = gamma(real(n as f64)).unwrap();
            assert!(rel(g, real(fact)) < 1e-13, "n={n}");
            fact *= n as f64;
        }
        // |Γ(1/2 + iy)|^2 = π / cosh(π y)
        for y in [1.0, 5.0, 12.0, 20.0] {
            let g = gamma(c(0.5, y)).unwrap();
            let expected = PI / (PI * y).cosh();
            assert!((g.norm_sqr() - expected).abs() / expected < 1e-12, "y={y}");
        }
    }

    #[test]
    fn log_gamma_values() {
        assert!(log_gamma(real(1.0)).unwrap().norm() < 1e-14);
        assert!(log_gamma(real(2.0)).unwrap().norm() < 1e-14);
        let v = log_gamma(real(10.0)).unwrap();
        assert!((v.re - 362880f64.ln()).abs() < 1e-12);
        assert!(matches!(log_gamma(real(-1.0)), Err(Error::DomainError(_))));
        assert!(matches!(log_gamma(real(0.0)), Err(Error::DomainError(_))));
        for z in [c(0.2, 0.3), c(3.0, -7.0), c(25.0, 18.0)] {
            let g = gamma(z).unwrap();
            assert!(rel(log_gamma(z).unwrap().exp(), g) < 1e-12, "z={z}");
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(c(0.3, 0.7), 0), real(1.0));
        assert_eq!(pochhammer(real(2.0), 3), real(24.0));
        assert_eq!(pochhammer(real(-2.0), 3), real(0.0));
        assert_eq!(pochhammer(real(-2.0), 2), real(2.0));
    }

    #[test]
    fn powers_and_branches() {
        let b = BranchConvention::PrincipalUpper;
        assert_eq!(pow_principal(real(0.25), real(1.5), b).unwrap(), real(0.125));
        assert_eq!(
            pow_principal(real(0.25), real(1.5), BranchConvention::PrincipalLower).unwrap(),
            real(0.125)
        );
        assert_eq!(pow_principal(real(1.0), c(0.3, 2.0), b).unwrap().re, 1.0);
        let i = pow_principal(real(-1.0), real(0.5), b).unwrap();
        assert!((i - c(0.0, 1.0)).norm() < 1e-15);
        let minus_i = pow_principal(real(-1.0), real(0.5), BranchConvention::PrincipalLower).unwrap();
        assert!((minus_i - c(0.0, -1.0)).norm() < 1e-15);
        assert_eq!(pow_principal(real(0.0), real(2.0), b).unwrap(), real(0.0));
        assert!(matches!(pow_principal(real(0.0), real(0.0), b), Err(Error::DomainError(_))));
        // -0.0 imaginary part is still on the cut, so the convention decides
        let w = c(-4.0, -0.0);
        assert!((pow_principal(w, real(0.5), b).unwrap() - c(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn gamma_ratio_handles_denominator_poles() {
        let r = gamma_ratio(&[real(3.0)], &[real(0.0), real(1.5)]).unwrap();
        assert_eq!(r, real(0.0));
        let big = gamma_ratio(&[real(200.5)], &[real(200.0)]).unwrap();
        // Γ(n+1/2)/Γ(n) ~ sqrt(n) (1 - 1/(8n))
        let n = 200.0_f64;
        let approx = n.sqrt() * (1.0 - 1.0 / (8.0 * n) + 1.0 / (128.0 * n * n));
        assert!((big.re - approx).abs() / approx < 1e-8);
        assert!(gamma_ratio(&[real(-1.0)], &[]).is_err());
    }
}
