//! Least-squares detection of local exponents: fits `f(s) ≈ Σ B_m s^{μ_m}`.

use nalgebra::{DMatrix, DVector};

use crate::arith::Complex;
use crate::error::{Error, Result};

/// Largest design-matrix condition number accepted by [`branch_fit`].
pub const FIT_COND_LIMIT: f64 = 1e12;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BranchFit {
    pub exponents: Vec<f64>,
    pub coefficients: Vec<Complex>,
    /// Euclidean norm of the misfit over all samples.
    pub residual_norm: f64,
    pub condition_number: f64,
}

impl BranchFit {
    /// Coefficient attached to the exponent closest to `mu`.
    pub fn coefficient_of(&self, mu: f64) -> Option<Complex> {
        self.exponents
            .iter()
            .zip(&self.coefficients)
            .filter(|(e, _)| (**e - mu).abs() < 1e-12)
            .map(|(_, c)| *c)
            .next()
    }
}

/// Chebyshev nodes on `(0, s_max)`, clustered toward both ends of the interval.
pub fn chebyshev_abscissae(s_max: f64, n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| 0.5 * s_max * (1.0 - (std::f64::consts::PI * (i as f64 - 0.5) / n as f64).cos()))
        .collect()
}

/// Fits the samples `(s, f(s))`, `s > 0`, by powers of `s` with the given exponents.
pub fn branch_fit(samples: &[(f64, Complex)], exponents: &[f64]) -> Result<BranchFit> {
    let (n, m) = (samples.len(), exponents.len());
    if m == 0 {
        return Err(Error::InvalidParameter("no exponents to fit".into()));
    }
    if n < m + 2 {
        return Err(Error::InvalidParameter(format!(
            "{n} samples are not enough for {m} exponents (need {})",
            m + 2
        )));
    }
    let mut s_sorted: Vec<f64> = samples.iter().map(|p| p.0).collect();
    if s_sorted.iter().any(|s| !(*s > 0.0) || !s.is_finite()) {
        return Err(Error::InvalidParameter("sample abscissae must be positive".into()));
    }
    s_sorted.sort_by(f64::total_cmp);
    if s_sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter("sample abscissae must be distinct".into()));
    }

    let design = DMatrix::from_fn(n, m, |i, j| samples[i].0.powf(exponents[j]));
    let svd = design.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if cond > FIT_COND_LIMIT {
        return Err(Error::IllConditioned(cond));
    }

    let re = DVector::from_iterator(n, samples.iter().map(|p| p.1.re));
    let im = DVector::from_iterator(n, samples.iter().map(|p| p.1.im));
    let solve = |rhs: &DVector<f64>| {
        svd.solve(rhs, 0.0)
            .map_err(|e| Error::NumericalBreakdown(format!("least-squares solve failed: {e}")))
    };
    let (x_re, x_im) = (solve(&re)?, solve(&im)?);
    let r_re = &design * &x_re - re;
    let r_im = &design * &x_im - im;
    let residual_norm = (r_re.norm_squared() + r_im.norm_squared()).sqrt();

    Ok(BranchFit {
        exponents: exponents.to_vec(),
        coefficients: x_re.iter().zip(x_im.iter()).map(|(&r, &i)| Complex::new(r, i)).collect(),
        residual_norm,
        condition_number: cond,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::{f2_restriction_closed, Curve};
    use crate::arith::real;

    fn y1_samples() -> Vec<(f64, Complex)> {
        chebyshev_abscissae(0.1, 20)
            .into_iter()
            .map(|s| {
                (s, f2_restriction_closed(real(0.5), real(-s), Curve::Y1, None).unwrap())
            })
            .collect()
    }

    #[test]
    fn exact_linear() {
        let samples: Vec<_> = (1..=6).map(|i| (i as f64, real(3.0 + 2.0 * i as f64))).collect();
        let fit = branch_fit(&samples, &[0.0, 1.0]).unwrap();
        assert!((fit.coefficients[0] - real(3.0)).norm() < 1e-12);
        assert!((fit.coefficients[1] - real(2.0)).norm() < 1e-12);
        assert!(fit.residual_norm < 1e-12);
    }

    #[test]
    fn half_power_in_y1_restriction() {
        let samples = y1_samples();
        let with = branch_fit(&samples, &[0.0, 0.5, 1.0, 2.0]).unwrap();
        let b = with.coefficient_of(0.5).unwrap();
        assert!((b.re + 4.0 / 3.0).abs() < 1e-4, "{b}");
        let without = branch_fit(&samples, &[0.0, 1.0, 2.0]).unwrap();
        assert!(without.residual_norm >= 1e3 * with.residual_norm, "{} vs {}", without.residual_norm, with.residual_norm);
        let full = branch_fit(&samples, &[0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert!(full.residual_norm < 1e-10);
    }

    #[test]
    fn rejects_bad_input() {
        let samples: Vec<_> = (1..=3).map(|i| (i as f64, real(1.0))).collect();
        assert!(matches!(branch_fit(&samples, &[0.0, 1.0]), Err(Error::InvalidParameter(_))));
        let dup = vec![(1.0, real(1.0)); 5];
        assert!(matches!(branch_fit(&dup, &[0.0]), Err(Error::InvalidParameter(_))));
        let s: Vec<_> = (1..=8).map(|i| (1.0 + 1e-9 * i as f64, real(1.0))).collect();
        assert!(matches!(branch_fit(&s, &[0.0, 1.0, 2.0]), Err(Error::IllConditioned(_))));
    }
}
