//! The Kampé de Fériet series
//!
//! ```text
//!                    (a)_{i+j} (b)_{i+j} (p1)_i (p2)_j
//! F(x, y) = Σ Σ  ------------------------------------  x^i y^j
//!                  (c)_{i+j} (q1)_i (q2)_j i! j!
//! ```
//!
//! with its Watson corner values and the Clausen-type identities built on it.

use std::f64::consts::PI;

use crate::appell::{DoubleSeries, RowTrace};
use crate::arith::{gamma_ratio, nonpositive_integer, pochhammer, real, Complex, POLE_TOL};
use crate::error::{Error, Result};
use crate::series::{eval_2f1, eval_pfq, EvalConfig, EvalResult, GaussParams, PfqParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KdfParams {
    pub a: Complex,
    pub b: Complex,
    pub p1: Complex,
    pub p2: Complex,
    pub c: Complex,
    pub q1: Complex,
    pub q2: Complex,
}

impl KdfParams {
    pub fn new(a: Complex, b: Complex, p1: Complex, p2: Complex, c: Complex, q1: Complex, q2: Complex) -> Self {
        Self { a, b, p1, p2, c, q1, q2 }
    }

    /// The parameters paired with `2F1(a, b; c; z)²`:
    /// `(2a; 2b; c−½, a+b−c+½ / a+b+½; 2c−1, 2a+2b−2c+1)`.
    pub fn clausen_pair(a: Complex, b: Complex, c: Complex) -> Self {
        Self::new(
            2.0 * a,
            2.0 * b,
            c - 0.5,
            a + b - c + 0.5,
            a + b + 0.5,
            2.0 * c - 1.0,
            2.0 * a + 2.0 * b - 2.0 * c + 1.0,
        )
    }

    /// `(2a; 2b; a+b+n, −n / a+b+½; 2a+2b+2n, −2n)`, terminating in the second variable.
    pub fn terminating_pair(a: Complex, b: Complex, n: u32) -> Self {
        let nf = n as f64;
        Self::new(
            2.0 * a,
            2.0 * b,
            a + b + nf,
            real(-nf),
            a + b + 0.5,
            2.0 * a + 2.0 * b + 2.0 * nf,
            real(-2.0 * nf),
        )
    }

    /// Degree of the `y`-polynomial when `p2 = −n`.
    pub fn inner_degree(&self) -> Option<u64> {
        nonpositive_integer(self.p2, POLE_TOL).map(|n| (-n) as u64)
    }

    /// Degree of the `x`-polynomial when `p1 = −n`.
    pub fn outer_degree(&self) -> Option<u64> {
        nonpositive_integer(self.p1, POLE_TOL).map(|n| (-n) as u64)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, d) in [("c", self.c), ("q1", self.q1)] {
            if nonpositive_integer(d, POLE_TOL).is_some() {
                return Err(Error::UndefinedCoefficient(format!("{name} = {d} is a non-positive integer")));
            }
        }
        if let Some(m) = nonpositive_integer(self.q2, POLE_TOL) {
            match self.inner_degree() {
                Some(n) if n <= (-m) as u64 => {}
                _ => {
                    return Err(Error::UndefinedCoefficient(format!(
                        "q2 = {} is a non-positive integer and the y-series does not terminate before it",
                        self.q2
                    )))
                }
            }
        }
        Ok(())
    }

    fn as_double(&self) -> DoubleSeries {
        DoubleSeries {
            joint_upper: vec![self.a, self.b],
            row_upper: vec![self.p1],
            col_upper: vec![self.p2],
            joint_lower: vec![self.c],
            row_lower: vec![self.q1],
            col_lower: vec![self.q2],
        }
    }
}

/// Sums the series row by row in `x`. The evaluation domain is `|x|+|y| < 1`,
/// relaxed to `|x| < 1` when the `y`-series terminates.
pub fn eval_kdf(p: &KdfParams, x: Complex, y: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    eval_kdf_traced(p, x, y, cfg).map(|t| t.result)
}

/// [`eval_kdf`] with per-row inner term counts.
pub fn eval_kdf_traced(p: &KdfParams, x: Complex, y: Complex, cfg: &EvalConfig) -> Result<RowTrace> {
    let inside = if p.inner_degree().is_some() {
        x.norm() < 1.0
    } else if p.outer_degree().is_some() {
        y.norm() < 1.0
    } else {
        x.norm() + y.norm() < 1.0
    };
    if !inside {
        return Err(Error::OutsideDomain(format!("({x}, {y}) is outside the evaluation domain")));
    }
    p.validate()?;
    p.as_double().sum_rows(x, y, cfg)
}

/// Corner at which the Clausen-paired series is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Corner {
    /// `(x, y) = (0, 1)`
    Z0,
    /// `(x, y) = (1, 0)`
    Z1,
}

/// Watson's evaluation of the Clausen-paired series at a corner, under
/// `Re c < 1` and `Re(c−a−b) > 1`.
pub fn kdf_corner(a: Complex, b: Complex, c: Complex, corner: Corner) -> Result<Complex> {
    if c.re >= 1.0 || (c - a - b).re <= 1.0 {
        return Err(Error::OutsideDomain(format!(
            "corner values need Re c < 1 and Re(c−a−b) > 1, got c = {c}, c−a−b = {}",
            c - a - b
        )));
    }
    let half = real(0.5);
    let (num, den) = match corner {
        Corner::Z0 => (
            [half, a + b + 0.5, 1.0 - c, 1.0 + a + b - c],
            [a + 0.5, b + 0.5, 1.0 + a - c, 1.0 + b - c],
        ),
        Corner::Z1 => ([half, a + b + 0.5, c, c - a - b], [a + 0.5, b + 0.5, c - a, c - b]),
    };
    gamma_ratio(&num, &den)
}

/// `|Z1 − R·Z0|` where `Z0`, `Z1` are the corner values and
/// `R = 2F1(a, b; c; 1)²`. Proportionality of the two functions paired with
/// `2F1(a, b; c; z)²` would make this vanish; the form stays finite when `Z0 = 0`.
pub fn non_proportionality_gap(a: Complex, b: Complex, c: Complex) -> Result<f64> {
    let z0 = kdf_corner(a, b, c, Corner::Z0)?;
    let z1 = kdf_corner(a, b, c, Corner::Z1)?;
    let g = gamma_ratio(&[c, c - a - b], &[c - a, c - b])?;
    Ok((z1 - g * g * z0).norm())
}

/// `3F2(2a, 2b, a+b; 2a+2b, a+b+½; z)`, the right-hand side of Clausen's identity.
pub fn clausen_rhs(a: Complex, b: Complex, z: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("Clausen series needs |z| < 1, got {z}")));
    }
    eval_pfq(
        &PfqParams::new(vec![2.0 * a, 2.0 * b, a + b], vec![2.0 * a + 2.0 * b, a + b + 0.5]),
        z,
        cfg,
    )
}

/// Both sides of
/// `2F1(a, b; a+b+n+½; z)² = (½)_n (a+b+½)_n / ((a+½)_n (b+½)_n) · F(z, 1−z)`
/// where `F` is the terminating series of [`KdfParams::terminating_pair`].
pub fn gen_clausen_sides(a: Complex, b: Complex, n: u32, z: Complex, cfg: &EvalConfig) -> Result<(Complex, Complex)> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("generalized Clausen needs |z| < 1, got {z}")));
    }
    let den = pochhammer(a + 0.5, n) * pochhammer(b + 0.5, n);
    if den.norm() < POLE_TOL {
        return Err(Error::DegenerateCoefficient(format!("(a+½)_n (b+½)_n vanishes for n = {n}")));
    }
    let nf = n as f64;
    let f = eval_2f1(&GaussParams::new(a, b, a + b + nf + 0.5), z, cfg)?.value;
    let ratio = pochhammer(real(0.5), n) * pochhammer(a + b + 0.5, n) / den;
    let series = eval_kdf(&KdfParams::terminating_pair(a, b, n), z, 1.0 - z, cfg).map_err(|e| match e {
        Error::UndefinedCoefficient(msg) => Error::DegenerateCoefficient(msg),
        other => other,
    })?;
    Ok((f * f, ratio * series.value))
}

/// `(−1)^n n! / (2^{2n+1} (½)_n)`
pub fn poch_ratio_limit(n: u32) -> Complex {
    let mut value = 0.5;
    for k in 1..=n {
        // n!/(2^{2n}(½)_n) grows by k/(4(k−½)) per step
        value *= -(k as f64) / (4.0 * (k as f64 - 0.5));
    }
    real(value)
}

/// `(ε−n)_{2n+1} / (2ε−2n)_{2n+1}` at a given `ε ≠ 0`.
pub fn poch_ratio_at(n: u32, eps: f64) -> Complex {
    let nf = n as f64;
    pochhammer(real(eps - nf), 2 * n + 1) / pochhammer(real(2.0 * eps - 2.0 * nf), 2 * n + 1)
}

/// Two-sided Richardson estimate of `lim_{ε→0} poch_ratio_at(n, ε)`.
pub fn poch_ratio_numeric(n: u32, eps: f64) -> Complex {
    let sym = |e: f64| 0.5 * (poch_ratio_at(n, e) + poch_ratio_at(n, -e));
    (4.0 * sym(eps) - sym(2.0 * eps)) / 3.0
}

/// Distance to a pole below which the coefficient identity refuses to evaluate.
const TRIG_POLE_DISTANCE: f64 = 1e-3;

/// `LHS − RHS` of the coefficient identity
///
/// ```text
/// cos πa cos πb / cos π(a+b) · (a+½)_n (b+½)_n / ((½)_n (a+b+½)_n)
///   − sin πa sin πb / cos π(a+b) · (2a)_{2n+1} (2b)_{2n+1} / (2^{4n+2} (½)_n (a+b+½)_n (a)_{n+1} (b)_{n+1})
///   = (a+½)_n (b+½)_n / ((½)_n (a+b+½)_n)
/// ```
pub fn coeff_identity_residual(a: Complex, b: Complex, n: u32) -> Result<Complex> {
    let s = a + b - 0.5;
    if (s - s.re.round()).norm() < TRIG_POLE_DISTANCE {
        return Err(Error::PoleEncountered(format!("cos π(a+b) vanishes at a+b = {}", a + b)));
    }
    let an = pochhammer(a, n + 1);
    let bn = pochhammer(b, n + 1);
    let abn = pochhammer(a + b + 0.5, n);
    for (name, v) in [("(a)_{n+1}", an), ("(b)_{n+1}", bn), ("(a+b+½)_n", abn)] {
        if v.norm() < TRIG_POLE_DISTANCE * TRIG_POLE_DISTANCE {
            return Err(Error::PoleEncountered(format!("{name} vanishes")));
        }
    }
    let cos_ab = (PI * (a + b)).cos();
    let half_n = pochhammer(real(0.5), n);
    let base = pochhammer(a + 0.5, n) * pochhammer(b + 0.5, n) / (half_n * abn);
    let first = (PI * a).cos() * (PI * b).cos() / cos_ab * base;
    let second = (PI * a).sin() * (PI * b).sin() / cos_ab * pochhammer(2.0 * a, 2 * n + 1)
        * pochhammer(2.0 * b, 2 * n + 1)
        / (4f64.powi(2 * n as i32 + 1) * half_n * abn * an * bn);
    Ok(first - second - base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::{eval_appell, AppellParams};
    use crate::arith::c;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn origin() {
        let p = KdfParams::clausen_pair(real(0.2), real(0.1), real(0.7));
        assert_eq!(eval_kdf(&p, real(0.0), real(0.0), &cfg()).unwrap().value, real(1.0));
    }

    #[test]
    fn reduces_to_f2_when_a_equals_c() {
        let (b, p1, p2, q1, q2) = (real(0.4), real(0.3), real(0.2), real(1.2), real(1.5));
        let a = real(0.77);
        let p = KdfParams::new(a, b, p1, p2, a, q1, q2);
        let lhs = eval_kdf(&p, real(0.2), real(0.3), &cfg()).unwrap();
        let rhs = eval_appell(&AppellParams::f2(b, p1, p2, q1, q2), real(0.2), real(0.3), &cfg()).unwrap();
        assert!((lhs.value - rhs.value).norm() < 1e-10);
    }

    #[test]
    fn terminating_rows_have_fixed_length() {
        let p = KdfParams::new(real(0.3), real(0.2), real(0.4), real(-1.0), real(0.9), real(1.1), real(-2.0));
        let t = eval_kdf_traced(&p, real(0.4), real(0.9), &cfg()).unwrap();
        assert!(t.row_terms.iter().all(|&n| n == 2), "{:?}", t.row_terms);
        let t = eval_kdf_traced(&KdfParams::terminating_pair(real(0.3), real(0.2), 3), real(0.5), real(0.5), &cfg()).unwrap();
        assert!(t.row_terms.iter().all(|&n| n == 4));
    }

    #[test]
    fn bad_denominators() {
        let p = KdfParams::new(real(0.3), real(0.2), real(0.4), real(-3.0), real(0.9), real(1.1), real(-2.0));
        assert!(matches!(eval_kdf(&p, real(0.1), real(0.1), &cfg()), Err(Error::UndefinedCoefficient(_))));
        let p = KdfParams::new(real(0.3), real(0.2), real(0.4), real(0.5), real(0.9), real(1.1), real(1.0));
        assert!(matches!(eval_kdf(&p, real(0.6), real(0.6), &cfg()), Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn watson_corners_match_unit_series() {
        let (a, b, cc) = (real(-0.4), real(-0.3), real(0.6));
        let z0 = kdf_corner(a, b, cc, Corner::Z0).unwrap();
        let s0 = eval_pfq(
            &PfqParams::new(vec![2.0 * a, 2.0 * b, a + b - cc + 0.5], vec![a + b + 0.5, 2.0 * a + 2.0 * b - 2.0 * cc + 1.0]),
            real(1.0),
            &cfg(),
        )
        .unwrap();
        assert!((z0 - s0.value).norm() < 1e-9, "{z0} vs {s0:?}");
        let z1 = kdf_corner(a, b, cc, Corner::Z1).unwrap();
        let s1 = eval_pfq(
            &PfqParams::new(vec![2.0 * a, 2.0 * b, cc - 0.5], vec![a + b + 0.5, 2.0 * cc - 1.0]),
            real(1.0),
            &cfg(),
        )
        .unwrap();
        assert!((z1 - s1.value).norm() < 1e-9, "{z1} vs {s1:?}");
        // 1+a−c = 0 here, so the z = 0 corner vanishes and proportionality would force Z1 = 0 too
        assert_eq!(z0, real(0.0));
        assert!(non_proportionality_gap(a, b, cc).unwrap() > 1e-3);
        assert!(non_proportionality_gap(real(-0.35), real(-0.3), real(0.55)).unwrap() > 1e-3);
        assert!(matches!(kdf_corner(real(0.1), real(0.1), real(0.6), Corner::Z0), Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn clausen() {
        for (a, b, z, tol) in [(0.25, 0.25, 0.5, 1e-10), (0.3, 0.2, 0.7, 1e-9)] {
            let rhs = clausen_rhs(real(a), real(b), real(z), &cfg()).unwrap();
            let f = eval_2f1(&GaussParams::real(a, b, a + b + 0.5), real(z), &cfg()).unwrap().value;
            assert!((rhs.value - f * f).norm() < tol);
        }
        assert_eq!(clausen_rhs(real(0.3), real(0.2), real(0.0), &cfg()).unwrap().value, real(1.0));
    }

    #[test]
    fn generalized_clausen() {
        for (a, b, n, z, tol) in [(0.25, 0.25, 0, 0.4, 1e-10), (0.3, 0.2, 1, 0.4, 1e-8), (0.3, 0.2, 2, 0.6, 1e-8)] {
            let (l, r) = gen_clausen_sides(real(a), real(b), n, real(z), &cfg()).unwrap();
            assert!((l - r).norm() < tol, "n = {n}: {l} vs {r}");
        }
        assert!(matches!(
            gen_clausen_sides(real(-0.5), real(0.2), 1, real(0.4), &cfg()),
            Err(Error::DegenerateCoefficient(_))
        ));
    }

    #[test]
    fn poch_ratio() {
        assert_eq!(poch_ratio_limit(0), real(0.5));
        assert!((poch_ratio_limit(1) - real(-0.25)).norm() < 1e-15);
        assert!((poch_ratio_limit(2) - real(1.0 / 12.0)).norm() < 1e-15);
        for n in 0..=6 {
            let numeric = poch_ratio_numeric(n, 1e-6);
            assert!((numeric - poch_ratio_limit(n)).norm() < 1e-8, "n = {n}: {numeric}");
        }
        assert!((poch_ratio_at(1, 1e-6) - real(-0.25)).norm() < 1e-5);
    }

    #[test]
    fn coefficient_identity() {
        assert!(coeff_identity_residual(real(0.3), real(0.45), 2).unwrap().norm() < 1e-12);
        assert!(coeff_identity_residual(c(0.3, 0.1), c(0.2, -0.05), 1).unwrap().norm() < 1e-11);
        assert!(coeff_identity_residual(real(0.25), real(0.2), 0).unwrap().norm() < 1e-13);
        assert!(matches!(
            coeff_identity_residual(real(0.25), real(0.25), 0),
            Err(Error::PoleEncountered(_))
        ));
    }
}
