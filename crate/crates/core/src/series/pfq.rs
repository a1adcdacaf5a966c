use crate::arith::{nonpositive_integer, Complex, POLE_TOL};
use crate::error::{Error, Result};
use crate::series::accel::levin_u;
use crate::series::config::{EvalConfig, EvalResult, Status};

/// Upper and lower parameter lists of a generalized hypergeometric series.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqParams {
    pub upper: Vec<Complex>,
    pub lower: Vec<Complex>,
}

impl PfqParams {
    pub fn new(upper: impl Into<Vec<Complex>>, lower: impl Into<Vec<Complex>>) -> Self {
        Self {
            upper: upper.into(),
            lower: lower.into(),
        }
    }

    /// Degree `n` of the polynomial when some upper parameter is `-n`.
    pub fn terminating_degree(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter_map(|&a| nonpositive_integer(a, POLE_TOL))
            .map(|n| (-n) as u64)
            .min()
    }

    /// `Re(Σ lower − Σ upper)`, the unit-argument convergence margin.
    pub fn unit_margin(&self) -> f64 {
        self.lower.iter().map(|b| b.re).sum::<f64>() - self.upper.iter().map(|a| a.re).sum::<f64>()
    }

    fn check_lower(&self, degree: Option<u64>) -> Result<()> {
        for &b in &self.lower {
            if let Some(m) = nonpositive_integer(b, POLE_TOL) {
                let m = (-m) as u64;
                match degree {
                    Some(n) if n <= m => {}
                    _ => {
                        return Err(Error::UndefinedCoefficient(format!(
                            "lower parameter {b} hits a pole before the series terminates"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// `t_{k+1} / t_k` without the `z` factor.
    #[inline]
    pub(crate) fn term_ratio(&self, k: usize) -> Complex {
        let kf = k as f64;
        let mut r = Complex::new(1.0 / (kf + 1.0), 0.0);
        for &a in &self.upper {
            r *= a + kf;
        }
        for &b in &self.lower {
            r /= b + kf;
        }
        r
    }
}

/// `|z|`, taking the overflow-safe `hypot` only when `norm_sqr` would leave
/// the normal range.
#[inline]
fn magnitude(z: Complex) -> f64 {
    let n2 = z.norm_sqr();
    if n2 > 1e-290 && n2 < 1e290 {
        n2.sqrt()
    } else {
        z.norm()
    }
}

/// Running sum of a power series with the three-small-terms stopping rule
/// and a geometric tail estimate.
#[derive(Debug, Clone)]
pub(crate) struct Accumulator {
    sum: Complex,
    abs_sum: f64,
    last: f64,
    prev: f64,
    small_run: usize,
    pub(crate) count: usize,
    rel_tol: f64,
}

impl Accumulator {
    pub(crate) fn new(rel_tol: f64) -> Self {
        Self {
            sum: Complex::new(0.0, 0.0),
            abs_sum: 0.0,
            last: f64::INFINITY,
            prev: f64::INFINITY,
            small_run: 0,
            count: 0,
            rel_tol,
        }
    }

    /// Adds a term; returns `true` once the sum has converged.
    #[inline]
    pub(crate) fn add(&mut self, t: Complex) -> bool {
        let mag = magnitude(t);
        self.sum += t;
        self.abs_sum += mag;
        self.count += 1;
        self.prev = self.last;
        self.last = mag;
        let scale = magnitude(self.sum);
        if mag <= self.rel_tol * scale {
            self.small_run += 1;
            self.small_run >= 3 && self.tail() <= 0.5 * self.rel_tol * scale
        } else {
            self.small_run = 0;
            false
        }
    }

    /// Geometric tail estimate from the last two term magnitudes.
    fn tail(&self) -> f64 {
        if self.last == 0.0 {
            return 0.0;
        }
        let r = if self.prev > 0.0 { self.last / self.prev } else { 0.0 };
        if r < 1.0 {
            self.last * r / (1.0 - r)
        } else {
            f64::INFINITY
        }
    }

    /// Multiplies every stored magnitude by `f`.
    pub(crate) fn rescale(&mut self, f: f64) {
        self.sum *= f;
        self.abs_sum *= f;
        self.last *= f;
        self.prev *= f;
    }

    pub(crate) fn sum(&self) -> Complex {
        self.sum
    }

    pub(crate) fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    pub(crate) fn error_estimate(&self) -> f64 {
        let tail = self.tail();
        let tail = if tail.is_finite() { tail } else { self.last };
        tail + f64::EPSILON * self.abs_sum
    }

    pub(crate) fn finish(&self, converged: bool) -> EvalResult {
        EvalResult {
            value: self.sum,
            abs_err_estimate: self.error_estimate(),
            terms_used: self.count,
            status: if converged { Status::Converged } else { Status::Truncated },
        }
        .settle(self.rel_tol)
    }
}

const UNIT_TOL: f64 = 1e-13;
const LEVIN_TERMS: usize = 60;
const RICHARDSON_START: usize = 16;
const RICHARDSON_LEVELS: usize = 12;

/// Evaluates `pFq(upper; lower; z)` by direct summation.
///
/// On the unit circle the partial sums converge algebraically. At `z = 1`
/// the partial sums `S_N` are extrapolated in `N` (doubling from 16) using
/// the known tail exponents `s, s+1, ...` with `s = Σ lower − Σ upper`;
/// elsewhere on the circle Levin's u-transform is used, with a plain
/// summation fallback.
pub fn eval_pfq(p: &PfqParams, z: Complex, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    let degree = p.terminating_degree();
    p.check_lower(degree)?;
    if z.norm() == 0.0 {
        return Ok(EvalResult::exact(Complex::new(1.0, 0.0)));
    }
    if let Some(n) = degree {
        return Ok(sum_terminating(p, z, n, Complex::new(1.0, 0.0)));
    }
    let (np, nq) = (p.upper.len(), p.lower.len());
    if np > nq + 1 {
        return Err(Error::OutsideDomain(format!(
            "{np}F{nq} has zero radius of convergence"
        )));
    }
    if np == nq + 1 {
        let r = z.norm();
        if r > 1.0 + UNIT_TOL {
            return Err(Error::OutsideDomain(format!("|z| = {r} > 1")));
        }
        if (r - 1.0).abs() <= UNIT_TOL {
            let margin = p.unit_margin();
            if margin <= 0.0 {
                return Err(Error::OutsideDomain(format!(
                    "unit-argument series diverges (margin {margin})"
                )));
            }
            if (z - 1.0).norm() <= UNIT_TOL {
                return Ok(sum_at_one(p, cfg));
            }
            return Ok(sum_unit_circle(p, z, margin, cfg));
        }
    }
    Ok(sum_direct(p, z, cfg))
}

/// `m · e^L · pFq(z)` for `|z| < 1`, where `scale = (m, L)`.
///
/// The first term is `m` and partial sums are renormalised whenever they grow
/// large, so a huge row times a tiny prefactor neither overflows nor
/// underflows until the final product.
pub(crate) fn eval_pfq_scaled(
    p: &PfqParams,
    z: Complex,
    scale: (Complex, f64),
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    let degree = p.terminating_degree();
    p.check_lower(degree)?;
    let (m, log_scale) = scale;
    if let Some(n) = degree {
        return Ok(sum_terminating(p, z, n, m).scaled(Complex::new(log_scale.exp(), 0.0)));
    }
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDomain(format!("scaled summation needs |z| < 1, got {z}")));
    }
    let real_params = z.im == 0.0 && p.upper.iter().chain(&p.lower).all(|c| c.im == 0.0);
    let (up, lo): (Vec<f64>, Vec<f64>) = (p.upper.iter().map(|c| c.re).collect(), p.lower.iter().map(|c| c.re).collect());
    let mut acc = Accumulator::new(cfg.rel_tol);
    let mut t = m;
    let mut shift = log_scale;
    let mut converged = acc.add(t);
    let mut k = 0;
    while !converged && acc.count < cfg.max_terms {
        if real_params {
            // one real division per term in the common real case
            let kf = k as f64;
            let num = up.iter().fold(z.re, |n, &a| n * (a + kf));
            let den = lo.iter().fold(kf + 1.0, |d, &b| d * (b + kf));
            t *= num / den;
        } else {
            t *= p.term_ratio(k) * z;
        }
        k += 1;
        if t.re.abs().max(t.im.abs()) > RESCALE_ABOVE {
            t /= RESCALE_ABOVE;
            acc.rescale(1.0 / RESCALE_ABOVE);
            shift += RESCALE_ABOVE.ln();
        }
        converged = acc.add(t);
    }
    Ok(acc.finish(converged).scaled(Complex::new(shift.exp(), 0.0)))
}

const RESCALE_ABOVE: f64 = 1e200;

fn sum_terminating(p: &PfqParams, z: Complex, n: u64, scale: Complex) -> EvalResult {
    let mut t = scale;
    let mut sum = t;
    let mut abs_sum = t.norm();
    for k in 0..n as usize {
        t *= p.term_ratio(k) * z;
        sum += t;
        abs_sum += t.norm();
    }
    EvalResult {
        value: sum,
        abs_err_estimate: f64::EPSILON * abs_sum,
        terms_used: n as usize + 1,
        status: Status::Converged,
    }
}

fn sum_direct(p: &PfqParams, z: Complex, cfg: &EvalConfig) -> EvalResult {
    let mut acc = Accumulator::new(cfg.rel_tol);
    let mut t = Complex::new(1.0, 0.0);
    let mut converged = acc.add(t);
    let mut k = 0;
    while !converged && acc.count < cfg.max_terms {
        t *= p.term_ratio(k) * z;
        k += 1;
        converged = acc.add(t);
    }
    acc.finish(converged)
}

fn sum_at_one(p: &PfqParams, cfg: &EvalConfig) -> EvalResult {
    let exponent: Complex =
        p.lower.iter().sum::<Complex>() - p.upper.iter().sum::<Complex>();
    let mut sums = Vec::with_capacity(RICHARDSON_LEVELS);
    let mut t = Complex::new(1.0, 0.0);
    let mut acc = Complex::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut k = 0;
    let mut target = RICHARDSON_START;
    while sums.len() < RICHARDSON_LEVELS && target <= cfg.max_terms.max(RICHARDSON_START * 4) {
        acc += t;
        abs_sum += t.norm();
        t *= p.term_ratio(k);
        k += 1;
        if k == target {
            sums.push(acc);
            target *= 2;
        }
    }
    let mut best = (acc, f64::INFINITY);
    let mut column = sums;
    let mut j = 0;
    while column.len() > 1 {
        let rho = Complex::new(2.0, 0.0).powc(-(exponent + j as f64));
        column = column
            .windows(2)
            .map(|w| (w[1] - rho * w[0]) / (1.0 - rho))
            .collect();
        j += 1;
        if column.len() >= 2 {
            let last = column[column.len() - 1];
            let err = (last - column[column.len() - 2]).norm();
            if err < best.1 {
                best = (last, err);
            }
        }
    }
    EvalResult {
        value: best.0,
        abs_err_estimate: best.1 + f64::EPSILON * abs_sum,
        terms_used: k,
        status: Status::Converged,
    }
    .settle(cfg.rel_tol)
}

fn sum_unit_circle(p: &PfqParams, z: Complex, margin: f64, cfg: &EvalConfig) -> EvalResult {
    let mut terms = Vec::with_capacity(LEVIN_TERMS);
    let mut t = Complex::new(1.0, 0.0);
    terms.push(t);
    for k in 0..LEVIN_TERMS - 1 {
        t *= p.term_ratio(k) * z;
        terms.push(t);
    }
    let levin = levin_u(&terms);
    if let Some((value, err)) = levin {
        if err <= cfg.rel_tol * (1.0 + value.norm()) {
            return EvalResult {
                value,
                abs_err_estimate: err,
                terms_used: LEVIN_TERMS,
                status: Status::Converged,
            };
        }
    }
    // terms decay like k^(-1-margin); the tail is at most about k |t_k| / margin
    let mut acc = Accumulator::new(cfg.rel_tol);
    let mut t = Complex::new(1.0, 0.0);
    acc.add(t);
    let mut k = 0;
    let mut tail;
    loop {
        t *= p.term_ratio(k) * z;
        k += 1;
        acc.add(t);
        tail = (k as f64) * t.norm() / margin;
        if tail <= cfg.rel_tol * acc.sum().norm() || acc.count >= cfg.max_terms {
            break;
        }
    }
    let direct = EvalResult {
        value: acc.sum(),
        abs_err_estimate: tail + f64::EPSILON * acc.abs_sum(),
        terms_used: acc.count,
        status: Status::Converged,
    }
    .settle(cfg.rel_tol);
    match levin {
        Some((value, err)) if err < direct.abs_err_estimate => EvalResult {
            value,
            abs_err_estimate: err,
            terms_used: LEVIN_TERMS,
            status: Status::Truncated,
        },
        _ => direct,
    }
}
