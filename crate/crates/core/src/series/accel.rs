//! Sequence acceleration: Wynn's epsilon algorithm for limits of sequences
//! with geometric-type error terms, and Levin's u-transform for the
//! logarithmically convergent series that appear at unit argument.

use crate::arith::Complex;
use crate::error::{Error, Result};
use crate::series::config::{EvalResult, Status};

/// Relative size below which a table difference counts as cancelled out.
const BREAKDOWN_REL: f64 = 1e-15;

fn negligible(d: Complex, x: Complex, y: Complex) -> bool {
    d.norm() <= BREAKDOWN_REL * x.norm().max(y.norm()) || d.norm() < f64::MIN_POSITIVE
}

/// Extrapolates the limit of `seq` with Wynn's epsilon algorithm.
///
/// Every even column of the table is a candidate; the one whose last two
/// entries agree best wins, and that difference is the error estimate.
pub fn accelerate_limit(seq: &[Complex]) -> Result<EvalResult> {
    if seq.len() < 3 {
        return Err(Error::InvalidParameter(
            "acceleration needs at least three values".into(),
        ));
    }
    let n = seq.len();
    let mut best = (seq[n - 1], (seq[n - 1] - seq[n - 2]).norm());
    let mut status = Status::Converged;

    let mut prev: Vec<Complex> = vec![Complex::new(0.0, 0.0); n + 1];
    let mut cur: Vec<Complex> = seq.to_vec();
    let mut prev_even_last = seq[n - 1];

    'columns: for k in 1..n {
        let cur_is_even = (k - 1) % 2 == 0;
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let d = cur[j + 1] - cur[j];
            if negligible(d, cur[j], cur[j + 1]) {
                if cur_is_even {
                    // an extrapolant column has settled to rounding level
                    if d.norm() <= best.1 {
                        best = (cur[j + 1], d.norm());
                    }
                } else {
                    status = Status::Truncated;
                }
                break 'columns;
            }
            next.push(prev[j + 1] + 1.0 / d);
        }
        if k % 2 == 0 && !next.is_empty() {
            let last = next[next.len() - 1];
            let err = if next.len() >= 2 {
                (last - next[next.len() - 2]).norm()
            } else {
                (last - prev_even_last).norm()
            };
            if err.is_finite() && err <= best.1 {
                best = (last, err);
            }
            prev_even_last = last;
        }
        prev = cur;
        cur = next;
        if cur.len() < 2 {
            break;
        }
    }

    Ok(EvalResult {
        value: best.0,
        abs_err_estimate: best.1,
        terms_used: n,
        status,
    })
}

/// Levin's u-transform of the series with the given terms.
///
/// Returns the estimate whose successive transforms agree best, together
/// with that disagreement. `None` when a term vanishes or too few terms.
pub fn levin_u(terms: &[Complex]) -> Option<(Complex, f64)> {
    const BETA: f64 = 1.0;
    if terms.len() < 4 || terms.iter().any(|t| t.norm() == 0.0) {
        return None;
    }
    let mut partial = Vec::with_capacity(terms.len());
    let mut s = Complex::new(0.0, 0.0);
    for &t in terms {
        s += t;
        partial.push(s);
    }
    let omega: Vec<Complex> = terms
        .iter()
        .enumerate()
        .map(|(m, &t)| (BETA + m as f64) * t)
        .collect();

    let kmax = terms.len() - 1;
    let mut prev: Option<Complex> = None;
    let mut best: Option<(Complex, f64)> = None;
    for k in 1..=kmax {
        let mut num = Complex::new(0.0, 0.0);
        let mut den = Complex::new(0.0, 0.0);
        let mut binom = 1.0_f64;
        let kf = k as f64;
        for j in 0..=k {
            let w = ((BETA + j as f64) / (BETA + kf)).powi(k as i32 - 1);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let coeff = sign * binom * w;
            num += coeff * partial[j] / omega[j];
            den += coeff / omega[j];
            binom = binom * (kf - j as f64) / (j as f64 + 1.0);
        }
        let est = num / den;
        if !(est.re.is_finite() && est.im.is_finite()) {
            break;
        }
        if let Some(p) = prev {
            let diff = (est - p).norm();
            if k >= 3 && best.is_none_or(|(_, e)| diff < e) {
                best = Some((est, diff));
            }
        }
        prev = Some(est);
    }
    best
}
