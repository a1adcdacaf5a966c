//! Gauss's function: series, transformations, and the value at z = 1.

use appell::arith::{c, real};
use appell::series::{connection_coeffs_at_1, eval_2f1, eval_pfq, gauss_at_1, GaussParams, PfqParams};
use appell::EvalConfig;

fn main() -> appell::Result<()> {
    let cfg = EvalConfig::default();
    let p = GaussParams::real(0.5, 0.5, 1.5);

    // arcsin(√z)/√z
    for x in [0.25, 0.9, -3.0] {
        let r = eval_2f1(&p, real(x), &cfg)?;
        println!("2F1(1/2,1/2;3/2;{x:>5}) = {:.15}  ({:?}, {} terms)", r.value.re, r.status, r.terms_used);
    }
    let r = 0.9f64.sqrt();
    println!("asin(√0.9)/√0.9        = {:.15}", r.asin() / r);

    let z = c(0.3, 0.4);
    println!("2F1 at {z}     = {}", eval_2f1(&GaussParams::real(0.2, 0.7, 1.3), z, &cfg)?.value);

    // the series at z = 1 against Gauss's summation
    let (a, b, cc) = (real(0.2), real(-0.3), real(1.4));
    let series = eval_pfq(&PfqParams::new([a, b], [cc]), real(1.0), &cfg)?;
    println!("series at 1 = {:.14}, Gauss = {:.14}", series.value.re, gauss_at_1(a, b, cc)?.re);

    let (ca, cb) = connection_coeffs_at_1(a, b, cc)?;
    println!("connection coefficients at z = 1: A = {:.12}, B = {:.12}", ca.re, cb.re);

    // ζ(2) as 3F2(1,1,1;2,2;1)
    let one = real(1.0);
    let zeta2 = eval_pfq(&PfqParams::new([one, one, one], [real(2.0), real(2.0)]), one, &cfg)?;
    println!("3F2(1,1,1;2,2;1) = {:.14}  (π²/6 = {:.14})", zeta2.value.re, std::f64::consts::PI.powi(2) / 6.0);
    Ok(())
}
