//! F2(a;1,1;2,2) on its singular lines, the naive formulas, and the
//! branch term they miss.

use appell::appell::{
    branch_fit, chebyshev_abscissae, f2_closed, f2_restriction_closed, naive_rhs, AppellParams, Curve, WrongFormula,
};
use appell::arith::real;
use appell::{BranchConvention, EvalConfig};

fn main() -> appell::Result<()> {
    let cfg = EvalConfig::default();
    let a = 0.5;
    println!("F2(3;1,1;2,2;1/4,1/4) = {}", f2_closed(real(3.0), real(0.25), real(0.25), None)?.re);

    println!("\n   x      closed(y=1)     naive        difference   (−x)^(2−a)/((1−a)(2−a)x)");
    for k in 1..=5 {
        let x = -0.1 * k as f64;
        let closed = f2_restriction_closed(real(a), real(x), Curve::Y1, None)?;
        let naive = naive_rhs(WrongFormula::W1, &AppellParams::f2_lemma(real(a)), real(x), &cfg)?.value;
        let missing = (-x).powf(2.0 - a) / ((1.0 - a) * (2.0 - a) * x);
        println!("{x:>6.2}  {:>12.9}  {:>12.9}  {:>12.9}  {missing:>12.9}", closed.re, naive.re, (closed - naive).re);
    }

    // local exponents of the restriction near x = 0, with s = −x
    let samples: Vec<_> = chebyshev_abscissae(0.1, 20)
        .into_iter()
        .map(|s| Ok((s, f2_restriction_closed(real(a), real(-s), Curve::Y1, Some(BranchConvention::default()))?)))
        .collect::<appell::Result<_>>()?;
    let with = branch_fit(&samples, &[0.0, 0.5, 1.0, 2.0])?;
    let without = branch_fit(&samples, &[0.0, 1.0, 2.0])?;
    println!("\ncoefficient of s^(1/2): {:.6} (exact −4/3)", with.coefficient_of(0.5).unwrap().re);
    println!("residual with s^(1/2): {:.2e}, without: {:.2e}", with.residual_norm, without.residual_norm);
    Ok(())
}
