//! Complex Gamma, Pochhammer symbols and branch-aware powers.

use appell::arith::{c, gamma, gamma_ratio, log_gamma, pochhammer, pow_principal, real};
use appell::BranchConvention;

fn main() -> appell::Result<()> {
    println!("Γ(5)        = {}", gamma(real(5.0))?);
    println!("Γ(1/2)²     = {}  (π = {})", gamma(real(0.5))?.powi(2), std::f64::consts::PI);
    println!("Γ(0.3+2i)   = {}", gamma(c(0.3, 2.0))?);
    println!("ln Γ(150)   = {}", log_gamma(real(150.0))?);
    println!("(0.5)_4     = {}", pochhammer(real(0.5), 4));

    // 160!/(158!·2) without overflow
    let ratio = gamma_ratio(&[real(161.0)], &[real(159.0), real(3.0)])?;
    println!("C(160, 2)   = {ratio}");

    match gamma(real(-2.0)) {
        Ok(v) => println!("Γ(−2) = {v}"),
        Err(e) => println!("Γ(−2): {e}"),
    }

    let w = real(-4.0);
    for branch in [BranchConvention::PrincipalUpper, BranchConvention::PrincipalLower] {
        println!("(−4)^(1/2) on {branch:?}: {}", pow_principal(w, real(0.5), branch)?);
    }
    Ok(())
}
