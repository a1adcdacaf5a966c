//! Boundary values by radial extrapolation: Bailey's diagonal F4 and the
//! half-shifted F4 against its published connection formula.
//!
//! Takes a few seconds per point in release builds.

use appell::appell::{f4_connection_rhs, radial_boundary_value, AppellParams, F4Connection};
use appell::arith::real;
use appell::series::{eval_2f1, GaussParams};
use appell::EvalConfig;

fn main() -> appell::Result<()> {
    let cfg = EvalConfig::default();
    let (a, b, c) = (0.2, 0.3, 0.7);
    let x = 0.3;
    let (u, v) = (real(x * x), real((1.0 - x) * (1.0 - x)));

    let f4 = radial_boundary_value(&AppellParams::f4_bailey(real(a), real(b), real(c)), u, v, &cfg)?;
    let p1 = eval_2f1(&GaussParams::real(a, b, c), real(x), &cfg)?.value;
    let p2 = eval_2f1(&GaussParams::real(a, b, a + b - c + 1.0), real(1.0 - x), &cfg)?.value;
    println!("Bailey diagonal at x = {x}: F4 = {:.10}, product = {:.10}", f4.value.re, (p1 * p2).re);

    let (a, b, c) = (0.1, 0.15, 0.8);
    for x in [0.2, 0.6] {
        let (u, v) = (real(x * x), real((1.0 - x) * (1.0 - x)));
        let f4 = radial_boundary_value(&AppellParams::f4_half_shift(real(a), real(b), real(c)), u, v, &cfg)?;
        let sa = f4_connection_rhs(F4Connection::SA, real(a), real(b), real(c), real(x), &cfg)?;
        println!("half-shifted F4 at x = {x}: boundary value {:.8}, connection formula {:.8}", f4.value.re, sa.re);
    }
    Ok(())
}
