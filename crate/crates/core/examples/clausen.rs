//! Clausen's identity and the Kampé de Fériet corner values.

use appell::arith::real;
use appell::kdf::{clausen_rhs, gen_clausen_sides, kdf_corner, non_proportionality_gap, poch_ratio_limit, Corner};
use appell::series::{eval_2f1, GaussParams};
use appell::EvalConfig;

fn main() -> appell::Result<()> {
    let cfg = EvalConfig::default();
    let (a, b) = (0.25, 0.35);
    for z in [0.2, 0.5, 0.8] {
        let square = eval_2f1(&GaussParams::real(a, b, a + b + 0.5), real(z), &cfg)?.value.powi(2);
        let rhs = clausen_rhs(real(a), real(b), real(z), &cfg)?.value;
        println!("z = {z}: 2F1² = {:.14}, 3F2 = {:.14}", square.re, rhs.re);
    }
    for n in 0..=3 {
        let (l, r) = gen_clausen_sides(real(a), real(b), n, real(0.5), &cfg)?;
        println!("generalized, n = {n}: {:.12} vs {:.12}", l.re, r.re);
    }
    let (a, b, c) = (real(-0.4), real(-0.3), real(0.6));
    println!("corner (0,1): {}", kdf_corner(a, b, c, Corner::Z0)?);
    println!("corner (1,0): {}", kdf_corner(a, b, c, Corner::Z1)?);
    println!("non-proportionality gap: {:.4}", non_proportionality_gap(a, b, c)?);
    for n in 0..=3 {
        println!("Pochhammer limit n = {n}: {}", poch_ratio_limit(n).re);
    }
    Ok(())
}
