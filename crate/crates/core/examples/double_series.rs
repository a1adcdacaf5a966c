//! The four Appell functions inside their regions of convergence.

use appell::appell::{eval_appell, in_convergence_region, region_measure, AppellParams};
use appell::arith::real;
use appell::EvalConfig;

fn main() {
    let cfg = EvalConfig::default();
    let h = real(0.5);
    let families = [
        ("F1", AppellParams::f1(h, real(1.0), h, real(2.0))),
        ("F2", AppellParams::f2(h, real(1.0), h, real(2.0), real(1.5))),
        ("F3", AppellParams::f3(h, real(1.0), h, h, real(2.0))),
        ("F4", AppellParams::f4(h, real(1.0), real(2.0), real(1.5))),
    ];
    for (u, v) in [(0.2, 0.1), (0.45, 0.45), (0.3, 0.6)] {
        println!("(u, v) = ({u}, {v})");
        for (name, p) in &families {
            let measure = region_measure(p.family(), real(u), real(v));
            if !in_convergence_region(p.family(), real(u), real(v)) {
                println!("  {name}: outside (measure {measure:.3})");
                continue;
            }
            match eval_appell(p, real(u), real(v), &cfg) {
                Ok(r) => println!("  {name}: {:.14}  err ~ {:.1e}, {} terms", r.value.re, r.abs_err_estimate, r.terms_used),
                Err(e) => println!("  {name}: {e}"),
            }
        }
    }
}
