//! Verifying catalog identities at a point, on a grid and on seeded draws.

use appell::arith::real;
use appell::catalog::{list_identities, sweep, verify, GridSpec, Point};
use appell::EvalConfig;

fn main() -> appell::Result<()> {
    let cfg = EvalConfig::default();
    println!("{} catalog entries", list_identities().len());

    let point: Point = [("a", 0.5), ("x", -0.25)].iter().map(|(k, v)| (k.to_string(), real(*v))).collect();
    let check = verify("W-F2Y1", &point, &cfg)?;
    println!("W-F2Y1 at x = −0.25: {} (residual {:?})", check.verdict.label(), check.predicted_residual.map(|p| p.re));

    let grid = GridSpec::default()
        .axis("a", real(0.1), real(0.45), 3)
        .axis("z", real(0.2), real(0.8), 3)
        .fixed("b", real(0.3));
    let report = sweep("I-CLAUSEN", &grid, &cfg)?;
    println!("I-CLAUSEN grid: {:?}", report.summary);

    let report = sweep("I-F1Y1", &GridSpec::default().random(10, 7), &cfg)?;
    print!("{}", report.to_csv());
    Ok(())
}
