//! The audit of the naive restriction formulas, summarized per formula.

use appell::catalog::audit_wrong_formulas;
use appell::EvalConfig;

fn main() -> appell::Result<()> {
    let report = audit_wrong_formulas(&EvalConfig::default())?;
    for block in &report.blocks {
        println!("{:<10} certified: {:<5} {:?}", block.id, block.certified, block.summary);
        for c in block.checks.iter().chain(&block.companions).filter(|c| !c.passed()) {
            println!("    {} failed: lhs {:?} rhs {:?}", c.id, c.lhs, c.rhs);
        }
    }
    println!("overall certified: {}", report.certified);
    Ok(())
}
