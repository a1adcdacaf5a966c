//! Evidence against the naive restriction formulas.
//!
//! The two F2 formulas are audited by residual equality: on a grid the
//! discrepancy must be exactly the missing branch term. The two F4 formulas
//! are audited by a witness point where the boundary value and the naive
//! right-hand side differ, checked together with the correct connection
//! formulas at the same `(a, b, c1, x)`, so the failure is pinned on the
//! naive Gamma-factor form rather than on the boundary evaluation.

use serde::{Deserialize, Serialize};

use crate::arith::real;
use crate::error::Result;
use crate::series::EvalConfig;

use super::{check_entry, lookup, report::checks_to_csv, sweep, GridSpec, IdentityCheck, Point, Summary};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditBlock {
    pub id: String,
    pub checks: Vec<IdentityCheck>,
    /// Correct identities evaluated at the witness points.
    pub companions: Vec<IdentityCheck>,
    /// Every check and companion passed.
    pub certified: bool,
    pub summary: Summary,
}

impl AuditBlock {
    fn new(id: &str, checks: Vec<IdentityCheck>, companions: Vec<IdentityCheck>) -> Self {
        let certified = !checks.is_empty() && checks.iter().chain(&companions).all(IdentityCheck::passed);
        let summary = Summary::of(checks.iter().chain(&companions));
        Self { id: id.into(), checks, companions, certified, summary }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub blocks: Vec<AuditBlock>,
    pub certified: bool,
    pub summary: Summary,
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_csv(&self) -> String {
        let all: Vec<_> = self.blocks.iter().flat_map(|b| b.checks.iter().chain(&b.companions)).cloned().collect();
        checks_to_csv(&all)
    }
}

fn at(pairs: &[(&str, f64)]) -> Point {
    pairs.iter().map(|(k, v)| (k.to_string(), real(*v))).collect()
}

fn run(id: &str, point: Point, cfg: &EvalConfig) -> IdentityCheck {
    check_entry(lookup(id).expect("audited entries are registered"), point, cfg)
}

/// Witness point of the F4 (viii) formula, shared with the connection checks.
pub const W_F4_VIII_POINT: [(&str, f64); 4] = [("a", 0.1), ("b", 0.15), ("c", 0.8), ("x", 0.4)];
/// Witness point of the F4 (x) formula: `c = 0.3` gives `F4(0.1; −0.1; 0.8, 0.8)`.
pub const W_F4_X_POINT: [(&str, f64); 2] = [("c", 0.3), ("x", 0.4)];
/// Connection-formula point with the same `(a, b, c1, x)` as the (x) witness.
pub const W_F4_X_COMPANION: [(&str, f64); 4] = [("a", 0.1), ("b", -0.1), ("c", 0.8), ("x", 0.4)];

pub fn audit_wrong_formulas(cfg: &EvalConfig) -> Result<AuditReport> {
    let y1 = GridSpec::default().axis("x", real(-0.05), real(-0.5), 10).fixed("a", real(0.5));
    let diag = GridSpec::default().axis("x", real(0.05), real(0.5), 10).fixed("a", real(0.5));
    let companions = |p: &[(&str, f64)]| vec![run("I-F4SA", at(p), cfg), run("I-F4SB", at(p), cfg)];

    let blocks = vec![
        AuditBlock::new("W-F2Y1", sweep("W-F2Y1", &y1, cfg)?.checks, vec![]),
        AuditBlock::new("W-F2DIAG", sweep("W-F2DIAG", &diag, cfg)?.checks, vec![]),
        AuditBlock::new(
            "W-F4-VIII",
            vec![run("W-F4-VIII", at(&W_F4_VIII_POINT), cfg)],
            companions(&W_F4_VIII_POINT),
        ),
        AuditBlock::new("W-F4-X", vec![run("W-F4-X", at(&W_F4_X_POINT), cfg)], companions(&W_F4_X_COMPANION)),
    ];
    let certified = blocks.iter().all(|b| b.certified);
    let summary = Summary::of(blocks.iter().flat_map(|b| b.checks.iter().chain(&b.companions)));
    Ok(AuditReport { blocks, certified, summary })
}
