//! Sweep reports and their JSON and CSV renderings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{literal, IdentityCheck, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of<'a>(checks: impl IntoIterator<Item = &'a IdentityCheck>) -> Self {
        let mut s = Summary::default();
        for c in checks {
            s.total += 1;
            match c.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

/// Checks in grid order with their verdict counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<IdentityCheck>,
    pub summary: Summary,
}

impl Report {
    pub fn new(checks: Vec<IdentityCheck>) -> Self {
        let summary = Summary::of(&checks);
        Self { checks, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidParameter(format!("malformed report: {e}")))
    }

    pub fn to_csv(&self) -> String {
        checks_to_csv(&self.checks)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

const CSV_HEADER: [&str; 11] = [
    "id",
    "point",
    "lhs",
    "rhs",
    "abs_residual",
    "rel_residual",
    "predicted_residual",
    "residual_deviation",
    "verdict",
    "reason",
    "error",
];

fn float(x: Option<f64>) -> String {
    x.map(|v| format!("{v:e}")).unwrap_or_default()
}

fn cplx(z: Option<crate::arith::Complex>) -> String {
    z.map(literal::format).unwrap_or_default()
}

/// One row per check; complex values as `re+imi` strings.
pub fn checks_to_csv(checks: &[IdentityCheck]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for c in checks {
        let reason = match &c.verdict {
            Verdict::Skipped(r) => r.clone(),
            _ => String::new(),
        };
        w.write_record([
            c.id.clone(),
            literal::format_point(&c.point),
            cplx(c.lhs),
            cplx(c.rhs),
            float(c.abs_residual),
            float(c.rel_residual),
            cplx(c.predicted_residual),
            float(c.residual_deviation),
            c.verdict.label().to_string(),
            reason,
            c.error.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
