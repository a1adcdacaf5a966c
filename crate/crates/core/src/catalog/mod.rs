//! Registry of identities, counter-examples and no-relation statements, with
//! a uniform verification engine and machine-readable reports.
//!
//! Every entry names its parameters, a constraint predicate, and evaluators
//! for the two sides. [`verify`] checks one point; [`sweep`] checks a grid or
//! a seeded random sample; [`audit_wrong_formulas`] assembles the evidence
//! against the naive restriction formulas.

mod audit;
mod entries;
mod grid;
pub mod literal;
mod report;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::Complex;
use crate::error::{Error, Result};
use crate::series::{EvalConfig, Status};

pub use audit::{audit_wrong_formulas, AuditBlock, AuditReport};
pub use grid::{Axis, GridSpec, RandomDraws};
pub use report::{Format, Report, Summary};

/// Parameter assignment, ordered by name so reports are stable.
pub type Point = BTreeMap<String, Complex>;

/// Evaluates one side of an identity at a point that satisfies the constraints.
pub type Evaluator = fn(&Point, &EvalConfig) -> Result<Complex>;

/// `Err(reason)` when a point is outside the entry's domain.
pub type Constraint = fn(&Point) -> std::result::Result<(), String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// `lhs = rhs` within the relative tolerance.
    Equality,
    /// `lhs − rhs` equals a predicted residual.
    ResidualEquality,
    /// A statement that no two-term relation exists; nothing to evaluate.
    NoRelation,
    /// `lhs ≠ rhs` with a relative margin above the tolerance.
    InequalityWitness,
}

/// A parameter and the box random draws are taken from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub re: (f64, f64),
    pub im: (f64, f64),
    /// Draw integers in `re` instead of reals.
    pub integer: bool,
}

#[derive(Clone)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub kind: Kind,
    pub params: &'static [ParamSpec],
    /// Relative tolerance, or the required margin for a witness.
    pub tolerance: f64,
    pub constraints: Constraint,
    pub lhs: Option<Evaluator>,
    pub rhs: Option<Evaluator>,
    pub predicted_residual: Option<Evaluator>,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("params", &self.param_names())
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl IdentityEntry {
    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }

    /// Checks that `point` assigns exactly this entry's parameters.
    pub fn check_names(&self, point: &Point) -> Result<()> {
        let names = self.param_names();
        let missing: Vec<_> = names.iter().filter(|n| !point.contains_key(**n)).collect();
        if !missing.is_empty() {
            return Err(Error::InvalidParameter(format!("{}: missing parameter(s) {missing:?}", self.id)));
        }
        if let Some(extra) = point.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!(
                "{}: unknown parameter {extra:?}; expected {names:?}",
                self.id
            )));
        }
        if let Some((k, z)) = point.iter().find(|(_, z)| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidParameter(format!("{}: {k} = {z} is not finite", self.id)));
        }
        Ok(())
    }
}

/// Catalog listing for reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntrySummary {
    pub id: String,
    pub kind: Kind,
    pub description: String,
    pub params: Vec<String>,
    pub tolerance: f64,
}

impl From<&IdentityEntry> for EntrySummary {
    fn from(e: &IdentityEntry) -> Self {
        Self {
            id: e.id.into(),
            kind: e.kind,
            description: e.description.into(),
            params: e.param_names().into_iter().map(String::from).collect(),
            tolerance: e.tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "Pass",
            Verdict::Fail => "Fail",
            Verdict::Skipped(_) => "Skipped",
        }
    }
}

/// Outcome of checking one entry at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    #[serde(with = "literal::point")]
    pub point: Point,
    #[serde(with = "literal::opt")]
    pub lhs: Option<Complex>,
    #[serde(with = "literal::opt")]
    pub rhs: Option<Complex>,
    pub abs_residual: Option<f64>,
    /// `|lhs − rhs| / (1 + |lhs|)`
    pub rel_residual: Option<f64>,
    #[serde(with = "literal::opt")]
    pub predicted_residual: Option<Complex>,
    /// `|(lhs − rhs) − predicted| / (1 + |predicted|)`
    pub residual_deviation: Option<f64>,
    pub verdict: Verdict,
    /// Evaluation status when an evaluator failed.
    pub status: Option<Status>,
    pub error: Option<String>,
}

impl IdentityCheck {
    fn new(id: &str, point: Point, verdict: Verdict) -> Self {
        Self {
            id: id.into(),
            point,
            lhs: None,
            rhs: None,
            abs_residual: None,
            rel_residual: None,
            predicted_residual: None,
            residual_deviation: None,
            verdict,
            status: None,
            error: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Reason recorded for entries that are never evaluated.
pub const NO_EVALUATOR: &str = "no evaluator by design";

fn catalog() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(entries::build)
}

/// All entries, in a fixed order.
pub fn list_identities() -> &'static [IdentityEntry] {
    catalog()
}

pub fn lookup(id: &str) -> Result<&'static IdentityEntry> {
    catalog()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Checks one entry at one point.
///
/// Errors only for an unknown id or a point that does not assign exactly the
/// entry's parameters; constraint violations give `Skipped` and evaluator
/// errors give `Fail` with the status recorded.
pub fn verify(id: &str, point: &Point, cfg: &EvalConfig) -> Result<IdentityCheck> {
    let entry = lookup(id)?;
    entry.check_names(point)?;
    cfg.validate()?;
    Ok(check_entry(entry, point.clone(), cfg))
}

pub(crate) fn check_entry(entry: &IdentityEntry, point: Point, cfg: &EvalConfig) -> IdentityCheck {
    let (Some(lhs), Some(rhs)) = (entry.lhs, entry.rhs) else {
        return IdentityCheck::new(entry.id, point, Verdict::Skipped(NO_EVALUATOR.into()));
    };
    if let Err(reason) = (entry.constraints)(&point) {
        return IdentityCheck::new(entry.id, point, Verdict::Skipped(reason));
    }
    let mut check = IdentityCheck::new(entry.id, point, Verdict::Fail);
    let sides = lhs(&check.point, cfg).and_then(|l| Ok((l, rhs(&check.point, cfg)?)));
    let (l, r) = match sides {
        Ok(v) => v,
        Err(e) => return failed(check, e),
    };
    check.lhs = Some(l);
    check.rhs = Some(r);
    let abs = (l - r).norm();
    let rel = abs / (1.0 + l.norm());
    check.abs_residual = Some(abs);
    check.rel_residual = Some(rel);
    let pass = match entry.kind {
        Kind::Equality => rel <= entry.tolerance,
        Kind::InequalityWitness => rel > entry.tolerance,
        Kind::ResidualEquality => {
            let Some(predict) = entry.predicted_residual else {
                return failed(check, Error::InvalidParameter("no predicted residual evaluator".into()));
            };
            let p = match predict(&check.point, cfg) {
                Ok(p) => p,
                Err(e) => return failed(check, e),
            };
            let dev = ((l - r) - p).norm() / (1.0 + p.norm());
            check.predicted_residual = Some(p);
            check.residual_deviation = Some(dev);
            dev <= entry.tolerance
        }
        Kind::NoRelation => unreachable!("no-relation entries carry no evaluators"),
    };
    // NaN never passes
    check.verdict = if pass && rel.is_finite() { Verdict::Pass } else { Verdict::Fail };
    check
}

fn failed(mut check: IdentityCheck, e: Error) -> IdentityCheck {
    check.status = Some(Status::from_error(&e));
    check.error = Some(e.to_string());
    check.verdict = Verdict::Fail;
    check
}

/// Checks an entry at every point of a grid, in grid order.
pub fn sweep(id: &str, grid: &GridSpec, cfg: &EvalConfig) -> Result<Report> {
    let entry = lookup(id)?;
    cfg.validate()?;
    let points = grid.points(entry)?;
    let checks = points.into_iter().map(|p| check_entry(entry, p, cfg)).collect();
    Ok(Report::new(checks))
}
