//! The `appell` command line.
//!
//! ```text
//! appell [flags] eval <function> name=value...
//! appell [flags] verify <ID> name=value...
//! appell [flags] sweep <ID> [--grid name=lo:hi:n]... [--draws N] [name=value...]
//! appell [flags] audit
//! appell [flags] list
//! ```
//!
//! Values are complex literals (`0.3`, `0.3+0.1i`, `-2i`). Reports go to
//! stdout as JSON (default) or CSV. Exit code 0 means every check passed,
//! 1 means at least one failed, 2 means the request itself was rejected.

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::appell::{
    eval_appell, f2_closed, f2_restriction_closed, radial_boundary_value, AppellParams, Curve,
};
use crate::arith::{gamma, BranchConvention, Complex};
use crate::catalog::{
    self, audit_wrong_formulas, literal, Axis, EntrySummary, Format, GridSpec, Point, Report,
};
use crate::error::{Error, Result};
use crate::kdf::{eval_kdf, kdf_corner, Corner, KdfParams};
use crate::series::{eval_2f1, eval_pfq, EvalConfig, EvalResult, GaussParams, PfqParams, Status};

/// What a finished run hands back to the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self { code, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "appell", version, about = "Appell functions and identity checks")]
struct Cli {
    /// Relative tolerance of every series
    #[arg(long, global = true, default_value_t = EvalConfig::default().rel_tol)]
    tol: f64,
    /// Term cap per series (per row for double series)
    #[arg(long, global = true, default_value_t = EvalConfig::default().max_terms)]
    max_terms: usize,
    /// Number of radial samples in boundary extrapolation
    #[arg(long, global = true, default_value_t = EvalConfig::default().accel_depth)]
    accel_depth: usize,
    /// Output format: json or csv
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: Format,
    /// Seed for random sweeps
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval {
        function: String,
        #[arg(value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Check one identity at one point
    Verify {
        id: String,
        #[arg(value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Check one identity over a grid or seeded random draws
    Sweep {
        id: String,
        /// Axis `name=lo:hi:n`, repeatable; with --draws it bounds the draw box
        #[arg(long = "grid", value_name = "SPEC")]
        grids: Vec<String>,
        /// Number of seeded random points instead of a grid
        #[arg(long)]
        draws: Option<usize>,
        /// Fixed parameters
        #[arg(value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Run the audit of the naive restriction formulas
    Audit,
    /// List the identity catalog
    List,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(format!("unknown format {other:?}; expected json or csv")),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(0, text),
                _ => Outcome::usage(text),
            };
        }
    };
    let cfg = EvalConfig::default()
        .with_tol(cli.tol)
        .with_max_terms(cli.max_terms)
        .with_accel_depth(cli.accel_depth);
    if let Err(e) = cfg.validate() {
        return Outcome::usage(format!("error: {e}\n"));
    }
    let result = match &cli.command {
        Command::Eval { function, params } => eval(function, params, cli.format, &cfg),
        Command::Verify { id, params } => verify(id, params, cli.format, &cfg),
        Command::Sweep { id, grids, draws, params } => sweep(id, grids, *draws, cli.seed, params, cli.format, &cfg),
        Command::Audit => audit(cli.format, &cfg),
        Command::List => Ok(list(cli.format)),
    };
    result.unwrap_or_else(|e| {
        let code = if is_request_error(&e) { 2 } else { 1 };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    })
}

/// Errors that reject the request rather than report a numerical failure.
fn is_request_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidParameter(_) | Error::UnknownIdentity(_) | Error::OutsideDomain(_) | Error::DomainError(_)
    )
}

fn parse_point(params: &[String]) -> Result<Point> {
    let mut point = Point::new();
    for item in params {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected name=value, got {item:?}")))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::InvalidParameter(format!("missing parameter name in {item:?}")));
        }
        if point.insert(name.to_string(), literal::parse(value)?).is_some() {
            return Err(Error::InvalidParameter(format!("parameter {name:?} is assigned twice")));
        }
    }
    Ok(point)
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn report_outcome(report: &Report, format: Format) -> Outcome {
    let code = if report.summary.fail > 0 { 1 } else { 0 };
    let text = match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => report.to_csv(),
    };
    Outcome::ok(code, text)
}

fn verify(id: &str, params: &[String], format: Format, cfg: &EvalConfig) -> Result<Outcome> {
    catalog::lookup(id)?;
    let point = parse_point(params)?;
    let check = catalog::verify(id, &point, cfg)?;
    Ok(report_outcome(&Report::new(vec![check]), format))
}

fn sweep(
    id: &str,
    grids: &[String],
    draws: Option<usize>,
    seed: u64,
    params: &[String],
    format: Format,
    cfg: &EvalConfig,
) -> Result<Outcome> {
    catalog::lookup(id)?;
    let mut grid = GridSpec {
        axes: grids.iter().map(|g| Axis::parse(g)).collect::<Result<_>>()?,
        fixed: parse_point(params)?,
        random: None,
    };
    if let Some(count) = draws {
        grid = grid.random(count, seed);
    }
    Ok(report_outcome(&catalog::sweep(id, &grid, cfg)?, format))
}

fn audit(format: Format, cfg: &EvalConfig) -> Result<Outcome> {
    let report = audit_wrong_formulas(cfg)?;
    let code = if report.certified { 0 } else { 1 };
    let text = match format {
        Format::Json => render(&report),
        Format::Csv => report.to_csv(),
    };
    Ok(Outcome::ok(code, text))
}

fn list(format: Format) -> Outcome {
    let entries: Vec<EntrySummary> = catalog::list_identities().iter().map(EntrySummary::from).collect();
    let text = match format {
        Format::Json => render(&entries),
        Format::Csv => csv_rows(
            &["id", "kind", "params", "tolerance", "description"],
            entries.iter().map(|e| {
                vec![
                    e.id.clone(),
                    format!("{:?}", e.kind),
                    e.params.join(" "),
                    e.tolerance.to_string(),
                    e.description.clone(),
                ]
            }),
        ),
    };
    Outcome::ok(0, text)
}

/// The result of `eval`, as printed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub function: String,
    #[serde(with = "literal::point")]
    pub point: Point,
    #[serde(with = "literal")]
    pub value: Complex,
    pub abs_err_estimate: f64,
    pub terms_used: usize,
    pub status: Status,
}

type Evaluate = fn(&Args, &EvalConfig) -> Result<EvalResult>;

struct Function {
    name: &'static str,
    params: &'static [&'static str],
    about: &'static str,
    eval: Evaluate,
}

struct Args<'a>(&'a Point);

impl Args<'_> {
    fn get(&self, name: &str) -> Complex {
        self.0[name]
    }

    fn nat(&self, name: &str) -> Result<u32> {
        let z = self.get(name);
        if z.im != 0.0 || z.re < 0.0 || z.re.fract() != 0.0 || z.re > u32::MAX as f64 {
            return Err(Error::InvalidParameter(format!("{name} must be a non-negative integer, got {z}")));
        }
        Ok(z.re as u32)
    }
}

fn exact(value: Result<Complex>) -> Result<EvalResult> {
    value.map(EvalResult::exact)
}

fn appell(p: &Args, family: u8) -> AppellParams {
    match family {
        1 => AppellParams::f1(p.get("a"), p.get("b1"), p.get("b2"), p.get("c")),
        2 => AppellParams::f2(p.get("a"), p.get("b1"), p.get("b2"), p.get("c1"), p.get("c2")),
        3 => AppellParams::f3(p.get("a1"), p.get("a2"), p.get("b1"), p.get("b2"), p.get("c")),
        _ => AppellParams::f4(p.get("a"), p.get("b"), p.get("c1"), p.get("c2")),
    }
}

macro_rules! double_series {
    ($name:literal, $bname:literal, $family:literal, [$($param:literal),*]) => {
        [
            Function {
                name: $name,
                params: &[$($param,)* "u", "v"],
                about: "double series inside its region of convergence",
                eval: |p, cfg| eval_appell(&appell(p, $family), p.get("u"), p.get("v"), cfg),
            },
            Function {
                name: $bname,
                params: &[$($param,)* "u", "v"],
                about: "radial limit at a point of the closed region",
                eval: |p, cfg| radial_boundary_value(&appell(p, $family), p.get("u"), p.get("v"), cfg),
            },
        ]
    };
}

fn functions() -> Vec<Function> {
    let mut all = vec![
        Function {
            name: "gamma",
            params: &["z"],
            about: "complex Gamma function",
            eval: |p, _| exact(gamma(p.get("z"))),
        },
        Function {
            name: "2f1",
            params: &["a", "b", "c", "z"],
            about: "Gauss hypergeometric function, continued by transformations",
            eval: |p, cfg| eval_2f1(&GaussParams::new(p.get("a"), p.get("b"), p.get("c")), p.get("z"), cfg),
        },
        Function {
            name: "3f2",
            params: &["a1", "a2", "a3", "b1", "b2", "z"],
            about: "3F2 series for |z| <= 1",
            eval: |p, cfg| {
                let up = [p.get("a1"), p.get("a2"), p.get("a3")];
                eval_pfq(&PfqParams::new(up, [p.get("b1"), p.get("b2")]), p.get("z"), cfg)
            },
        },
        Function {
            name: "f2-closed",
            params: &["a", "x", "y"],
            about: "closed form of F2(a; 1, 1; 2, 2; x, y)",
            eval: |p, _| exact(f2_closed(p.get("a"), p.get("x"), p.get("y"), Some(BranchConvention::default()))),
        },
        Function {
            name: "f2-y1",
            params: &["a", "x"],
            about: "F2(a; 1, 1; 2, 2; x, 1) in closed form",
            eval: |p, _| {
                exact(f2_restriction_closed(p.get("a"), p.get("x"), Curve::Y1, Some(BranchConvention::default())))
            },
        },
        Function {
            name: "f2-diag",
            params: &["a", "x"],
            about: "F2(a; 1, 1; 2, 2; x, 1 - x) in closed form",
            eval: |p, _| {
                exact(f2_restriction_closed(p.get("a"), p.get("x"), Curve::DIAG, Some(BranchConvention::default())))
            },
        },
        Function {
            name: "kdf",
            params: &["a", "b", "p1", "p2", "c", "q1", "q2", "x", "y"],
            about: "Kampe de Feriet double series",
            eval: |p, cfg| {
                let k = KdfParams::new(
                    p.get("a"),
                    p.get("b"),
                    p.get("p1"),
                    p.get("p2"),
                    p.get("c"),
                    p.get("q1"),
                    p.get("q2"),
                );
                eval_kdf(&k, p.get("x"), p.get("y"), cfg)
            },
        },
        Function {
            name: "kdf-z0",
            params: &["a", "b", "c"],
            about: "Clausen-paired series at (x, y) = (0, 1)",
            eval: |p, _| exact(kdf_corner(p.get("a"), p.get("b"), p.get("c"), Corner::Z0)),
        },
        Function {
            name: "kdf-z1",
            params: &["a", "b", "c"],
            about: "Clausen-paired series at (x, y) = (1, 0)",
            eval: |p, _| exact(kdf_corner(p.get("a"), p.get("b"), p.get("c"), Corner::Z1)),
        },
        Function {
            name: "poch-limit",
            params: &["n"],
            about: "limit of the Pochhammer ratio as eps -> 0",
            eval: |p, _| Ok(EvalResult::exact(crate::kdf::poch_ratio_limit(p.nat("n")?))),
        },
    ];
    all.extend(double_series!("f1", "f1-boundary", 1, ["a", "b1", "b2", "c"]));
    all.extend(double_series!("f2", "f2-boundary", 2, ["a", "b1", "b2", "c1", "c2"]));
    all.extend(double_series!("f3", "f3-boundary", 3, ["a1", "a2", "b1", "b2", "c"]));
    all.extend(double_series!("f4", "f4-boundary", 4, ["a", "b", "c1", "c2"]));
    all
}

fn eval(name: &str, params: &[String], format: Format, cfg: &EvalConfig) -> Result<Outcome> {
    let table = functions();
    let Some(f) = table.iter().find(|f| f.name.eq_ignore_ascii_case(name)) else {
        let known: Vec<_> = table.iter().map(|f| f.name).collect();
        return Err(Error::InvalidParameter(format!("unknown function {name:?}; known: {}", known.join(", "))));
    };
    let point = parse_point(params)?;
    let missing: Vec<_> = f.params.iter().filter(|n| !point.contains_key(**n)).collect();
    let extra: Vec<_> = point.keys().filter(|k| !f.params.contains(&k.as_str())).collect();
    if !missing.is_empty() || !extra.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "{} ({}) takes {}; missing {missing:?}, unexpected {extra:?}",
            f.name,
            f.about,
            f.params.join(" ")
        )));
    }
    let r = (f.eval)(&Args(&point), cfg)?;
    let out = EvalOutput {
        function: f.name.to_string(),
        point,
        value: r.value,
        abs_err_estimate: r.abs_err_estimate,
        terms_used: r.terms_used,
        status: r.status,
    };
    let code = if out.status == Status::Converged { 0 } else { 1 };
    let text = match format {
        Format::Json => render(&out),
        Format::Csv => csv_rows(
            &["function", "point", "value", "abs_err_estimate", "terms_used", "status"],
            [vec![
                out.function.clone(),
                literal::format_point(&out.point),
                literal::format(out.value),
                out.abs_err_estimate.to_string(),
                out.terms_used.to_string(),
                format!("{:?}", out.status),
            ]],
        ),
    };
    Ok(Outcome::ok(code, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("appell").chain(args.iter().copied()))
    }

    #[test]
    fn lemma_value() {
        let out = run_args(&["eval", "f2-closed", "a=3", "x=0.25", "y=0.25"]);
        assert_eq!(out.code, 0, "{out:?}");
        let parsed: EvalOutput = serde_json::from_str(&out.stdout).unwrap();
        assert!((parsed.value.re - 2.666_666_7).abs() < 1e-7);
    }

    #[test]
    fn every_function_has_distinct_name() {
        let table = functions();
        let mut names: Vec<_> = table.iter().map(|f| f.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), table.len());
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [
            &["eval", "nope", "z=1"][..],
            &["eval", "2f1", "a=1", "b=1", "c=2"],
            &["eval", "2f1", "a=1", "b=1", "c=2", "z=0.5", "w=1"],
            &["eval", "gamma", "z=1+"],
            &["verify", "I-NOPE"],
            &["verify", "I-CLAUSEN", "a=0.25"],
            &["sweep", "I-CLAUSEN", "--grid", "z=0:1"],
            &["list", "--format", "xml"],
            &["list", "--tol", "-1"],
            &["frobnicate"],
        ] {
            let out = run_args(args);
            assert_eq!(out.code, 2, "{args:?}: {out:?}");
            assert!(out.stdout.is_empty());
            assert!(!out.stderr.is_empty());
        }
    }

    #[test]
    fn csv_eval() {
        let out = run_args(&["--format", "csv", "eval", "gamma", "z=5"]);
        assert_eq!(out.code, 0);
        let mut lines = out.stdout.lines();
        assert_eq!(lines.next(), Some("function,point,value,abs_err_estimate,terms_used,status"));
        assert!(lines.next().unwrap().starts_with("gamma,z=5+0i,24"));
    }

    #[test]
    fn natural_parameters() {
        let out = run_args(&["eval", "poch-limit", "n=1"]);
        assert_eq!(out.code, 0);
        let parsed: EvalOutput = serde_json::from_str(&out.stdout).unwrap();
        assert!((parsed.value.re + 0.25).abs() < 1e-15);
        assert_eq!(run_args(&["eval", "poch-limit", "n=1.5"]).code, 2);
    }
}
