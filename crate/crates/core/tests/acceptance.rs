//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A plain `main` (the target has `harness = false`): the criteria run
//! serially, so the wall time of criterion 13 is meaningful, and the lines
//! are printed on every `cargo test`.
//!
//! Criteria 8 and 9 contain the check "the half-shifted F4 connection formula
//! equals the extrapolated boundary value". It does not hold away from x = 0
//! and x = 1 (see README, "Known discrepancy"). Those lines print FAIL, and
//! the test pins the measured mismatch instead of accepting it silently.

use std::time::{Duration, Instant};

use appell::appell::{
    branch_fit, chebyshev_abscissae, eval_appell, f2_closed, f2_restriction_closed, f4_connection_rhs,
    radial_boundary_value, AppellParams, Curve, F4Connection,
};
use appell::arith::{real, BranchConvention};
use appell::catalog::{self, audit_wrong_formulas, AuditReport, GridSpec, IdentityCheck, Point, Verdict};
use appell::kdf::{non_proportionality_gap, poch_ratio_limit};
use appell::{Complex, EvalConfig};

const LEMMA_TOL: f64 = 1e-9;
const RESIDUAL_TOL: f64 = 1e-10;
const SPOT_TOL: f64 = 1e-9;
const BRANCH_COEFF_TOL: f64 = 1e-4;
const BRANCH_INFLATION: f64 = 1e3;
const EDGE_TOL: f64 = 1e-9;
const BOUNDARY_TOL: f64 = 1e-6;
const CONNECTION_TOL: f64 = 1e-9;
const WITNESS_MARGIN: f64 = 1e-3;
const TRIG_TOL: f64 = 1e-12;
const CLAUSEN_TOL: f64 = 1e-10;
const GEN_CLAUSEN_TOL: f64 = 1e-8;
const POCH_TOL: f64 = 1e-8;
const COEFF_TOL: f64 = 1e-11;
const CORNER_TOL: f64 = 1e-9;
const SUITE_BUDGET: Duration = Duration::from_secs(180);

/// Smallest interior mismatch of the half-shifted connection formula we expect
/// to reproduce; measured relative values are 0.038 to 0.053.
const F4SA_MISMATCH_FLOOR: f64 = 1e-2;

struct Line {
    n: usize,
    pass: bool,
    detail: String,
}

fn line(n: usize, pass: bool, detail: impl Into<String>) -> Line {
    Line { n, pass, detail: detail.into() }
}

fn pt(pairs: &[(&str, f64)]) -> Point {
    pairs.iter().map(|(k, v)| (k.to_string(), real(*v))).collect()
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

/// Plain Gauss series, independent of the library's transformations.
fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> f64 {
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 0..20_000 {
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

fn lemma_grid() -> Vec<(f64, f64)> {
    let ax = [-0.4, -0.2, 0.0, 0.2, 0.4];
    ax.iter().flat_map(|&x| ax.iter().map(move |&y| (x, y))).collect()
}

fn criterion_1() -> Line {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for a in [-1.5, 0.5, 3.0] {
        for &(x, y) in &lemma_grid() {
            let series = eval_appell(&AppellParams::f2_lemma(real(a)), real(x), real(y), &cfg()).unwrap();
            let closed = f2_closed(real(a), real(x), real(y), None).unwrap();
            worst = worst.max((series.value - closed).norm());
        }
    }
    let took = start.elapsed();
    line(
        1,
        worst <= LEMMA_TOL && took < Duration::from_secs(5),
        format!("lemma closed form vs double series, 75 points: max |Δ| = {worst:.2e}, {took:.2?}"),
    )
}

fn criterion_2() -> Line {
    let mut worst = 0.0f64;
    for &(x, y) in &lemma_grid() {
        if x == 0.0 || y == 0.0 {
            continue;
        }
        let ln = f64::ln;
        let exact1 = ((1.0 - x - y) * ln(1.0 - x - y) - (1.0 - x) * ln(1.0 - x) - (1.0 - y) * ln(1.0 - y)) / (x * y);
        let exact2 = (ln(1.0 - x) + ln(1.0 - y) - ln(1.0 - x - y)) / (x * y);
        for (a, exact) in [(1.0, exact1), (2.0, exact2)] {
            let series = eval_appell(&AppellParams::f2_lemma(real(a)), real(x), real(y), &cfg()).unwrap();
            let closed = f2_closed(real(a), real(x), real(y), None).unwrap();
            worst = worst.max((series.value - exact).norm()).max((closed - exact).norm());
        }
    }
    line(2, worst <= LEMMA_TOL, format!("a = 1, 2 logarithmic forms vs double series: max |Δ| = {worst:.2e}"))
}

/// Observed `lhs − rhs` against a predicted residual computed here.
fn residual_criterion(n: usize, id: &str, xs: &[f64], predicted: impl Fn(f64) -> f64, spot: (f64, f64)) -> Line {
    let mut worst = 0.0f64;
    let mut verdicts = true;
    let mut spot_obs = f64::NAN;
    for &x in xs.iter().chain([spot.0].iter()) {
        let c = catalog::verify(id, &pt(&[("a", 0.5), ("x", x)]), &cfg()).unwrap();
        verdicts &= c.passed();
        let observed = c.lhs.unwrap() - c.rhs.unwrap();
        worst = worst.max((observed - predicted(x)).norm());
        if x == spot.0 {
            spot_obs = observed.re;
        }
    }
    let spot_ok = (spot_obs - spot.1).abs() <= SPOT_TOL;
    line(
        n,
        verdicts && worst <= RESIDUAL_TOL && spot_ok,
        format!(
            "{id}: max |observed − predicted| = {worst:.2e} over 10 points; spot x = {} gives {spot_obs:.10}",
            spot.0
        ),
    )
}

fn criterion_3() -> Line {
    let xs: Vec<f64> = (1..=10).map(|k| -0.05 * k as f64).collect();
    // (−x)^{3/2} / ((1−a)(2−a)x) at a = 1/2
    residual_criterion(3, "W-F2Y1", &xs, |x| (-x).powf(1.5) / (0.75 * x), (-0.25, -2.0 / 3.0))
}

fn criterion_4() -> Line {
    let xs: Vec<f64> = (1..=10).map(|k| 0.05 * k as f64).collect();
    residual_criterion(4, "W-F2DIAG", &xs, |x| -x.powf(1.5) / (0.75 * x * (1.0 - x)), (0.25, -8.0 / 9.0))
}

fn criterion_5() -> Line {
    let samples: Vec<(f64, Complex)> = chebyshev_abscissae(0.1, 20)
        .into_iter()
        .map(|s| {
            let v = f2_restriction_closed(real(0.5), real(-s), Curve::Y1, Some(BranchConvention::default())).unwrap();
            (s, v)
        })
        .collect();
    let with = branch_fit(&samples, &[0.0, 0.5, 1.0, 2.0]).unwrap();
    let without = branch_fit(&samples, &[0.0, 1.0, 2.0]).unwrap();
    let coeff = with.coefficient_of(0.5).unwrap();
    let err = (coeff - real(-4.0 / 3.0)).norm();
    let inflation = without.residual_norm / with.residual_norm;
    line(
        5,
        err <= BRANCH_COEFF_TOL && inflation >= BRANCH_INFLATION,
        format!("s^(1/2) coefficient {:.8} (error {err:.2e}); dropping 1/2 inflates residual {inflation:.2e}x", coeff.re),
    )
}

fn sweep_worst(id: &str, grid: &GridSpec) -> (usize, usize, f64) {
    let report = catalog::sweep(id, grid, &cfg()).unwrap();
    let worst = max_of(report.checks.iter().map(|c| c.rel_residual.unwrap_or(f64::NAN)));
    (report.summary.pass, report.summary.total, worst)
}

fn criterion_6() -> Line {
    let start = Instant::now();
    let grid = GridSpec::default().axis("x", real(-0.9), real(0.9), 2).random(100, 6);
    let f3 = sweep_worst("I-F3Y1", &grid);
    let f1 = sweep_worst("I-F1Y1", &grid);
    let took = start.elapsed();
    let ok = |(p, t, w): (usize, usize, f64)| p == 100 && t == 100 && w <= EDGE_TOL;
    line(
        6,
        ok(f3) && ok(f1) && took < Duration::from_secs(30),
        format!(
            "I-F3Y1 {}/{} (worst {:.2e}), I-F1Y1 {}/{} (worst {:.2e}), {took:.2?}",
            f3.0, f3.1, f3.2, f1.0, f1.1, f1.2
        ),
    )
}

fn criterion_7() -> Line {
    let mut worst_f2 = 0.0f64;
    for x in [0.1, 0.25, 0.5] {
        let r = radial_boundary_value(&AppellParams::f2_lemma(real(0.5)), real(x), real(1.0 - x), &cfg()).unwrap();
        let exact = (1.0 - (1.0 - x).powf(1.5) - x.powf(1.5)) / (0.75 * x * (1.0 - x));
        worst_f2 = worst_f2.max((r.value - exact).norm());
    }
    let (a, b, c, x) = (0.2, 0.3, 0.7, 0.3);
    let r = radial_boundary_value(&AppellParams::f4_bailey(real(a), real(b), real(c)), real(x * x), real((1.0 - x) * (1.0 - x)), &cfg())
        .unwrap();
    let product = hyp2f1_series(a, b, c, x) * hyp2f1_series(a, b, a + b - c + 1.0, 1.0 - x);
    let bailey = (r.value - product).norm();
    line(
        7,
        worst_f2 <= BOUNDARY_TOL && bailey <= BOUNDARY_TOL,
        format!("F2 toward (x, 1−x): max |Δ| = {worst_f2:.2e}; Bailey diagonal |Δ| = {bailey:.2e}"),
    )
}

struct HalfShift {
    sa_sb: f64,
    sa_vs_f4: Vec<(f64, f64, f64, f64)>,
}

fn criterion_8(audit: &AuditReport) -> (Line, HalfShift) {
    let (a, b, c) = (0.1, 0.15, 0.8);
    let mut local = 0.0f64;
    let mut sa_sb = 0.0f64;
    let mut sa_vs_f4 = Vec::new();
    for x in [0.2, 0.4, 0.6] {
        let p = pt(&[("a", 0.1), ("b", 0.2), ("c", 0.7), ("x", x)]);
        let check = catalog::verify("I-BAILEY-LOCAL", &p, &cfg()).unwrap();
        local = local.max(check.rel_residual.unwrap_or(f64::NAN));

        let sa = f4_connection_rhs(F4Connection::SA, real(a), real(b), real(c), real(x), &cfg()).unwrap();
        let sb = f4_connection_rhs(F4Connection::SB, real(a), real(b), real(c), real(x), &cfg()).unwrap();
        sa_sb = sa_sb.max((sa - sb).norm() / (1.0 + sa.norm()));

        // x = 0.4 is the audit's witness point, already evaluated there
        let f4 = companion(audit, "I-F4SA", x)
            .and_then(|chk| chk.lhs)
            .unwrap_or_else(|| {
                let p = AppellParams::f4_half_shift(real(a), real(b), real(c));
                radial_boundary_value(&p, real(x * x), real((1.0 - x) * (1.0 - x)), &cfg()).unwrap().value
            });
        sa_vs_f4.push((x, f4.re, sa.re, (f4 - sa).norm() / (1.0 + f4.norm())));
    }
    let worst_f4 = max_of(sa_vs_f4.iter().map(|r| r.3));
    let table: Vec<String> = sa_vs_f4.iter().map(|(x, f, s, _)| format!("x={x}: F4 {f:.6} vs SA {s:.6}")).collect();
    let l = line(
        8,
        local <= CONNECTION_TOL && sa_sb <= CONNECTION_TOL && worst_f4 <= BOUNDARY_TOL,
        format!(
            "I-BAILEY-LOCAL max rel {local:.2e}; SA vs SB max rel {sa_sb:.2e}; SA vs extrapolated F4 max rel {worst_f4:.2e} ({})",
            table.join(", ")
        ),
    );
    (l, HalfShift { sa_sb, sa_vs_f4 })
}

fn companion<'a>(audit: &'a AuditReport, id: &str, x: f64) -> Option<&'a IdentityCheck> {
    audit
        .blocks
        .iter()
        .flat_map(|b| &b.companions)
        .find(|c| c.id == id && c.point["x"] == real(x) && c.point["a"] == real(0.1) && c.point["b"] == real(0.15))
}

fn criterion_9(audit: &AuditReport) -> Line {
    let mut parts = Vec::new();
    let mut pass = true;
    for id in ["W-F4-VIII", "W-F4-X"] {
        let block = audit.blocks.iter().find(|b| b.id == id).expect("audit covers both F4 formulas");
        let witness = &block.checks[0];
        let margin = witness.rel_residual.unwrap_or(f64::NAN);
        let failed_companions: Vec<&str> =
            block.companions.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
        pass &= witness.verdict == Verdict::Pass && margin > WITNESS_MARGIN && failed_companions.is_empty();
        parts.push(format!(
            "{id}: mismatch {margin:.3e}, companions failing {:?}",
            failed_companions
        ));
    }
    line(9, pass, parts.join("; "))
}

fn criterion_10() -> Line {
    let grid = GridSpec::default().random(1000, 10);
    let mut parts = Vec::new();
    let mut pass = true;
    for id in ["I-TRIG-1", "I-TRIG-2", "I-TRIG-3", "I-TRIG-4"] {
        let report = catalog::sweep(id, &grid, &cfg()).unwrap();
        let worst = max_of(report.checks.iter().map(|c| c.abs_residual.unwrap_or(f64::NAN)));
        pass &= report.summary.pass == 1000 && worst < TRIG_TOL;
        parts.push(format!("{id} {}/1000 max {worst:.1e}", report.summary.pass));
    }
    line(10, pass, parts.join(", "))
}

fn criterion_11() -> Line {
    let base = || GridSpec::default().axis("a", real(0.1), real(0.45), 4).axis("b", real(0.1), real(0.45), 4).axis("z", real(0.2), real(0.8), 3);
    let clausen = sweep_worst("I-CLAUSEN", &base());
    let general = sweep_worst("I-GCLAUSEN", &base().axis("n", real(0.0), real(3.0), 4));
    line(
        11,
        clausen.0 == clausen.1 && clausen.2 <= CLAUSEN_TOL && general.0 == general.1 && general.2 <= GEN_CLAUSEN_TOL,
        format!(
            "I-CLAUSEN {}/{} (worst {:.2e}), I-GCLAUSEN {}/{} (worst {:.2e})",
            clausen.0, clausen.1, clausen.2, general.0, general.1, general.2
        ),
    )
}

/// `(ε−n)_{2n+1} / (2ε−2n)_{2n+1}`, symmetrised in ε to cancel the linear term.
fn poch_ratio_oracle(n: u32) -> f64 {
    let ratio = |e: f64| (0..=2 * n).map(|j| (e - n as f64 + j as f64) / (2.0 * e - 2.0 * n as f64 + j as f64)).product::<f64>();
    let e = 1e-6;
    0.5 * (ratio(e) + ratio(-e))
}

fn criterion_12() -> Line {
    let known = [0.5, -0.25, 1.0 / 12.0];
    let poch = max_of((0..=6u32).map(|n| {
        let lim = poch_ratio_limit(n);
        let vs_oracle = (lim - poch_ratio_oracle(n)).norm();
        let vs_known = known.get(n as usize).map_or(0.0, |k| (lim - k).norm());
        vs_oracle.max(vs_known)
    }));

    let coeff = catalog::sweep("I-COEFF", &GridSpec::default().random(100, 12), &cfg()).unwrap();
    let coeff_worst = max_of(coeff.checks.iter().map(|c| c.abs_residual.unwrap_or(f64::NAN)));
    let coeff_ok = coeff.summary.pass == 100 && coeff_worst < COEFF_TOL;

    let at = pt(&[("a", -0.4), ("b", -0.3), ("c", 0.6)]);
    let corners: Vec<IdentityCheck> =
        ["I-KDF-Z0", "I-KDF-Z1"].iter().map(|id| catalog::verify(id, &at, &cfg()).unwrap()).collect();
    let corner_worst = max_of(corners.iter().map(|c| c.abs_residual.unwrap_or(f64::NAN)));
    let gap = non_proportionality_gap(real(-0.4), real(-0.3), real(0.6)).unwrap();
    let witness = catalog::verify("X-KDF-NONPROP", &at, &cfg()).unwrap();

    let pass = poch <= POCH_TOL
        && coeff_ok
        && corners.iter().all(IdentityCheck::passed)
        && corner_worst <= CORNER_TOL
        && gap > WITNESS_MARGIN
        && witness.passed();
    line(
        12,
        pass,
        format!(
            "Pochhammer limits max |Δ| {poch:.1e}; I-COEFF {}/100 max {coeff_worst:.1e}; corners max |Δ| {corner_worst:.1e}; non-proportionality gap {gap:.3}",
            coeff.summary.pass
        ),
    )
}

fn main() {
    let start = Instant::now();
    let audit = audit_wrong_formulas(&cfg()).unwrap();
    let (eight, half_shift) = criterion_8(&audit);
    let mut lines = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        eight,
        criterion_9(&audit),
        criterion_10(),
        criterion_11(),
        criterion_12(),
    ];
    let took = start.elapsed();
    lines.push(line(13, took < SUITE_BUDGET, format!("acceptance run took {took:.2?} single-threaded (budget 180 s)")));
    lines.sort_by_key(|l| l.n);
    for l in &lines {
        println!("criterion {:>2}: {}  {}", l.n, if l.pass { "PASS" } else { "FAIL" }, l.detail);
    }

    let passed = lines.iter().filter(|l| l.pass).count();
    println!("acceptance: {passed}/{} criteria pass", lines.len());

    // 8 and 9 fail on the half-shifted F4 formula only; everything else in
    // them must hold, and the mismatch itself must reproduce
    assert!(half_shift.sa_sb <= CONNECTION_TOL, "SA and SB disagree: {:e}", half_shift.sa_sb);
    for (x, f4, sa, rel) in &half_shift.sa_vs_f4 {
        assert!(*rel > F4SA_MISMATCH_FLOOR, "x = {x}: F4 {f4} vs SA {sa}, the known mismatch did not reproduce");
    }
    let nine = audit.blocks.iter().filter(|b| b.id.starts_with("W-F4"));
    for block in nine {
        assert!(block.checks.iter().all(IdentityCheck::passed), "{} witness did not hold", block.id);
        for c in &block.companions {
            assert!(c.passed() || c.id == "I-F4SA", "{} companion {} failed: {c:?}", block.id, c.id);
        }
    }
    for l in &lines {
        assert!(l.pass || matches!(l.n, 8 | 9), "criterion {} failed: {}", l.n, l.detail);
    }
}
