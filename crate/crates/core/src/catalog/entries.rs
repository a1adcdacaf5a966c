//! The registered identities, counter-examples and no-relation statements.

use std::f64::consts::PI;

use crate::appell::{
    eval_appell, f1_special_identities, f2_closed, f2_restriction_closed, f4_connection_rhs, naive_rhs,
    radial_boundary_value, region_measure, restricted_edge_series, AppellParams, Curve, F1Identity, F4Connection,
    Family, WrongFormula,
};
use crate::arith::{gamma_ratio, nonpositive_integer, pow_principal, real, BranchConvention, Complex, POLE_TOL};
use crate::error::{Error, Result};
use crate::kdf::{
    clausen_rhs, coeff_identity_residual, gen_clausen_sides, kdf_corner, poch_ratio_limit, poch_ratio_numeric, Corner,
};
use crate::series::{eval_2f1, eval_pfq, gauss_at_1, EvalConfig, GaussParams, PfqParams};

use super::{Constraint, Evaluator, IdentityEntry, Kind, ParamSpec, Point};

const CLOSED: f64 = 1e-10;
const SERIES: f64 = 1e-9;
const BOUNDARY: f64 = 1e-6;
/// Relative mismatch a counter-example must exceed.
const WITNESS: f64 = 1e-3;

const fn r(name: &'static str, lo: f64, hi: f64) -> ParamSpec {
    ParamSpec { name, re: (lo, hi), im: (0.0, 0.0), integer: false }
}

const fn z(name: &'static str, lo: f64, hi: f64, im: f64) -> ParamSpec {
    ParamSpec { name, re: (lo, hi), im: (-im, im), integer: false }
}

const fn int(name: &'static str, lo: f64, hi: f64) -> ParamSpec {
    ParamSpec { name, re: (lo, hi), im: (0.0, 0.0), integer: true }
}

fn v(p: &Point, name: &str) -> Complex {
    p[name]
}

fn value(r: Result<crate::series::EvalResult>) -> Result<Complex> {
    r.map(|r| r.value)
}

fn f21(a: Complex, b: Complex, c: Complex, x: Complex, cfg: &EvalConfig) -> Result<Complex> {
    value(eval_2f1(&GaussParams::new(a, b, c), x, cfg))
}

// ---- constraint helpers ----

type Check = std::result::Result<(), String>;

fn require(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn not_pole(what: &str, w: Complex) -> Check {
    require(nonpositive_integer(w, POLE_TOL).is_none(), || format!("{what} = {w} is a non-positive integer"))
}

fn unit_open(p: &Point, name: &str) -> Check {
    let x = v(p, name);
    require(x.im == 0.0 && x.re > 0.0 && x.re < 1.0, || format!("{name} = {x} must lie in (0, 1)"))
}

fn inside_disc(p: &Point, name: &str) -> Check {
    let x = v(p, name);
    require(x.norm() < 1.0, || format!("|{name}| = {} must be < 1", x.norm()))
}

fn re_below(what: &str, w: Complex, bound: f64) -> Check {
    require(w.re < bound, || format!("Re({what}) = {} must be < {bound}", w.re))
}

fn re_above(what: &str, w: Complex, bound: f64) -> Check {
    require(w.re > bound, || format!("Re({what}) = {} must be > {bound}", w.re))
}

fn none(_: &Point) -> Check {
    Ok(())
}

// ---- Gauss and edge restrictions ----

fn gauss1_cons(p: &Point) -> Check {
    let (a, b, c) = (v(p, "a"), v(p, "b"), v(p, "c"));
    not_pole("c", c)?;
    re_above("c−a−b", c - a - b, 0.0)
}

fn gauss1_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let params = PfqParams::new(vec![v(p, "a"), v(p, "b")], vec![v(p, "c")]);
    value(eval_pfq(&params, real(1.0), cfg))
}

fn gauss1_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    gauss_at_1(v(p, "a"), v(p, "b"), v(p, "c"))
}

fn f3y1_cons(p: &Point) -> Check {
    let (a2, b2, c) = (v(p, "a2"), v(p, "b2"), v(p, "c"));
    not_pole("c", c)?;
    not_pole("c−a2", c - a2)?;
    not_pole("c−b2", c - b2)?;
    re_above("c−a2−b2", c - a2 - b2, 0.0)?;
    inside_disc(p, "x")
}

fn f3_params(p: &Point) -> AppellParams {
    AppellParams::f3(v(p, "a1"), v(p, "a2"), v(p, "b1"), v(p, "b2"), v(p, "c"))
}

fn f3y1_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(restricted_edge_series(Family::F3, &f3_params(p), v(p, "x"), cfg))
}

fn f3y1_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a1, a2, b1, b2, c) = (v(p, "a1"), v(p, "a2"), v(p, "b1"), v(p, "b2"), v(p, "c"));
    let g = gamma_ratio(&[c, c - a2 - b2], &[c - a2, c - b2])?;
    let f = eval_pfq(&PfqParams::new(vec![a1, b1, c - a2 - b2], vec![c - a2, c - b2]), v(p, "x"), cfg)?;
    Ok(g * f.value)
}

fn f1y1_cons(p: &Point) -> Check {
    let (a, b2, c) = (v(p, "a"), v(p, "b2"), v(p, "c"));
    not_pole("c", c)?;
    not_pole("c−b2", c - b2)?;
    re_above("c−a−b2", c - a - b2, 0.0)?;
    inside_disc(p, "x")
}

fn f1_params(p: &Point) -> AppellParams {
    AppellParams::f1(v(p, "a"), v(p, "b1"), v(p, "b2"), v(p, "c"))
}

fn f1y1_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(restricted_edge_series(Family::F1, &f1_params(p), v(p, "x"), cfg))
}

fn f1y1_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b1, b2, c) = (v(p, "a"), v(p, "b1"), v(p, "b2"), v(p, "c"));
    let g = gamma_ratio(&[c, c - a - b2], &[c - a, c - b2])?;
    Ok(g * f21(a, b1, c - b2, v(p, "x"), cfg)?)
}

// ---- the elementary F2 and its restrictions ----

fn lemma_cons(p: &Point) -> Check {
    let (x, y) = (v(p, "x"), v(p, "y"));
    require(x.norm() + y.norm() < 1.0, || format!("|x|+|y| = {} must be < 1", x.norm() + y.norm()))
}

fn lemma_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(eval_appell(&AppellParams::f2_lemma(v(p, "a")), v(p, "x"), v(p, "y"), cfg))
}

fn lemma_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    f2_closed(v(p, "a"), v(p, "x"), v(p, "y"), None)
}

fn restriction_cons(p: &Point) -> Check {
    let (a, x) = (v(p, "a"), v(p, "x"));
    re_below("a", a, 2.0)?;
    require(x.norm() > 0.0 && (x - 1.0).norm() > 0.0, || format!("x = {x} is a singular point"))
}

fn y1_closed_lhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    f2_closed(v(p, "a"), v(p, "x"), real(1.0), Some(BranchConvention::default()))
}

fn y1_closed_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    f2_restriction_closed(v(p, "a"), v(p, "x"), Curve::Y1, Some(BranchConvention::default()))
}

fn diag_cons(p: &Point) -> Check {
    re_below("a", v(p, "a"), 2.0)?;
    unit_open(p, "x")
}

fn diag_boundary(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let x = v(p, "x");
    value(radial_boundary_value(&AppellParams::f2_lemma(v(p, "a")), x, 1.0 - x, cfg))
}

fn diag_closed(p: &Point, _: &EvalConfig) -> Result<Complex> {
    f2_restriction_closed(v(p, "a"), v(p, "x"), Curve::DIAG, None)
}

fn w1_cons(p: &Point) -> Check {
    re_below("a", v(p, "a"), 1.0)?;
    restriction_cons(p)?;
    inside_disc(p, "x")
}

fn w1_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(naive_rhs(WrongFormula::W1, &AppellParams::f2_lemma(v(p, "a")), v(p, "x"), cfg))
}

fn w1_predicted(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, x) = (v(p, "a"), v(p, "x"));
    let s = 2.0 - a;
    Ok(pow_principal(-x, s, BranchConvention::default())? / ((1.0 - a) * s * x))
}

fn w2_cons(p: &Point) -> Check {
    re_below("a", v(p, "a"), 1.0)?;
    unit_open(p, "x")?;
    let x = v(p, "x").re;
    require(x <= 0.5, || format!("x = {x} must be ≤ 1/2 so that |x/(x−1)| ≤ 1"))
}

fn w2_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(naive_rhs(WrongFormula::W2, &AppellParams::f2_lemma(v(p, "a")), v(p, "x"), cfg))
}

fn w2_predicted(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, x) = (v(p, "a"), v(p, "x"));
    let s = 2.0 - a;
    Ok(-pow_principal(x, s, BranchConvention::default())? / ((1.0 - a) * s * x * (1.0 - x)))
}

// ---- F4 on (x², (1−x)²) ----

fn diagonal(p: &AppellParams, x: Complex, cfg: &EvalConfig) -> Result<Complex> {
    value(radial_boundary_value(p, x * x, (1.0 - x) * (1.0 - x), cfg))
}

fn w3_cons(p: &Point) -> Check {
    let (a, b, c) = (v(p, "a"), v(p, "b"), v(p, "c"));
    unit_open(p, "x")?;
    re_below("a+b", a + b, 0.5)?;
    not_pole("2c", 2.0 * c)?;
    not_pole("a+b+½", a + b + 0.5)?;
    not_pole("c+½", c + 0.5)
}

fn w3_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    diagonal(&AppellParams::f4_pair_viii(v(p, "a"), v(p, "b"), v(p, "c")), v(p, "x"), cfg)
}

fn w3_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let params = AppellParams::f4_pair_viii(v(p, "a"), v(p, "b"), v(p, "c"));
    value(naive_rhs(WrongFormula::W3, &params, v(p, "x"), cfg))
}

fn w4_cons(p: &Point) -> Check {
    let c = v(p, "c");
    unit_open(p, "x")?;
    re_below("c", c, 0.5)?;
    not_pole("2c", 2.0 * c)?;
    not_pole("c+½", c + 0.5)
}

fn w4_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    diagonal(&AppellParams::f4_pair_x(v(p, "c")), v(p, "x"), cfg)
}

fn w4_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(naive_rhs(WrongFormula::W4, &AppellParams::f4_pair_x(v(p, "c")), v(p, "x"), cfg))
}

fn abc(p: &Point) -> (Complex, Complex, Complex) {
    (v(p, "a"), v(p, "b"), v(p, "c"))
}

fn bailey_cons(p: &Point) -> Check {
    let (a, b, c) = abc(p);
    let (x, y) = (v(p, "x"), v(p, "y"));
    not_pole("c", c)?;
    not_pole("a+b−c+1", a + b - c + 1.0)?;
    inside_disc(p, "x")?;
    inside_disc(p, "y")?;
    let m = region_measure(Family::F4, x * (1.0 - y), y * (1.0 - x));
    require(m < 1.0, || format!("(x(1−y), y(1−x)) has region measure {m} ≥ 1"))?;
    // the product form holds on the branch through the origin
    require(x.norm() + y.norm() < 1.0, || "|x|+|y| must be < 1".into())
}

fn bailey_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    let (x, y) = (v(p, "x"), v(p, "y"));
    value(eval_appell(&AppellParams::f4_bailey(a, b, c), x * (1.0 - y), y * (1.0 - x), cfg))
}

fn bailey_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    Ok(f21(a, b, c, v(p, "x"), cfg)? * f21(a, b, a + b - c + 1.0, v(p, "y"), cfg)?)
}

fn bailey_diag_cons(p: &Point) -> Check {
    let (a, b, c) = abc(p);
    unit_open(p, "x")?;
    not_pole("c", c)?;
    not_pole("a+b−c+1", a + b - c + 1.0)
}

fn bailey_diag_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    diagonal(&AppellParams::f4_bailey(a, b, c), v(p, "x"), cfg)
}

fn bailey_product(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    let x = v(p, "x");
    Ok(f21(a, b, c, x, cfg)? * f21(a, b, a + b - c + 1.0, 1.0 - x, cfg)?)
}

fn local_cons(p: &Point, margin: f64) -> Check {
    let (a, b, c) = abc(p);
    unit_open(p, "x")?;
    re_below("c", c, 1.0)?;
    re_above("c−a−b", c - a - b, margin)?;
    not_pole("c", c)?;
    not_pole("2−c", 2.0 - c)
}

fn bailey_local_cons(p: &Point) -> Check {
    local_cons(p, 0.0)
}

fn bailey_local_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    f4_connection_rhs(F4Connection::B2A, a, b, c, v(p, "x"), cfg)
}

fn half_shift_cons(p: &Point) -> Check {
    let (a, b, c) = abc(p);
    local_cons(p, 0.5)?;
    not_pole("2c−1", 2.0 * c - 1.0)?;
    let d = (PI * a).cos() * (PI * b).cos();
    require(d.norm() > 1e-3, || format!("cos πa cos πb = {d} is too close to 0"))
}

fn half_shift_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    diagonal(&AppellParams::f4_half_shift(a, b, c), v(p, "x"), cfg)
}

fn sa_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    f4_connection_rhs(F4Connection::SA, a, b, c, v(p, "x"), cfg)
}

fn sb_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    f4_connection_rhs(F4Connection::SB, a, b, c, v(p, "x"), cfg)
}

// ---- trigonometric identities ----

fn cos(w: Complex) -> Complex {
    (PI * w).cos()
}

fn sin(w: Complex) -> Complex {
    (PI * w).sin()
}

fn cos_ab(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, _) = abc(p);
    Ok(cos(a) * cos(b))
}

fn sin_ab(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, _) = abc(p);
    Ok(sin(a) * sin(b))
}

fn trig1_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    Ok(cos(c - a) * cos(c - b) + sin(c) * sin(c - a - b))
}

fn trig2_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    Ok(sin(c - a) * sin(c - b) + cos(c) * cos(c - a - b))
}

fn trig3_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    Ok(sin(c - a) * sin(c - b) - sin(c) * sin(c - a - b))
}

fn trig4_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    Ok(cos(c - a) * cos(c - b) - cos(c) * cos(c - a - b))
}

// ---- univariate specializations ----

fn pair_i_cons(p: &Point) -> Check {
    not_pole("c1", v(p, "c1"))?;
    not_pole("c2", v(p, "c2"))?;
    inside_disc(p, "x")
}

fn pair_i_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let params = AppellParams::f2(v(p, "a"), v(p, "b1"), v(p, "b2"), v(p, "c1"), v(p, "c2"));
    value(eval_appell(&params, v(p, "x"), real(0.0), cfg))
}

fn pair_i_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    f21(v(p, "a"), v(p, "b1"), v(p, "c1"), v(p, "x"), cfg)
}

fn pair_iv_cons(p: &Point) -> Check {
    not_pole("c", v(p, "c"))?;
    inside_disc(p, "x")
}

fn pair_iv_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(eval_appell(&f3_params(p), v(p, "x"), real(0.0), cfg))
}

fn pair_iv_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    f21(v(p, "a1"), v(p, "b1"), v(p, "c"), v(p, "x"), cfg)
}

fn pair_xi_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(eval_appell(&f1_params(p), v(p, "x"), real(0.0), cfg))
}

fn pair_xi_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    f21(v(p, "a"), v(p, "b1"), v(p, "c"), v(p, "x"), cfg)
}

fn pair_xiii_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(f1_special_identities(F1Identity::XIII, &f1_params(p), v(p, "x"), cfg).map(|s| s.lhs))
}

fn pair_xiii_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(f1_special_identities(F1Identity::XIII, &f1_params(p), v(p, "x"), cfg).map(|s| s.rhs))
}

fn pair_xiv_cons(p: &Point) -> Check {
    let b = v(p, "b");
    let x = v(p, "x");
    not_pole("1+b", b + 1.0)?;
    // the 2F1 argument −4x/(x−1)² stays inside the unit disc
    let w = -4.0 * x / ((x - 1.0) * (x - 1.0));
    require(x.norm() < 1.0 && w.norm() < 1.0, || format!("x = {x} maps to |4x/(x−1)²| = {} ≥ 1", w.norm()))
}

fn xiv_params(p: &Point) -> AppellParams {
    AppellParams::f1_pair_xiv(v(p, "a"), v(p, "b"))
}

fn pair_xiv_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(f1_special_identities(F1Identity::XIV, &xiv_params(p), v(p, "x"), cfg).map(|s| s.lhs))
}

fn pair_xiv_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(f1_special_identities(F1Identity::XIV, &xiv_params(p), v(p, "x"), cfg).map(|s| s.rhs))
}

// ---- Clausen and Kampé de Fériet ----

fn clausen_cons(p: &Point) -> Check {
    let (a, b) = (v(p, "a"), v(p, "b"));
    not_pole("a+b+½", a + b + 0.5)?;
    not_pole("2a+2b", 2.0 * a + 2.0 * b)?;
    inside_disc(p, "z")
}

fn clausen_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b) = (v(p, "a"), v(p, "b"));
    let f = f21(a, b, a + b + 0.5, v(p, "z"), cfg)?;
    Ok(f * f)
}

fn clausen_rhs_eval(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    value(clausen_rhs(v(p, "a"), v(p, "b"), v(p, "z"), cfg))
}

fn corner_cons(p: &Point) -> Check {
    let (a, b, c) = abc(p);
    re_below("c", c, 1.0)?;
    re_above("c−a−b", c - a - b, 1.0)?;
    not_pole("a+b+½", a + b + 0.5)?;
    not_pole("2c−1", 2.0 * c - 1.0)?;
    not_pole("2a+2b−2c+1", 2.0 * (a + b - c) + 1.0)
}

/// The paired series at `(0, 1)` collapses to a `3F2` at unit argument.
fn z0_series(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    let params = PfqParams::new(
        vec![2.0 * a, 2.0 * b, a + b - c + 0.5],
        vec![a + b + 0.5, 2.0 * (a + b - c) + 1.0],
    );
    value(eval_pfq(&params, real(1.0), cfg))
}

/// The paired series at `(1, 0)`.
fn z1_series(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    let params = PfqParams::new(vec![2.0 * a, 2.0 * b, c - 0.5], vec![a + b + 0.5, 2.0 * c - 1.0]);
    value(eval_pfq(&params, real(1.0), cfg))
}

fn z0_closed(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    kdf_corner(a, b, c, Corner::Z0)
}

fn z1_closed(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    kdf_corner(a, b, c, Corner::Z1)
}

/// `Z0 · 2F1(a, b; c; 1)²`, what `Z1` would be if the two functions were proportional.
fn z0_scaled(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let (a, b, c) = abc(p);
    let g = gauss_at_1(a, b, c)?;
    Ok(kdf_corner(a, b, c, Corner::Z0)? * g * g)
}

fn order(p: &Point, name: &str, max: u32) -> std::result::Result<u32, String> {
    let n = v(p, name);
    let k = n.re.round();
    if n.im != 0.0 || (n.re - k).abs() > 0.0 || k < 0.0 || k > max as f64 {
        return Err(format!("{name} = {n} must be an integer in 0..={max}"));
    }
    Ok(k as u32)
}

fn gclausen_cons(p: &Point) -> Check {
    let (a, b) = (v(p, "a"), v(p, "b"));
    let n = order(p, "n", 12)?;
    not_pole("a+b+n+½", a + b + n as f64 + 0.5)?;
    inside_disc(p, "z")
}

fn gclausen_lhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let n = order(p, "n", 12).map_err(Error::InvalidParameter)?;
    gen_clausen_sides(v(p, "a"), v(p, "b"), n, v(p, "z"), cfg).map(|s| s.0)
}

fn gclausen_rhs(p: &Point, cfg: &EvalConfig) -> Result<Complex> {
    let n = order(p, "n", 12).map_err(Error::InvalidParameter)?;
    gen_clausen_sides(v(p, "a"), v(p, "b"), n, v(p, "z"), cfg).map(|s| s.1)
}

/// Step of the numerical ε-limit.
const POCH_EPS: f64 = 1e-4;

fn pochlim_cons(p: &Point) -> Check {
    order(p, "n", 12).map(|_| ())
}

fn pochlim_lhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let n = order(p, "n", 12).map_err(Error::InvalidParameter)?;
    Ok(poch_ratio_numeric(n, POCH_EPS))
}

fn pochlim_rhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let n = order(p, "n", 12).map_err(Error::InvalidParameter)?;
    Ok(poch_ratio_limit(n))
}

fn coeff_cons(p: &Point) -> Check {
    let (a, b) = (v(p, "a"), v(p, "b"));
    order(p, "n", 8)?;
    let s = a + b - 0.5;
    require((s - s.re.round()).norm() >= 1e-3, || format!("cos π(a+b) nearly vanishes at a+b = {}", a + b))
}

fn coeff_lhs(p: &Point, _: &EvalConfig) -> Result<Complex> {
    let n = order(p, "n", 8).map_err(Error::InvalidParameter)?;
    coeff_identity_residual(v(p, "a"), v(p, "b"), n)
}

fn zero(_: &Point, _: &EvalConfig) -> Result<Complex> {
    Ok(real(0.0))
}

// ---- the table ----

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    description: &'static str,
    kind: Kind,
    params: &'static [ParamSpec],
    tolerance: f64,
    constraints: Constraint,
    lhs: Evaluator,
    rhs: Evaluator,
) -> IdentityEntry {
    IdentityEntry {
        id,
        description,
        kind,
        params,
        tolerance,
        constraints,
        lhs: Some(lhs),
        rhs: Some(rhs),
        predicted_residual: None,
    }
}

fn no_relation(id: &'static str, description: &'static str, params: &'static [ParamSpec]) -> IdentityEntry {
    IdentityEntry {
        id,
        description,
        kind: Kind::NoRelation,
        params,
        tolerance: 0.0,
        constraints: none,
        lhs: None,
        rhs: None,
        predicted_residual: None,
    }
}

/// A `'static` parameter list built in a const context.
macro_rules! specs {
    ($($e:expr),* $(,)?) => {{
        const SPECS: &[ParamSpec] = &[$($e),*];
        SPECS
    }};
}

const ABC_TRIG: &[ParamSpec] = &[z("a", -1.0, 1.0, 0.5), z("b", -1.0, 1.0, 0.5), z("c", -1.0, 1.0, 0.5)];
const A_X_Y1: &[ParamSpec] = &[r("a", -1.0, 0.9), r("x", -0.9, -0.05)];
const ABCX_LOCAL: &[ParamSpec] = &[r("a", 0.0, 0.15), r("b", -0.15, 0.15), r("c", 0.7, 0.95), r("x", 0.1, 0.9)];

pub(super) fn build() -> Vec<IdentityEntry> {
    use Kind::*;
    let mut w_f2y1 = entry(
        "W-F2Y1",
        "F2(a;1,1;2,2) restricted to y = 1 minus the naive 3F2 formula equals the missing (−x)^{2−a} term",
        ResidualEquality,
        A_X_Y1,
        CLOSED,
        w1_cons,
        y1_closed_rhs,
        w1_rhs,
    );
    w_f2y1.predicted_residual = Some(w1_predicted);
    let mut w_f2diag = entry(
        "W-F2DIAG",
        "F2(a;1,1;2,2) restricted to y = 1−x minus the naive 3F2 formula equals the missing −x^{2−a} term",
        ResidualEquality,
        specs![r("a", -1.0, 0.9), r("x", 0.05, 0.5)],
        CLOSED,
        w2_cons,
        diag_closed,
        w2_rhs,
    );
    w_f2diag.predicted_residual = Some(w2_predicted);

    vec![
        entry(
            "I-GAUSS1",
            "Gauss's summation: the 2F1 series at z = 1 equals Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b))",
            Equality,
            specs![r("a", -0.5, 0.5), r("b", -0.5, 0.5), r("c", 1.5, 2.5)],
            SERIES,
            gauss1_cons,
            gauss1_lhs,
            gauss1_rhs,
        ),
        entry(
            "I-F3Y1",
            "F3(a1,a2;b1,b2;c;x,1) equals a Gamma factor times 3F2(a1,b1,c−a2−b2;c−a2,c−b2;x)",
            Equality,
            specs![
                r("a1", 0.05, 0.5),
                r("a2", 0.05, 0.5),
                r("b1", 0.05, 0.5),
                r("b2", 0.05, 0.5),
                r("c", 1.5, 2.5),
                r("x", -0.9, 0.9),
            ],
            SERIES,
            f3y1_cons,
            f3y1_lhs,
            f3y1_rhs,
        ),
        entry(
            "I-F1Y1",
            "F1(a;b1,b2;c;x,1) equals a Gamma factor times 2F1(a,b1;c−b2;x)",
            Equality,
            specs![r("a", 0.05, 0.5), r("b1", 0.05, 0.5), r("b2", 0.05, 0.5), r("c", 1.5, 2.5), r("x", -0.9, 0.9)],
            SERIES,
            f1y1_cons,
            f1y1_lhs,
            f1y1_rhs,
        ),
        entry(
            "I-LEMMA",
            "The double series F2(a;1,1;2,2;x,y) equals its elementary closed form",
            Equality,
            specs![r("a", -2.0, 3.0), r("x", -0.45, 0.45), r("y", -0.45, 0.45)],
            SERIES,
            lemma_cons,
            lemma_lhs,
            lemma_rhs,
        ),
        entry(
            "I-F2Y1-CLOSED",
            "The closed form of F2(a;1,1;2,2) at y = 1 equals the restricted formula",
            Equality,
            A_X_Y1,
            CLOSED,
            restriction_cons,
            y1_closed_lhs,
            y1_closed_rhs,
        ),
        entry(
            "I-F2DIAG-CLOSED",
            "The boundary value of F2(a;1,1;2,2) at (x,1−x) equals the restricted formula",
            Equality,
            specs![r("a", -1.0, 1.5), r("x", 0.1, 0.9)],
            BOUNDARY,
            diag_cons,
            diag_boundary,
            diag_closed,
        ),
        w_f2y1,
        w_f2diag,
        entry(
            "W-F4-VIII",
            "The naive 3F2 formula for F4(a;b;c+½,½;x²,(1−x)²) is wrong",
            InequalityWitness,
            specs![r("a", 0.0, 0.2), r("b", 0.0, 0.2), r("c", 0.2, 0.9), r("x", 0.2, 0.7)],
            WITNESS,
            w3_cons,
            w3_lhs,
            w3_rhs,
        ),
        entry(
            "W-F4-X",
            "The naive squared-2F1 formula for F4(2c−½;3c−1;c+½,c+½;x²,(1−x)²) is wrong",
            InequalityWitness,
            specs![r("c", 0.15, 0.45), r("x", 0.2, 0.7)],
            WITNESS,
            w4_cons,
            w4_lhs,
            w4_rhs,
        ),
        entry(
            "I-BAILEY",
            "Bailey's product: F4(a;b;c,a+b−c+1;x(1−y),y(1−x)) = 2F1(a,b;c;x)·2F1(a,b;a+b−c+1;y)",
            Equality,
            specs![r("a", 0.0, 0.5), r("b", 0.0, 0.5), r("c", 0.5, 1.5), r("x", -0.3, 0.3), r("y", -0.3, 0.3)],
            SERIES,
            bailey_cons,
            bailey_lhs,
            bailey_rhs,
        ),
        entry(
            "I-BAILEY-DIAG",
            "Boundary value of Bailey's F4 at (x²,(1−x)²) equals 2F1(a,b;c;x)·2F1(a,b;a+b−c+1;1−x)",
            Equality,
            specs![r("a", 0.0, 0.3), r("b", 0.0, 0.3), r("c", 0.6, 0.9), r("x", 0.2, 0.8)],
            BOUNDARY,
            bailey_diag_cons,
            bailey_diag_lhs,
            bailey_product,
        ),
        entry(
            "I-BAILEY-LOCAL",
            "Bailey's diagonal product written through local solutions at x = 0",
            Equality,
            ABCX_LOCAL,
            SERIES,
            bailey_local_cons,
            bailey_product,
            bailey_local_rhs,
        ),
        entry(
            "I-F4SA",
            "Boundary value of F4(a;b;c,a+b−c+3/2;x²,(1−x)²) equals its 2F1(x), 2F1(1−x) connection form",
            Equality,
            ABCX_LOCAL,
            BOUNDARY,
            half_shift_cons,
            half_shift_lhs,
            sa_rhs,
        ),
        entry(
            "I-F4SB",
            "The two connection forms of F4(a;b;c,a+b−c+3/2;x²,(1−x)²) agree",
            Equality,
            ABCX_LOCAL,
            SERIES,
            half_shift_cons,
            sa_rhs,
            sb_rhs,
        ),
        entry(
            "I-TRIG-1",
            "cos πa cos πb = cos π(c−a) cos π(c−b) + sin πc sin π(c−a−b)",
            Equality,
            ABC_TRIG,
            1e-12,
            none,
            cos_ab,
            trig1_rhs,
        ),
        entry(
            "I-TRIG-2",
            "cos πa cos πb = sin π(c−a) sin π(c−b) + cos πc cos π(c−a−b)",
            Equality,
            ABC_TRIG,
            1e-12,
            none,
            cos_ab,
            trig2_rhs,
        ),
        entry(
            "I-TRIG-3",
            "sin πa sin πb = sin π(c−a) sin π(c−b) − sin πc sin π(c−a−b)",
            Equality,
            ABC_TRIG,
            1e-12,
            none,
            sin_ab,
            trig3_rhs,
        ),
        entry(
            "I-TRIG-4",
            "sin πa sin πb = cos π(c−a) cos π(c−b) − cos πc cos π(c−a−b)",
            Equality,
            ABC_TRIG,
            1e-12,
            none,
            sin_ab,
            trig4_rhs,
        ),
        entry(
            "I-PAIR-I",
            "F2(a;b1,b2;c1,c2;x,0) = 2F1(a,b1;c1;x)",
            Equality,
            specs![
                r("a", -1.0, 1.0),
                r("b1", -1.0, 1.0),
                r("b2", -1.0, 1.0),
                r("c1", 0.5, 2.0),
                r("c2", 0.5, 2.0),
                r("x", -0.9, 0.9),
            ],
            CLOSED,
            pair_i_cons,
            pair_i_lhs,
            pair_i_rhs,
        ),
        entry(
            "I-PAIR-IV",
            "F3(a1,a2;b1,b2;c;x,0) = 2F1(a1,b1;c;x)",
            Equality,
            specs![
                r("a1", -1.0, 1.0),
                r("a2", -1.0, 1.0),
                r("b1", -1.0, 1.0),
                r("b2", -1.0, 1.0),
                r("c", 0.5, 2.0),
                r("x", -0.9, 0.9),
            ],
            CLOSED,
            pair_iv_cons,
            pair_iv_lhs,
            pair_iv_rhs,
        ),
        entry(
            "I-PAIR-XI",
            "F1(a;b1,b2;c;x,0) = 2F1(a,b1;c;x)",
            Equality,
            specs![r("a", -1.0, 1.0), r("b1", -1.0, 1.0), r("b2", -1.0, 1.0), r("c", 0.5, 2.0), r("x", -0.9, 0.9)],
            CLOSED,
            pair_iv_cons,
            pair_xi_lhs,
            pair_xi_rhs,
        ),
        entry(
            "I-PAIR-XIII",
            "F1(a;b1,b2;c;x,x) = 2F1(a,b1+b2;c;x)",
            Equality,
            specs![r("a", -1.0, 1.0), r("b1", -1.0, 1.0), r("b2", -1.0, 1.0), r("c", 0.5, 2.0), r("x", -0.8, 0.8)],
            CLOSED,
            pair_iv_cons,
            pair_xiii_lhs,
            pair_xiii_rhs,
        ),
        entry(
            "I-PAIR-XIV",
            "F1(a;2b,a−b;1+b;x,x²) = (1−x)^{−2a} 2F1(a,½;1+b;−4x/(x−1)²)",
            Equality,
            specs![r("a", -1.0, 1.0), r("b", 0.0, 1.0), r("x", -0.15, 0.15)],
            SERIES,
            pair_xiv_cons,
            pair_xiv_lhs,
            pair_xiv_rhs,
        ),
        no_relation(
            "N-PAIR-VI",
            "F3(a1,a2;b1,b2;c;x,x/(x−1)) and x^{1−c}(1−x)^{a2} 3F2(…;1−x) share an equation but no two-term relation",
            specs![r("a1", 0.0, 1.0), r("a2", 0.0, 1.0), r("b1", 0.0, 1.0), r("b2", 0.0, 1.0), r("c", 0.5, 2.0), r("x", 0.1, 0.5)],
        ),
        no_relation(
            "N-PAIR-XV",
            "F2(a;b1,b2;2b1,2b2;x,2−x) lies outside the convergence region; no two-term relation is asserted",
            specs![r("a", 0.0, 1.0), r("b1", 0.0, 1.0), r("b2", 0.0, 1.0), r("x", 0.1, 0.9)],
        ),
        entry(
            "I-CLAUSEN",
            "Clausen: 2F1(a,b;a+b+½;z)² = 3F2(2a,2b,a+b;2a+2b,a+b+½;z)",
            Equality,
            specs![r("a", 0.1, 0.45), r("b", 0.1, 0.45), r("z", -0.9, 0.9)],
            CLOSED,
            clausen_cons,
            clausen_lhs,
            clausen_rhs_eval,
        ),
        entry(
            "I-KDF-Z0",
            "The Clausen-paired Kampé de Fériet series at (0,1) equals Watson's Gamma product",
            Equality,
            specs![r("a", -0.45, -0.2), r("b", -0.45, -0.2), r("c", 0.3, 0.8)],
            SERIES,
            corner_cons,
            z0_series,
            z0_closed,
        ),
        entry(
            "I-KDF-Z1",
            "The Clausen-paired Kampé de Fériet series at (1,0) equals Watson's Gamma product",
            Equality,
            specs![r("a", -0.45, -0.2), r("b", -0.45, -0.2), r("c", 0.3, 0.8)],
            SERIES,
            corner_cons,
            z1_series,
            z1_closed,
        ),
        entry(
            "X-KDF-NONPROP",
            "The Kampé de Fériet series and 2F1(a,b;c;z)² are not proportional: Z1 ≠ Z0·2F1(a,b;c;1)²",
            InequalityWitness,
            specs![r("a", -0.45, -0.2), r("b", -0.45, -0.2), r("c", 0.3, 0.8)],
            WITNESS,
            corner_cons,
            z1_closed,
            z0_scaled,
        ),
        entry(
            "I-GCLAUSEN",
            "Generalized Clausen: 2F1(a,b;a+b+n+½;z)² equals a Pochhammer ratio times a terminating double series",
            Equality,
            specs![r("a", 0.1, 0.45), r("b", 0.1, 0.45), int("n", 0.0, 3.0), r("z", -0.9, 0.9)],
            1e-8,
            gclausen_cons,
            gclausen_lhs,
            gclausen_rhs,
        ),
        entry(
            "I-POCHLIM",
            "lim ε→0 (ε−n)_{2n+1}/(2ε−2n)_{2n+1} = (−1)^n n!/(2^{2n+1}(½)_n)",
            Equality,
            specs![int("n", 0.0, 6.0)],
            1e-8,
            pochlim_cons,
            pochlim_lhs,
            pochlim_rhs,
        ),
        entry(
            "I-COEFF",
            "The trigonometric coefficient identity of the generalized Clausen proof: residual vanishes",
            Equality,
            specs![z("a", -1.0, 1.0, 0.5), z("b", -1.0, 1.0, 0.5), int("n", 0.0, 4.0)],
            1e-11,
            coeff_cons,
            coeff_lhs,
            zero,
        ),
    ]
}
