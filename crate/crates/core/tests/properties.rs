//! Randomised invariants of the numerical layers.

use std::f64::consts::PI;

use proptest::prelude::*;

use appell::appell::{
    branch_fit, chebyshev_abscissae, eval_appell, f2_closed, f2_restriction_closed, in_convergence_region,
    AppellParams, Curve,
};
use appell::arith::{c, gamma, pochhammer, pow_principal, real};
use appell::kdf::{eval_kdf_traced, KdfParams};
use appell::series::{
    accelerate_limit, connection_coeffs_at_1, eval_2f1, eval_pfq, gauss_at_1, GaussParams, PfqParams,
};
use appell::{BranchConvention, Complex, Error, EvalConfig};

fn rel(x: Complex, y: Complex) -> f64 {
    (x - y).norm() / y.norm().max(1e-300)
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn complex_in(radius: f64) -> impl Strategy<Value = Complex> {
    (-radius..radius, -radius..radius).prop_map(|(re, im)| c(re, im))
}

/// Away from the poles of Gamma at the non-positive integers.
fn off_lattice(z: &Complex) -> bool {
    z.im.abs() > 1e-2 || (z.re - z.re.round()).abs() > 1e-2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gamma_reflection(z in complex_in(7.0).prop_filter("off lattice", off_lattice)) {
        prop_assume!(z.norm() <= 10.0 && off_lattice(&(1.0 - z)));
        let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * (PI * z).sin() / PI;
        // the product grows like e^{π|Im z|}; compare against its size
        prop_assert!((lhs - 1.0).norm() <= 1e-10 * lhs.norm().max(1.0), "z = {z}: {lhs}");
    }

    #[test]
    fn gamma_recurrence(z in complex_in(7.0).prop_filter("off lattice", off_lattice)) {
        prop_assert!(rel(gamma(z + 1.0).unwrap(), z * gamma(z).unwrap()) <= 1e-12);
    }

    #[test]
    fn pochhammer_splits(a in complex_in(3.0), j in 0u32..=20, k in 0u32..=20) {
        let whole = pochhammer(a, j + k);
        let split = pochhammer(a, j) * pochhammer(a + j as f64, k);
        prop_assert!((whole - split).norm() <= 1e-13 * whole.norm().max(1e-300));
    }

    #[test]
    fn powers_are_additive(w in complex_in(4.0), s1 in complex_in(2.0), s2 in complex_in(2.0)) {
        prop_assume!(!(w.im == 0.0 && w.re <= 0.0) && w.norm() > 1e-3);
        let b = BranchConvention::default();
        prop_assert!((pow_principal(w, real(1.0), b).unwrap() - w).norm() <= 1e-15 * w.norm());
        let joint = pow_principal(w, s1 + s2, b).unwrap();
        let product = pow_principal(w, s1, b).unwrap() * pow_principal(w, s2, b).unwrap();
        prop_assert!((joint - product).norm() <= 1e-12 * joint.norm().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn approach_to_unit_argument(a in -0.5..0.5f64, b in -0.5..0.5f64, gap in 0.3..1.5f64) {
        let c0 = a + b + gap;
        prop_assume!(off_lattice(&real(c0)) && off_lattice(&real(c0 - a)) && off_lattice(&real(c0 - b)));
        let p = GaussParams::real(a, b, c0);
        let seq: Vec<Complex> = (1..=8)
            .map(|m| eval_2f1(&p, real(1.0 - 10f64.powi(-m)), &cfg()).unwrap().value)
            .collect();
        let limit = accelerate_limit(&seq).unwrap().value;
        let exact = gauss_at_1(real(a), real(b), real(c0)).unwrap();
        prop_assert!((limit - exact).norm() <= 1e-8, "{limit} vs {exact}");
    }

    #[test]
    fn terminating_pfq_uses_n_plus_one_terms(n in 0u32..30, b in 0.5..3.0f64, z in -0.9..0.9f64) {
        let p = PfqParams::new([real(-(n as f64)), real(0.5)], [real(b)]);
        prop_assert_eq!(eval_pfq(&p, real(z), &cfg()).unwrap().terms_used, n as usize + 1);
    }

    #[test]
    fn bailey_interior(a in 0.0..0.5f64, b in 0.0..0.5f64, c1 in 0.55..1.45f64, x in 0.0..0.25f64, y in 0.0..0.25f64) {
        let p = AppellParams::f4_bailey(real(a), real(b), real(c1));
        let lhs = eval_appell(&p, real(x * (1.0 - y)), real(y * (1.0 - x)), &cfg()).unwrap().value;
        let f1 = eval_2f1(&GaussParams::real(a, b, c1), real(x), &cfg()).unwrap().value;
        let f2 = eval_2f1(&GaussParams::real(a, b, a + b - c1 + 1.0), real(y), &cfg()).unwrap().value;
        prop_assert!((lhs - f1 * f2).norm() <= 1e-10);
    }

    #[test]
    fn terminating_kdf_rows(a in 0.1..0.45f64, b in 0.1..0.45f64, n in 0u32..6, x in -0.8..0.8f64) {
        let p = KdfParams::terminating_pair(real(a), real(b), n);
        let trace = eval_kdf_traced(&p, real(x), real(0.3), &cfg()).unwrap();
        prop_assert!(trace.row_terms.iter().all(|&t| t == n as usize + 1), "{:?}", trace.row_terms);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn connection_at_one(
        a in complex_in(1.0),
        b in complex_in(1.0),
        cc in complex_in(1.5),
        z in 0.1..0.9f64,
    ) {
        let gap = cc - a - b;
        prop_assume!((gap.re - gap.re.round()).abs() > 0.1);
        for w in [cc, cc - a, cc - b, a, b, gap, -gap] {
            prop_assume!(off_lattice(&w));
        }
        let Ok((ca, cb)) = connection_coeffs_at_1(a, b, cc) else { return Ok(()) };
        let lhs = eval_2f1(&GaussParams::new(a, b, cc), real(z), &cfg()).unwrap().value;
        let y1 = eval_2f1(&GaussParams::new(a, b, a + b - cc + 1.0), real(1.0 - z), &cfg()).unwrap().value;
        let y2 = eval_2f1(&GaussParams::new(cc - a, cc - b, gap + 1.0), real(1.0 - z), &cfg()).unwrap().value;
        let rhs = ca * y1 + cb * real(1.0 - z).powc(gap) * y2;
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + lhs.norm()), "{lhs} vs {rhs}");
    }
}

fn family(k: u8, p: [f64; 5]) -> AppellParams {
    let [a, b, d, e, f] = p.map(real);
    match k {
        0 => AppellParams::f1(a, b, d, e + 1.0),
        1 => AppellParams::f2(a, b, d, e + 1.0, f + 1.0),
        2 => AppellParams::f3(a, b, d, f, e + 1.0),
        _ => AppellParams::f4(a, b, e + 1.0, f + 1.0),
    }
}

proptest! {
    // 1000 points per family
    #![proptest_config(ProptestConfig::with_cases(4000))]

    /// The domain check is exact; a small term budget keeps points near the
    /// edge cheap, since only the classification matters here.
    #[test]
    fn region_boundary(
        k in 0u8..4,
        p in prop::array::uniform5(0.1..0.9f64),
        u in complex_in(1.3),
        v in complex_in(1.3),
    ) {
        let params = family(k, p);
        let budget = EvalConfig::default().with_max_terms(200);
        let inside = in_convergence_region(params.family(), u, v);
        match eval_appell(&params, u, v, &budget) {
            Err(Error::OutsideDomain(_)) => prop_assert!(!inside, "{params:?} at ({u}, {v}) rejected inside"),
            Ok(_) => prop_assert!(inside, "{params:?} at ({u}, {v}) evaluated outside"),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn lemma_equivalence_near_logarithmic_values() {
    let ax = [-0.4, -0.2, 0.0, 0.2, 0.4];
    for a in [-1.5, 0.5, 3.0, 1.0 - 1e-7, 1.0 + 1e-7, 2.0 - 1e-7, 2.0 + 1e-7] {
        for &x in &ax {
            for &y in &ax {
                let closed = f2_closed(real(a), real(x), real(y), None).unwrap();
                let series = eval_appell(&AppellParams::f2_lemma(real(a)), real(x), real(y), &cfg()).unwrap().value;
                assert!((closed - series).norm() <= 1e-9 * (1.0 + closed.norm()), "a={a} x={x} y={y}");
            }
        }
    }
}

#[test]
fn full_exponent_set_fits_restriction() {
    let samples: Vec<(f64, Complex)> = chebyshev_abscissae(0.1, 20)
        .into_iter()
        .map(|s| (s, f2_restriction_closed(real(0.5), real(-s), Curve::Y1, None).unwrap()))
        .collect();
    let scale = samples.iter().map(|p| p.1.norm()).fold(0.0, f64::max);
    let full = branch_fit(&samples, &[0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
    let analytic = branch_fit(&samples, &[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
    assert!(full.residual_norm < 1e-10 * scale, "{}", full.residual_norm);
    assert!(analytic.residual_norm >= 1e3 * full.residual_norm);
}
