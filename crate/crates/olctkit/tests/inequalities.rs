mod common;

use common::{axis_params, gaussian, params, rel, smooth_field};
use olctkit::functionals::RectSet;
use olctkit::gaussian::{gaussian_entropies, GaussianSpec};
use olctkit::inequality::{
    check, effect_probe, make_table, nazarov_constant, table_csv, young_constant, CheckSpec, Probe, TableDefaults,
    TableKind, TheoremId,
};
use olctkit::special::{digamma, gamma_ratio, logup_constant, pitt_constant};
use olctkit::{Grid2D, OLCTParams, OlctError};
use proptest::prelude::*;

fn gaussian_case(alpha: (f64, f64)) -> (GaussianSpec<f64>, Grid2D<f64>) {
    let g = GaussianSpec::new(alpha.0, alpha.1).unwrap();
    (g, g.auto_grid(128).unwrap())
}

#[test]
fn young_constant_values() {
    assert!((young_constant(2.0, 3.7).unwrap() - 1.0).abs() < 1e-15);
    // p = 1: |b₁b₂|^{-1/2} (2π)^{-1}.
    assert!(rel(young_constant(1.0, 0.25).unwrap(), 2.0 / std::f64::consts::TAU) < 1e-15);
    assert!(matches!(young_constant(2.5, 1.0), Err(OlctError::BadExponent(_))));
}

#[test]
fn pitt_and_log_constants() {
    assert_eq!(pitt_constant(0.0).unwrap(), 1.0);
    assert!(matches!(pitt_constant(1.0), Err(OlctError::LambdaOutOfRange(_))));
    assert!(matches!(pitt_constant(2.0), Err(OlctError::LambdaOutOfRange(_))));
    assert!(pitt_constant(1.5).unwrap() < 0.0);
    assert!((logup_constant(1.0) - 2.113_726_6).abs() < 1e-6);
    assert!((logup_constant(2.0) - (-digamma(0.25) / 2.0 - 2f64.ln())).abs() < 1e-15);
    // Central difference of the Pitt factor at zero.
    let h = 1e-5;
    let kprime = (gamma_ratio(h) - gamma_ratio(-h)) / (2.0 * h);
    assert!((kprime - logup_constant(1.0)).abs() < 1e-6);
}

#[test]
fn young_is_plancherel_at_two() {
    let f = smooth_field(Grid2D::square(128, 8.0).unwrap(), (0.2, -0.1), 1.0, 0.4);
    let m = axis_params(0.7, -1.3, 0.4, 0.2, 0.3);
    let r = check(&f, &CheckSpec::Young { p: 2.0 }, &m, &OLCTParams::fourier()).unwrap();
    assert!(rel(r.lhs, r.rhs) < 1e-4, "{}", r.summary());
}

#[test]
fn pitt_is_plancherel_at_zero() {
    let f = gaussian(0.8, 1.2, 128);
    let m = axis_params(0.5, 0.9, 1.0, 0.1, -0.2);
    let r = check(&f, &CheckSpec::Pitt { lambda: 0.0 }, &m, &m).unwrap();
    assert!(rel(r.lhs, r.rhs) < 1e-4, "{}", r.summary());
}

#[test]
fn pitt_with_positive_exponent_fails_for_small_b() {
    let f = gaussian(1.0, 1.0, 128);
    let m = axis_params(0.0, 0.5, 1.0, 0.0, 0.0);
    let r = check(&f, &CheckSpec::Pitt { lambda: 0.5 }, &m, &m).unwrap();
    assert!(r.satisfied, "{}", r.summary());
    let stated = r.params.get("rhs_positive_exponent").unwrap();
    assert!(r.lhs > stated, "lhs {} vs {}", r.lhs, stated);
}

#[test]
fn pitt_above_one_cannot_hold() {
    let f = gaussian(1.0, 1.0, 64);
    let m = OLCTParams::fresnel(1.0, 0.0, 0.0);
    let r = check(&f, &CheckSpec::Pitt { lambda: 1.5 }, &m, &m).unwrap();
    assert!(!r.satisfied);
    assert!(r.rhs < 0.0);
    assert!(!r.notes.is_empty());
    assert!(matches!(check(&f, &CheckSpec::Pitt { lambda: 1.0 }, &m, &m), Err(OlctError::LambdaOutOfRange(_))));
}

#[test]
fn entropy_fails_below_unit_b_as_predicted() {
    let g = GaussianSpec::isotropic(1.5);
    let f = gaussian(1.5, 1.5, 256);
    let m = axis_params(0.0, 0.5, 1.0, 0.0, 0.0);
    let r = check(&f, &CheckSpec::Entropy, &m, &m).unwrap();
    let (ht, hu) = gaussian_entropies(&g, &m, &m);
    let bb: f64 = 0.25;
    let predicted = ht + bb * hu - (std::f64::consts::PI * std::f64::consts::E * bb.powf(bb)).ln();
    assert!(predicted < -0.2);
    assert!((r.margin - predicted).abs() < 1e-6, "{} vs {predicted}", r.margin);
    assert!(!r.satisfied);
}

#[test]
fn nazarov_empty_sets() {
    let f = gaussian(1.0, 1.0, 64);
    let m = OLCTParams::fresnel(1.0, 0.0, 0.0);
    let empty = RectSet::empty();
    let r = check(&f, &CheckSpec::Nazarov { t1: empty, t2: empty }, &m, &m).unwrap();
    assert!((r.params.get("C_star").unwrap() - 0.5).abs() < 1e-12);
    assert!(r.satisfied);
    assert_eq!(nazarov_constant(1.0, 0.0, 1.0), None);
}

#[test]
fn nazarov_tails_shrink_and_constant_follows_the_measure() {
    let f = gaussian(1.0, 1.0, 128);
    let m = OLCTParams::fresnel(1.0, 0.0, 0.0);
    let (mut last_c, mut last_tails) = (f64::INFINITY, f64::INFINITY);
    for half in [1.0, 1.5, 2.0, 3.0, 4.0] {
        let set = RectSet::centered_square(half);
        let r = check(&f, &CheckSpec::Nazarov { t1: set, t2: set }, &m, &m).unwrap();
        let (c, tails, measure) =
            (r.params.get("C_star").unwrap(), r.params.get("tails").unwrap(), r.params.get("measure").unwrap());
        assert!(r.satisfied && c > 0.0);
        assert!(tails < last_tails);
        // The measure |T₁||T₂| = 16h⁴ outgrows the shrinking tails, so C* falls.
        assert!(c < last_c, "half {half}: {c} after {last_c}");
        assert!(rel(c * (c * measure).exp() * tails, r.lhs) < 1e-9);
        (last_c, last_tails) = (c, tails);
    }
}

#[test]
fn log_up_margin() {
    let f = gaussian(1.0, 1.0, 128);
    let m = OLCTParams::fresnel(1.0, 0.0, 0.0);
    let r = check(&f, &CheckSpec::LogUp, &m, &m).unwrap();
    assert!(r.satisfied);
    assert!(r.margin > 1.0 && r.margin < 2.0, "{}", r.summary());
}

#[test]
fn probes_without_laws_are_rejected() {
    let (g, grid) = gaussian_case((1.0, 1.0));
    let m = OLCTParams::fresnel(1.0, 0.0, 0.0);
    for spec in [CheckSpec::LogUp, CheckSpec::Nazarov { t1: RectSet::empty(), t2: RectSet::empty() }] {
        assert!(matches!(
            effect_probe(&spec, &g, &grid, Probe::Shift, (0.1, 0.1), &m, &m),
            Err(OlctError::UnsupportedProbe(_))
        ));
    }
    let pitt = CheckSpec::Pitt { lambda: 0.5 };
    assert!(effect_probe(&pitt, &g, &grid, Probe::Scale, (1.2, 0.8), &m, &m).is_err());
}

#[test]
fn heisenberg_table_right_side_is_b_squared() {
    let bs = [1.1, 1.3, 1.5];
    let rows = make_table(TableKind::Heisenberg, &[1.5], &bs, &TableDefaults { n: 128, ..Default::default() }).unwrap();
    for (row, b) in rows.iter().zip(bs) {
        assert_eq!(row.rhs, b * b);
        assert!(row.satisfied && row.difference > 0.0);
    }
    let csv = table_csv(TableKind::Heisenberg, &rows);
    assert!(csv.starts_with("alpha1,b1,lhs,rhs,difference\n1.5,1.1,"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn young_table_reports_conjugate_exponent() {
    let rows = make_table(TableKind::Young, &[1.5, 2.0], &[1.25, 2.0], &TableDefaults { n: 64, ..Default::default() }).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0].x, 5.0);
    assert_eq!(rows[1].x, 2.0);
    assert!(rows.iter().all(|r| r.satisfied && r.lhs <= r.rhs * (1.0 + 1e-9)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn young_holds(m1 in params(), m2 in params(), p in 1.0..2.0f64, alpha in (0.5..2.0f64, 0.5..2.0f64)) {
        let f = gaussian(alpha.0, alpha.1, 128);
        let r = check(&f, &CheckSpec::Young { p }, &m1, &m2).unwrap();
        prop_assert!(r.satisfied, "{}", r.summary());
        prop_assert_eq!(r.theorem, TheoremId::Young);
    }

    #[test]
    fn pitt_holds_below_one(m1 in params(), m2 in params(), lambda in 0.0..0.9f64) {
        let f = smooth_field(Grid2D::square(128, 8.0).unwrap(), (0.3, -0.2), 1.0, 0.4);
        let r = check(&f, &CheckSpec::Pitt { lambda }, &m1, &m2).unwrap();
        prop_assert!(r.satisfied, "{}", r.summary());
    }

    #[test]
    fn log_up_holds(m1 in params(), m2 in params(), alpha in (0.5..2.0f64, 0.5..2.0f64)) {
        let f = gaussian(alpha.0, alpha.1, 128);
        let r = check(&f, &CheckSpec::LogUp, &m1, &m2).unwrap();
        prop_assert!(r.satisfied, "{}", r.summary());
    }

    #[test]
    fn entropy_holds_for_large_b(
        a in -1.0..1.0f64, b in 1.0..2.0f64, d in -1.0..1.0f64, eta in -0.5..0.5f64,
        alpha in (0.5..2.0f64, 0.5..2.0f64),
    ) {
        let m = axis_params(a, b, d, 0.0, eta);
        let f = gaussian(alpha.0, alpha.1, 128);
        let r = check(&f, &CheckSpec::Entropy, &m, &m).unwrap();
        prop_assert!(r.satisfied, "{}", r.summary());
    }

    #[test]
    fn heisenberg_holds(m1 in params(), m2 in params(), k in prop_oneof![Just(None), Just(Some(1)), Just(Some(2))]) {
        let f = smooth_field(Grid2D::square(128, 8.0).unwrap(), (0.3, -0.2), 1.0, 0.4);
        let r = check(&f, &CheckSpec::Heisenberg { k, norm_sq: 1.0 }, &m1, &m2).unwrap();
        prop_assert!(r.satisfied, "{}", r.summary());
    }

    #[test]
    fn nazarov_constant_solves_its_equation(e in 0.1..10.0f64, frac in 0.01..2.0f64, m in 0.0..5.0f64) {
        let tails = e * frac;
        let c = nazarov_constant(e, tails, m).unwrap();
        prop_assert!(rel(c * (c * m).exp() * tails, e) < 1e-9);
    }

    #[test]
    fn shift_probes(m1 in params(), m2 in params(), alpha in (-0.5..0.5f64, -0.5..0.5f64)) {
        let (g, grid) = gaussian_case((1.0, 1.3));
        for spec in [CheckSpec::Young { p: 1.5 }, CheckSpec::Entropy, CheckSpec::Heisenberg { k: None, norm_sq: 1.0 }] {
            let r = effect_probe(&spec, &g, &grid, Probe::Shift, alpha, &m1, &m2).unwrap();
            prop_assert!(r.within_tolerance(), "{:?}: {} vs {}", spec.theorem(), r.measured_delta, r.predicted_delta);
            prop_assert!(r.measured_delta.abs() <= 1e-6);
        }
    }

    #[test]
    fn pitt_shift_changes_by_predicted_amount(m1 in params(), alpha in (0.2..0.5f64, 0.2..0.5f64)) {
        let (g, grid) = gaussian_case((1.0, 1.0));
        let r = effect_probe(&CheckSpec::Pitt { lambda: 0.5 }, &g, &grid, Probe::Shift, alpha, &m1, &m1).unwrap();
        prop_assert!(r.within_tolerance(), "{} vs {}", r.measured_delta, r.predicted_delta);
    }

    #[test]
    fn scale_probes(m1 in params(), m2 in params(), s in 0.7..1.4f64, t in 0.7..1.4f64) {
        let (g, grid) = gaussian_case((1.0, 1.0));
        let specs = [
            (CheckSpec::Young { p: 1.5 }, (s, t)),
            (CheckSpec::Entropy, (s, t)),
            (CheckSpec::Heisenberg { k: None, norm_sq: 1.0 }, (s, t)),
            (CheckSpec::Pitt { lambda: 0.5 }, (s, s)),
        ];
        for (spec, alpha) in specs {
            let r = effect_probe(&spec, &g, &grid, Probe::Scale, alpha, &m1, &m2).unwrap();
            prop_assert!(r.within_tolerance(), "{:?}: {} vs {}", spec.theorem(), r.measured_delta, r.predicted_delta);
        }
    }
}

#[test]
fn pitt_shift_is_visible() {
    let (g, grid) = gaussian_case((1.0, 1.0));
    let m = axis_params(1.0, 0.8, 1.0, 0.0, 0.0);
    let r = effect_probe(&CheckSpec::Pitt { lambda: 0.5 }, &g, &grid, Probe::Shift, (0.4, 0.3), &m, &m).unwrap();
    assert!(r.within_tolerance(), "{} vs {}", r.measured_delta, r.predicted_delta);
    assert!(r.measured_delta.abs() > 1e-4, "{}", r.measured_delta);
}
