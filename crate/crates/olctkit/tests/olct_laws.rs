mod common;

use common::{axis_params, energy, params, smooth_field};
use num_complex::Complex;
use olctkit::grid::{rel_l2, rel_linf};
use olctkit::olct::{
    derivative_op, induced_grid, inverse_olct_2d, inverse_olct_2d_fft, kernel_1d, olct_2d, olct_2d_direct,
    olct_2d_fft, scale_map, shift_law, validate_params,
};
use olctkit::signal::{Dilated, FnSignal, Shifted, Signal2D};
use olctkit::{Axis, ComplexField2D, Grid2D, OLCTParams, OlctError};
use proptest::prelude::*;

fn resolved_params() -> impl Strategy<Value = OLCTParams<f64>> {
    (-1.0..1.0f64, 0.7..1.6f64, any::<bool>(), -1.0..1.0f64, -0.4..0.4f64, -0.4..0.4f64).prop_map(
        |(a, bm, neg, d, tau, eta)| axis_params(a, if neg { -bm } else { bm }, d, tau, eta),
    )
}

fn bump(c: (f64, f64), w: f64) -> impl Fn(f64, f64) -> Complex<f64> + Sync + Copy {
    move |a, b| {
        let r = (a - c.0).powi(2) + 0.8 * (b - c.1).powi(2);
        Complex::from_polar((-w * r).exp(), 0.3 * (a - c.0) * (b - c.1))
    }
}

#[test]
fn parameter_validation() {
    assert!(validate_params(OLCTParams { a: 0.0, b: 1.0, c: -1.0, d: 0.0, tau: 0.0, eta: 0.0 }).is_ok());
    assert!(validate_params(OLCTParams { a: 1.0, b: 1.0, c: 0.0, d: 1.0, tau: 0.0, eta: 0.0 }).is_ok());
    assert_eq!(
        validate_params(OLCTParams { a: 1.0, b: 0.0, c: 0.0, d: 1.0, tau: 0.0, eta: 0.0 }),
        Err(OlctError::DegenerateB)
    );
    assert!(matches!(
        validate_params(OLCTParams { a: 0.9, b: 1.0, c: 0.0, d: 1.0, tau: 0.0, eta: 0.0 }),
        Err(OlctError::SymplecticViolation(_))
    ));
}

#[test]
fn kernel_examples() {
    let root = Complex::from_polar((2.0 * std::f64::consts::PI).sqrt().recip(), -std::f64::consts::FRAC_PI_4);
    let ft = OLCTParams::fourier();
    for (t, u) in [(0.3, -1.2), (2.0, 0.7)] {
        let k = kernel_1d(&ft, t, u).unwrap();
        assert!((k - root * Complex::from_polar(1.0, -t * u)).norm() < 1e-15);
    }
    let k = kernel_1d(&OLCTParams::fresnel(1.0, 0.0, 0.0), 0.0, 0.0).unwrap();
    assert!((k - root).norm() < 1e-15);
}

#[test]
fn scale_map_examples() {
    let p = OLCTParams::fresnel(1.0, 0.4, -0.3);
    let s = scale_map(p, 2.0).unwrap();
    assert_eq!((s.a, s.b, s.c, s.d, s.tau, s.eta), (0.25, 1.0, 0.0, 4.0, 0.2, -0.6));
    assert_eq!(scale_map(p, 1.0).unwrap(), p);
    assert_eq!(scale_map(p, 0.0), Err(OlctError::ZeroScale));
}

#[test]
fn fourier_case_is_a_dft() {
    let g = Grid2D::square(16, 4.0).unwrap();
    let f = smooth_field(g, (0.2, -0.1), 1.0, 0.3);
    let ft = OLCTParams::fourier();
    let out = olct_2d_fft(&f, &ft, &ft).unwrap();
    // (2πi)^{-1/2} per axis.
    let c = Complex::from_polar(1.0 / (2.0 * std::f64::consts::PI), -std::f64::consts::FRAC_PI_2);
    for k in [0, 37, 130, 255] {
        let (u1, u2) = out.grid.coords(k);
        let naive: Complex<f64> = (0..g.len())
            .map(|i| {
                let (t1, t2) = g.coords(i);
                f.values[i] * Complex::from_polar(g.weight(), -(t1 * u1 + t2 * u2))
            })
            .sum();
        assert!((out.values[k] - c * naive).norm() < 1e-13);
    }
}

#[test]
fn zero_field_maps_to_zero() {
    let g = Grid2D::square(32, 5.0).unwrap();
    let p = OLCTParams::fresnel(0.7, 0.1, 0.2);
    let z = ComplexField2D::zeros(g);
    assert!(olct_2d_fft(&z, &p, &p).unwrap().values.iter().all(|v| *v == Complex::new(0.0, 0.0)));
    assert!(olct_2d_direct(&z, &p, &p, &g).unwrap().values.iter().all(|v| *v == Complex::new(0.0, 0.0)));
}

#[test]
fn f32_matches_f64_transform() {
    let g64 = Grid2D::square(32, 5.0).unwrap();
    let f64_field = smooth_field(g64, (0.1, 0.2), 1.0, 0.2);
    let g32 = Grid2D::<f32>::square(32, 5.0).unwrap();
    let f32_field = ComplexField2D {
        grid: g32,
        values: f64_field.values.iter().map(|v| Complex::new(v.re as f32, v.im as f32)).collect(),
    };
    let p64 = OLCTParams::fresnel(0.8, 0.2, -0.1);
    let p32 = OLCTParams::<f32>::fresnel(0.8, 0.2, -0.1);
    let a = olct_2d_fft(&f64_field, &p64, &p64).unwrap();
    let b = olct_2d_fft(&f32_field, &p32, &p32).unwrap();
    let peak = a.values.iter().fold(0.0f64, |m, v| m.max(v.norm()));
    let gap = a
        .values
        .iter()
        .zip(&b.values)
        .fold(0.0f64, |m, (x, y)| m.max((x - Complex::new(y.re as f64, y.im as f64)).norm()));
    assert!(gap / peak < 1e-4, "{}", gap / peak);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_modulus_is_constant(p in params(), t in -20.0..20.0f64, u in -20.0..20.0f64) {
        let k = kernel_1d(&p, t, u).unwrap();
        let expected = (2.0 * std::f64::consts::PI * p.b.abs()).sqrt().recip();
        prop_assert!((k.norm() - expected).abs() <= 1e-12 * expected);
    }

    #[test]
    fn scale_map_stays_symplectic(p in params(), alpha in prop_oneof![-3.0..-0.2f64, 0.2..3.0f64]) {
        let s = scale_map(p, alpha).unwrap();
        prop_assert!((s.a * s.d - s.b * s.c - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn transform_is_linear(
        m1 in params(), m2 in params(),
        ca in (-2.0..2.0f64, -2.0..2.0f64), cb in (-2.0..2.0f64, -2.0..2.0f64),
    ) {
        let g = Grid2D::square(32, 6.0).unwrap();
        let f = smooth_field(g, (0.3, -0.2), 1.0, 0.4);
        let h = smooth_field(g, (-0.5, 0.4), 0.6, -0.2);
        let (a, b) = (Complex::new(ca.0, ca.1), Complex::new(cb.0, cb.1));
        let mix = ComplexField2D { grid: g, values: f.values.iter().zip(&h.values).map(|(x, y)| a * x + b * y).collect() };
        let lhs = olct_2d_fft(&mix, &m1, &m2).unwrap();
        let (of, oh) = (olct_2d_fft(&f, &m1, &m2).unwrap(), olct_2d_fft(&h, &m1, &m2).unwrap());
        let rhs: Vec<_> = of.values.iter().zip(&oh.values).map(|(x, y)| a * x + b * y).collect();
        prop_assert!(rel_linf(&lhs.values, &rhs) <= 1e-12);
    }

    #[test]
    fn fft_and_direct_paths_agree(m1 in params(), m2 in params(), c in (-0.5..0.5f64, -0.5..0.5f64), w in 0.6..1.5f64) {
        let g = Grid2D::square(64, 7.0).unwrap();
        let f = smooth_field(g, c, w, 0.3);
        let fast = olct_2d_fft(&f, &m1, &m2).unwrap();
        let slow = olct_2d_direct(&f, &m1, &m2, &fast.grid).unwrap();
        prop_assert!(rel_linf(&fast.values, &slow.values) <= 1e-8);
    }

    #[test]
    fn plancherel(m1 in params(), m2 in params(), c in (-0.5..0.5f64, -0.5..0.5f64), w in 0.6..1.5f64) {
        let g = Grid2D::square(64, 7.0).unwrap();
        let f = smooth_field(g, c, w, 0.3);
        let spec = olct_2d(&f, &m1, &m2).unwrap();
        let (a, b) = (energy(&spec).sqrt(), energy(&f).sqrt());
        prop_assert!((a - b).abs() / b <= 1e-4);
    }

    #[test]
    fn round_trip_direct_and_fft(m1 in params(), m2 in params(), c in (-0.5..0.5f64, -0.5..0.5f64)) {
        let g = Grid2D::square(64, 7.0).unwrap();
        let f = smooth_field(g, c, 1.0, 0.3);
        let spec = olct_2d_fft(&f, &m1, &m2).unwrap();
        let back = inverse_olct_2d(&spec, &m1, &m2, &g).unwrap();
        prop_assert!(rel_linf(&back.values, &f.values) <= 1e-6);
        let fast = inverse_olct_2d_fft(&spec, &m1, &m2).unwrap();
        prop_assert!(fast.grid.approx_eq(&g));
        prop_assert!(rel_linf(&fast.values, &f.values) <= 1e-6);
    }

    #[test]
    fn round_trip_random_band_limited(
        m1 in params(),
        bumps in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64, -0.5..0.5f64, -0.5..0.5f64), 1..6),
    ) {
        // A random sum of smooth bumps stands in for a random band-limited field.
        let g = Grid2D::square(64, 7.0).unwrap();
        let f = ComplexField2D::from_fn(g, |a, b| {
            bumps.iter().map(|&(x, y, re, im)| Complex::new(re, im) * (-((a - x).powi(2) + (b - y).powi(2))).exp()).sum()
        });
        prop_assume!(f.values.iter().any(|v| v.norm() > 1e-6));
        let spec = olct_2d(&f, &m1, &m1).unwrap();
        let back = inverse_olct_2d(&spec, &m1, &m1, &g).unwrap();
        prop_assert!(rel_l2(&back.values, &f.values) <= 1e-5);
    }

    #[test]
    fn shift_covariance(m1 in resolved_params(), m2 in resolved_params(), alpha in (-0.7..0.7f64, -0.7..0.7f64)) {
        let g = Grid2D::square(128, 8.0).unwrap();
        let base = FnSignal(bump((0.1, -0.2), 1.0));
        let moved = Shifted { inner: &base, alpha };
        let ugrid = induced_grid(&g, &m1, &m2);
        let law = shift_law(&m1, &m2, alpha).unwrap();
        let back = Grid2D::new(
            Axis { min: ugrid.axis1.min - law.spectral_shift.0, ..ugrid.axis1 },
            Axis { min: ugrid.axis2.min - law.spectral_shift.1, ..ugrid.axis2 },
        );
        let lhs = olct_2d_direct(&moved.sample(&g), &m1, &m2, &ugrid).unwrap();
        let reference = olct_2d_direct(&base.sample(&g), &m1, &m2, &back).unwrap();
        let rhs: Vec<_> = (0..ugrid.len()).map(|i| {
            let (u1, u2) = ugrid.coords(i);
            reference.values[i] * law.phase(u1, u2)
        }).collect();
        prop_assert!(rel_linf(&lhs.values, &rhs) <= 1e-6);
        let mags: Vec<_> = lhs.values.iter().map(|v| Complex::new(v.norm(), 0.0)).collect();
        let ref_mags: Vec<_> = reference.values.iter().map(|v| Complex::new(v.norm(), 0.0)).collect();
        prop_assert!(rel_linf(&mags, &ref_mags) <= 1e-6);
        for i in [0, ugrid.len() / 3, ugrid.len() - 1] {
            let (u1, u2) = ugrid.coords(i);
            prop_assert!((law.phase(u1, u2).norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn scale_covariance(m1 in resolved_params(), m2 in resolved_params(), a1 in 0.75..1.4f64, a2 in 0.75..1.4f64) {
        let g = Grid2D::square(128, 8.0).unwrap();
        let base = FnSignal(bump((0.1, -0.2), 1.0));
        let dilated = Dilated { inner: &base, alpha: (a1, a2) };
        let ugrid = induced_grid(&g, &m1, &m2);
        let lhs = olct_2d_direct(&dilated.sample(&g), &m1, &m2, &ugrid).unwrap();
        let (s1, s2) = (scale_map(m1, a1).unwrap(), scale_map(m2, a2).unwrap());
        let shrunk = Grid2D::new(
            Axis { n: ugrid.n1(), min: ugrid.axis1.min / a1, step: ugrid.axis1.step / a1 },
            Axis { n: ugrid.n2(), min: ugrid.axis2.min / a2, step: ugrid.axis2.step / a2 },
        );
        let rhs = olct_2d_direct(&base.sample(&g), &s1, &s2, &shrunk).unwrap();
        let rhs: Vec<_> = rhs.values.iter().map(|v| v / (a1 * a2)).collect();
        prop_assert!(rel_linf(&lhs.values, &rhs) <= 1e-6);
    }

    #[test]
    fn derivative_becomes_multiplier(m1 in resolved_params(), m2 in resolved_params(), axis in 1usize..=2) {
        let g = Grid2D::square(256, 8.0).unwrap();
        let f = FnSignal(bump((0.1, -0.2), 1.0)).sample(&g);
        let (m, n) = if axis == 1 { (1, 0) } else { (0, 1) };
        let df = derivative_op(&f, &m1, &m2, m, n).unwrap();
        let lhs = olct_2d(&df, &m1, &m2).unwrap();
        let spec = olct_2d(&f, &m1, &m2).unwrap();
        let rhs: Vec<_> = (0..spec.grid.len()).map(|i| {
            let (u1, u2) = spec.grid.coords(i);
            let mult = if axis == 1 { Complex::new(0.0, -u1 / m1.b) } else { Complex::new(0.0, -u2 / m2.b) };
            spec.values[i] * mult
        }).collect();
        prop_assert!(rel_l2(&lhs.values, &rhs) <= 1e-4);
        prop_assert_eq!(derivative_op(&f, &m1, &m2, 0, 0).unwrap(), f.clone());
    }
}

#[test]
fn derivative_order_is_capped() {
    let g = Grid2D::square(16, 4.0).unwrap();
    let f = smooth_field(g, (0.0, 0.0), 1.0, 0.0);
    let p = OLCTParams::fresnel(1.0, 0.0, 0.0);
    assert_eq!(derivative_op(&f, &p, &p, 2, 1), Err(OlctError::UnsupportedOrder(3)));
    assert!(derivative_op(&f, &p, &p, 1, 1).is_ok());
}
