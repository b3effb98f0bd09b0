use olctkit::quaternion::{ops_generators, ops_split, q_conj, q_mul, q_norm_sq};
use olctkit::Quaternion;
use proptest::prelude::*;

fn quat() -> impl Strategy<Value = Quaternion<f64>> {
    (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

/// The sixteen-term product written out independently of the library.
fn brute_product(p: Quaternion<f64>, r: Quaternion<f64>) -> Quaternion<f64> {
    let a = [p.w, p.x, p.y, p.z];
    let b = [r.w, r.x, r.y, r.z];
    // unit[i][j] = (sign, index) of e_i e_j with e = (1, i, j, k).
    let unit = [
        [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
        [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
        [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
        [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
    ];
    let mut out = [0.0; 4];
    for i in 0..4 {
        for j in 0..4 {
            let (s, k) = unit[i][j];
            out[k] += s * a[i] * b[j];
        }
    }
    Quaternion::new(out[0], out[1], out[2], out[3])
}

fn dist(a: Quaternion<f64>, b: Quaternion<f64>) -> f64 {
    (a - b).norm()
}

#[test]
fn multiplication_table() {
    let (one, i, j, k) = (Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k());
    let minus_one = Quaternion::new(-1.0, 0.0, 0.0, 0.0);
    assert_eq!(i * i, minus_one);
    assert_eq!(j * j, minus_one);
    assert_eq!(k * k, minus_one);
    assert_eq!(i * j * k, minus_one);
    assert_eq!(i * j, k);
    assert_eq!(j * k, i);
    assert_eq!(k * i, j);
    assert_eq!(j * i, -k);
    assert_eq!((one + i) * (one + j), Quaternion::new(1.0, 1.0, 1.0, 1.0));
}

#[test]
fn conjugate_and_norm_examples() {
    assert_eq!(q_conj(Quaternion::<f64>::one()), Quaternion::one());
    assert_eq!(q_conj(Quaternion::new(0.0, 1.0, 2.0, 0.0)), Quaternion::new(0.0, -1.0, -2.0, 0.0));
    assert_eq!(q_norm_sq(Quaternion::<f64>::zero()), 0.0);
    assert_eq!(q_norm_sq(Quaternion::new(1.0, 1.0, 1.0, 1.0)), 4.0);
}

#[test]
fn split_of_units() {
    let s = ops_split(Quaternion::<f64>::one());
    assert_eq!(s.q_plus, Quaternion::new(0.5, 0.0, 0.0, 0.5));
    assert_eq!(s.q_minus, Quaternion::new(0.5, 0.0, 0.0, -0.5));
    let s = ops_split(Quaternion::<f64>::i());
    assert_eq!(s.q_plus, Quaternion::new(0.0, 0.5, -0.5, 0.0));
    assert_eq!(s.q_minus, Quaternion::new(0.0, 0.5, 0.5, 0.0));
}

#[test]
fn f32_algebra_matches_f64() {
    let p = Quaternion::new(0.5f32, -1.25, 2.0, 0.75);
    let r = Quaternion::new(-1.5f32, 0.25, 1.0, -2.0);
    let p64 = Quaternion::new(0.5, -1.25, 2.0, 0.75);
    let r64 = Quaternion::new(-1.5, 0.25, 1.0, -2.0);
    let (a, b) = (q_mul(p, r), q_mul(p64, r64));
    assert!((a.w as f64 - b.w).abs() + (a.z as f64 - b.z).abs() < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn product_matches_brute_expansion(p in quat(), r in quat()) {
        prop_assert!(dist(q_mul(p, r), brute_product(p, r)) <= 1e-12 * (p.norm() * r.norm()).max(1.0));
    }

    #[test]
    fn norm_is_multiplicative(p in quat(), r in quat()) {
        let lhs = (p * r).norm();
        let rhs = p.norm() * r.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300));
    }

    #[test]
    fn conjugation_reverses_products(p in quat(), r in quat()) {
        let lhs = q_conj(p * r);
        let rhs = q_mul(q_conj(r), q_conj(p));
        prop_assert!(dist(lhs, rhs) <= 1e-12 * (p.norm() * r.norm()).max(1.0));
    }

    #[test]
    fn split_reconstructs_within_one_ulp(q in quat()) {
        let s = ops_split(q);
        let back = s.q_plus + s.q_minus;
        // w and z (x and y) are mixed, so rounding is set by the larger of each pair.
        let pair_max = [q.w.abs().max(q.z.abs()), q.x.abs().max(q.y.abs())];
        for (a, b, m) in [(back.w, q.w, pair_max[0]), (back.x, q.x, pair_max[1]), (back.y, q.y, pair_max[1]), (back.z, q.z, pair_max[0])] {
            prop_assert!((a - b).abs() <= f64::EPSILON * m, "{a} vs {b}");
        }
    }

    #[test]
    fn split_preserves_modulus(q in quat()) {
        let s = ops_split(q);
        let total = q_norm_sq(q);
        prop_assert!((total - q_norm_sq(s.q_plus) - q_norm_sq(s.q_minus)).abs() <= 1e-12 * total.max(1e-300));
    }

    #[test]
    fn halves_commute_or_anticommute(q in quat()) {
        let s = ops_split(q);
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let scale = q.norm().max(1.0);
        prop_assert!((i * s.q_plus + s.q_plus * j).norm() <= 1e-12 * scale);
        prop_assert!((i * s.q_minus - s.q_minus * j).norm() <= 1e-12 * scale);
    }

    #[test]
    fn halves_are_orthogonal(p in quat(), q in quat()) {
        let plus = ops_split(q).q_plus;
        let minus = ops_split(p).q_minus;
        prop_assert!((plus * q_conj(minus)).scalar().abs() <= 1e-12 * (p.norm() * q.norm()).max(1.0));
    }

    #[test]
    fn generators_rebuild_halves(q in quat()) {
        let s = ops_split(q);
        let (cp, cm) = ops_generators(q);
        let plus = Quaternion::from_complex_i(cp) + Quaternion::i() * Quaternion::from_complex_i(cp) * Quaternion::j();
        let minus = Quaternion::from_complex_i(cm) - Quaternion::i() * Quaternion::from_complex_i(cm) * Quaternion::j();
        prop_assert!(dist(plus, s.q_plus) <= 1e-12 * q.norm().max(1.0));
        prop_assert!(dist(minus, s.q_minus) <= 1e-12 * q.norm().max(1.0));
    }

    #[test]
    fn pair_codec_is_exact(q in quat()) {
        let (c1, c2) = q.to_pair();
        prop_assert_eq!(Quaternion::from_pair(c1, c2), q);
        // c₁ + c₂ j with c₂ acting from the left.
        let rebuilt = Quaternion::from_complex_i(c1) + Quaternion::from_complex_i(c2) * Quaternion::j();
        prop_assert!(dist(rebuilt, q) == 0.0);
    }
}
