//! Invariant suite behind `olctkit selftest`.
//!
//! Every line is `PASS|FAIL <name> <detail>`; the run succeeds only if all pass.
//! Randomized cases draw from a seeded generator so a failing seed can be replayed.

use std::time::Instant;

use num_complex::Complex;
use olctkit::functionals::RectSet;
use olctkit::gaussian::{gaussian_entropies, gaussian_field, gaussian_olct_field, GaussianSpec};
use olctkit::grid::{rel_l2, rel_linf};
use olctkit::inequality::{
    check, effect_probe, make_table, nazarov_constant, CheckSpec, Probe, TableDefaults, TableKind,
};
use olctkit::olct::{induced_grid, inverse_olct_2d, olct_2d, olct_2d_direct, olct_2d_fft};
use olctkit::qolct::{
    check_q_identities, check_q_inequality, inverse_qolct, q_rel_linf, qolct, qolct_direct, qolct_via_ops,
    qolct_via_qft, QuaternionGaussian,
};
use olctkit::quaternion::{ops_split, q_conj};
use olctkit::special::{gamma_ratio, logup_constant};
use olctkit::{ComplexField2D, Grid2D, OLCTParams, OlctError, Quaternion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::commands::{TABLE_ALPHAS, TABLE_XS};
use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 20_240_917;

type Outcome = Result<(bool, String), OlctError>;

struct Ctx {
    n: usize,
    rng: StdRng,
}

impl Ctx {
    /// Symplectic parameters with `|b| ∈ [b_lo, b_hi]` and a random sign.
    fn params_in(&mut self, b_lo: f64, b_hi: f64) -> OLCTParams<f64> {
        let a = self.rng.gen_range(-1.0..1.0);
        let d = self.rng.gen_range(-1.0..1.0);
        let b = self.rng.gen_range(b_lo..b_hi) * if self.rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        OLCTParams { a, b, c: (a * d - 1.0) / b, d, tau: self.rng.gen_range(-0.5..0.5), eta: self.rng.gen_range(-0.5..0.5) }
    }

    fn params(&mut self) -> OLCTParams<f64> {
        self.params_in(0.5, 1.8)
    }

    fn alpha(&mut self) -> (f64, f64) {
        (self.rng.gen_range(0.6..2.0), self.rng.gen_range(0.6..2.0))
    }

    fn gaussian(&mut self) -> Result<ComplexField2D<f64>, OlctError> {
        let (a1, a2) = self.alpha();
        let g = GaussianSpec::new(a1, a2)?;
        gaussian_field(&g, &g.auto_grid(self.n)?)
    }

    /// A few random complex Gaussian bumps well inside `[-8, 8]²`.
    fn random_field(&mut self) -> Result<ComplexField2D<f64>, OlctError> {
        let bumps: Vec<(f64, f64, f64, Complex<f64>)> = (0..self.rng.gen_range(1..5))
            .map(|_| {
                (
                    self.rng.gen_range(-1.5..1.5),
                    self.rng.gen_range(-1.5..1.5),
                    self.rng.gen_range(0.7..1.5),
                    Complex::new(self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0)),
                )
            })
            .collect();
        Ok(ComplexField2D::from_fn(Grid2D::square(self.n, 8.0)?, |t1, t2| {
            bumps.iter().map(|&(c1, c2, w, amp)| amp * (-w * ((t1 - c1).powi(2) + (t2 - c2).powi(2))).exp()).sum()
        }))
    }
}

fn axis(a: f64, b: f64, tau: f64, eta: f64) -> OLCTParams<f64> {
    OLCTParams { a, b, c: (a - 1.0) / b, d: 1.0, tau, eta }
}

fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn within(name: &str, err: f64, tol: f64) -> (bool, String) {
    (err <= tol, format!("{name}={err:.3e} tol={tol:.0e}"))
}

fn oracle(ctx: &mut Ctx) -> Outcome {
    let mut errs = Vec::new();
    for _ in 0..16 {
        let a = [0.0, 1.0][ctx.rng.gen_range(0..2)];
        let b = [0.5, 1.0, 1.1, 1.5, 2.0][ctx.rng.gen_range(0..5)];
        let off = [0.0, 0.5, -0.5];
        let (tau, eta) = (off[ctx.rng.gen_range(0..3)], off[ctx.rng.gen_range(0..3)]);
        let alpha = [0.5, 1.0, 1.5, 2.5][ctx.rng.gen_range(0..4)];
        let p = axis(a, b, tau, eta);
        let g = GaussianSpec::isotropic(alpha);
        let grid = g.auto_grid(ctx.n)?;
        let ugrid = induced_grid(&grid, &p, &p);
        let direct = olct_2d_direct(&gaussian_field(&g, &grid)?, &p, &p, &ugrid)?;
        errs.push(rel_linf(&direct.values, &gaussian_olct_field(&g, &p, &p, &ugrid)?.values));
    }
    Ok(within("max_rel_linf", worst(errs), 1e-6))
}

fn fft_vs_direct(ctx: &mut Ctx) -> Outcome {
    let mut errs = Vec::new();
    for _ in 0..6 {
        let (m1, m2) = (ctx.params(), ctx.params());
        let f = ctx.random_field()?;
        let fast = olct_2d_fft(&f, &m1, &m2)?;
        errs.push(rel_linf(&fast.values, &olct_2d_direct(&f, &m1, &m2, &fast.grid)?.values));
    }
    Ok(within("max_rel_linf", worst(errs), 1e-8))
}

fn linearity(ctx: &mut Ctx) -> Outcome {
    let (m1, m2) = (ctx.params(), ctx.params());
    let (f, g) = (ctx.random_field()?, ctx.random_field()?);
    let s = Complex::new(ctx.rng.gen_range(-2.0..2.0), ctx.rng.gen_range(-2.0..2.0));
    let combo = ComplexField2D::new(f.grid, f.values.iter().zip(&g.values).map(|(a, b)| *a * s + *b).collect())?;
    let (tf, tg) = (olct_2d(&f, &m1, &m2)?, olct_2d(&g, &m1, &m2)?);
    let expect: Vec<_> = tf.values.iter().zip(&tg.values).map(|(a, b)| *a * s + *b).collect();
    Ok(within("rel_linf", rel_linf(&olct_2d(&combo, &m1, &m2)?.values, &expect), 1e-12))
}

fn plancherel(ctx: &mut Ctx) -> Outcome {
    let mut errs = Vec::new();
    for _ in 0..6 {
        let (m1, m2) = (ctx.params(), ctx.params());
        let f = ctx.random_field()?;
        let spec = olct_2d(&f, &m1, &m2)?;
        let e = |x: &ComplexField2D<f64>| x.energy_density().iter().sum::<f64>() * x.grid.weight();
        errs.push(rel(e(&spec), e(&f)));
    }
    Ok(within("max_rel_energy_gap", worst(errs), 1e-4))
}

fn round_trip(ctx: &mut Ctx) -> Outcome {
    let mut errs = Vec::new();
    for _ in 0..4 {
        let (m1, m2) = (ctx.params(), ctx.params());
        let f = ctx.gaussian()?;
        let back = inverse_olct_2d(&olct_2d(&f, &m1, &m2)?, &m1, &m2, &f.grid)?;
        errs.push(rel_linf(&back.values, &f.values));
    }
    Ok(within("max_rel_linf", worst(errs), 1e-6))
}

fn q_round_trip(ctx: &mut Ctx) -> Outcome {
    let mut errs = Vec::new();
    for _ in 0..3 {
        let (m1, m2) = (ctx.params(), ctx.params());
        let (a1, a2) = ctx.alpha();
        let q = QuaternionGaussian::new(GaussianSpec::new(a1, a2)?);
        let f = q.sample(&q.auto_grid(ctx.n)?);
        let back = inverse_qolct(&qolct(&f, &m1, &m2)?, &m1, &m2, &f.grid)?;
        errs.push(q_rel_linf(&back.values, &f.values));
    }
    Ok(within("max_rel_linf", worst(errs), 1e-6))
}

fn equality_cases(ctx: &mut Ctx) -> Outcome {
    let (m1, m2) = (ctx.params(), ctx.params());
    let f = ctx.random_field()?;
    let young = check(&f, &CheckSpec::Young { p: 2.0 }, &m1, &m2)?;
    let pitt = check(&f, &CheckSpec::Pitt { lambda: 0.0 }, &m1, &m2)?;
    let (ey, ep) = (rel(young.lhs, young.rhs), rel(pitt.lhs, pitt.rhs));
    Ok((ey <= 1e-4 && ep <= 1e-4, format!("young_p2={ey:.3e} pitt_l0={ep:.3e} tol=1e-4")))
}

fn logup_derivative(ctx: &mut Ctx) -> Outcome {
    let bb = ctx.rng.gen_range(0.3..3.0);
    let h = 1e-5;
    // d/dλ of Γ-ratio·|b₁b₂|^{-λ} at zero.
    let slope = (gamma_ratio(h) - gamma_ratio(-h)) / (2.0 * h) - f64::ln(bb);
    Ok(within("abs_err", (slope - logup_constant(bb)).abs(), 1e-6))
}

fn inequalities_hold(ctx: &mut Ctx) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for _ in 0..3 {
        let (m1, m2) = (ctx.params(), ctx.params());
        let f = ctx.gaussian()?;
        let g = ctx.random_field()?;
        let p = ctx.rng.gen_range(1.0..2.0);
        let lambda = ctx.rng.gen_range(0.0..0.9);
        let half = ctx.rng.gen_range(0.2..1.5);
        let set = RectSet::centered_square(half);
        let cases = [
            (&f, CheckSpec::Young { p }),
            (&g, CheckSpec::Pitt { lambda }),
            (&f, CheckSpec::LogUp),
            (&g, CheckSpec::Heisenberg { k: None, norm_sq: 1.0 }),
            (&g, CheckSpec::Heisenberg { k: Some(1), norm_sq: 1.0 }),
            (&f, CheckSpec::Nazarov { t1: set, t2: set }),
        ];
        for (field, spec) in cases {
            count += 1;
            let r = check(field, &spec, &m1, &m2)?;
            if !r.satisfied {
                failures.push(r.summary());
            }
            if let (CheckSpec::Nazarov { .. }, Some(c), Some(t), Some(m)) =
                (spec, r.params.get("C_star"), r.params.get("tails"), r.params.get("measure"))
            {
                if nazarov_constant(r.lhs, t, m).map_or(true, |c2| rel(c2, c) > 1e-12) {
                    failures.push("nazarov constant does not solve its equation".into());
                }
            }
        }
    }
    Ok((failures.is_empty(), format!("cases={count} failures={}", failures.join(" | "))))
}

fn entropy(ctx: &mut Ctx) -> Outcome {
    let mut worst_margin = f64::INFINITY;
    for _ in 0..3 {
        let (m1, m2) = (ctx.params_in(1.0, 1.8), ctx.params_in(1.0, 1.8));
        let r = check(&ctx.gaussian()?, &CheckSpec::Entropy, &m1, &m2)?;
        worst_margin = worst_margin.min(r.margin);
    }
    // Below |b₁b₂| = 1 the bound fails; the computed margin must match the closed form.
    let alpha = ctx.rng.gen_range(1.0..2.0);
    let g = GaussianSpec::isotropic(alpha);
    let m = axis(0.0, 0.5, 0.0, 0.0);
    let r = check(&gaussian_field(&g, &g.auto_grid(ctx.n.max(256))?)?, &CheckSpec::Entropy, &m, &m)?;
    let (ht, hu) = gaussian_entropies(&g, &m, &m);
    let bb: f64 = 0.25;
    let predicted = ht + bb * hu - (std::f64::consts::PI * std::f64::consts::E * bb.powf(bb)).ln();
    let gap = (r.margin - predicted).abs();
    Ok((
        worst_margin >= -1e-3 && gap <= 1e-6,
        format!("min_margin_b_ge_1={worst_margin:.3e} small_b_margin={:.4} closed_form_gap={gap:.3e}", r.margin),
    ))
}

fn effects(ctx: &mut Ctx) -> Outcome {
    let g = GaussianSpec::new(1.0, 1.3)?;
    let grid = g.auto_grid(ctx.n)?;
    let (m1, m2) = (ctx.params(), ctx.params());
    let shift = (ctx.rng.gen_range(-0.5..0.5), ctx.rng.gen_range(-0.5..0.5));
    let scale = (ctx.rng.gen_range(0.7..1.4), ctx.rng.gen_range(0.7..1.4));
    let mut bad = Vec::new();
    let mut record = |label: &str, ok: bool| {
        if !ok {
            bad.push(label.to_string());
        }
    };
    for spec in [CheckSpec::Young { p: 1.5 }, CheckSpec::Entropy, CheckSpec::Heisenberg { k: None, norm_sq: 1.0 }] {
        let r = effect_probe(&spec, &g, &grid, Probe::Shift, shift, &m1, &m2)?;
        record(&format!("{}-shift", spec.theorem()), r.within_tolerance() && r.measured_delta.abs() <= 1e-6);
        let r = effect_probe(&spec, &g, &grid, Probe::Scale, scale, &m1, &m2)?;
        record(&format!("{}-scale", spec.theorem()), r.within_tolerance());
    }
    let iso = GaussianSpec::isotropic(1.0);
    let iso_grid = iso.auto_grid(ctx.n)?;
    let mp = OLCTParams { a: ctx.rng.gen_range(0.4..1.0), ..ctx.params() };
    let mp = OLCTParams { c: (mp.a * mp.d - 1.0) / mp.b, ..mp };
    let s = ctx.rng.gen_range(0.2..0.5);
    let pitt = effect_probe(&CheckSpec::Pitt { lambda: 0.5 }, &iso, &iso_grid, Probe::Shift, (s, s), &mp, &mp)?;
    record("pitt-shift", pitt.within_tolerance() && pitt.measured_delta.abs() > 1e-4);
    let sc = ctx.rng.gen_range(0.7..1.4);
    let pitt = effect_probe(&CheckSpec::Pitt { lambda: 0.5 }, &iso, &iso_grid, Probe::Scale, (sc, sc), &m1, &m2)?;
    record("pitt-scale", pitt.within_tolerance());
    Ok((bad.is_empty(), format!("probes=8 failing=[{}]", bad.join(","))))
}

fn ops_algebra(ctx: &mut Ctx) -> Outcome {
    let (i, j) = (Quaternion::i(), Quaternion::j());
    let mut err: f64 = 0.0;
    for _ in 0..200 {
        let mut q = || -> Quaternion<f64> {
            Quaternion::new(
                ctx.rng.gen_range(-5.0..5.0),
                ctx.rng.gen_range(-5.0..5.0),
                ctx.rng.gen_range(-5.0..5.0),
                ctx.rng.gen_range(-5.0..5.0),
            )
        };
        let (p, r) = (q(), q());
        let s = ops_split(p);
        let scale = p.norm().max(1.0);
        err = err
            .max((s.q_plus + s.q_minus - p).norm() / scale)
            .max((i * s.q_plus + s.q_plus * j).norm() / scale)
            .max((i * s.q_minus - s.q_minus * j).norm() / scale)
            .max((p.norm_sq() - s.q_plus.norm_sq() - s.q_minus.norm_sq()).abs() / scale.powi(2))
            .max((s.q_plus * q_conj(ops_split(r).q_minus)).scalar().abs() / (scale * r.norm().max(1.0)))
            .max(((p * r).norm() - p.norm() * r.norm()).abs() / (scale * r.norm().max(1.0)));
    }
    Ok(within("max_residual", err, 1e-12))
}

fn q_paths(ctx: &mut Ctx) -> Outcome {
    let (a1, a2) = ctx.alpha();
    let q = QuaternionGaussian::new(GaussianSpec::new(a1, a2)?);
    let f = q.sample(&q.auto_grid(ctx.n.min(64))?);
    let mut errs = Vec::new();
    for _ in 0..3 {
        let (m1, m2) = (ctx.params(), ctx.params());
        let ops = qolct_via_ops(&f, &m1, &m2)?;
        let direct = qolct_direct(&f, &m1, &m2, &ops.grid)?;
        let qft = qolct_via_qft(&f, &m1, &m2)?;
        errs.push(q_rel_linf(&ops.values, &direct.values).max(q_rel_linf(&qft.values, &direct.values)));
    }
    Ok(within("max_rel_linf", worst(errs), 1e-8))
}

fn q_identities(ctx: &mut Ctx) -> Outcome {
    let q = QuaternionGaussian::new(GaussianSpec::new(1.0, 0.8)?);
    let f = q.sample(&q.auto_grid(ctx.n.min(64))?);
    let (m1, m2) = (ctx.params(), ctx.params());
    let (modulus, parseval) = check_q_identities(&f, None, &m1, &m2)?;
    let plancherel = rel(qolct(&f, &m1, &m2)?.energy(), f.energy());
    Ok((
        modulus.residual <= 1e-10 && parseval.residual <= 1e-10 && plancherel <= 1e-4,
        format!(
            "modulus={:.3e} parseval={:.3e} tol=1e-10 plancherel={plancherel:.3e} tol=1e-4",
            modulus.residual, parseval.residual
        ),
    ))
}

fn q_six_checks(ctx: &mut Ctx) -> Outcome {
    let q = QuaternionGaussian::new(GaussianSpec::isotropic(1.0));
    let f = q.sample_normalized(&q.auto_grid(ctx.n)?);
    let m1 = axis(1.0, 1.0, 0.0, 0.0);
    let m2 = OLCTParams { a: 0.0, b: 1.2, c: -1.0 / 1.2, d: 1.0, tau: 0.1, eta: -0.1 };
    let set = RectSet::centered_square(0.5);
    let specs = [
        CheckSpec::Young { p: 1.5 },
        CheckSpec::Pitt { lambda: 0.5 },
        CheckSpec::LogUp,
        CheckSpec::Entropy,
        CheckSpec::Nazarov { t1: set, t2: set },
        CheckSpec::Heisenberg { k: None, norm_sq: 1.0 },
    ];
    let mut failing = Vec::new();
    for spec in specs {
        let r = check_q_inequality(&f, &spec, &m1, &m2)?;
        if !r.satisfied {
            failing.push(r.theorem.as_str());
        }
    }
    Ok((failing.is_empty(), format!("checks=6 failing=[{}]", failing.join(","))))
}

fn tables(ctx: &mut Ctx) -> Outcome {
    let defaults = TableDefaults { n: ctx.n, ..TableDefaults::default() };
    let heis = make_table(TableKind::Heisenberg, &TABLE_ALPHAS, &TABLE_XS, &defaults)?;
    let rhs_exact = heis.iter().all(|r| r.rhs == r.x * r.x);
    let heis_ok = heis.iter().all(|r| r.lhs >= r.rhs);
    let young = make_table(TableKind::Young, &TABLE_ALPHAS, &TABLE_XS, &defaults)?;
    let young_ok = young.iter().all(|r| r.lhs <= r.rhs);
    Ok((
        rhs_exact && heis_ok && young_ok && heis.len() == 15 && young.len() == 15,
        format!("heisenberg_rhs_exact={rhs_exact} heisenberg_lhs_ge_rhs={heis_ok} young_lhs_le_rhs={young_ok}"),
    ))
}

/// Runs every check and prints one line each; `Ok(false)` if any failed.
pub fn run(n: usize, seed: u64) -> Result<bool, CliError> {
    if n < 16 || !n.is_power_of_two() {
        return Err(CliError::validation("InvalidGrid", format!("selftest needs a power-of-two grid of at least 16, got {n}")));
    }
    let checks: [(&str, fn(&mut Ctx) -> Outcome); 17] = [
        ("oracle_closed_form", oracle),
        ("fft_matches_direct", fft_vs_direct),
        ("linearity", linearity),
        ("plancherel", plancherel),
        ("olct_round_trip", round_trip),
        ("qolct_round_trip", q_round_trip),
        ("equality_cases", equality_cases),
        ("logup_constant_derivative", logup_derivative),
        ("inequalities_hold", inequalities_hold),
        ("entropy", entropy),
        ("effect_probes", effects),
        ("ops_algebra", ops_algebra),
        ("qolct_paths_agree", q_paths),
        ("qolct_identities", q_identities),
        ("qolct_six_checks", q_six_checks),
        ("tables", tables),
        ("grid_relations", grid_relations),
    ];
    println!("selftest n={n} seed={seed}");
    let start = Instant::now();
    let mut ctx = Ctx { n, rng: StdRng::seed_from_u64(seed) };
    let mut failed = 0usize;
    for (name, f) in checks {
        let t = Instant::now();
        let (ok, detail) = match f(&mut ctx) {
            Ok(r) => r,
            Err(e) => (false, format!("error {}: {e}", e.code())),
        };
        failed += usize::from(!ok);
        println!("{} {name} {detail} ({:.2}s)", if ok { "PASS" } else { "FAIL" }, t.elapsed().as_secs_f64());
    }
    println!("selftest {} checks, {failed} failed, {:.1}s", checks.len(), start.elapsed().as_secs_f64());
    Ok(failed == 0)
}

/// The FFT output grid is the induced grid, and the relative L2 norm agrees with L∞ on smooth data.
fn grid_relations(ctx: &mut Ctx) -> Outcome {
    let (m1, m2) = (ctx.params(), ctx.params());
    let f = ctx.random_field()?;
    let fast = olct_2d_fft(&f, &m1, &m2)?;
    let same_grid = fast.grid.approx_eq(&induced_grid(&f.grid, &m1, &m2));
    let direct = olct_2d_direct(&f, &m1, &m2, &fast.grid)?;
    let l2 = rel_l2(&fast.values, &direct.values);
    Ok((same_grid && l2 <= 1e-8, format!("induced_grid_match={same_grid} rel_l2={l2:.3e}")))
}
