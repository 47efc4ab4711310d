//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities (run with `--nocapture` to see them on success).
//!
//! Heavy inputs are shared: coefficient tables are built once per process,
//! prime-coefficient tables for the degree-2 functions are cached on disk
//! under data/cache, and the zeta zero list is read from
//! data/zeta_zeros_10k.txt (override with SELVAR_ZETA_ZEROS). If the zero
//! file is missing, tools/gen_zeta_zeros.py is invoked to compute it locally;
//! zero ordinates are never bundled with the sources.

use std::path::PathBuf;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use selvar_core::coeffs::{self, CoefficientTable};
use selvar_core::euler::{self, EulerEvaluator, TruncationPolicy};
use selvar_core::hardy_littlewood::{autocorrelation, SingularSeries};
use selvar_core::registry::LFunctionDescriptor;
use selvar_core::selftest::quadrature_variance;
use selvar_core::tauberian;
use selvar_core::variance::{self, WindowKind};
use selvar_core::zeros::{self, ZeroList};
use selvar_core::{EULER_GAMMA, LOG_2PI};

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("workspace root")
}

fn cache_dir() -> PathBuf {
    workspace_root().join("data/cache")
}

fn report(criterion: u32, name: &str, detail: &str) {
    println!("acceptance criterion {criterion} ({name}): PASS — {detail}");
}

/// Least-squares fit y = slope * x + intercept.
fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - xm) * (x - xm);
        sxy += (x - xm) * (y - ym);
    }
    let slope = sxy / sxx;
    (slope, ym - slope * xm)
}

fn zeta_table() -> Arc<CoefficientTable> {
    static T: OnceLock<Arc<CoefficientTable>> = OnceLock::new();
    T.get_or_init(|| Arc::new(coeffs::von_mangoldt_sieve(1_580_000).expect("zeta table")))
        .clone()
}

fn degree_two_table(which: &str) -> Arc<CoefficientTable> {
    static DELTA: OnceLock<Arc<CoefficientTable>> = OnceLock::new();
    static EC: OnceLock<Arc<CoefficientTable>> = OnceLock::new();
    let n = 1_230_000u64;
    let build = |desc: LFunctionDescriptor| {
        let t0 = Instant::now();
        let primes = selvar_core::cache::load_or_build(&cache_dir(), &desc.name, n, || {
            coeffs::prime_coefficients(&desc, n)
        })
        .expect("prime coefficients");
        let secs = t0.elapsed().as_secs_f64();
        // criterion 2 runtime target: first build under 30 minutes, cached after
        assert!(secs < 1800.0, "{} coefficients took {secs:.0}s", desc.name);
        Arc::new(coeffs::lambda_table_from(&desc, &primes, n).expect("lambda table"))
    };
    match which {
        "delta" => DELTA
            .get_or_init(|| build(LFunctionDescriptor::ramanujan_delta()))
            .clone(),
        "ec37" => EC
            .get_or_init(|| build(LFunctionDescriptor::curve_37a()))
            .clone(),
        _ => unreachable!(),
    }
}

fn zeta_zeros() -> Arc<ZeroList> {
    static Z: OnceLock<Arc<ZeroList>> = OnceLock::new();
    Z.get_or_init(|| {
        let path = std::env::var_os("SELVAR_ZETA_ZEROS")
            .map(PathBuf::from)
            .unwrap_or_else(|| workspace_root().join("data/zeta_zeros_10k.txt"));
        if !path.exists() {
            let script = workspace_root().join("tools/gen_zeta_zeros.py");
            eprintln!(
                "zero list {} not found; generating with {} (takes a few minutes)",
                path.display(),
                script.display()
            );
            let status = std::process::Command::new("python3")
                .arg(&script)
                .arg("10000")
                .arg(&path)
                .status()
                .expect(
                    "python3 with numpy+mpmath is needed to generate the zero list; \
                         alternatively point SELVAR_ZETA_ZEROS at a file with the first \
                         10^4 ordinates or download one with `selvar fetch-zeros`",
                );
            assert!(status.success(), "zero generation failed");
        }
        let list = ZeroList::load(&path, true).expect("parse zero list");
        assert!(
            list.len() >= 10_000,
            "need at least 10^4 zeros, found {}",
            list.len()
        );
        Arc::new(list)
    })
    .clone()
}

fn zeta_line_fit(x: f64, table: &CoefficientTable) -> (f64, f64, f64) {
    let t0 = Instant::now();
    let logs: Vec<f64> = (0..25).map(|i| 3.0 + 7.0 * i as f64 / 24.0).collect();
    let widths: Vec<f64> = logs.iter().map(|lg| x / lg.exp()).collect();
    let curve = variance::variance_curve(table, x, &widths, WindowKind::Additive).expect("curve");
    let xs: Vec<f64> = curve.points.iter().map(|p| p.log_x_over_h()).collect();
    let ys: Vec<f64> = curve.points.iter().map(|p| p.normalized).collect();
    let (slope, intercept) = linear_fit(&xs, &ys);
    (slope, intercept, t0.elapsed().as_secs_f64())
}

#[test]
fn criterion_1_zeta_variance_slope_and_intercept() {
    let table = zeta_table();
    let x = 1.5e6;
    // pinned single-point check first: at h = X/e^5 the normalized variance
    // is within 15% of 5 - gamma0 - log 2pi
    let point = variance::v_tilde(&table, x, x / 5f64.exp()).expect("v_tilde");
    let want_point = 5.0 - EULER_GAMMA - LOG_2PI;
    assert!(
        (point.normalized - want_point).abs() <= 0.15 * want_point,
        "normalized {:.4} vs {want_point:.4} +- 15%",
        point.normalized
    );
    let (slope, intercept, secs) = zeta_line_fit(x, &table);
    let want_intercept = -(EULER_GAMMA + LOG_2PI);
    println!(
        "criterion 1 at the pinned X = 1.5e6: slope {slope:.4} (band 1 +- 0.05), \
         intercept {intercept:.4} (band {want_intercept:.4} +- 0.3), {secs:.1}s"
    );
    // companion fit at the unscaled figure parameters (X = 1.5e7), where the
    // finite-size corrections at the h = X/e^3 end are smaller
    let big = coeffs::von_mangoldt_sieve(15_800_000).expect("sieve to 1.58e7");
    let (slope7, intercept7, secs7) = zeta_line_fit(1.5e7, &big);
    drop(big);
    println!(
        "criterion 1 companion at X = 1.5e7: slope {slope7:.4}, intercept {intercept7:.4}, {secs7:.1}s"
    );
    assert!(
        secs < 300.0,
        "criterion 1 took {secs:.0}s, target 5 minutes"
    );
    assert!(
        (slope - 1.0).abs() <= 0.05,
        "slope {slope:.4} outside 1 +- 0.05"
    );
    assert!(
        (slope7 - 1.0).abs() <= 0.05 && (intercept7 - want_intercept).abs() <= 0.3,
        "X = 1.5e7 companion off its bands: slope {slope7:.4}, intercept {intercept7:.4}"
    );
    // The exact integral (validated to 8e-13 against an independent
    // correlation-sum oracle and to 1e-9 against quadrature) carries genuine
    // secondary terms of relative size ~(h/X)^c at the wide end h = X/e^3;
    // at X = 1.5e6 they push the fitted intercept ~0.02 past the stated
    // band even though the X = 1.5e7 fit above sits comfortably inside it.
    // The assertion is kept as stated rather than widened.
    assert!(
        (intercept - want_intercept).abs() <= 0.3,
        "intercept {intercept:.4} outside {want_intercept:.4} +- 0.3 at the pinned X = 1.5e6 \
         (slope band passes; the same statistic at X = 1.5e7 gives slope {slope7:.4}, \
         intercept {intercept7:.4}, inside both bands)"
    );
    report(
        1,
        "zeta variance line",
        &format!(
            "slope {slope:.4} (want 1 +- 0.05), intercept {intercept:.4} (want {want_intercept:.4} +- 0.3), {secs:.1}s"
        ),
    );
}

#[test]
fn criterion_2_degree_two_regimes() {
    let x = 1e6f64;
    let lx = x.ln();
    // grid: the full admissible range of window lengths, h = 1 (the
    // definition's floor) up to X/e^3 (the wide end used for the zeta line,
    // where the regime-I main term is positive for both conductors), with
    // the same 25-point count as criterion 1
    let logs: Vec<f64> = (0..25)
        .map(|i| 3.0 + (lx - 3.0) * i as f64 / 24.0)
        .collect();
    let widths: Vec<f64> = logs.iter().map(|lg| x / lg.exp()).collect();
    for name in ["delta", "ec37"] {
        let table = degree_two_table(name);
        let curve =
            variance::variance_curve(&table, x, &widths, WindowKind::Additive).expect("curve");

        // narrow windows: log(X/h) >= 0.55 log X, flat at log X - (3+8log2)/6
        let flat: Vec<&variance::VarianceResult> = curve
            .points
            .iter()
            .filter(|p| p.log_x_over_h() >= 0.55 * lx)
            .collect();
        assert!(
            flat.len() >= 5,
            "{name}: only {} flat-side points",
            flat.len()
        );
        let xs: Vec<f64> = flat.iter().map(|p| p.log_x_over_h()).collect();
        let ys: Vec<f64> = flat.iter().map(|p| p.normalized).collect();
        let (s_flat, _) = linear_fit(&xs, &ys);
        let level = ys.iter().sum::<f64>() / ys.len() as f64;
        let want_level = lx - (3.0 + 8.0 * 2.0f64.ln()) / 6.0;
        assert!(s_flat.abs() <= 0.25, "{name}: flat-side slope {s_flat:.4}");
        assert!(
            (level - want_level).abs() <= 0.15 * want_level,
            "{name}: level {level:.4} vs {want_level:.4} +- 15%"
        );

        // wide windows: log(X/h) <= 0.45 log X, slope d = 2
        let steep: Vec<&variance::VarianceResult> = curve
            .points
            .iter()
            .filter(|p| p.log_x_over_h() <= 0.45 * lx)
            .collect();
        assert!(
            steep.len() >= 5,
            "{name}: only {} wide-side points",
            steep.len()
        );
        let xs: Vec<f64> = steep.iter().map(|p| p.log_x_over_h()).collect();
        let ys: Vec<f64> = steep.iter().map(|p| p.normalized).collect();
        let (s_steep, _) = linear_fit(&xs, &ys);
        assert!(
            (s_steep - 2.0).abs() <= 0.35,
            "{name}: wide-side slope {s_steep:.4} outside 2 +- 0.35"
        );
        report(
            2,
            "degree-2 regimes",
            &format!(
                "{name}: flat slope {s_flat:.3}, level {level:.3} (want {want_level:.3}), wide slope {s_steep:.3}"
            ),
        );
    }
}

#[test]
fn criterion_3_variance_oracle_equivalence() {
    let zeta = zeta_table();
    let delta_small =
        coeffs::lambda_table(&LFunctionDescriptor::ramanujan_delta(), 2200).expect("delta table");
    let ec_small = coeffs::lambda_table(&LFunctionDescriptor::curve_37a(), 2200).expect("ec table");
    let tables: [&CoefficientTable; 3] = [&zeta, &delta_small, &ec_small];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let mut worst: f64 = 0.0;
    for i in 0..60 {
        let table = tables[i % 3];
        let x = rng.gen_range(40.0..1000.0);
        let (fast, slow) = if i % 2 == 0 {
            let h = rng.gen_range(1.0..x / 3.0);
            (
                variance::v_tilde(table, x, h).expect("v_tilde").value,
                quadrature_variance(table, x, h, WindowKind::Additive).expect("oracle"),
            )
        } else {
            let d = rng.gen_range(1e-3..0.9);
            (
                variance::v_delta(table, x, d).expect("v_delta").value,
                quadrature_variance(table, x, d, WindowKind::Multiplicative).expect("oracle"),
            )
        };
        let rel = (fast - slow).abs() / slow.abs().max(1e-12);
        worst = worst.max(rel);
        assert!(rel <= 1e-9, "instance {i}: rel diff {rel:.2e}");
    }
    report(
        3,
        "piecewise vs quadrature",
        &format!("60 instances, worst rel diff {worst:.2e}"),
    );
}

#[test]
fn criterion_4_euler_product_identities() {
    let policy = TruncationPolicy {
        prime_cutoff: 50_000,
        ..Default::default()
    };
    let descs = [
        LFunctionDescriptor::zeta(),
        LFunctionDescriptor::ramanujan_delta(),
        LFunctionDescriptor::curve_37a(),
    ];
    let mut details = Vec::new();
    for desc in &descs {
        let primes = match &desc.source {
            selvar_core::registry::CoefficientSource::RiemannZeta => {
                coeffs::prime_coefficients(desc, policy.prime_cutoff).unwrap()
            }
            _ => selvar_core::cache::load_or_build(
                &cache_dir(),
                &desc.name,
                policy.prime_cutoff,
                || coeffs::prime_coefficients(desc, policy.prime_cutoff),
            )
            .unwrap(),
        };
        let ev = EulerEvaluator::with_table(desc, policy, primes);
        let a0 = ev.a_f(Complex64::new(0.0, 0.0)).unwrap().value;
        assert!(
            (a0 - Complex64::new(1.0, 0.0)).norm() <= 1e-8,
            "{}: A(0) = {a0}",
            desc.name
        );
        let d0 = euler::a_f_derivative_at_zero(&ev, 1e-3);
        assert!(d0.norm() <= 1e-6, "{}: A'(0) = {d0}", desc.name);
        details.push(format!(
            "{}: |A(0)-1| = {:.1e}, |A'(0)| = {:.1e}",
            desc.name,
            (a0 - Complex64::new(1.0, 0.0)).norm(),
            d0.norm()
        ));
    }

    // zeta machinery specializes to the closed forms
    let ev = EulerEvaluator::new(&LFunctionDescriptor::zeta(), policy).unwrap();
    for r in [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.1, 0.0),
        Complex64::new(-0.1, 0.0),
        Complex64::new(0.2, 0.0),
        Complex64::new(-0.2, 0.0),
        Complex64::new(0.0, 0.1),
    ] {
        let a = ev.a_f(r).unwrap().value;
        let want = euler::zeta_a(r, policy.prime_cutoff).unwrap();
        assert!((a - want).norm() <= 1e-6, "A at {r}: {a} vs {want}");
        let b = ev.b_f(r).unwrap().value;
        let want = euler::zeta_b(r, policy.prime_cutoff).unwrap();
        assert!((b - want).norm() <= 1e-6, "B at {r}: {b} vs {want}");
    }
    let (residue, spread) = ev.residue_fxf().unwrap();
    assert!((residue - 1.0).abs() <= 0.02, "zeta residue {residue}");
    report(
        4,
        "euler product identities",
        &format!(
            "{}; specializations to 1e-6; residue {residue:.4} (spread {spread:.1e})",
            details.join("; ")
        ),
    );
}

#[test]
fn criterion_5_zero_statistics() {
    // banded sums match the naive double loop on 10^3-zero lists
    let naive = |signed: &[f64], x: f64, w: &dyn Fn(f64) -> f64| -> f64 {
        let lx = x.ln();
        let mut acc = selvar_core::KahanSum::new();
        for &a in signed {
            for &b in signed {
                acc.add(((a - b) * lx).cos() * w(a - b));
            }
        }
        acc.value()
    };
    for seed in [5u64, 6] {
        let list = zeros::synth_uniform(650.0, 1000, seed, false);
        let signed = list.signed_in_window(650.0);
        let f = zeros::f_statistic(&list, 29.0, 650.0).unwrap();
        let fn_ = naive(&signed, 29.0, &|u| 4.0 / (4.0 + u * u));
        assert!(
            (f - fn_).abs() <= 1e-12 * fn_.abs(),
            "poisson {seed}: {f} vs {fn_}"
        );
        let g = zeros::f_tilde(&list, 29.0, 650.0).unwrap();
        let gn = naive(&signed, 29.0, &|u| (-u * u).exp());
        assert!(
            (g - gn).abs() <= 1e-12 * gn.abs().max(1.0),
            "gauss {seed}: {g} vs {gn}"
        );
    }

    // positive semidefiniteness of the smoothed form factor
    for seed in 0..200u64 {
        let list = zeros::synth_uniform(90.0, 150, seed, seed % 3 == 0);
        let v = zeros::f_tilde(&list, 2.0 + (seed % 17) as f64, 90.0).unwrap();
        assert!(v >= -1e-9, "seed {seed}: {v}");
    }

    // real zeta zeros against the pair-correlation main term
    let list = zeta_zeros();
    let t = list.max_ordinate().unwrap();
    let x = t;
    let f = zeros::f_statistic(&list, x, t).unwrap();
    let want = t * x.ln() / std::f64::consts::PI;
    let ratio = f / want;
    // X = T sits exactly at the saturation boundary X = T^{d}; the refined
    // main term there is (T/pi)(log(T/2pi) - 1), which carries the known
    // -(1 + log 2pi) correction relative to T log X / pi — 31% at this
    // height. Print the refined comparison before the stated assertion.
    let pi = std::f64::consts::PI;
    let refined = t / pi * ((t / (2.0 * pi)).ln() - 1.0);
    println!(
        "criterion 5: F({x:.1}, {t:.1}) = {f:.1}; plain T log X/pi = {want:.1} (ratio {ratio:.3}); \
         saturated refinement {refined:.1} (ratio {:.3})",
        f / refined
    );
    assert!(
        (ratio - 1.0).abs() <= 0.25,
        "F({x:.1}, {t:.1}) = {f:.1} vs T log X/pi = {want:.1}: ratio {ratio:.3} outside 25% \
         (the same data sits within {:.1}% of the refined saturated main term {refined:.1}, \
         whose known lower-order correction -(1+log 2pi)d/log T is 31% at this height)",
        (f / refined - 1.0).abs() * 100.0
    );
    report(
        5,
        "zero statistics",
        &format!(
            "oracle match 1e-12; 200 seeded lists nonnegative; F/T log X over pi = {ratio:.3}"
        ),
    );
}

#[test]
fn criterion_6_explicit_formula_residuals() {
    let list = zeta_zeros();
    let z = list.max_ordinate().unwrap();
    let table = zeta_table();
    // the pinned spot check first: x = 1000.5, delta = 0.05
    let r = zeros::explicit_formula_residual(&table, &list, 1000.5, 0.05, z).unwrap();
    assert!(
        r.residual.abs() <= 20.0 * r.envelope,
        "pinned point: |{:.4}| > 20 * {:.4}",
        r.residual,
        r.envelope
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0f0);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let x = rng.gen_range(50.0..1e4);
        let delta = rng.gen_range(0.01..0.2);
        let r = zeros::explicit_formula_residual(&table, &list, x, delta, z).unwrap();
        let ratio = r.residual.abs() / r.envelope;
        worst = worst.max(ratio);
        assert!(
            r.residual.abs() <= 20.0 * r.envelope,
            "instance {i} (x={x:.2}, delta={delta:.4}): |{:.3}| > 20 * {:.3}",
            r.residual,
            r.envelope
        );
    }
    report(
        6,
        "explicit formula residuals",
        &format!("50 instances, worst |residual|/envelope = {worst:.3} (bound 20)"),
    );
}

#[test]
fn criterion_7_tauberian_suite() {
    // Fejer functional: constant, cosine transform, log asymptotic
    let kappa = 0.5;
    let tab = tauberian::Tabulated::even_from_fn(|_| 1.0, 3000.0 / kappa, 30_000, 0.1);
    let r = tauberian::fejer_functional(&tab, kappa, 2e-3).unwrap();
    assert!((r.value - std::f64::consts::PI * kappa).abs() <= r.tail_bound + 1e-5);

    for (a, want) in [(0.3, std::f64::consts::PI * (kappa - 0.15)), (1.4, 0.0)] {
        let tab =
            tauberian::Tabulated::even_from_fn(move |u| (a * u).cos(), 3000.0 / kappa, 60_000, 0.1);
        let r = tauberian::fejer_functional(&tab, kappa, 2e-3).unwrap();
        assert!(
            (r.value - want).abs() <= r.tail_bound + 2e-3,
            "cos({a} u): {} vs {want}",
            r.value
        );
    }

    let b = 1.0 - EULER_GAMMA - 2.0f64.ln();
    for kappa in [1e-2, 1e-3] {
        let tab = tauberian::Tabulated::even_from_fn(
            |u: f64| 0.5 * (2.0 + u.abs()).ln(),
            3000.0 / kappa,
            30_000,
            0.1,
        );
        let r = tauberian::fejer_functional(&tab, kappa, 1e-3).unwrap();
        let want = 0.5 * std::f64::consts::PI * kappa * ((1.0 / kappa).ln() + b);
        let tol = 0.05 * kappa * (1.0 / kappa).ln();
        assert!(
            (r.value - want).abs() <= tol,
            "kappa={kappa}: {} vs {want} (tol {tol:.2e})",
            r.value
        );
    }

    // window kernel: point values, continuity, transform identity, envelope
    let eta = 0.5;
    assert!((tauberian::k_eta(0.0, eta) - 2.5).abs() < 1e-12);
    assert_eq!(tauberian::k_eta_hat(0.5, eta), 1.0);
    assert_eq!(tauberian::k_eta_hat(1.5, eta), 0.0);
    assert!((tauberian::k_eta_hat(1.25, eta) - 0.5).abs() < 1e-12);
    for t in [1.0, 1.0 + eta] {
        let gap = (tauberian::k_eta_hat(t - 1e-9, eta) - tauberian::k_eta_hat(t + 1e-9, eta)).abs();
        assert!(gap < 1e-7, "discontinuity {gap} at t={t}");
    }
    for t in [0.5, 2.0, 1.25] {
        let diff = tauberian::lemma2_transform_identity(eta, t).unwrap();
        assert!(diff.abs() <= 1e-4, "t={t}: {diff}");
    }

    // exponential-weight averaging: exact 3/2, decaying case, violated case
    let y = 30.0;
    let tab = tauberian::Tabulated::from_fn(|_| 1.0, y - 45.0, y + 45.0, 4096, false, 0.0);
    let (dev, conclusion) = tauberian::lemma3_check(&tab, y).unwrap();
    assert!(dev < 1e-10);
    assert!(
        (conclusion - 1.5).abs() < 1e-12,
        "trivial case conclusion {conclusion}"
    );
    let tab = tauberian::Tabulated::from_fn(
        |t: f64| 1.0 + (-t).exp(),
        y - 45.0,
        y + 45.0,
        8192,
        false,
        0.1,
    );
    let (dev, conclusion) = tauberian::lemma3_check(&tab, y).unwrap();
    assert!(dev <= 1.2 * (4.0 / 3.0) * (-y).exp() + 1e-12);
    assert!((conclusion - 1.5 - (-y).exp()).abs() < 1e-6);
    let tab = tauberian::Tabulated::from_fn(|_| 0.0, y - 45.0, y + 45.0, 1024, false, 0.0);
    let (dev, conclusion) = tauberian::lemma3_check(&tab, y).unwrap();
    assert!((dev - 1.0).abs() < 1e-12 && conclusion == 0.0);

    report(
        7,
        "tauberian suite",
        "Fejer, window-kernel and exp-weight checks at stated tolerances",
    );
}

/// The Poisson-kernel integral identity on real data: I(X, T) tracks
/// (pi/2) F(X, T) within the stated polylog envelope.
#[test]
fn i_integral_identity_on_real_zeros() {
    let list = zeta_zeros();
    let t = 150.0;
    let z = 300.0;
    let x = 120.0;
    let i = zeros::i_integral(&list, x, t, z).unwrap();
    let f = zeros::f_statistic(&list, x, t).unwrap();
    let gap = (i - std::f64::consts::FRAC_PI_2 * f).abs();
    let bound = 10.0 * t.ln().powi(3);
    assert!(gap <= bound, "|I - (pi/2) F| = {gap:.2} > {bound:.2}");
    println!("companion identity: |I - (pi/2)F| = {gap:.3} (bound {bound:.1})");
}

/// Companion invariants at full scale (not numbered criteria): the prime
/// number theorem band for zeta, the square-root-cancellation band for the
/// pole-free built-ins, and the orthogonality sum against log log x.
#[test]
fn psi_growth_bounds() {
    let big = coeffs::von_mangoldt_sieve(10_000_000).expect("sieve to 1e7");
    for x in [1e4, 1e5, 1e6, 1e7] {
        let r = big.psi(x) / x;
        assert!((0.9..=1.1).contains(&r), "psi({x})/x = {r}");
    }
    drop(big);
    for name in ["delta", "ec37"] {
        let table = degree_two_table(name);
        for x in [1e3f64, 1e4, 1e5, 1e6] {
            let bound = x.powf(0.75);
            let v = table.psi(x).abs();
            assert!(v <= bound, "{name}: |psi({x})| = {v:.2} > {bound:.2}");
        }
    }
    let delta_primes = selvar_core::cache::load_or_build(&cache_dir(), "delta", 100_000, || {
        coeffs::prime_coefficients(&LFunctionDescriptor::ramanujan_delta(), 100_000)
    })
    .unwrap();
    let s = delta_primes.orthogonality_sum(1e5).unwrap();
    let target = (1e5f64).ln().ln();
    assert!(
        (s - target).abs() <= 1.5,
        "delta orthogonality sum {s:.4} vs log log 1e5 = {target:.4}"
    );
    println!(
        "companion invariants (psi growth bounds): PASS — PNT band, x^0.75 band, delta S(1e5) = {s:.3} vs {target:.3}"
    );
}

#[test]
fn criterion_8_hardy_littlewood() {
    let series = SingularSeries::new(1_000_000).unwrap();
    let s3 = series.eval(3).unwrap().value;
    assert_eq!(s3, 0.0, "S(3) must be exactly zero");
    let s2 = series.eval(2).unwrap().value;
    let s6 = series.eval(6).unwrap().value;
    assert!((s6 / s2 - 2.0).abs() <= 1e-12, "S(6)/S(2) = {}", s6 / s2);

    let x = 1_000_000u64;
    let zeta = zeta_table();
    let auto = autocorrelation(&zeta, x, 2).unwrap();
    let ratio = auto / (s2 * x as f64);
    assert!(
        (0.9..=1.1).contains(&ratio),
        "zeta autocorrelation ratio {ratio:.4}"
    );

    let delta = degree_two_table("delta");
    let auto_delta = autocorrelation(&delta, x, 2).unwrap();
    assert!(
        auto_delta.abs() <= 0.05 * x as f64,
        "delta autocorrelation {auto_delta:.1} not o(X)-small"
    );
    report(
        8,
        "hardy-littlewood",
        &format!(
            "S(3) = 0, S(6)/S(2) = 2, zeta ratio {ratio:.4}, delta/X = {:.2e}",
            auto_delta / x as f64
        ),
    );
}
