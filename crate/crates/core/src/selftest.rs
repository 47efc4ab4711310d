//! Built-in oracle suite: every operation with an independently computable
//! expected value is rechecked here at runtime. The CLI exposes this as the
//! `selftest` subcommand; the checks are intentionally small enough to run in
//! seconds while still exercising independent computational routes
//! (quadrature against closed-form sweeps, naive double loops against banded
//! sums, series expansions against recurrences).

use num_complex::Complex64;

use crate::coeffs::{self, LocalFactor};
use crate::error::Result;
use crate::euler::{self, EulerEvaluator, TruncationPolicy};
use crate::hardy_littlewood::SingularSeries;
use crate::predictions;
use crate::quad;
use crate::registry::LFunctionDescriptor;
use crate::tauberian;
use crate::variance::{self, WindowKind};
use crate::zeros::{self, ZeroList};
use crate::{kahan::KahanSum, EULER_GAMMA, LOG_2PI};

/// Outcome of one oracle check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Quadrature oracle for the variance integrals: integrates the squared
/// integrand directly (pointwise psi lookups at Gauss nodes) over panels
/// split at every breakpoint. Shares nothing with the closed-form sweep in
/// `variance` beyond the coefficient table itself.
pub fn quadrature_variance(
    table: &coeffs::CoefficientTable,
    x: f64,
    width: f64,
    kind: WindowKind,
) -> Result<f64> {
    let m = table.pole_order as f64;
    let mut breaks: Vec<f64> = Vec::new();
    let mut n = 2u64;
    while (n as f64) < x {
        breaks.push(n as f64);
        n += 1;
    }
    match kind {
        WindowKind::Additive => {
            let h = width;
            let lo = (1.0 + h).floor() as u64 + 1;
            let hi = (x + h).ceil() as u64;
            breaks.extend(
                (lo..=hi)
                    .map(|k| k as f64 - h)
                    .filter(|v| *v > 1.0 && *v < x),
            );
            let f = |u: f64| {
                let d = table.psi(u + h) - table.psi(u) - m * h;
                d * d
            };
            Ok(quad::integrate_with_breakpoints(f, 1.0, x, &breaks, 1e-12, 0.0)?.value)
        }
        WindowKind::Multiplicative => {
            let delta = width;
            let scale = 1.0 + delta;
            let lo = scale.floor() as u64 + 1;
            let hi = (x * scale).ceil() as u64;
            breaks.extend(
                (lo..=hi)
                    .map(|k| k as f64 / scale)
                    .filter(|v| *v > 1.0 && *v < x),
            );
            let f = |u: f64| {
                let d = table.psi(u * scale) - table.psi(u) - m * delta * u;
                d * d
            };
            Ok(quad::integrate_with_breakpoints(f, 1.0, x, &breaks, 1e-12, 0.0)?.value)
        }
    }
}

type CheckFn = Box<dyn FnOnce() -> std::result::Result<String, String>>;

fn rel_close(got: f64, want: f64, tol: f64) -> std::result::Result<String, String> {
    let denom = want.abs().max(1e-300);
    if (got - want).abs() / denom <= tol {
        Ok(format!("{got:.12e} vs {want:.12e}"))
    } else {
        Err(format!("{got:.12e} vs {want:.12e} (rel tol {tol:.1e})"))
    }
}

fn abs_close(got: f64, want: f64, tol: f64) -> std::result::Result<String, String> {
    if (got - want).abs() <= tol {
        Ok(format!("{got:.12e} vs {want:.12e}"))
    } else {
        Err(format!("{got:.12e} vs {want:.12e} (abs tol {tol:.1e})"))
    }
}

/// Run the oracle suite; `fast` skips the few checks that take more than
/// ~half a second each.
pub fn run(fast: bool) -> Vec<Check> {
    let mut suite: Vec<(&'static str, bool, CheckFn)> = Vec::new();
    let mut add = |name: &'static str, heavy: bool, f: CheckFn| suite.push((name, heavy, f));

    add(
        "kahan_exact_integer_sum",
        false,
        Box::new(|| {
            let n = 1_000_000u64;
            let got = KahanSum::sum_iter((1..=n).map(|i| i as f64));
            abs_close(got, (n * (n + 1) / 2) as f64, 0.0)
        }),
    );

    add(
        "quadrature_polynomial_exactness",
        false,
        Box::new(|| {
            let r =
                quad::integrate(|x| x.powi(6), 0.0, 2.0, 1e-13, 0.0).map_err(|e| e.to_string())?;
            abs_close(r.value, 128.0 / 7.0, 1e-10)
        }),
    );

    add(
        "psi_of_ten",
        false,
        Box::new(|| {
            let t = coeffs::von_mangoldt_sieve(16).map_err(|e| e.to_string())?;
            let want = 3.0 * 2.0f64.ln() + 2.0 * 3.0f64.ln() + 5.0f64.ln() + 7.0f64.ln();
            abs_close(t.psi(10.0), want, 1e-12)
        }),
    );

    add(
        "tau_expansion_first_terms",
        false,
        Box::new(|| {
            let t = coeffs::tau::tau_table(16);
            if t[1] == -24 && t[3] == -1472 && t[3] == t[1] * t[1] - (2i128).pow(11) {
                Ok("tau(2) = -24, Hecke at 4".into())
            } else {
                Err(format!("tau table head {:?}", &t[..4]))
            }
        }),
    );

    add(
        "curve37_point_counts",
        false,
        Box::new(|| {
            let t = coeffs::prime_coefficients(&LFunctionDescriptor::curve_37a(), 50)
                .map_err(|e| e.to_string())?;
            let a2 = t.get(2).unwrap().a * 2.0f64.sqrt();
            let e37 = t.get(37).unwrap();
            let a37 = e37.a * 37.0f64.sqrt();
            if (a2 + 2.0).abs() < 1e-12 && (a37 + 1.0).abs() < 1e-9 && e37.bad {
                Ok("a_2 = -2, a_37 = -1 (bad)".into())
            } else {
                Err(format!("a_2*sqrt2 = {a2}, a_37*sqrt37 = {a37}"))
            }
        }),
    );

    add(
        "satake_power_series_match",
        false,
        Box::new(|| {
            let a = -0.53033;
            abs_close(
                coeffs::satake_power(a, 2, LocalFactor::Quadratic),
                a * a - 2.0,
                1e-15,
            )
        }),
    );

    add(
        "zeta_lambda_equals_sieve",
        false,
        Box::new(|| {
            let s = coeffs::von_mangoldt_sieve(2000).map_err(|e| e.to_string())?;
            let l = coeffs::lambda_table(&LFunctionDescriptor::zeta(), 2000)
                .map_err(|e| e.to_string())?;
            for n in 1..=2000u64 {
                if s.lambda_at(n).to_bits() != l.lambda_at(n).to_bits() {
                    return Err(format!("mismatch at n = {n}"));
                }
            }
            Ok("bitwise identical to n = 2000".into())
        }),
    );

    add(
        "orthogonality_sum_zeta_100",
        false,
        Box::new(|| {
            let t = coeffs::prime_coefficients(&LFunctionDescriptor::zeta(), 100)
                .map_err(|e| e.to_string())?;
            rel_close(
                t.orthogonality_sum(100.0).map_err(|e| e.to_string())?,
                1.8028171,
                1e-5,
            )
        }),
    );

    add(
        "variance_additive_vs_quadrature",
        false,
        Box::new(|| {
            let t = coeffs::von_mangoldt_sieve(1200).map_err(|e| e.to_string())?;
            for (x, h) in [(500.0, 9.25), (900.0, 100.5), (1000.0, 1.0)] {
                let fast = variance::v_tilde(&t, x, h)
                    .map_err(|e| e.to_string())?
                    .value;
                let slow = quadrature_variance(&t, x, h, WindowKind::Additive)
                    .map_err(|e| e.to_string())?;
                rel_close(fast, slow, 1e-9)?;
            }
            Ok("3 instances to 1e-9".into())
        }),
    );

    add(
        "variance_scaled_vs_quadrature",
        false,
        Box::new(|| {
            let t = coeffs::von_mangoldt_sieve(1200).map_err(|e| e.to_string())?;
            for (x, d) in [(500.0, 0.1), (999.0, 0.2)] {
                let fast = variance::v_delta(&t, x, d)
                    .map_err(|e| e.to_string())?
                    .value;
                let slow = quadrature_variance(&t, x, d, WindowKind::Multiplicative)
                    .map_err(|e| e.to_string())?;
                rel_close(fast, slow, 1e-9)?;
            }
            Ok("2 instances to 1e-9".into())
        }),
    );

    add(
        "singular_series_values",
        false,
        Box::new(|| {
            let s = SingularSeries::new(100_000).map_err(|e| e.to_string())?;
            if s.eval(3).map_err(|e| e.to_string())?.value != 0.0 {
                return Err("S(3) != 0".into());
            }
            let s2 = s.eval(2).map_err(|e| e.to_string())?.value;
            let s6 = s.eval(6).map_err(|e| e.to_string())?.value;
            abs_close(s6 / s2, 2.0, 1e-12)?;
            rel_close(s2, 1.3203236316, 1e-4)
        }),
    );

    add(
        "autocorrelation_at_twenty",
        false,
        Box::new(|| {
            let t = coeffs::von_mangoldt_sieve(32).map_err(|e| e.to_string())?;
            let got =
                crate::hardy_littlewood::autocorrelation(&t, 20, 2).map_err(|e| e.to_string())?;
            rel_close(got, 24.645, 1e-3)
        }),
    );

    add(
        "prediction_examples",
        false,
        Box::new(|| {
            let z = LFunctionDescriptor::zeta();
            let p = predictions::predict_v_tilde(&z, 10f64.exp(), 3f64.exp())
                .map_err(|e| e.to_string())?;
            abs_close(p.normalized, 7.0 - EULER_GAMMA - LOG_2PI, 1e-12)?;
            let gap_want = 2.0 * (EULER_GAMMA + LOG_2PI) - (3.0 + 8.0 * 2.0f64.ln()) / 6.0;
            let d = LFunctionDescriptor::ramanujan_delta();
            let x = 1e8;
            let hstar = predictions::regime_boundary(&d, x).unwrap();
            let one = predictions::predict_v_tilde(&d, x, hstar).map_err(|e| e.to_string())?;
            let two = predictions::predict_v_tilde(&d, x, hstar * (1.0 - 1e-12))
                .map_err(|e| e.to_string())?;
            abs_close(
                (one.normalized - two.normalized).abs(),
                gap_want.abs(),
                1e-10,
            )
        }),
    );

    add(
        "tensor_square_zeta_at_two",
        true,
        Box::new(|| {
            let ev = EulerEvaluator::new(
                &LFunctionDescriptor::zeta(),
                TruncationPolicy {
                    prime_cutoff: 50_000,
                    ..Default::default()
                },
            )
            .map_err(|e| e.to_string())?;
            let v = ev
                .tensor_fxf(Complex64::new(2.0, 0.0))
                .map_err(|e| e.to_string())?;
            rel_close(v.value.re, std::f64::consts::PI.powi(2) / 6.0, 1e-4)
        }),
    );

    add(
        "arithmetic_factor_normalization",
        false,
        Box::new(|| {
            for desc in [
                LFunctionDescriptor::zeta(),
                LFunctionDescriptor::ramanujan_delta(),
                LFunctionDescriptor::curve_37a(),
            ] {
                let ev = EulerEvaluator::new(
                    &desc,
                    TruncationPolicy {
                        prime_cutoff: 5_000,
                        ..Default::default()
                    },
                )
                .map_err(|e| e.to_string())?;
                let v = ev
                    .a_f(Complex64::new(0.0, 0.0))
                    .map_err(|e| e.to_string())?
                    .value;
                if (v - Complex64::new(1.0, 0.0)).norm() > 1e-9 {
                    return Err(format!("{}: A(0) = {v}", desc.name));
                }
            }
            Ok("A(0) = 1 for all built-ins".into())
        }),
    );

    add(
        "zeta_closed_form_specialization",
        true,
        Box::new(|| {
            let ev = EulerEvaluator::new(
                &LFunctionDescriptor::zeta(),
                TruncationPolicy {
                    prime_cutoff: 20_000,
                    ..Default::default()
                },
            )
            .map_err(|e| e.to_string())?;
            let r = Complex64::new(0.1, 0.0);
            let a = ev.a_f(r).map_err(|e| e.to_string())?.value;
            let want = euler::zeta_a(r, 20_000).map_err(|e| e.to_string())?;
            abs_close((a - want).norm(), 0.0, 1e-7)?;
            let b = ev.b_f(r).map_err(|e| e.to_string())?.value;
            let want_b = euler::zeta_b(r, 20_000).map_err(|e| e.to_string())?;
            abs_close((b - want_b).norm(), 0.0, 1e-7)
        }),
    );

    add(
        "tensor_residue_zeta",
        true,
        Box::new(|| {
            let ev = EulerEvaluator::new(
                &LFunctionDescriptor::zeta(),
                TruncationPolicy {
                    prime_cutoff: 50_000,
                    ..Default::default()
                },
            )
            .map_err(|e| e.to_string())?;
            let (r, spread) = ev.residue_fxf().map_err(|e| e.to_string())?;
            rel_close(r, 1.0, 0.02)?;
            Ok(format!("residue {r:.6} (spread {spread:.2e})"))
        }),
    );

    add(
        "pair_sum_vs_naive_picket",
        false,
        Box::new(|| {
            let z = zeros::synth_picket(0.7, 40, false);
            let signed = z.signed_in_window(100.0);
            let x = 5.0_f64;
            let mut naive = KahanSum::new();
            for &a in &signed {
                for &b in &signed {
                    naive.add(((a - b) * x.ln()).cos() * 4.0 / (4.0 + (a - b) * (a - b)));
                }
            }
            let got = zeros::f_statistic(&z, x, 100.0).map_err(|e| e.to_string())?;
            rel_close(got, naive.value(), 1e-12)
        }),
    );

    add(
        "single_zero_pair_sum",
        false,
        Box::new(|| {
            let g = 2.5;
            let z = ZeroList::new(vec![g], true, "selftest").map_err(|e| e.to_string())?;
            let x: f64 = 12.0;
            let got = zeros::f_statistic(&z, x, 10.0).map_err(|e| e.to_string())?;
            let want = 2.0 + 2.0 * (2.0 * g * x.ln()).cos() * 4.0 / (4.0 + 4.0 * g * g);
            abs_close(got, want, 1e-12)
        }),
    );

    add(
        "gaussian_form_factor_nonnegative",
        false,
        Box::new(|| {
            for seed in 0..20u64 {
                let z = zeros::synth_uniform(60.0, 80, seed, false);
                let v = zeros::f_tilde(&z, 3.0 + seed as f64, 60.0).map_err(|e| e.to_string())?;
                if v < -1e-9 {
                    return Err(format!("seed {seed}: {v}"));
                }
            }
            Ok("20 seeded lists".into())
        }),
    );

    add(
        "poisson_kernel_integral",
        false,
        Box::new(|| {
            let g = 1.5;
            let t = 30.0;
            let z = ZeroList::new(vec![g], false, "selftest").map_err(|e| e.to_string())?;
            let got = zeros::i_integral(&z, 11.0, t, 40.0).map_err(|e| e.to_string())?;
            let anti = |u: f64| 0.5 * (u / (1.0 + u * u) + u.atan());
            rel_close(got, anti(t - g) - anti(-t - g), 1e-6)
        }),
    );

    add(
        "explicit_formula_degenerate_cases",
        false,
        Box::new(|| {
            let t = coeffs::von_mangoldt_sieve(2000).map_err(|e| e.to_string())?;
            let empty = ZeroList::new(vec![], true, "selftest").map_err(|e| e.to_string())?;
            let r = zeros::explicit_formula_residual(&t, &empty, 1000.5, 0.05, 0.0)
                .map_err(|e| e.to_string())?;
            if r.residual != r.lhs {
                return Err("empty zero list must give residual = lhs".into());
            }
            let r = zeros::explicit_formula_residual(&t, &empty, 1000.5, 1e-12, 0.0)
                .map_err(|e| e.to_string())?;
            abs_close(r.lhs, 0.0, 1e-6)
        }),
    );

    add(
        "fejer_constant",
        false,
        Box::new(|| {
            let kappa = 0.5;
            let tab = tauberian::Tabulated::even_from_fn(|_| 1.0, 4000.0, 30_000, 0.1);
            let r = tauberian::fejer_functional(&tab, kappa, 2e-3).map_err(|e| e.to_string())?;
            abs_close(r.value, std::f64::consts::PI * kappa, r.tail_bound + 1e-5)
        }),
    );

    add(
        "window_kernel_point_values",
        false,
        Box::new(|| {
            let eta = 0.5;
            abs_close(tauberian::k_eta(0.0, eta), 2.0 + eta, 1e-12)?;
            abs_close(tauberian::k_eta_hat(1.0 + eta / 2.0, eta), 0.5, 1e-12)
        }),
    );

    add(
        "window_transform_identity",
        true,
        Box::new(|| {
            let d = tauberian::lemma2_transform_identity(0.5, 0.5).map_err(|e| e.to_string())?;
            abs_close(d, 0.0, 1e-4)
        }),
    );

    add(
        "exp_weight_trivial_value",
        false,
        Box::new(|| {
            let y = 30.0;
            let tab = tauberian::Tabulated::from_fn(|_| 1.0, y - 45.0, y + 45.0, 4096, false, 0.0);
            let (dev, conclusion) = tauberian::lemma3_check(&tab, y).map_err(|e| e.to_string())?;
            abs_close(dev, 0.0, 1e-10)?;
            abs_close(conclusion, 1.5, 1e-12)
        }),
    );

    suite
        .into_iter()
        .filter(|(_, heavy, _)| !(fast && *heavy))
        .map(|(name, _, f)| match f() {
            Ok(detail) => Check {
                name: name.into(),
                passed: true,
                detail,
            },
            Err(detail) => Check {
                name: name.into(),
                passed: false,
                detail,
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suite_is_green() {
        let checks = run(true);
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
