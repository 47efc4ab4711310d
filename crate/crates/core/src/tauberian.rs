//! Numeric verification harness for the kernel lemmas behind the
//! variance/pair-correlation equivalences: the Fejer-kernel functional, the
//! compactly-supported window kernel K_eta and its transform identity, and
//! the exponential-weight averaging step.

use crate::error::{Error, Result};
use crate::quad;

/// Kernel selector with its parameter, validated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    Fejer { kappa: f64 },
    WindowPair { eta: f64 },
    ExpWeight { y: f64 },
}

impl KernelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            KernelSpec::Fejer { kappa } if !(kappa > 0.0) => {
                Err(Error::Range("Fejer kernel needs kappa > 0".into()))
            }
            KernelSpec::WindowPair { eta } if !(eta > 0.0) => {
                Err(Error::Range("window kernel needs eta > 0".into()))
            }
            _ => Ok(()),
        }
    }
}

/// A function tabulated on a uniform grid, with optional even extension and a
/// growth envelope |f(u)| <= scale * (1+|u|)^exponent used for tail bounds.
/// Evaluation is Catmull-Rom cubic between samples.
#[derive(Debug, Clone)]
pub struct Tabulated {
    start: f64,
    step: f64,
    values: Vec<f64>,
    even: bool,
    env_scale: f64,
    env_exponent: f64,
}

impl Tabulated {
    pub fn from_fn<F: Fn(f64) -> f64>(
        f: F,
        start: f64,
        end: f64,
        samples: usize,
        even: bool,
        env_exponent: f64,
    ) -> Self {
        assert!(samples >= 4 && end > start);
        let step = (end - start) / (samples - 1) as f64;
        let values: Vec<f64> = (0..samples).map(|i| f(start + i as f64 * step)).collect();
        let env_scale = values
            .iter()
            .zip(0..samples)
            .map(|(y, i)| y.abs() / (1.0 + (start + i as f64 * step).abs()).powf(env_exponent))
            .fold(0.0f64, f64::max);
        Self {
            start,
            step,
            values,
            even,
            env_scale,
            env_exponent,
        }
    }

    /// Even-extended tabulation on [0, u_max].
    pub fn even_from_fn<F: Fn(f64) -> f64>(
        f: F,
        u_max: f64,
        samples: usize,
        env_exponent: f64,
    ) -> Self {
        Self::from_fn(f, 0.0, u_max, samples, true, env_exponent)
    }

    pub fn start(&self) -> f64 {
        if self.even {
            -self.end()
        } else {
            self.start
        }
    }

    pub fn end(&self) -> f64 {
        self.start + self.step * (self.values.len() - 1) as f64
    }

    pub fn envelope(&self, u: f64) -> f64 {
        self.env_scale * (1.0 + u.abs()).powf(self.env_exponent)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = if self.even { x.abs() } else { x };
        let t = (x - self.start) / self.step;
        debug_assert!(
            t > -1e-9 && t < (self.values.len() - 1) as f64 + 1e-9,
            "evaluation at {x} outside tabulated range"
        );
        let n = self.values.len();
        let i = (t.floor() as usize).min(n - 2);
        let u = t - i as f64;
        let y0 = self.values[i.saturating_sub(1)];
        let y1 = self.values[i];
        let y2 = self.values[i + 1];
        let y3 = self.values[(i + 2).min(n - 1)];
        let m1 = 0.5 * (y2 - y0);
        let m2 = 0.5 * (y3 - y1);
        let u2 = u * u;
        let u3 = u2 * u;
        (2.0 * u3 - 3.0 * u2 + 1.0) * y1
            + (u3 - 2.0 * u2 + u) * m1
            + (-2.0 * u3 + 3.0 * u2) * y2
            + (u3 - u2) * m2
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FejerValue {
    pub value: f64,
    /// analytic bound on the discarded |u| > u_max tail
    pub tail_bound: f64,
}

/// I(kappa) = int_{-inf}^{inf} (sin(kappa u)/u)^2 f(u) du for an
/// even-extended tabulated f; the [-U, U] part by adaptive quadrature split
/// at the kernel zeros, the rest bounded via f's growth envelope.
pub fn fejer_functional(f: &Tabulated, kappa: f64, abs_tol: f64) -> Result<FejerValue> {
    KernelSpec::Fejer { kappa }.validate()?;
    if !f.even {
        return Err(Error::Range(
            "Fejer functional needs an even-extended tabulation".into(),
        ));
    }
    let u_max = f.end();
    if u_max < 10.0 / kappa {
        return Err(Error::Range(format!(
            "tabulation range {u_max} shorter than 10/kappa = {}",
            10.0 / kappa
        )));
    }
    // tail: |f(u)| <= c0 (1+u)^eps <= c0 (2u)^eps for u >= 1, and sin^2 <= 1
    let eps = f.env_exponent;
    let tail_bound = if eps >= 1.0 {
        f64::INFINITY
    } else {
        2.0 * f.env_scale * (2.0 * u_max).powf(eps) / (u_max * (1.0 - eps))
    };
    if tail_bound > abs_tol {
        return Err(Error::TailBound {
            bound: tail_bound,
            tol: abs_tol,
        });
    }
    let kernel = |u: f64| {
        let z = kappa * u;
        if z.abs() < 1e-8 {
            kappa * kappa * (1.0 - z * z / 3.0)
        } else {
            let s = z.sin() / u;
            s * s
        }
    };
    let period = std::f64::consts::PI / kappa;
    let splits: Vec<f64> = (1..)
        .map(|j| j as f64 * period)
        .take_while(|v| *v < u_max)
        .collect();
    let r = quad::integrate_with_breakpoints(
        |u| kernel(u) * f.eval(u),
        0.0,
        u_max,
        &splits,
        1e-10,
        abs_tol / 4.0,
    )?;
    Ok(FejerValue {
        value: 2.0 * r.value,
        tail_bound,
    })
}

/// The window kernel
/// K_eta(x) = (sin 2 pi x + sin 2 pi (1+eta) x) / (2 pi x (1 - 4 eta^2 x^2)),
/// evaluated through the sinc factorization
/// K = (2+eta) sinc(pi (2+eta) x) * (pi/2) sinc(pi eta (x0 - x)) / (1 + 2 eta x),
/// x0 = 1/(2 eta), which makes the removable points x = 0 and x = x0 ordinary.
pub fn k_eta(x: f64, eta: f64) -> f64 {
    debug_assert!(eta > 0.0);
    let x = x.abs(); // K is even
    let sinc = |z: f64| {
        if z.abs() < 1e-8 {
            1.0 - z * z / 6.0
        } else {
            z.sin() / z
        }
    };
    let x0 = 0.5 / eta;
    (2.0 + eta)
        * sinc(std::f64::consts::PI * (2.0 + eta) * x)
        * std::f64::consts::FRAC_PI_2
        * sinc(std::f64::consts::PI * eta * (x0 - x))
        / (1.0 + 2.0 * eta * x)
}

/// Fourier transform of K_eta: 1 on |t| <= 1, a raised-cosine rolloff on
/// 1 <= |t| <= 1+eta, 0 beyond.
pub fn k_eta_hat(t: f64, eta: f64) -> f64 {
    debug_assert!(eta > 0.0);
    let a = t.abs();
    if a <= 1.0 {
        1.0
    } else if a < 1.0 + eta {
        let c = (std::f64::consts::PI * (a - 1.0) / (2.0 * eta)).cos();
        c * c
    } else {
        0.0
    }
}

/// Second derivative of K_eta by a 5-point central stencil; h = 2e-3 balances
/// the O(h^4) truncation against roundoff.
fn k_eta_dd(x: f64, eta: f64) -> f64 {
    let h = 2e-3;
    (-k_eta(x - 2.0 * h, eta) + 16.0 * k_eta(x - h, eta) - 30.0 * k_eta(x, eta)
        + 16.0 * k_eta(x + h, eta)
        - k_eta(x + 2.0 * h, eta))
        / (12.0 * h * h)
}

/// Difference between int_0^infty K_eta''(x) (sin(pi t x)/(pi t))^2 dx and
/// k_eta_hat(t, eta); the transform identity says it tends to zero.
pub fn lemma2_transform_identity(eta: f64, t: f64) -> Result<f64> {
    KernelSpec::WindowPair { eta }.validate()?;
    if t == 0.0 {
        return Err(Error::Range("transform identity needs t != 0".into()));
    }
    let pt = std::f64::consts::PI * t;
    // |K''| <= min(1, eta^-3 x^-3): tail past x_max is eta^-3 x_max^-2 / (2 (pi t)^2)
    let tail_target = 1e-6;
    let x_max = (1.0 / (eta.powi(3) * pt * pt * 2.0 * tail_target))
        .sqrt()
        .max(50.0);
    let integrand = |x: f64| {
        let s = (pt * x).sin() / pt;
        k_eta_dd(x, eta) * s * s
    };
    let splits: Vec<f64> = (1..)
        .map(|j| j as f64 * 0.25)
        .take_while(|v| *v < x_max)
        .collect();
    let r = quad::integrate_with_breakpoints(integrand, 0.0, x_max, &splits, 1e-9, 1e-7)?;
    Ok(r.value - k_eta_hat(t, eta))
}

/// Exponential-weight averaging check: given f tabulated around Y, returns
/// (max_T |int f(T+y) e^{-2|y|} dy - 1| over T in [Y, Y+log 2],
///  int_0^{log 2} f(Y+y) e^{2y} dy).
pub fn lemma3_check(f: &Tabulated, y: f64) -> Result<(f64, f64)> {
    let ln2 = std::f64::consts::LN_2;
    if f.start() > y - 40.0 || f.end() < y + 40.0 + ln2 {
        return Err(Error::Range(format!(
            "tabulation [{}, {}] does not cover [{}, {}]",
            f.start(),
            f.end(),
            y - 40.0,
            y + 40.0 + ln2
        )));
    }
    let mut max_dev = 0.0f64;
    for i in 0..=32 {
        let t = y + ln2 * i as f64 / 32.0;
        let h = quad::integrate_with_breakpoints(
            |u| f.eval(t + u) * (-2.0 * u.abs()).exp(),
            -40.0,
            40.0,
            &[0.0],
            1e-10,
            1e-12,
        )?;
        max_dev = max_dev.max((h.value - 1.0).abs());
    }
    let conclusion = quad::integrate(|u| f.eval(y + u) * (2.0 * u).exp(), 0.0, ln2, 1e-12, 1e-14)?;
    Ok((max_dev, conclusion.value))
}
