//! Riemann zeta for complex arguments near the 1-line, via Euler–Maclaurin,
//! together with first and second derivatives (termwise-differentiated).
//!
//! Used to factor the pole out of tensor-square Euler products: products are
//! evaluated as `zeta(s) * G(s)` with `G` a rapidly-converging prime product,
//! so values near `s = 1` never rely on a raw truncated product.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// B_{2k} for k = 1..=10.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

fn factorial(n: u32) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Evaluation point data: value, first, second derivative.
#[derive(Debug, Clone, Copy)]
pub struct ZetaJet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

fn choose_n(s: Complex64) -> Result<usize> {
    let t = s.im.abs();
    let n = (t.ceil() as usize).max(24) + 8;
    if n > 400_000 {
        return Err(Error::Range(format!(
            "zeta: |Im s| = {t:.3e} too large for Euler-Maclaurin evaluation"
        )));
    }
    Ok(n)
}

/// zeta(s) with first and second derivatives. Requires `s != 1`.
pub fn zeta_jet(s: Complex64) -> Result<ZetaJet> {
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-14 {
        return Err(Error::Range("zeta evaluated at the pole s = 1".into()));
    }
    let n = choose_n(s)? as u64;
    let mut v = Complex64::new(0.0, 0.0);
    let mut d1 = Complex64::new(0.0, 0.0);
    let mut d2 = Complex64::new(0.0, 0.0);

    for k in 1..n {
        let lk = (k as f64).ln();
        let term = (-s * lk).exp();
        v += term;
        d1 -= lk * term;
        d2 += lk * lk * term;
    }

    let ln_n = (n as f64).ln();

    // integral tail N^{1-s}/(s-1)
    let t1 = ((1.0 - s) * ln_n).exp() / (s - 1.0);
    let a = ln_n + 1.0 / (s - 1.0);
    v += t1;
    d1 += -t1 * a;
    d2 += t1 * (a * a + 1.0 / ((s - 1.0) * (s - 1.0)));

    // half-weight endpoint N^{-s}/2
    let t2 = (-s * ln_n).exp() * 0.5;
    v += t2;
    d1 += -ln_n * t2;
    d2 += ln_n * ln_n * t2;

    // Bernoulli corrections c_k * s(s+1)...(s+2k-2) * N^{1-s-2k}
    for (k, &b) in BERNOULLI.iter().enumerate() {
        let k = k as u32 + 1;
        let c = b / factorial(2 * k);
        let mut poch = Complex64::new(1.0, 0.0);
        let mut dsum = Complex64::new(0.0, 0.0);
        let mut dsum2 = Complex64::new(0.0, 0.0);
        for i in 0..(2 * k - 1) {
            let term = s + i as f64;
            poch *= term;
            dsum += 1.0 / term;
            dsum2 += 1.0 / (term * term);
        }
        let scale = (-(s + (2 * k) as f64 - 1.0) * ln_n).exp(); // N^{1-s-2k}
        let t3 = c * poch * scale;
        let g = dsum - ln_n;
        v += t3;
        d1 += t3 * g;
        d2 += t3 * (g * g - dsum2);
    }

    Ok(ZetaJet { value: v, d1, d2 })
}

pub fn zeta(s: Complex64) -> Result<Complex64> {
    Ok(zeta_jet(s)?.value)
}

/// (zeta'/zeta)(s)
pub fn log_deriv(s: Complex64) -> Result<Complex64> {
    let j = zeta_jet(s)?;
    Ok(j.d1 / j.value)
}

/// (zeta'/zeta)'(s) = zeta''/zeta - (zeta'/zeta)^2
pub fn log_deriv_prime(s: Complex64) -> Result<Complex64> {
    let j = zeta_jet(s)?;
    let ld = j.d1 / j.value;
    Ok(j.d2 / j.value - ld * ld)
}
