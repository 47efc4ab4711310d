//! Pair-correlation statistics and explicit-formula machinery over ingested
//! lists of zero ordinates.
//!
//! Ordinate lists are plain text, one decimal ordinate per line, `#` comments
//! and blank lines ignored, strictly ascending. A reflected list stores only
//! nonnegative ordinates; the negatives are implied by self-duality (an
//! ordinate at exactly 0 counts once). Nothing here computes zeros: data is
//! always read from a local file or generated synthetically for oracles.

use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::quad;

/// Pair weight 4/(4+u^2) drops below 1e-15 only past this gap; the banded
/// double sums may drop pairs beyond it without visible effect.
pub fn poisson_band() -> f64 {
    (4.0f64 / 1e-15 - 4.0).sqrt()
}

/// exp(-u^2) < 1e-15 for u > 6, so the Gaussian-weighted sums band at 6.
pub const GAUSSIAN_BAND: f64 = 6.0;

#[derive(Debug, Clone)]
pub struct ZeroList {
    ordinates: Vec<f64>,
    reflect: bool,
    pub source: String,
}

impl ZeroList {
    pub fn new(ordinates: Vec<f64>, reflect: bool, source: &str) -> Result<Self> {
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::Range(format!(
                    "ordinates must be strictly ascending; entries {} and {} are {} and {}",
                    i,
                    i + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        if let Some(bad) = ordinates.iter().find(|v| !v.is_finite()) {
            return Err(Error::Range(format!("non-finite ordinate {bad}")));
        }
        if reflect {
            if let Some(neg) = ordinates.first().filter(|v| **v < 0.0) {
                return Err(Error::Range(format!(
                    "reflected lists must hold nonnegative ordinates, found {neg}"
                )));
            }
        }
        Ok(Self {
            ordinates,
            reflect,
            source: source.into(),
        })
    }

    /// Parse a zero-list file; errors carry the offending line number.
    pub fn load(path: &Path, reflect: bool) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut ordinates = Vec::new();
        let mut prev: Option<(f64, usize)> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: f64 = line.parse().map_err(|_| Error::ZeroParse {
                path: path.into(),
                line: i + 1,
                msg: format!("not a decimal ordinate: '{line}'"),
            })?;
            if !v.is_finite() {
                return Err(Error::ZeroParse {
                    path: path.into(),
                    line: i + 1,
                    msg: "non-finite ordinate".into(),
                });
            }
            if let Some((p, pl)) = prev {
                if v <= p {
                    return Err(Error::ZeroParse {
                        path: path.into(),
                        line: i + 1,
                        msg: format!("ordinates not ascending: {v} after {p} (line {pl})"),
                    });
                }
            }
            prev = Some((v, i + 1));
            ordinates.push(v);
        }
        Self::new(ordinates, reflect, &path.display().to_string())
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn reflect(&self) -> bool {
        self.reflect
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn max_ordinate(&self) -> Option<f64> {
        if self.reflect {
            self.ordinates.last().copied()
        } else {
            self.ordinates
                .iter()
                .map(|v| v.abs())
                .fold(None, |m, v| Some(m.map_or(v, |m: f64| m.max(v))))
        }
    }

    /// Signed ordinates with |gamma| <= t, ascending. Reflected lists emit
    /// -gamma for every positive gamma and keep an exact zero single.
    pub fn signed_in_window(&self, t: f64) -> Vec<f64> {
        if self.reflect {
            let pos: Vec<f64> = self.ordinates.iter().copied().filter(|g| *g <= t).collect();
            let mut out = Vec::with_capacity(2 * pos.len());
            for &g in pos.iter().rev() {
                if g > 0.0 {
                    out.push(-g);
                }
            }
            out.extend(pos.iter().copied().filter(|g| *g >= 0.0));
            out
        } else {
            self.ordinates
                .iter()
                .copied()
                .filter(|g| g.abs() <= t)
                .collect()
        }
    }

    /// Number of ordinates in the half-open window (lo, hi].
    pub fn count_in_window(&self, lo: f64, hi: f64) -> usize {
        self.signed_in_window(f64::INFINITY)
            .iter()
            .filter(|g| **g > lo && **g <= hi)
            .count()
    }
}

/// Banded weighted pair sum: sum over |gamma|,|gamma'| <= t of
/// cos((gamma-gamma') log x) w(gamma-gamma'), dropping pairs with gap > band.
/// The outer loop parallelizes; partials are reduced in index order.
fn pair_sum<W>(signed: &[f64], x: f64, band: f64, weight: W) -> f64
where
    W: Fn(f64) -> f64 + Sync,
{
    let lx = x.ln();
    let partials: Vec<f64> = signed
        .par_iter()
        .enumerate()
        .map(|(i, &g)| {
            let mut acc = KahanSum::new();
            acc.add(weight(0.0)); // diagonal
            for &g2 in &signed[i + 1..] {
                let u = g2 - g;
                if u > band {
                    break;
                }
                acc.add(2.0 * (u * lx).cos() * weight(u));
            }
            acc.value()
        })
        .collect();
    let mut total = KahanSum::new();
    for p in partials {
        total.add(p);
    }
    total.value()
}

/// Pair correlation F(X, T) with the Poisson-kernel weight 4/(4+u^2).
pub fn f_statistic(zeros: &ZeroList, x: f64, t: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::Range(format!("need X >= 1, got {x}")));
    }
    if !(t > 0.0) {
        return Err(Error::Range(format!("need T > 0, got {t}")));
    }
    let signed = zeros.signed_in_window(t);
    Ok(pair_sum(&signed, x, poisson_band(), |u| {
        4.0 / (4.0 + u * u)
    }))
}

/// Smoothed form factor F~(X, T) with Gaussian weight exp(-u^2).
pub fn f_tilde(zeros: &ZeroList, x: f64, t: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::Range(format!("need X >= 1, got {x}")));
    }
    if !(t > 0.0) {
        return Err(Error::Range(format!("need T > 0, got {t}")));
    }
    let signed = zeros.signed_in_window(t);
    Ok(pair_sum(&signed, x, GAUSSIAN_BAND, |u| (-u * u).exp()))
}

/// I(X, T) = int_{-T}^{T} | sum_{|gamma| <= Z} X^{i gamma}/(1+(t-gamma)^2) |^2 dt
/// by adaptive quadrature (relative target 1e-6), split at the zeros.
pub fn i_integral(zeros: &ZeroList, x: f64, t: f64, z: f64) -> Result<f64> {
    if z < t {
        return Err(Error::Range(format!("need Z >= T, got Z = {z}, T = {t}")));
    }
    let signed = zeros.signed_in_window(z);
    if signed.is_empty() {
        return Ok(0.0);
    }
    let lx = x.ln();
    let phases: Vec<(f64, Complex64)> = signed
        .iter()
        .map(|&g| (g, Complex64::new(0.0, g * lx).exp()))
        .collect();
    let f = |tt: f64| -> f64 {
        let mut re = 0.0;
        let mut im = 0.0;
        for &(g, ph) in &phases {
            let d = tt - g;
            let k = 1.0 / (1.0 + d * d);
            re += ph.re * k;
            im += ph.im * k;
        }
        re * re + im * im
    };
    let r = quad::integrate_with_breakpoints(f, -t, t, &signed, 1e-6, 1e-12)?;
    Ok(r.value)
}

/// The interval weight a(s) = ((1+delta)^s - 1)/s from the explicit formula.
pub fn interval_weight(s: Complex64, delta: f64) -> Complex64 {
    ((s * delta.ln_1p()).exp() - 1.0) / s
}

#[derive(Debug, Clone, Copy)]
pub struct ExplicitFormulaResidual {
    /// psi(x(1+delta)) - psi(x) - m delta x
    pub lhs: f64,
    /// -sum_{|gamma| <= Z} a(rho) x^rho over the supplied zeros
    pub zero_sum: f64,
    /// lhs - zero_sum
    pub residual: f64,
    /// the truncation error envelope for this (x, delta, Z)
    pub envelope: f64,
}

fn dist_to_nearest_integer(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Compare the interval increment of psi against its zero-sum expansion
/// truncated at height Z, reporting the residual and the error envelope
/// log x min{1, x/(Z ||x||)} + log x min{1, x/(Z ||x(1+d)||)} + x Z^{-1} log^2(xZ).
pub fn explicit_formula_residual(
    table: &CoefficientTable,
    zeros: &ZeroList,
    x: f64,
    delta: f64,
    z: f64,
) -> Result<ExplicitFormulaResidual> {
    if !(x >= 2.0 && delta >= 0.0) {
        return Err(Error::Range(format!(
            "need x >= 2 and delta >= 0, got ({x}, {delta})"
        )));
    }
    let x_hi = x * (1.0 + delta);
    if x_hi.floor() as u64 > table.len() {
        return Err(Error::TableTooShort {
            needed: x_hi.floor() as u64,
            have: table.len(),
        });
    }
    if z > 0.0 {
        let have = zeros.max_ordinate().unwrap_or(0.0);
        if have < z {
            return Err(Error::ZeroCoverage { needed: z, have });
        }
    }
    let m = table.pole_order as f64;
    let lhs = table.psi(x_hi) - table.psi(x) - m * delta * x;

    let lx = x.ln();
    let sqrt_x = x.sqrt();
    let signed = zeros.signed_in_window(z);
    let partials: Vec<f64> = signed
        .par_iter()
        .map(|&g| {
            let rho = Complex64::new(0.5, g);
            let a = interval_weight(rho, delta);
            // Re(a(rho) x^rho); the imaginary parts cancel pairwise for
            // self-dual lists and are dropped explicitly
            let xr = Complex64::new(0.0, g * lx).exp() * sqrt_x;
            (a * xr).re
        })
        .collect();
    let mut sum = KahanSum::new();
    for p in partials {
        sum.add(p);
    }
    let zero_sum = -sum.value();

    let envelope = if z > 0.0 {
        let near = |v: f64| {
            let d = dist_to_nearest_integer(v);
            if d == 0.0 {
                1.0
            } else {
                (v / (z * d)).min(1.0)
            }
        };
        lx * near(x) + lx * near(x_hi) + x / z * (x * z).ln().powi(2)
    } else {
        f64::INFINITY
    };

    Ok(ExplicitFormulaResidual {
        lhs,
        zero_sum,
        residual: lhs - zero_sum,
        envelope,
    })
}

/// Evenly spaced synthetic ordinates j * spacing, j = 1..=count.
pub fn synth_picket(spacing: f64, count: usize, reflect: bool) -> ZeroList {
    let ordinates = (1..=count).map(|j| j as f64 * spacing).collect();
    ZeroList::new(ordinates, reflect, "picket").expect("picket is ascending")
}

/// `count` i.i.d. uniform ordinates on [0, t], sorted; seeded and
/// bit-reproducible.
pub fn synth_uniform(t: f64, count: usize, seed: u64, reflect: bool) -> ZeroList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..t)).collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // nudge exact collisions apart to keep the list strictly ascending
    for i in 1..v.len() {
        if v[i] <= v[i - 1] {
            v[i] = f64::from_bits(v[i - 1].to_bits() + 1);
        }
    }
    ZeroList::new(v, reflect, "uniform").expect("sorted and deduplicated")
}
