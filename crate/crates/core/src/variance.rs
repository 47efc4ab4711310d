//! Exact evaluation of the short-interval variance integrals
//!
//! ```text
//! V~(X, h)     = int_1^X | psi(x+h) - psi(x) - m h |^2 dx
//! V(X, delta)  = int_1^X | psi(x(1+delta)) - psi(x) - m delta x |^2 dx
//! ```
//!
//! psi is a step function, so between consecutive breakpoints (integers n for
//! psi(x); n-h resp. n/(1+delta) for the shifted copy) the integrand is a
//! polynomial of degree <= 2 and each piece integrates in closed form. The
//! sweep merges the two breakpoint streams in order and accumulates pieces
//! with compensated summation; no discretization error enters beyond f64
//! rounding.

use rayon::prelude::*;

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Which window the statistic uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    /// x -> x + h, fixed window length
    Additive,
    /// x -> x(1 + delta), window scales with x
    Multiplicative,
}

impl WindowKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WindowKind::Additive => "additive",
            WindowKind::Multiplicative => "multiplicative",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VarianceResult {
    pub kind: WindowKind,
    pub x: f64,
    /// h for additive windows, delta for multiplicative ones.
    pub width: f64,
    pub value: f64,
    /// value/(h X) resp. value/(delta X^2).
    pub normalized: f64,
}

impl VarianceResult {
    /// The abscissa used in the overlay plots: log(X/h) = log(1/delta).
    pub fn log_x_over_h(&self) -> f64 {
        match self.kind {
            WindowKind::Additive => (self.x / self.width).ln(),
            WindowKind::Multiplicative => (1.0 / self.width).ln(),
        }
    }
}

/// A grid of variance evaluations at fixed X.
#[derive(Debug, Clone)]
pub struct VarianceCurve {
    pub desc_name: String,
    pub kind: WindowKind,
    pub x: f64,
    pub table_len: u64,
    pub points: Vec<VarianceResult>,
}

/// Merge-sweep over the two breakpoint streams. `shift` maps x to the
/// argument of the shifted psi; `events` yields the breakpoints of the
/// shifted copy in ascending order.
fn sweep<FShift, FDrift>(
    table: &CoefficientTable,
    x_end: f64,
    shift: FShift,
    shifted_breaks: &mut dyn Iterator<Item = f64>,
    drift: FDrift,
    quadratic_slope: f64,
) -> f64
where
    FShift: Fn(f64) -> f64,
    FDrift: Fn(f64) -> f64,
{
    let mut acc = KahanSum::new();
    let mut next_int = 2u64;
    let mut next_shift = shifted_breaks.next();
    let mut prev = 1.0f64;
    loop {
        let ev_int = if (next_int as f64) < x_end {
            Some(next_int as f64)
        } else {
            None
        };
        let ev = match (ev_int, next_shift) {
            (Some(a), Some(b)) if b < a => {
                next_shift = shifted_breaks.next();
                Some(b)
            }
            (Some(a), _) => {
                next_int += 1;
                Some(a)
            }
            (None, Some(b)) if b < x_end => {
                next_shift = shifted_breaks.next();
                Some(b)
            }
            _ => None,
        };
        let end = ev.unwrap_or(x_end);
        let w = end - prev;
        if w > 0.0 {
            let mid = 0.5 * (prev + end);
            let c = table.psi(shift(mid)) - table.psi(mid);
            let e = c - drift(mid);
            // int (e - g (x - mid))^2 over the piece = w e^2 + g^2 w^3 / 12
            acc.add(w * e * e + quadratic_slope * quadratic_slope * w * w * w / 12.0);
        }
        prev = end;
        if ev.is_none() {
            break;
        }
    }
    acc.value()
}

/// Variance over fixed-length windows [x, x+h].
pub fn v_tilde(table: &CoefficientTable, x: f64, h: f64) -> Result<VarianceResult> {
    if !(h >= 1.0) {
        return Err(Error::Range(format!(
            "window length h must be >= 1, got {h}"
        )));
    }
    if h > x {
        return Err(Error::Range(format!("need h <= X, got h = {h}, X = {x}")));
    }
    let needed = (x + h).floor() as u64;
    if needed > table.len() {
        return Err(Error::TableTooShort {
            needed,
            have: table.len(),
        });
    }
    let m = table.pole_order as f64;
    let drift = m * h;
    // breakpoints of psi(x+h): x = n - h for integers n with 1 < x < X
    let lo = (1.0 + h).floor() as u64 + 1;
    let hi = (x + h).ceil() as u64;
    let mut shifted = (lo..=hi)
        .map(|n| n as f64 - h)
        .filter(|v| *v > 1.0 && *v < x);
    let value = sweep(table, x, |u| u + h, &mut shifted, |_| drift, 0.0);
    Ok(VarianceResult {
        kind: WindowKind::Additive,
        x,
        width: h,
        value,
        normalized: value / (h * x),
    })
}

/// Variance over scaled windows [x, x(1+delta)].
pub fn v_delta(table: &CoefficientTable, x: f64, delta: f64) -> Result<VarianceResult> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::Range(format!("need 0 < delta <= 1, got {delta}")));
    }
    if x < 1.0 {
        return Err(Error::Range(format!("need X >= 1, got {x}")));
    }
    let needed = (x * (1.0 + delta)).floor() as u64;
    if needed > table.len() {
        return Err(Error::TableTooShort {
            needed,
            have: table.len(),
        });
    }
    let m = table.pole_order as f64;
    let g = m * delta;
    let scale = 1.0 + delta;
    // breakpoints of psi(x(1+delta)): x = n/(1+delta)
    let lo = scale.floor() as u64 + 1;
    let hi = (x * scale).ceil() as u64;
    let mut shifted = (lo..=hi)
        .map(|n| n as f64 / scale)
        .filter(|v| *v > 1.0 && *v < x);
    let value = sweep(table, x, |u| u * scale, &mut shifted, |u| g * u, g);
    Ok(VarianceResult {
        kind: WindowKind::Multiplicative,
        x,
        width: delta,
        value,
        normalized: value / (delta * x * x),
    })
}

/// Evaluate a whole grid of widths at fixed X; points are computed in
/// parallel and returned in the caller's order.
pub fn variance_curve(
    table: &CoefficientTable,
    x: f64,
    widths: &[f64],
    kind: WindowKind,
) -> Result<VarianceCurve> {
    let points: Result<Vec<VarianceResult>> = widths
        .par_iter()
        .map(|&w| match kind {
            WindowKind::Additive => v_tilde(table, x, w),
            WindowKind::Multiplicative => v_delta(table, x, w),
        })
        .collect();
    let mut points = points?;
    points.sort_by(|a, b| a.width.partial_cmp(&b.width).unwrap());
    Ok(VarianceCurve {
        desc_name: table.desc_name.clone(),
        kind,
        x,
        table_len: table.len(),
        points,
    })
}

/// `count` log-spaced values from `lo` to `hi` inclusive.
pub fn log_spaced(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi >= lo);
    if count == 0 {
        return Vec::new();
    }
    if count == 1 {
        return vec![lo];
    }
    let (la, lb) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (la + (lb - la) * i as f64 / (count - 1) as f64).exp())
        .collect()
}
