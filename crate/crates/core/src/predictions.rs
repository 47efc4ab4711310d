//! Closed-form main terms for the variance statistics and the pair
//! correlation form factor, with regime selection.
//!
//! Degree-1 L-functions have a single regime. For degree >= 2 the window
//! scale h* = X^{1 - 1/d} (equivalently delta* = X^{-1/d}) separates two
//! regimes: wide windows (regime I) follow the conductor-dependent main term
//! `d log(X/h) + log q - (gamma0 + log 2pi) d`, narrow windows (regime II)
//! follow the conductor-free bulk term depending on X alone. Exact boundary
//! hits are assigned to regime I; the two conjectural forms need not join
//! continuously and no smoothing is applied at the crossover.

use crate::error::{Error, Result};
use crate::registry::LFunctionDescriptor;
use crate::variance::WindowKind;
use crate::{EULER_GAMMA, LOG_2PI};

/// Which statistic a prediction refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatisticKind {
    Variance(WindowKind),
    PairCorrelation,
}

impl StatisticKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StatisticKind::Variance(WindowKind::Additive) => "variance_additive",
            StatisticKind::Variance(WindowKind::Multiplicative) => "variance_multiplicative",
            StatisticKind::PairCorrelation => "pair_correlation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// d = 1: one regime for all window scales.
    DegreeOne,
    /// wide windows, h > X^{1-1/d} (delta > X^{-1/d}); conductor enters.
    RegimeI,
    /// narrow windows; conductor-free bulk form.
    RegimeII,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::DegreeOne => "degree1",
            Regime::RegimeI => "regime_i",
            Regime::RegimeII => "regime_ii",
        }
    }
}

/// Which closed form produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    /// degree-1 fixed-window form log X - log h - gamma0 - log 2pi (+ log q).
    MontgomerySoundararajan,
    /// d log(X/h) + log q - (gamma0 + log 2pi) d, and its delta-form twin.
    ConductorMainTerm,
    /// conductor-free narrow-window forms depending on X only.
    BulkMainTerm,
    /// pair correlation T log X / pi below the saturation point.
    MurtyPerelli,
    /// saturated pair correlation (T/pi)(d log(T/2pi) + log q - d).
    SaturatedMainTerm,
}

impl Formula {
    pub fn as_str(self) -> &'static str {
        match self {
            Formula::MontgomerySoundararajan => "montgomery_soundararajan",
            Formula::ConductorMainTerm => "conductor_main_term",
            Formula::BulkMainTerm => "bulk_main_term",
            Formula::MurtyPerelli => "murty_perelli",
            Formula::SaturatedMainTerm => "saturated_main_term",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PredictionLine {
    pub kind: StatisticKind,
    pub regime: Regime,
    pub formula: Formula,
    /// Full main-term value.
    pub value: f64,
    /// value/(hX), value/(delta X^2), or value*pi/T for pair correlation.
    pub normalized: f64,
}

/// Crossover window length h* = X^{1-1/d}; `None` when the degree is 1
/// (single regime).
pub fn regime_boundary(desc: &LFunctionDescriptor, x: f64) -> Option<f64> {
    if x <= 1.0 {
        return None;
    }
    let d = desc.degree();
    if d > 1.0 + 1e-9 {
        Some(x.powf(1.0 - 1.0 / d))
    } else {
        None
    }
}

/// Main term for the fixed-window variance at (X, h).
pub fn predict_v_tilde(desc: &LFunctionDescriptor, x: f64, h: f64) -> Result<PredictionLine> {
    if !(h > 1.0 && h < x) {
        return Err(Error::Range(format!(
            "need 1 < h < X, got h = {h}, X = {x}"
        )));
    }
    let d = desc.degree();
    let lq = desc.conductor().ln();
    let kind = StatisticKind::Variance(WindowKind::Additive);
    let (regime, formula, normalized) = match regime_boundary(desc, x) {
        None => (
            Regime::DegreeOne,
            Formula::MontgomerySoundararajan,
            d * (x / h).ln() + lq - (EULER_GAMMA + LOG_2PI) * d,
        ),
        Some(hstar) if h >= hstar => (
            Regime::RegimeI,
            Formula::ConductorMainTerm,
            d * (x / h).ln() + lq - (EULER_GAMMA + LOG_2PI) * d,
        ),
        Some(_) => (
            Regime::RegimeII,
            Formula::BulkMainTerm,
            x.ln() - (3.0 + 8.0 * 2.0f64.ln()) / 6.0,
        ),
    };
    Ok(PredictionLine {
        kind,
        regime,
        formula,
        value: normalized * h * x,
        normalized,
    })
}

/// Main term for the scaled-window variance at (X, delta).
pub fn predict_v_delta(desc: &LFunctionDescriptor, x: f64, delta: f64) -> Result<PredictionLine> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Range(format!("need 0 < delta < 1, got {delta}")));
    }
    if x <= 1.0 {
        return Err(Error::Range(format!("need X > 1, got {x}")));
    }
    let d = desc.degree();
    let lq = desc.conductor().ln();
    let kind = StatisticKind::Variance(WindowKind::Multiplicative);
    let wide_form = || 0.5 * (d * (1.0 / delta).ln() + lq + (1.0 - EULER_GAMMA - LOG_2PI) * d);
    let (regime, formula, normalized) = match regime_boundary(desc, x) {
        None => (Regime::DegreeOne, Formula::ConductorMainTerm, wide_form()),
        Some(hstar) => {
            let delta_star = hstar / x; // X^{-1/d}
            if delta >= delta_star {
                (Regime::RegimeI, Formula::ConductorMainTerm, wide_form())
            } else {
                (
                    Regime::RegimeII,
                    Formula::BulkMainTerm,
                    (3.0 * x.ln() - 4.0 * 2.0f64.ln()) / 6.0,
                )
            }
        }
    };
    Ok(PredictionLine {
        kind,
        regime,
        formula,
        value: normalized * delta * x * x,
        normalized,
    })
}

/// Main term for the pair-correlation sum F(X, T) over ordinates in [-T, T].
pub fn predict_pair_correlation(
    desc: &LFunctionDescriptor,
    x: f64,
    t: f64,
) -> Result<PredictionLine> {
    if !(t > 2.0 * std::f64::consts::PI) {
        return Err(Error::Range(format!("need T > 2 pi, got {t}")));
    }
    if !(x >= 1.0) {
        return Err(Error::Range(format!("need X >= 1, got {x}")));
    }
    let d = desc.degree();
    let lq = desc.conductor().ln();
    let saturation = t.powf(d);
    let (regime, formula, normalized) = if x < saturation {
        (Regime::RegimeII, Formula::MurtyPerelli, x.ln())
    } else {
        (
            Regime::RegimeI,
            Formula::SaturatedMainTerm,
            d * (t / (2.0 * std::f64::consts::PI)).ln() + lq - d,
        )
    };
    Ok(PredictionLine {
        kind: StatisticKind::PairCorrelation,
        regime,
        formula,
        value: normalized * t / std::f64::consts::PI,
        normalized,
    })
}
