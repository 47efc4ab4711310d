//! Adaptive Gauss–Kronrod quadrature (7/15 pair) with optional user-supplied
//! breakpoints. Breakpoints let callers integrate piecewise-smooth integrands
//! (step functions at integers, kernel oscillation boundaries) without asking
//! the subdivision heuristic to rediscover them.

use crate::error::{Error, Result};

/// 15-point Kronrod abscissae on [0, 1] side (symmetric).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Embedded 7-point Gauss weights (nodes XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
    pub evals: usize,
}

/// One Gauss–Kronrod panel; returns (kronrod, |kronrod − gauss|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (i, &x) in XGK.iter().enumerate().take(7) {
        let dx = h * x;
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        kron += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    (kron * h, (kron - gauss).abs() * h.abs())
}

/// Adaptive integration of `f` over `[a, b]`.
///
/// Refines the panel with the largest error estimate until
/// `sum_err <= max(abs_tol, rel_tol * |value|)` or the eval budget is hit.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    integrate_with_breakpoints(f, a, b, &[], rel_tol, abs_tol)
}

/// As [`integrate`], but pre-splits at the given interior breakpoints.
pub fn integrate_with_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Quadrature("non-finite integration bounds".into()));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            abs_err: 0.0,
            evals: 0,
        });
    }

    let mut cuts: Vec<f64> = Vec::with_capacity(breakpoints.len() + 2);
    cuts.push(a);
    let mut sorted: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|x| *x > a && *x < b)
        .collect();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    sorted.dedup();
    cuts.extend(sorted);
    cuts.push(b);

    // max-heap on the error estimate; value and error sums kept incrementally
    #[derive(PartialEq)]
    struct Panel {
        err: f64,
        value: f64,
        lo: f64,
        hi: f64,
    }
    impl Eq for Panel {}
    impl PartialOrd for Panel {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Panel {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.err
                .partial_cmp(&other.err)
                .unwrap_or(std::cmp::Ordering::Equal)
        }
    }

    let mut heap = std::collections::BinaryHeap::new();
    let mut evals = 0usize;
    let mut value = 0.0f64;
    let mut err = 0.0f64;
    for w in cuts.windows(2) {
        let (v, e) = gk15(&f, w[0], w[1]);
        evals += 15;
        value += v;
        err += e;
        heap.push(Panel {
            err: e,
            value: v,
            lo: w[0],
            hi: w[1],
        });
    }

    const MAX_EVALS: usize = 8_000_000;
    loop {
        let tol = abs_tol.max(rel_tol * value.abs());
        if err <= tol {
            return Ok(QuadResult {
                value,
                abs_err: err,
                evals,
            });
        }
        if evals >= MAX_EVALS {
            return Err(Error::Quadrature(format!(
                "eval budget exhausted: err {err:.3e} > tol {tol:.3e} after {evals} evals"
            )));
        }
        let worst = heap.pop().expect("nonempty heap");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            return Err(Error::Quadrature(format!(
                "panel [{}, {}] cannot be split further",
                worst.lo, worst.hi
            )));
        }
        let (v1, e1) = gk15(&f, worst.lo, mid);
        let (v2, e2) = gk15(&f, mid, worst.hi);
        evals += 30;
        value += v1 + v2 - worst.value;
        err += e1 + e2 - worst.err;
        heap.push(Panel {
            err: e1,
            value: v1,
            lo: worst.lo,
            hi: mid,
        });
        heap.push(Panel {
            err: e2,
            value: v2,
            lo: mid,
            hi: worst.hi,
        });
    }
}
