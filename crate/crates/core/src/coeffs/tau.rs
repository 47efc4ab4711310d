//! Coefficients of the discriminant cusp form Delta = q prod (1-q^n)^24,
//! computed exactly in i128.
//!
//! The product is expanded as the 8th power of the sparse cube
//! prod (1-q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2},
//! so each of the 8 passes multiplies a dense series by ~sqrt(2N) terms
//! instead of the O(N^2) cost of multiplying the 24 binomial factors in
//! one at a time. Values are exact integers throughout; normalization to
//! floating point happens once, at the end.

use rayon::prelude::*;

/// Largest supported expansion order. |tau(n)| <= d(n) n^{11/2} stays well
/// inside i128 up to here (~1.2e37 vs i128 max 1.7e38); beyond it the
/// intermediate coefficients could overflow.
pub const MAX_ORDER: usize = 2_000_000;

/// Sparse terms (exponent, coefficient) of prod (1-q^n)^3 up to `n_max`.
fn cube_series(n_max: usize) -> Vec<(usize, i64)> {
    let mut terms = Vec::new();
    let mut k = 0usize;
    loop {
        let e = k * (k + 1) / 2;
        if e > n_max {
            break;
        }
        let c = (2 * k + 1) as i64;
        terms.push((e, if k % 2 == 0 { c } else { -c }));
        k += 1;
    }
    terms
}

/// tau(1..=n_max); index `n-1` holds tau(n).
pub fn tau_table(n_max: usize) -> Vec<i128> {
    assert!(
        n_max >= 1 && n_max <= MAX_ORDER,
        "tau expansion order out of range"
    );
    let len = n_max; // coefficients of q^0 .. q^{n_max-1} of (eta-cube)^8
    let terms = cube_series(len - 1);
    let mut cur = vec![0i128; len];
    cur[0] = 1;
    let mut next = vec![0i128; len];
    for _ in 0..8 {
        // gather form: next[j] = sum_t c_t * cur[j - e_t]; parallel over j-chunks
        next.par_chunks_mut(1 << 14)
            .enumerate()
            .for_each(|(ci, chunk)| {
                let base = ci << 14;
                for (off, slot) in chunk.iter_mut().enumerate() {
                    let j = base + off;
                    let mut acc = 0i128;
                    for &(e, c) in &terms {
                        if e > j {
                            break;
                        }
                        acc += c as i128 * cur[j - e];
                    }
                    *slot = acc;
                }
            });
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

/// tau(n) for a single small n; convenience for spot checks.
pub fn tau(n: usize) -> i128 {
    tau_table(n)[n - 1]
}
