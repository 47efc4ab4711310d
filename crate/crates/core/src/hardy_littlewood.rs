//! Singular series for prime pairs and empirical autocorrelation of the von
//! Mangoldt weights. Degree-2 coefficient tables go through the same
//! autocorrelation sum, which is how the o(X) contrast with the zeta case is
//! probed numerically.

use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::primes;

#[derive(Debug, Clone, Copy)]
pub struct SingularSeriesValue {
    pub k: u64,
    pub value: f64,
    pub prime_cutoff: u64,
    /// Absolute bound on the truncation tail of the twin-prime-type product.
    pub tail_bound: f64,
}

/// Evaluator holding the truncated twin-prime-type product
/// prod_{2 < p <= P} (1 - 1/(p-1)^2), accumulated once in log space.
#[derive(Debug, Clone)]
pub struct SingularSeries {
    prime_cutoff: u64,
    log_twin_product: f64,
}

impl SingularSeries {
    pub fn new(prime_cutoff: u64) -> Result<Self> {
        if prime_cutoff < 3 {
            return Err(Error::Range(format!(
                "singular series needs a prime cutoff >= 3, got {prime_cutoff}"
            )));
        }
        let mut acc = KahanSum::new();
        primes::for_each_prime(prime_cutoff, |p| {
            if p > 2 {
                let q = (p - 1) as f64;
                acc.add((1.0 - 1.0 / (q * q)).ln());
            }
        });
        Ok(Self {
            prime_cutoff,
            log_twin_product: acc.value(),
        })
    }

    pub fn prime_cutoff(&self) -> u64 {
        self.prime_cutoff
    }

    /// S(k): 0 for odd k; for even k the truncated twin product times the
    /// exact finite factor prod_{p | k, p > 2} (p-1)/(p-2).
    pub fn eval(&self, k: u64) -> Result<SingularSeriesValue> {
        if k < 1 {
            return Err(Error::Range("singular series needs k >= 1".into()));
        }
        if k % 2 == 1 {
            return Ok(SingularSeriesValue {
                k,
                value: 0.0,
                prime_cutoff: self.prime_cutoff,
                tail_bound: 0.0,
            });
        }
        // odd prime divisors of k by trial division
        let mut log_finite = 0.0f64;
        let mut m = k;
        while m % 2 == 0 {
            m /= 2;
        }
        let mut p = 3u64;
        while p * p <= m {
            if m % p == 0 {
                log_finite += (((p - 1) as f64) / ((p - 2) as f64)).ln();
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 2;
        }
        if m > 1 {
            log_finite += (((m - 1) as f64) / ((m - 2) as f64)).ln();
        }
        let value = (2.0f64.ln() + self.log_twin_product + log_finite).exp();
        // sum_{p > P} 1/(p-1)^2 < 1/(P-2); relative tail exponentiated
        let rel = 1.0 / (self.prime_cutoff as f64 - 2.0);
        Ok(SingularSeriesValue {
            k,
            value,
            prime_cutoff: self.prime_cutoff,
            tail_bound: value * rel.exp_m1(),
        })
    }
}

/// One-shot convenience around [`SingularSeries`].
pub fn singular_series(k: u64, prime_cutoff: u64) -> Result<SingularSeriesValue> {
    SingularSeries::new(prime_cutoff)?.eval(k)
}

/// sum_{n <= X} Lambda_F(n) Lambda_F(n+k), compensated.
pub fn autocorrelation(table: &CoefficientTable, x: u64, k: u64) -> Result<f64> {
    if x + k > table.len() {
        return Err(Error::TableTooShort {
            needed: x + k,
            have: table.len(),
        });
    }
    let mut acc = KahanSum::new();
    for n in 1..=x {
        let a = table.lambda_at(n);
        if a != 0.0 {
            let b = table.lambda_at(n + k);
            if b != 0.0 {
                acc.add(a * b);
            }
        }
    }
    Ok(acc.value())
}
