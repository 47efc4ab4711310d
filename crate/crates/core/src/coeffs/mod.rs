//! Prime coefficients a_F(p), von Mangoldt weights Lambda_F(n), inverse
//! coefficients mu_F(p^k), and prefix sums psi_F.

pub mod ec;
pub mod tau;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::primes;
use crate::registry::{CoefficientSource, LFunctionDescriptor};

/// Shape of the local Euler factor at a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalFactor {
    /// 1/(1 - a p^{-s}); degree-1 L-functions and bad primes.
    Linear,
    /// 1/(1 - a p^{-s} + p^{-2s}); good primes of degree-2 L-functions.
    Quadratic,
}

/// alpha^k + beta^k for the local roots: the power sums that turn a_F(p) into
/// Lambda_F(p^k). Quadratic good primes satisfy alpha beta = 1, alpha+beta = a,
/// giving the Chebyshev-style recurrence; linear factors give plain powers.
pub fn satake_power(a: f64, k: u32, factor: LocalFactor) -> f64 {
    match factor {
        LocalFactor::Linear => a.powi(k as i32),
        LocalFactor::Quadratic => {
            if k == 0 {
                return 2.0;
            }
            let (mut prev, mut cur) = (2.0, a);
            for _ in 1..k {
                let next = a * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Dirichlet coefficients at prime powers, a_F(p^m): full symmetric power sum
/// (alpha^{m+1} - beta^{m+1})/(alpha - beta) for quadratic factors, a^m for
/// linear ones.
pub fn dirichlet_prime_power(a: f64, m: u32, factor: LocalFactor) -> f64 {
    match factor {
        LocalFactor::Linear => a.powi(m as i32),
        LocalFactor::Quadratic => {
            if m == 0 {
                return 1.0;
            }
            let (mut prev, mut cur) = (1.0, a);
            for _ in 1..m {
                let next = a * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// mu_F(p^k) for k = 0..=kmax: the coefficients of the inverted local factor.
/// Linear factors give (1, -a, 0, ...); quadratic ones (1, -a, 1, 0, ...).
pub fn local_inverse(a: f64, factor: LocalFactor, kmax: u32) -> Vec<f64> {
    let mut v = vec![0.0; kmax as usize + 1];
    v[0] = 1.0;
    if kmax >= 1 {
        v[1] = -a;
    }
    if kmax >= 2 && factor == LocalFactor::Quadratic {
        v[2] = 1.0;
    }
    v
}

/// Normalized coefficient at one prime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeCoefficient {
    pub p: u64,
    /// a_F(p), critical-line normalization (|a| <= 2 at good degree-2 primes).
    pub a: f64,
    /// p divides the conductor.
    pub bad: bool,
}

/// a_F(p) for all p <= cutoff, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeCoefficientTable {
    pub desc_name: String,
    pub cutoff: u64,
    /// Good primes carry quadratic local factors (degree-2 built-ins).
    pub quadratic: bool,
    pub entries: Vec<PrimeCoefficient>,
}

impl PrimeCoefficientTable {
    pub fn get(&self, p: u64) -> Option<&PrimeCoefficient> {
        self.entries
            .binary_search_by_key(&p, |e| e.p)
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn local_factor(&self, entry: &PrimeCoefficient) -> LocalFactor {
        if self.quadratic && !entry.bad {
            LocalFactor::Quadratic
        } else {
            LocalFactor::Linear
        }
    }

    /// mu_F(p^k), k = 0..=kmax, at a prime in the table.
    pub fn local_inverse(&self, p: u64, kmax: u32) -> Result<Vec<f64>> {
        let e = self
            .get(p)
            .ok_or_else(|| Error::MissingCoefficientSource(format!("prime {p} not in table")))?;
        Ok(local_inverse(e.a, self.local_factor(e), kmax))
    }

    /// S(x) = sum_{p <= x} |a_F(p)|^2 / p, compensated.
    pub fn orthogonality_sum(&self, x: f64) -> Result<f64> {
        if x < 2.0 {
            return Err(Error::Range(format!(
                "orthogonality sum needs x >= 2, got {x}"
            )));
        }
        if x > self.cutoff as f64 {
            return Err(Error::TableTooShort {
                needed: x as u64,
                have: self.cutoff,
            });
        }
        let mut k = KahanSum::new();
        for e in &self.entries {
            if (e.p as f64) > x {
                break;
            }
            k.add(e.a * e.a / e.p as f64);
        }
        Ok(k.value())
    }
}

/// Build a_F(p) for p <= cutoff from the descriptor's source.
pub fn prime_coefficients(
    desc: &LFunctionDescriptor,
    cutoff: u64,
) -> Result<PrimeCoefficientTable> {
    prime_coefficients_with_budget(desc, cutoff, ec::DEFAULT_BUDGET)
}

/// As [`prime_coefficients`] with an explicit compute budget for the
/// point-counting path.
pub fn prime_coefficients_with_budget(
    desc: &LFunctionDescriptor,
    cutoff: u64,
    budget: u64,
) -> Result<PrimeCoefficientTable> {
    if cutoff < 2 {
        return Err(Error::Range(format!(
            "prime cutoff must be >= 2, got {cutoff}"
        )));
    }
    let (entries, quadratic) = match &desc.source {
        CoefficientSource::RiemannZeta => {
            let entries = primes::primes_up_to(cutoff)
                .into_iter()
                .map(|p| PrimeCoefficient {
                    p,
                    a: 1.0,
                    bad: false,
                })
                .collect();
            (entries, false)
        }
        CoefficientSource::RamanujanDelta => {
            let taus = tau::tau_table(cutoff as usize);
            let entries = primes::primes_up_to(cutoff)
                .into_iter()
                .map(|p| {
                    let t = taus[p as usize - 1] as f64;
                    PrimeCoefficient {
                        p,
                        a: t / (p as f64).powf(5.5),
                        bad: false,
                    }
                })
                .collect();
            (entries, true)
        }
        CoefficientSource::EllipticCurve { curve, conductor } => {
            (ec::ap_table(curve, *conductor, cutoff, budget)?, true)
        }
        CoefficientSource::ExternalTable { path } => {
            let table = crate::cache::read_prime_table(path)?;
            if table.cutoff < cutoff {
                return Err(Error::TableTooShort {
                    needed: cutoff,
                    have: table.cutoff,
                });
            }
            let entries = table
                .entries
                .into_iter()
                .take_while(|e| e.p <= cutoff)
                .collect();
            (entries, (desc.degree() - 2.0).abs() < 1e-9)
        }
    };
    Ok(PrimeCoefficientTable {
        desc_name: desc.name.clone(),
        cutoff,
        quadratic,
        entries,
    })
}

/// Lambda_F(n) for n <= N together with prefix sums psi_F(n).
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub desc_name: String,
    pub pole_order: u32,
    /// `lambda[n]` = Lambda_F(n); index 0 unused.
    pub lambda: Vec<f64>,
    /// `psi[n]` = sum_{m <= n} Lambda_F(m), compensated left-to-right.
    pub psi: Vec<f64>,
}

impl CoefficientTable {
    /// Largest tabulated n.
    pub fn len(&self) -> u64 {
        (self.lambda.len() - 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.len() <= 1
    }

    pub fn lambda_at(&self, n: u64) -> f64 {
        self.lambda[n as usize]
    }

    /// psi_F(x) = sum_{n <= x} Lambda_F(n) for real x.
    pub fn psi(&self, x: f64) -> f64 {
        if x < 1.0 {
            return 0.0;
        }
        let n = x.floor() as usize;
        assert!(
            n < self.psi.len(),
            "psi({x}) beyond tabulated range {}",
            self.len()
        );
        self.psi[n]
    }

    /// All-zero table of length n (test scaffolding for pole-free cases).
    pub fn zeros(desc_name: &str, pole_order: u32, n: u64) -> Self {
        Self {
            desc_name: desc_name.into(),
            pole_order,
            lambda: vec![0.0; n as usize + 1],
            psi: vec![0.0; n as usize + 1],
        }
    }

    fn from_lambda(desc_name: String, pole_order: u32, lambda: Vec<f64>) -> Self {
        let mut psi = vec![0.0; lambda.len()];
        let mut acc = KahanSum::new();
        for (n, &l) in lambda.iter().enumerate().skip(1) {
            acc.add(l);
            psi[n] = acc.value();
        }
        Self {
            desc_name,
            pole_order,
            lambda,
            psi,
        }
    }
}

/// The classical von Mangoldt table: Lambda(p^k) = log p, segmented sieve.
pub fn von_mangoldt_sieve(n: u64) -> Result<CoefficientTable> {
    if n < 1 {
        return Err(Error::Range("von Mangoldt table needs N >= 1".into()));
    }
    let mut lambda = vec![0.0; n as usize + 1];
    primes::for_each_prime(n, |p| {
        let lp = (p as f64).ln();
        let mut q = p;
        loop {
            lambda[q as usize] = lp;
            if q > n / p {
                break;
            }
            q *= p;
        }
    });
    Ok(CoefficientTable::from_lambda("zeta".into(), 1, lambda))
}

/// Lambda_F table for any descriptor, building prime coefficients on the fly.
pub fn lambda_table(desc: &LFunctionDescriptor, n: u64) -> Result<CoefficientTable> {
    let primes = prime_coefficients(desc, n.max(2))?;
    lambda_table_from(desc, &primes, n)
}

/// Lambda_F table from precomputed (possibly cached) prime coefficients.
pub fn lambda_table_from(
    desc: &LFunctionDescriptor,
    primes: &PrimeCoefficientTable,
    n: u64,
) -> Result<CoefficientTable> {
    if n < 1 {
        return Err(Error::Range("coefficient table needs N >= 1".into()));
    }
    if primes.cutoff < n {
        return Err(Error::TableTooShort {
            needed: n,
            have: primes.cutoff,
        });
    }
    let mut lambda = vec![0.0; n as usize + 1];
    for e in &primes.entries {
        if e.p > n {
            break;
        }
        let lp = (e.p as f64).ln();
        let factor = primes.local_factor(e);
        let mut q = e.p;
        let mut k = 1u32;
        loop {
            lambda[q as usize] = satake_power(e.a, k, factor) * lp;
            if q > n / e.p {
                break;
            }
            q *= e.p;
            k += 1;
        }
    }
    Ok(CoefficientTable::from_lambda(
        desc.name.clone(),
        desc.pole_order,
        lambda,
    ))
}
