//! Prime generation: a simple odd-only sieve plus a segmented driver so the
//! working set stays cache-sized for limits in the 10^6–10^7 range.

const SEGMENT: usize = 1 << 18;

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_prime(limit, |p| out.push(p));
    out
}

/// Calls `f` on every prime `<= limit` in ascending order.
pub fn for_each_prime<F: FnMut(u64)>(limit: u64, mut f: F) {
    if limit < 2 {
        return;
    }
    f(2);
    if limit < 3 {
        return;
    }

    // Base primes up to sqrt(limit), odd only.
    let root = (limit as f64).sqrt() as u64 + 1;
    let mut base = Vec::new();
    {
        let n = (root as usize) / 2 + 1;
        let mut comp = vec![false; n]; // comp[i] <-> 2i+1
        let mut i = 1;
        while 2 * i + 1 <= root as usize {
            if !comp[i] {
                let p = 2 * i + 1;
                let mut j = (p * p) / 2;
                while j < n {
                    comp[j] = true;
                    j += p;
                }
            }
            i += 1;
        }
        for (i, &c) in comp.iter().enumerate().skip(1) {
            if !c {
                base.push((2 * i + 1) as u64);
            }
        }
    }
    for &p in &base {
        if p <= limit {
            f(p);
        }
    }

    // Segmented sieve over odd numbers above the last base prime.
    let mut lo = {
        let last_base = *base.last().unwrap_or(&1);
        (last_base + 2) | 1
    };
    let mut seg = vec![false; SEGMENT];
    while lo <= limit {
        let hi = (lo + 2 * SEGMENT as u64 - 2).min(limit);
        let len = ((hi - lo) / 2 + 1) as usize;
        seg[..len].fill(false);
        for &p in &base {
            if p * p > hi {
                break;
            }
            // first odd multiple of p in [lo, hi], at least p*p
            let mut start = p * p;
            if start < lo {
                let k = (lo + p - 1) / p;
                start = k * p;
                if start % 2 == 0 {
                    start += p;
                }
            }
            let mut j = start;
            while j <= hi {
                seg[((j - lo) / 2) as usize] = true;
                j += 2 * p;
            }
        }
        for (i, &c) in seg[..len].iter().enumerate() {
            if !c {
                f(lo + 2 * i as u64);
            }
        }
        lo = hi + 2;
    }
}

/// Deterministic Miller–Rabin for u64, used by tests and small lookups.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}
