use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// `D_n = lcm(1, ..., n)`, assembled as the product of the largest prime
/// powers `p^k <= n`.
pub fn lcm_upto(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroLcmIndex);
    }
    let mut acc = BigInt::one();
    for p in primes_upto(n) {
        let mut pk = p;
        while let Some(next) = pk.checked_mul(p).filter(|&v| v <= n) {
            pk = next;
        }
        acc *= pk;
    }
    Ok(acc)
}

/// If `n` is a prime power `p^k` (k >= 1), returns `p`.
fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return (m == 1).then_some(p);
        }
        p += 1;
    }
    Some(n)
}

/// Iterator over `(n, D_n)` for `n = 1, 2, ...`, growing `D_n`
/// incrementally: `D_n = p * D_{n-1}` when `n` is a power of the prime `p`,
/// otherwise `D_n = D_{n-1}`.
#[derive(Clone, Debug)]
pub struct LcmSequence {
    n: u64,
    value: BigInt,
}

impl LcmSequence {
    pub fn new() -> Self {
        Self {
            n: 0,
            value: BigInt::one(),
        }
    }
}

impl Default for LcmSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for LcmSequence {
    type Item = (u64, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        if let Some(p) = prime_power_base(self.n) {
            self.value *= p;
        }
        Some((self.n, self.value.clone()))
    }
}
