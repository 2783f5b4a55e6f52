//! Small number-theoretic helpers on machine and big integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The exponent of `p` in `n!`.
pub fn legendre_valuation(n: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    let mut v = 0u64;
    let mut q = n / p;
    while q > 0 {
        v += q;
        q /= p;
    }
    Ok(v as u32)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Exponent of `p` in `n`, for `n > 0`.
pub fn valuation(n: &BigUint, p: u64) -> u32 {
    if n.is_zero() {
        return 0;
    }
    let pb = BigUint::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    BigUint::from(p).pow(valuation(n, p))
}

/// Prime factorization by trial division. Group orders here only have
/// prime factors up to the degree, so this is never slow in practice.
pub fn factorize(n: &BigUint) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n.clone();
    if m.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while !m.is_one() {
        let db = BigUint::from(d);
        if &db * &db > m {
            let last = m.to_u64().expect("cofactor of a permutation group order fits in u64");
            out.push((last, 1));
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    out
}

pub fn prime_divisors(n: &BigUint) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// True if every prime divisor of `n` lies in `pi`.
pub fn is_pi_number(n: &BigUint, pi: &[u64]) -> bool {
    let mut m = n.clone();
    for &p in pi {
        let pb = BigUint::from(p);
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = q;
        }
    }
    m.is_one()
}

/// True if no prime of `pi` divides `n`.
pub fn is_pi_prime_number(n: &BigUint, pi: &[u64]) -> bool {
    pi.iter().all(|&p| !(n % BigUint::from(p)).is_zero())
}

/// The `pi`-part of `n`.
pub fn pi_part(n: &BigUint, pi: &[u64]) -> BigUint {
    pi.iter().fold(BigUint::one(), |acc, &p| acc * p_part(n, p))
}

/// True if `n` is `p^k` for some `k >= 0`.
pub fn is_p_power(n: &BigUint, p: u64) -> bool {
    !n.is_zero() && p_part(n, p) == *n
}
