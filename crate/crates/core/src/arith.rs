//! Small integer helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest `e` with `p^e | n`; `None` for `n = 0`.
pub fn valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() || p < 2 {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut e = 0;
    while n.is_multiple_of(&p) {
        n /= &p;
        e += 1;
    }
    Some(e)
}

/// `Some(e)` when `|n| = p^e` exactly.
pub fn exact_power_of(n: &BigInt, p: u64) -> Option<u32> {
    let e = valuation(n, p)?;
    (n.abs() == BigInt::from(p).pow(e)).then_some(e)
}

pub fn pow(p: u64, e: u32) -> BigInt {
    BigInt::from(p).pow(e)
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn is_unit(n: &BigInt) -> bool {
    n.abs().is_one()
}

/// Multiplicative inverse of `a` modulo `m`, if it exists.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m` (requires `gcd(a, m) = 1`).
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m < 2 || (a as u128).gcd(&(m as u128)) != 1 {
        return None;
    }
    let mut x = a % m;
    for k in 1..=m {
        if x == 1 {
            return Some(k);
        }
        x = ((x as u128 * a as u128) % m as u128) as u64;
    }
    None
}
