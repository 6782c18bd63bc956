//! Integer utilities shared across the crate: primality testing and
//! factorisation of the (moderately sized) integers that appear as norms,
//! discriminants, and field radicands.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic Miller–Rabin for `u64` (the standard seven-witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Pollard's rho (Brent variant) on `u64`; `n` must be odd, composite, > 1.
fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Full factorisation of a `u64` into `prime -> exponent`.
pub fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    if n <= 1 {
        return out;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

/// Miller–Rabin on `BigInt` with the fixed witness set above; exact for
/// values below 3.3e24 and overwhelmingly reliable beyond.
fn is_prime_bigint(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho on `BigInt`; `n` odd composite.
fn rho_bigint(n: &BigInt) -> BigInt {
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2u32);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Factor a nonzero `BigInt` (sign ignored) into `prime -> exponent`.
///
/// Prime factors must fit in `u64`; larger ones report
/// [`Error::FactorTooLarge`]. That bound is far above anything produced by
/// the curve constructions in this crate.
pub fn factor_bigint(n: &BigInt) -> Result<BTreeMap<u64, u32>> {
    let mut n = n.abs();
    if n.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut out = BTreeMap::new();
    for p in [2u32, 3, 5, 7, 11, 13] {
        let p = BigInt::from(p);
        while (&n % &p).is_zero() {
            *out.entry(p.to_u64().unwrap()).or_insert(0) += 1;
            n /= &p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            for (p, e) in factor_u64(small) {
                *out.entry(p).or_insert(0) += e;
            }
            continue;
        }
        if is_prime_bigint(&m) {
            return Err(Error::FactorTooLarge);
        }
        let d = rho_bigint(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    Ok(out)
}

/// True when `n` (nonzero) has no repeated prime factor.
pub fn is_squarefree_i64(n: i64) -> bool {
    let m = n.unsigned_abs();
    m != 0 && factor_u64(m).values().all(|&e| e == 1)
}

/// p-adic valuation of a nonzero `BigInt`.
pub fn valuation_bigint(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_carmichael() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(13));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to first four bases
    }

    #[test]
    fn factor_roundtrip_u64() {
        for n in [2u64, 12, 343, 274625, 1124864, 9_699_690, 600_851_475_143] {
            let f = factor_u64(n);
            let back: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(back, n);
            assert!(f.keys().all(|&p| is_prime_u64(p)));
        }
    }

    #[test]
    fn factor_bigint_large_smooth() {
        // 2^45 * 3^12 * 65^3, the kind of discriminant norm the curve code produces.
        let n = BigInt::from(2u32).pow(45) * BigInt::from(3u32).pow(12) * BigInt::from(65u32).pow(3);
        let f = factor_bigint(&n).unwrap();
        assert_eq!(f[&2], 45);
        assert_eq!(f[&3], 12);
        assert_eq!(f[&5], 3);
        assert_eq!(f[&13], 3);
    }

    #[test]
    fn squarefree_check() {
        assert!(is_squarefree_i64(-33));
        assert!(is_squarefree_i64(10));
        assert!(!is_squarefree_i64(12));
        assert!(!is_squarefree_i64(-9));
    }

    #[test]
    fn bigint_valuation() {
        let n = BigInt::from(-41472);
        assert_eq!(valuation_bigint(&n, 2), 9);
        assert_eq!(valuation_bigint(&n, 3), 4);
        assert_eq!(valuation_bigint(&n, 7), 0);
    }
}
