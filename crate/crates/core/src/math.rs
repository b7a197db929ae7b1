//! Exact integer helpers shared by the counting and bound code.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` in machine words, `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) / (i + 1) stays integral at each step.
        let g = num_integer::gcd(acc, i + 1);
        let (a, d) = (acc / g, (i + 1) / g);
        acc = a.checked_mul((n as u128 - i) / d)?;
    }
    Some(acc)
}

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// Elementary symmetric polynomials `e_0, …, e_len` of `values`.
pub fn elementary_symmetric(values: &[u64]) -> Vec<BigUint> {
    let mut e = vec![BigUint::zero(); values.len() + 1];
    e[0] = BigUint::one();
    for (i, &x) in values.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let term = &e[k - 1] * x;
            e[k] += term;
        }
    }
    e
}

/// Converts an exact rational that must be a non-negative integer.
///
/// Panics otherwise: a fractional value here means a formula was transcribed
/// wrongly, and no caller can recover from that.
pub fn expect_natural(q: &BigRational, what: &str) -> BigUint {
    assert!(q.is_integer(), "{what}: non-integral value {q}");
    to_natural(&q.to_integer(), what)
}

pub fn to_natural(x: &BigInt, what: &str) -> BigUint {
    x.to_biguint()
        .unwrap_or_else(|| panic!("{what}: negative value {x}"))
}

pub fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
