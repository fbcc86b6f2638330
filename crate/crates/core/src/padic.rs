//! Base-p digits and exact p-adic valuations.
//!
//! Binomial valuations are available through two independent routes: the
//! digit-sum formula `(δ(m) + δ(n-m) - δ(n)) / (p - 1)` and an explicit
//! carry count of `m + (n - m)` in base p (Kummer). Both agree with the
//! valuation of the exact integer `C(n, m)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A prime number, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Self> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Prime::new(value)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// Deterministic Miller-Rabin; the first twelve prime bases cover all of u64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A p-adic valuation. `Infinite` is the valuation of zero and orders above
/// every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl PartialEq<i64> for Valuation {
    fn eq(&self, other: &i64) -> bool {
        *self == Valuation::Finite(*other)
    }
}

impl PartialOrd<i64> for Valuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Valuation::Finite(*other)))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite valuations serialize as JSON integers, infinity as the string `"inf"`.
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Base-p digits of `n`, least significant first. Zero has no digits.
pub fn digits_base_p(n: u64, p: Prime) -> Vec<u64> {
    let p = p.get();
    let mut n = n;
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// δ_p(n), the sum of the base-p digits of `n`.
pub fn digit_sum(n: u64, p: Prime) -> u64 {
    digits_base_p(n, p).into_iter().sum()
}

/// Legendre: v_p(n!) = (n - δ_p(n)) / (p - 1).
pub fn val_factorial(n: u64, p: Prime) -> Valuation {
    Valuation::Finite(((n - digit_sum(n, p)) / (p.get() - 1)) as i64)
}

fn check_binomial(n: u64, m: u64) -> Result<()> {
    if m > n {
        Err(Error::BinomialOutOfRange { n, m })
    } else {
        Ok(())
    }
}

/// v_p(C(n, m)) from digit sums.
pub fn val_binomial_digits(n: u64, m: u64, p: Prime) -> Result<Valuation> {
    check_binomial(n, m)?;
    let num = digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p);
    Ok(Valuation::Finite((num / (p.get() - 1)) as i64))
}

/// v_p(C(n, m)) as the number of carries when adding `m` and `n - m` in base p.
pub fn val_binomial_kummer(n: u64, m: u64, p: Prime) -> Result<Valuation> {
    check_binomial(n, m)?;
    let a = digits_base_p(m, p);
    let b = digits_base_p(n - m, p);
    let mut carry = 0;
    let mut carries = 0;
    for i in 0..a.len().max(b.len()) {
        let s = a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0) + carry;
        carry = u64::from(s >= p.get());
        carries += carry;
    }
    Ok(Valuation::Finite(carries as i64))
}

/// v_p of an integer by repeated division.
pub fn val_integer(n: &BigInt, p: Prime) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = p.as_bigint();
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

/// v_p(a/b) = v_p(a) - v_p(b); infinite for zero.
pub fn val_rational(x: &Rational, p: Prime) -> Valuation {
    match (val_integer(x.numer(), p), val_integer(x.denom(), p)) {
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        _ => Valuation::Infinite,
    }
}

/// A p-adic absolute value `p^(-v)`, kept in exact power form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    Zero,
    Power { base: u64, exponent: i64 },
}

impl Norm {
    /// Exponents beyond this are not expanded into a rational.
    pub const MAX_EXPANDED_EXPONENT: i64 = 1 << 16;

    /// The exact rational value, when the exponent is small enough to expand.
    pub fn value(&self) -> Option<Rational> {
        match *self {
            Norm::Zero => Some(Rational::zero()),
            Norm::Power { base, exponent } => (exponent.abs() <= Self::MAX_EXPANDED_EXPONENT)
                .then(|| rational::pow_i(&rational::int(base as i64), exponent)),
        }
    }
}

pub fn norm(v: Valuation, p: Prime) -> Norm {
    match v {
        Valuation::Infinite => Norm::Zero,
        Valuation::Finite(v) => Norm::Power {
            base: p.get(),
            exponent: -v,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, int, rat};

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn primality() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(11).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert!(Prime::new(18446744073709551557).is_ok());
        // Strong pseudoprime to several small bases.
        assert!(Prime::new(3215031751).is_err());
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), naive(n), "n = {n}");
        }
    }

    #[test]
    fn digits() {
        assert_eq!(digits_base_p(10, p(2)), vec![0, 1, 0, 1]);
        assert!(digits_base_p(0, p(5)).is_empty());
        assert_eq!(digits_base_p(8, p(3)), vec![2, 2]);
        assert_eq!(digit_sum(10, p(2)), 2);
        assert_eq!(digit_sum(8, p(3)), 4);
        assert_eq!(digit_sum(5, p(3)), 3);
        assert_eq!(digit_sum(0, p(7)), 0);
    }

    #[test]
    fn factorial_valuations() {
        // 4! = 24 = 2^3 * 3
        assert_eq!(val_factorial(4, p(2)), 3);
        assert_eq!(val_factorial(0, p(7)), 0);
        assert_eq!(val_factorial(10, p(5)), 2);
    }

    #[test]
    fn binomial_valuations() {
        assert_eq!(val_binomial_digits(4, 2, p(2)).unwrap(), 1);
        assert_eq!(val_binomial_digits(8, 4, p(3)).unwrap(), 0);
        assert_eq!(val_binomial_digits(17, 0, p(3)).unwrap(), 0);
        assert_eq!(val_binomial_kummer(4, 2, p(2)).unwrap(), 1);
        assert_eq!(val_binomial_kummer(6, 3, p(2)).unwrap(), 2);
        assert_eq!(val_binomial_kummer(5, 5, p(7)).unwrap(), 0);
        assert_eq!(
            val_binomial_digits(2, 3, p(2)),
            Err(Error::BinomialOutOfRange { n: 2, m: 3 })
        );
        assert!(val_binomial_kummer(2, 3, p(2)).is_err());
    }

    #[test]
    fn rational_valuations() {
        assert_eq!(val_rational(&rat(50, 3), p(5)), 2);
        assert_eq!(val_rational(&int(0), p(3)), Valuation::Infinite);
        assert_eq!(val_rational(&rat(2, 7), p(2)), 1);
        assert_eq!(val_rational(&rat(5, 12), p(2)), -2);
        assert_eq!(val_integer(&binomial(8, 4), p(2)), 1);
    }

    #[test]
    fn norms() {
        assert_eq!(norm(Valuation::Finite(2), p(5)).value(), Some(rat(1, 25)));
        assert_eq!(norm(Valuation::Infinite, p(5)).value(), Some(int(0)));
        assert_eq!(norm(Valuation::Finite(-1), p(3)).value(), Some(int(3)));
        assert_eq!(norm(Valuation::Finite(-1), p(3)), Norm::Power { base: 3, exponent: 1 });
        assert_eq!(norm(Valuation::Finite(1 << 20), p(3)).value(), None);
    }

    #[test]
    fn infinity_orders_last() {
        assert!(Valuation::Infinite > Valuation::Finite(i64::MAX));
        assert!(Valuation::Finite(-3) < Valuation::Finite(2));
        assert_eq!(Valuation::Finite(2) + Valuation::Infinite, Valuation::Infinite);
        assert_eq!(Valuation::Infinite.to_string(), "inf");
        assert_eq!(serde_json::to_string(&Valuation::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Valuation::Finite(-4)).unwrap(), "-4");
    }
}
