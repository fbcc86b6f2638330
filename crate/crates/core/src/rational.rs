//! Exact rationals and the two string renderings used throughout the crate.
//!
//! `num_rational::BigRational` already keeps values reduced with a positive
//! denominator, so it is used directly as the scalar type.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from small integers.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Human form: integers without a denominator, otherwise `a/b`.
pub fn to_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Schema-stable form: always `a/b`, including `a/1` for integers.
pub fn to_json_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a`, `-a`, `a/b` or `-a/b` and reduces the result.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `a / b` as a rational, `None` when `b` is zero.
pub fn ratio(a: &BigInt, b: &BigInt) -> Option<Rational> {
    (!b.is_zero()).then(|| Rational::new(a.clone(), b.clone()))
}

/// Integer power with a signed exponent. Panics on `0^negative`.
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e.is_odd() {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// Binomial coefficient C(n, m) as an exact integer; zero when m > n.
pub fn binomial(n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_forms() {
        assert_eq!(to_text(&rat(6, 3)), "2");
        assert_eq!(to_json_string(&rat(6, 3)), "2/1");
        assert_eq!(to_text(&rat(-3, 6)), "-1/2");
        assert_eq!(to_json_string(&int(0)), "0/1");
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn signed_powers() {
        assert_eq!(pow_i(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(pow_i(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow_i(&rat(5, 1), 0), int(1));
    }
}
