//! Exact rational scalars and the small amount of integer combinatorics the
//! rest of the crate leans on.
//!
//! `Rational` is `num_rational::BigRational`; it is always reduced and its
//! `Display` already prints `p/q`, or `p` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, or `p/q` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::ParseRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form used by every serializer in the crate.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `x (x - step) (x - 2 step) ... ` with `len` factors.
pub fn falling_factorial(x: &Rational, len: u32, step: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..len {
        acc *= &term;
        term -= step;
    }
    acc
}

/// `x (x + step) (x + 2 step) ... ` with `len` factors.
pub fn rising_factorial(x: &Rational, len: u32, step: &Rational) -> Rational {
    falling_factorial(x, len, &-step)
}

/// Serde adapter storing a rational as its canonical `p/q` string.
pub mod serde_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-8/4").unwrap()), "-2");
        assert_eq!(format_rational(&parse_rational(" 7 ").unwrap()), "7");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        // 2 * 1 with unit stride, 2 * 3 rising
        assert_eq!(falling_factorial(&rat(2), 2, &rat(1)), rat(2));
        assert_eq!(falling_factorial(&rat(2), 3, &rat(1)), rat(0));
        assert_eq!(rising_factorial(&rat(2), 2, &rat(1)), rat(6));
        assert_eq!(falling_factorial(&rat(5), 0, &rat(1)), rat(1));
    }
}
