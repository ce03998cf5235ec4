//! Polynomials in the ordering parameter `s` over the rationals.
//!
//! This is the coefficient ring for every series, table and triangle in the
//! crate. Keeping `s` as an indeterminate makes statements such as "for all
//! s" exact identities in `Q[s]`; a numeric ordering parameter is just a
//! constant polynomial.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, Rational};

/// Dense polynomial in `s`; `coeffs[i]` multiplies `s^i`. Trailing zeros are
/// always trimmed so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SParamPoly {
    coeffs: Vec<Rational>,
}

impl SParamPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// The indeterminate `s` itself.
    pub fn s() -> Self {
        Self::from_coeffs(vec![rat(0), rat(1)])
    }

    /// `a + b s` with rational `a`, `b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Returns the value if this polynomial does not depend on `s`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// CSV cell: `p/q` when constant, otherwise the quoted polynomial.
    pub fn csv_cell(&self) -> String {
        match self.as_constant() {
            Some(q) => q.to_string(),
            None => format!("\"{self}\""),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Substitutes `s := other` (Horner).
    pub fn compose(&self, other: &SParamPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * other) + &Self::constant(c.clone()))
    }

    /// Formal derivative with respect to `s`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Exact division; fails unless `divisor` divides `self` in `Q[s]`.
    pub fn div_exact(&self, divisor: &SParamPoly) -> Result<Self> {
        let inexact = || Error::InexactDivision {
            divisor: divisor.to_string(),
        };
        let dd = divisor.degree().ok_or_else(inexact)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(Self::zero()) } else { Err(inexact()) };
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Inverse in `Q[s]`, which exists only for nonzero constants.
    pub fn try_inverse(&self) -> Result<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Ok(Self::constant(c.recip())),
            _ => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Parses the serialized form: a list of rational strings in ascending
    /// powers of `s`.
    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        parts
            .iter()
            .map(|p| parse_rational(p.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

impl From<Rational> for SParamPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Zero for SParamPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for SParamPoly {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<'a> Add<&'a SParamPoly> for &SParamPoly {
    type Output = SParamPoly;
    fn add(self, rhs: &'a SParamPoly) -> SParamPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        SParamPoly::from_coeffs(out)
    }
}

impl<'a> Sub<&'a SParamPoly> for &SParamPoly {
    type Output = SParamPoly;
    fn sub(self, rhs: &'a SParamPoly) -> SParamPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a SParamPoly> for &SParamPoly {
    type Output = SParamPoly;
    fn mul(self, rhs: &'a SParamPoly) -> SParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return SParamPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SParamPoly::from_coeffs(out)
    }
}

impl Neg for &SParamPoly {
    type Output = SParamPoly;
    fn neg(self) -> SParamPoly {
        SParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for SParamPoly {
    type Output = SParamPoly;
    fn neg(self) -> SParamPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<SParamPoly> for SParamPoly {
            type Output = SParamPoly;
            fn $m(self, rhs: SParamPoly) -> SParamPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a SParamPoly> for SParamPoly {
            type Output = SParamPoly;
            fn $m(self, rhs: &'a SParamPoly) -> SParamPoly { (&self).$m(rhs) }
        }
        impl $tr<SParamPoly> for &SParamPoly {
            type Output = SParamPoly;
            fn $m(self, rhs: SParamPoly) -> SParamPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&SParamPoly> for SParamPoly {
    fn add_assign(&mut self, rhs: &SParamPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&SParamPoly> for SParamPoly {
    fn sub_assign(&mut self, rhs: &SParamPoly) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&SParamPoly> for SParamPoly {
    fn mul_assign(&mut self, rhs: &SParamPoly) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for SParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for SParamPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SParamPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(deserializer)?;
        SParamPoly::from_strings(&parts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(cs: &[i64]) -> SParamPoly {
        SParamPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 1]); // 1 + s
        let b = p(&[1, -1]); // 1 - s
        assert_eq!(&a * &b, p(&[1, 0, -1]));
        assert_eq!(&a + &b, p(&[2]));
        assert_eq!(&a - &a, SParamPoly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn exact_division() {
        let num = p(&[1, 0, -1]);
        assert_eq!(num.div_exact(&p(&[1, 1])).unwrap(), p(&[1, -1]));
        assert!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])).is_err());
        assert!(num.div_exact(&SParamPoly::zero()).is_err());
        assert_eq!(p(&[3]).div_exact(&p(&[2])).unwrap(), SParamPoly::constant(ratio(3, 2)));
    }

    #[test]
    fn compose_and_eval() {
        let a = p(&[1, 2, 1]); // (1+s)^2
        assert_eq!(a.compose(&p(&[-1, 1])), p(&[0, 0, 1]));
        assert_eq!(a.eval(&rat(-1)), rat(0));
        assert_eq!(a.derivative(), p(&[2, 2]));
    }

    #[test]
    fn display_and_serde() {
        let a = SParamPoly::from_coeffs(vec![rat(1), rat(-1), ratio(3, 4)]);
        assert_eq!(a.to_string(), "1 - s + 3/4*s^2");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"["1","-1","3/4"]"#);
        let back: SParamPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert_eq!(SParamPoly::zero().to_string(), "0");
    }
}
