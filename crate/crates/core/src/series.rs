//! Truncated univariate formal power series with coefficients in `Q[s]`.
//!
//! A `TruncSeries` of order `N` stores the exact coefficients of
//! `z^0 ..= z^N`; everything beyond is unknown. Binary operations return the
//! smaller of the two operand orders. The truncation order is always passed
//! explicitly, there is no global precision.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::spoly::SParamPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct TruncSeries {
    trunc_order: usize,
    coeffs: Vec<SParamPoly>,
}

#[derive(Deserialize)]
struct RawSeries {
    trunc_order: usize,
    coeffs: Vec<SParamPoly>,
}

impl TryFrom<RawSeries> for TruncSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        if raw.coeffs.len() != raw.trunc_order + 1 {
            return Err(Error::InvalidParameter(format!(
                "series of order {} needs {} coefficients, found {}",
                raw.trunc_order,
                raw.trunc_order + 1,
                raw.coeffs.len()
            )));
        }
        Ok(Self::new(raw.coeffs, raw.trunc_order))
    }
}

impl TruncSeries {
    /// Builds a series of order `n` from leading coefficients; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn new(mut coeffs: Vec<SParamPoly>, n: usize) -> Self {
        coeffs.resize(n + 1, SParamPoly::zero());
        Self {
            trunc_order: n,
            coeffs,
        }
    }

    pub fn from_rationals(coeffs: Vec<Rational>, n: usize) -> Self {
        Self::new(coeffs.into_iter().map(SParamPoly::constant).collect(), n)
    }

    pub fn from_ints(coeffs: &[i64], n: usize) -> Self {
        Self::from_rationals(coeffs.iter().map(|&c| rat(c)).collect(), n)
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Vec::new(), n)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(SParamPoly::one(), n)
    }

    pub fn constant(c: SParamPoly, n: usize) -> Self {
        Self::new(vec![c], n)
    }

    /// The series variable `z`.
    pub fn var(n: usize) -> Self {
        Self::monomial(SParamPoly::one(), 1, n)
    }

    pub fn monomial(c: SParamPoly, k: usize, n: usize) -> Self {
        let mut out = Self::zero(n);
        if k <= n {
            out.coeffs[k] = c;
        }
        out
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc_order
    }

    pub fn coeffs(&self) -> &[SParamPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &SParamPoly {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowers the truncation order; a larger `n` is clamped to the current one.
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.trunc_order);
        Self::new(self.coeffs[..=n].to_vec(), n)
    }

    pub fn scale(&self, c: &SParamPoly) -> Self {
        Self {
            trunc_order: self.trunc_order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        Self {
            trunc_order: self.trunc_order,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Replaces `z` by `c z`.
    pub fn dilate(&self, c: &SParamPoly) -> Self {
        let mut pow = SParamPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow = &pow * c;
        }
        Self {
            trunc_order: self.trunc_order,
            coeffs,
        }
    }

    /// Multiplies by `z^k`, keeping the truncation order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![SParamPoly::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs, self.trunc_order)
    }

    /// Formal derivative; the result is known one order less.
    pub fn derivative(&self) -> Self {
        let n = self.trunc_order.saturating_sub(1);
        let coeffs = (1..=self.trunc_order)
            .map(|k| self.coeffs[k].scale(&rat(k as i64)))
            .collect();
        Self::new(coeffs, n)
    }

    /// Antiderivative with zero constant term; known one order more.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![SParamPoly::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&Rational::new(1.into(), (k as i64 + 1).into()))),
        );
        Self::new(coeffs, self.trunc_order + 1)
    }

    /// Substitutes a value for `s` in every coefficient.
    pub fn substitute_s(&self, at: &SParamPoly) -> Self {
        Self {
            trunc_order: self.trunc_order,
            coeffs: self.coeffs.iter().map(|c| c.compose(at)).collect(),
        }
    }

    /// `1 / self`; the constant term must be a nonzero rational.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse()?;
        let n = self.trunc_order;
        let mut out: Vec<SParamPoly> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = SParamPoly::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &out[k - j]);
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Self::new(out, n))
    }

    pub fn div(&self, other: &TruncSeries) -> Result<Self> {
        Ok(self * &other.reciprocal()?)
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one(self.trunc_order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `outer(inner(z))`. The inner series must vanish at the origin.
    pub fn compose(&self, inner: &TruncSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = self.trunc_order.min(inner.trunc_order);
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse. The linear coefficient must be a nonzero
    /// rational; a non-unit one is scaled out and restored afterwards.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = self.trunc_order;
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let lead = match self.coeffs[1].as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::ZeroLinearCoefficient),
        };
        let unit = self.scale_rat(&lead.recip());

        // Each pass fixes one coefficient: with b_n unknown, [z^n] f(b(z)) is
        // b_n plus terms in b_1..b_{n-1}, so b_n cancels the residual.
        let mut inv = Self::var(n);
        for k in 2..=n {
            let residual = unit.compose(&inv)?.coeffs[k].clone();
            inv.coeffs[k] = -residual;
        }
        Ok(inv.dilate(&SParamPoly::constant(lead.recip())))
    }

    /// Formal exponential; requires zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = self.trunc_order;
        let mut out: Vec<SParamPoly> = vec![SParamPoly::one()];
        for m in 1..=n {
            let mut acc = SParamPoly::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[k] * &out[m - k]).scale(&rat(k as i64));
            }
            out.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        Ok(Self::new(out, n))
    }

    /// Formal logarithm; requires constant term exactly 1.
    pub fn log(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let n = self.trunc_order;
        let mut out: Vec<SParamPoly> = vec![SParamPoly::zero()];
        for m in 1..=n {
            let mut acc = SParamPoly::zero();
            for k in 1..m {
                acc += &(&out[k] * &self.coeffs[m - k]).scale(&rat(k as i64));
            }
            let g = &self.coeffs[m] - &acc.scale(&Rational::new(1.into(), (m as i64).into()));
            out.push(g);
        }
        Ok(Self::new(out, n))
    }

    /// `self^q = exp(q log self)` for rational `q`; constant term must be 1.
    pub fn pow_rational(&self, q: &Rational) -> Result<Self> {
        self.require_unit_constant()?;
        if q.is_zero() {
            return Ok(Self::one(self.trunc_order));
        }
        self.log()?.scale_rat(q).exp()
    }

    fn require_unit_constant(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::ConstantTermNotOne(self.coeffs[0].to_string()))
        }
    }
}

impl<'a> Add<&'a TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.trunc_order.min(rhs.trunc_order);
        let coeffs = (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        TruncSeries::new(coeffs, n)
    }
}

impl<'a> Sub<&'a TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.trunc_order.min(rhs.trunc_order);
        let coeffs = (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        TruncSeries::new(coeffs, n)
    }
}

impl<'a> Mul<&'a TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.trunc_order.min(rhs.trunc_order);
        let mut out = vec![SParamPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TruncSeries::new(out, n)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            trunc_order: self.trunc_order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn exp_z(n: usize) -> TruncSeries {
        TruncSeries::var(n).exp().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncSeries::from_ints(&[1, 1], 4);
        let b = TruncSeries::from_ints(&[1, -1], 4);
        assert_eq!(&a * &b, TruncSeries::from_ints(&[1, 0, -1], 4));
    }

    #[test]
    fn exp_squared_matches_two_z() {
        // oracle: e^{2z} has coefficients 2^n / n!
        let sq = &exp_z(3) * &exp_z(3);
        let expected = TruncSeries::from_rationals(vec![rat(1), rat(2), rat(2), ratio(4, 3)], 3);
        assert_eq!(sq, expected);
    }

    #[test]
    fn multiplication_by_one() {
        let a = TruncSeries::from_ints(&[3, -1, 4, 1, 5], 4);
        assert_eq!(&a * &TruncSeries::one(4), a);
    }

    #[test]
    fn truncation_is_min_of_operands() {
        let a = TruncSeries::from_ints(&[1, 1], 6);
        let b = TruncSeries::from_ints(&[1, 1], 3);
        assert_eq!((&a * &b).trunc_order(), 3);
        assert_eq!((&a + &b).trunc_order(), 3);
    }

    #[test]
    fn compose_with_identity() {
        let geom = TruncSeries::from_ints(&[1; 8], 7);
        assert_eq!(geom.compose(&TruncSeries::var(7)).unwrap(), geom);
    }

    #[test]
    fn exp_minus_one_after_log() {
        let n = 8;
        let em1 = &exp_z(n) - &TruncSeries::one(n);
        let log1p = TruncSeries::from_ints(&[1, 1], n).log().unwrap();
        assert_eq!(em1.compose(&log1p).unwrap(), TruncSeries::var(n));
    }

    #[test]
    fn laguerre_pair_composes_to_identity() {
        // D/(1-D) after z/(1+z): oracle is direct substitution, z/(1+z) / (1 - z/(1+z)) = z
        let n = 9;
        let one = TruncSeries::one(n);
        let z = TruncSeries::var(n);
        let outer = z.div(&(&one - &z)).unwrap();
        let inner = z.div(&(&one + &z)).unwrap();
        assert_eq!(outer.compose(&inner).unwrap(), z);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let a = TruncSeries::from_ints(&[1, 1], 3);
        assert_eq!(a.compose(&a), Err(Error::NonZeroConstantTerm));
    }

    #[test]
    fn revert_examples() {
        let n = 7;
        let z = TruncSeries::var(n);
        assert_eq!(z.revert().unwrap(), z);

        // 4D/(4-D^2) reverts to 2z/(1+sqrt(1+z^2)); oracle expansion computed
        // independently via the radical: z - z^3/4 + z^5/8 - 5 z^7/64
        let four = TruncSeries::from_ints(&[4], n);
        let f = z.scale_rat(&rat(4)).div(&(&four - &z.powi(2))).unwrap();
        let expected = TruncSeries::from_rationals(
            vec![rat(0), rat(1), rat(0), ratio(-1, 4), rat(0), ratio(1, 8), rat(0), ratio(-5, 64)],
            n,
        );
        assert_eq!(f.revert().unwrap(), expected);

        // e^z - 1 reverts to log(1+z)
        let em1 = &exp_z(n) - &TruncSeries::one(n);
        let log_terms = (0..=n as i64)
            .map(|k| if k == 0 { rat(0) } else { ratio(if k % 2 == 1 { 1 } else { -1 }, k) })
            .collect();
        assert_eq!(em1.revert().unwrap(), TruncSeries::from_rationals(log_terms, n));
    }

    #[test]
    fn revert_scales_non_unit_leading_coefficient() {
        let n = 6;
        let f = TruncSeries::from_rationals(vec![rat(0), rat(3), rat(1), ratio(-2, 5)], n);
        let inv = f.revert().unwrap();
        assert_eq!(f.compose(&inv).unwrap(), TruncSeries::var(n));
        assert_eq!(inv.compose(&f).unwrap(), TruncSeries::var(n));
    }

    #[test]
    fn revert_rejects_zero_linear_term() {
        let f = TruncSeries::from_ints(&[0, 0, 1], 4);
        assert_eq!(f.revert(), Err(Error::ZeroLinearCoefficient));
        // symbolic linear coefficient is not a unit of Q[s] either
        let g = TruncSeries::new(vec![SParamPoly::zero(), SParamPoly::s()], 4);
        assert_eq!(g.revert(), Err(Error::ZeroLinearCoefficient));
    }

    #[test]
    fn pow_rational_examples() {
        let n = 6;
        let one_plus_z = TruncSeries::from_ints(&[1, 1], n);
        let alt = TruncSeries::from_ints(&[1, -1, 1, -1, 1, -1, 1], n);
        assert_eq!(one_plus_z.pow_rational(&rat(-1)).unwrap(), alt);
        assert_eq!(one_plus_z.pow_rational(&rat(0)).unwrap(), TruncSeries::one(n));

        // sqrt(1 + 2 s z + z^2): oracle is squaring back to the radicand
        let radicand = TruncSeries::new(
            vec![SParamPoly::one(), SParamPoly::s().scale(&rat(2)), SParamPoly::one()],
            n,
        );
        let root = radicand.pow_rational(&ratio(1, 2)).unwrap();
        assert_eq!(&root * &root, radicand);
        assert_eq!(root.coeff(1), &SParamPoly::s());
        let s2 = SParamPoly::s().pow(2);
        assert_eq!(root.coeff(2), &(&SParamPoly::one() - &s2).scale(&ratio(1, 2)));
    }

    #[test]
    fn pow_rational_rejects_non_unit_constant() {
        let f = TruncSeries::from_ints(&[2, 1], 4);
        assert!(matches!(f.pow_rational(&ratio(1, 2)), Err(Error::ConstantTermNotOne(_))));
    }

    #[test]
    fn exp_log_examples() {
        let n = 7;
        assert_eq!(TruncSeries::zero(n).exp().unwrap(), TruncSeries::one(n));
        assert_eq!(exp_z(n).log().unwrap(), TruncSeries::var(n));

        // exp(r z) with symbolic r = s: coefficients s^k / k!
        let rz = TruncSeries::var(n).scale(&SParamPoly::s());
        let e = rz.exp().unwrap();
        let mut fact = rat(1);
        for k in 0..=n {
            if k > 0 {
                fact *= rat(k as i64);
            }
            assert_eq!(e.coeff(k), &SParamPoly::s().pow(k as u32).scale(&fact.recip()));
        }
        assert!(TruncSeries::one(n).exp().is_err());
        assert!(TruncSeries::zero(n).log().is_err());
    }

    #[test]
    fn serialization_shape() {
        let a = TruncSeries::from_rationals(vec![rat(1), ratio(-1, 2)], 2);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"trunc_order":2,"coeffs":[["1"],["-1/2"],[]]}"#);
        let back: TruncSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        let short = r#"{"trunc_order":3,"coeffs":[["1"]]}"#;
        assert!(serde_json::from_str::<TruncSeries>(short).is_err());
    }
}
