//! The Hsu-Shiue family `HS(A, B, r)` of generalized Stirling numbers.
//!
//! As an exponential Riordan array, `HS(A, B, r) = R[d, h]` with
//! `d = (1+Az)^{r/A}` and `h = ((1+Az)^{B/A} - 1)/B`. The `A = 0` and `B = 0`
//! cases are the exponential and logarithmic limits of these expressions.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::egf::BivariateEGF;
use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, falling_factorial, rat, Rational};
use crate::riordan::{RiordanPair, Triangle};
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HSParams {
    #[serde(rename = "A", with = "crate::rational::serde_str")]
    pub a: Rational,
    #[serde(rename = "B", with = "crate::rational::serde_str")]
    pub b: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub r: Rational,
}

impl HSParams {
    pub fn new(a: Rational, b: Rational, r: Rational) -> Self {
        Self { a, b, r }
    }

    pub fn from_ints(a: i64, b: i64, r: i64) -> Self {
        Self::new(rat(a), rat(b), rat(r))
    }

    /// Parameters of the inverse array, `HS(B, A, -r)`.
    pub fn dual(&self) -> Self {
        Self::new(self.b.clone(), self.a.clone(), -self.r.clone())
    }

    /// `HS(-A, -B, -r)`.
    pub fn negated(&self) -> Self {
        Self::new(-self.a.clone(), -self.b.clone(), -self.r.clone())
    }
}

/// `(1 + a z)^{c/a}`, or `e^{cz}` when `a = 0`.
pub(crate) fn binomial_power(a: &Rational, c: &Rational, order: usize) -> Result<TruncSeries> {
    if a.is_zero() {
        return TruncSeries::var(order).scale_rat(c).exp();
    }
    let base = TruncSeries::from_rationals(vec![Rational::one(), a.clone()], order);
    base.pow_rational(&(c / a))
}

/// `((1 + a z)^{b/a} - 1)/b` with its limits: `(e^{bz} - 1)/b` at `a = 0`,
/// `log(1 + a z)/a` at `b = 0`, and `z` at `a = b = 0`.
pub(crate) fn hs_h(a: &Rational, b: &Rational, order: usize) -> Result<TruncSeries> {
    if b.is_zero() {
        if a.is_zero() {
            return Ok(TruncSeries::var(order));
        }
        let base = TruncSeries::from_rationals(vec![Rational::one(), a.clone()], order);
        return Ok(base.log()?.scale_rat(&(Rational::one() / a)));
    }
    let p = &binomial_power(a, b, order)? - &TruncSeries::one(order);
    Ok(p.scale_rat(&(Rational::one() / b)))
}

/// `R[d_HS, h_HS]` truncated at `z^order`.
pub fn hs_pair(p: &HSParams, order: usize) -> Result<RiordanPair> {
    let d = binomial_power(&p.a, &p.r, order)?;
    let h = hs_h(&p.a, &p.b, order)?;
    RiordanPair::riordan(d, h)
}

/// `HS_{n,k}` by finite differences:
/// `(1/(B^k k!)) Σ_j (-1)^{k-j} C(k,j) (Bj + r)^{falling n, stride A}`.
pub fn hs_coeff_sum(p: &HSParams, n: usize, k: usize) -> Result<Rational> {
    if p.b.is_zero() {
        return Err(Error::InvalidParameter(
            "summation formula needs B != 0; use the recurrence".into(),
        ));
    }
    if k > n {
        return Ok(Rational::zero());
    }
    let mut acc = Rational::zero();
    for j in 0..=k {
        let x = &p.b * Rational::from_integer(j.into()) + &p.r;
        let mut term = falling_factorial(&x, n as u32, &p.a)
            * Rational::from_integer(binomial(k as u32, j as u32));
        if (k - j) % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    let denom = num_traits::pow(p.b.clone(), k) * Rational::from_integer(factorial(k as u32));
    Ok(acc / denom)
}

/// The triangle from `HS_{n+1,k+1} = [-An + B(k+1) + r] HS_{n,k+1} + HS_{n,k}`.
pub fn hs_triangle_rec(p: &HSParams, order: usize) -> Triangle {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..order {
        let prev = &rows[n];
        let an = &p.a * Rational::from_integer(n.into());
        let mut next = vec![Rational::zero(); n + 2];
        for (k1, slot) in next.iter_mut().enumerate() {
            let stay = prev.get(k1).map_or_else(Rational::zero, |c| {
                let w = &p.b * Rational::from_integer(k1.into()) + &p.r - &an;
                w * c
            });
            let step = if k1 > 0 { prev[k1 - 1].clone() } else { Rational::zero() };
            *slot = stay + step;
        }
        rows.push(next);
    }
    Triangle::from_fn(order, |n, k| SParamPoly::constant(rows[n][k].clone()))
}

/// `(1+Az)^{r/A} exp{(t/B)[(1+Az)^{B/A} - 1]}` to `z^order`.
pub fn hs_egf(p: &HSParams, order: usize) -> Result<BivariateEGF> {
    let d = binomial_power(&p.a, &p.r, order)?;
    let h = hs_h(&p.a, &p.b, order)?;
    BivariateEGF::from_series(&d, &h)
}

/// Row polynomials of `[(-Az - 1)∂_z + Bt∂_t + (r + t)] F` for `n < N`.
///
/// Reading `F = Σ F_n(t) z^n/n!`, the `z^n/n!` coefficient is
/// `-A n F_n - F_{n+1} + B t F_n' + (r + t) F_n`.
pub fn hs_pde_residual(p: &HSParams, egf: &BivariateEGF) -> Vec<Vec<SParamPoly>> {
    let a = SParamPoly::constant(p.a.clone());
    let b = SParamPoly::constant(p.b.clone());
    let r = SParamPoly::constant(p.r.clone());
    (0..egf.trunc_order())
        .map(|n| {
            let cur = egf.row(n);
            let next = egf.row(n + 1);
            let mut out = vec![SParamPoly::zero(); n + 2];
            let nn = SParamPoly::from_int(n as i64);
            for (k, c) in cur.iter().enumerate() {
                let kk = SParamPoly::from_int(k as i64);
                // -A n F_n + B k t^k + r F_n
                out[k] += &(&(&(&r - &(&a * &nn)) + &(&b * &kk)) * c);
                out[k + 1] += c;
            }
            for (k, c) in next.iter().enumerate() {
                out[k] -= c;
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, rising_factorial};

    fn rats(t: &Triangle, n: usize) -> Vec<Rational> {
        t.row(n).iter().map(|c| c.as_constant().unwrap()).collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn pair_examples() {
        let n = 6;
        let st = hs_pair(&HSParams::from_ints(0, 1, 0), n).unwrap();
        assert_eq!(st.first(), &TruncSeries::one(n));
        assert_eq!(st.second(), &(&TruncSeries::var(n).exp().unwrap() - &TruncSeries::one(n)));

        let lag = hs_pair(&HSParams::from_ints(-1, 1, 1), n).unwrap();
        let inv = TruncSeries::from_ints(&[1, -1], n).reciprocal().unwrap();
        assert_eq!(lag.first(), &inv);
        assert_eq!(lag.second(), &(&inv * &TruncSeries::var(n)));

        let id = hs_pair(&HSParams::from_ints(1, 1, 0), n).unwrap();
        assert_eq!(id.second(), &TruncSeries::var(n));
        let b0 = hs_pair(&HSParams::from_ints(0, 0, 2), n).unwrap();
        assert_eq!(b0.second(), &TruncSeries::var(n));
    }

    #[test]
    fn summation_examples() {
        assert_eq!(hs_coeff_sum(&HSParams::from_ints(0, 1, 0), 4, 2).unwrap(), rat(7));
        assert_eq!(hs_coeff_sum(&HSParams::from_ints(-1, 1, 1), 3, 1).unwrap(), rat(18));
        let p = HSParams::new(ratio(2, 3), ratio(-5, 2), ratio(1, 7));
        for n in 0..6 {
            assert_eq!(hs_coeff_sum(&p, n, n).unwrap(), rat(1));
        }
        assert!(hs_coeff_sum(&HSParams::from_ints(1, 0, 1), 2, 1).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let t = hs_triangle_rec(&HSParams::from_ints(0, 1, 1), 3);
        assert_eq!(rats(&t, 3), ints(&[1, 7, 6, 1]));
        // A = B: C(n,k) r^{falling n-k, stride B}; (B, r) = (1, 2), n = 3, k = 1 is 3·2·1
        let t = hs_triangle_rec(&HSParams::from_ints(1, 1, 2), 3);
        assert_eq!(t.get(3, 1).as_constant().unwrap(), rat(6));
        assert_eq!(hs_triangle_rec(&HSParams::from_ints(5, 2, 3), 0), Triangle::identity(0));
    }

    #[test]
    fn egf_examples() {
        let egf = hs_egf(&HSParams::from_ints(0, 1, 0), 5).unwrap();
        let row: Vec<_> = egf.row(3).iter().map(|c| c.as_constant().unwrap()).collect();
        assert_eq!(row, ints(&[0, 1, 3, 1]));
        let egf = hs_egf(&HSParams::from_ints(-1, 1, 1), 5).unwrap();
        let row: Vec<_> = egf.row(2).iter().map(|c| c.as_constant().unwrap()).collect();
        assert_eq!(row, ints(&[2, 4, 1]));
        assert_eq!(egf.row(0), &[SParamPoly::from_int(1)]);
    }

    #[test]
    fn limit_branches_agree_with_recurrence() {
        for p in [
            HSParams::from_ints(0, 2, 3),
            HSParams::new(ratio(3, 2), rat(0), ratio(-1, 3)),
            HSParams::from_ints(0, 0, -2),
        ] {
            let egf = hs_egf(&p, 8).unwrap();
            assert_eq!(egf.to_triangle(), hs_triangle_rec(&p, 8), "{p:?}");
            assert!(hs_pde_residual(&p, &egf).iter().flatten().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn rising_factorial_case() {
        let (b, r) = (ratio(3, 2), ratio(-2, 5));
        let t = hs_triangle_rec(&HSParams::new(-b.clone(), b.clone(), r.clone()), 7);
        for n in 0..=7u32 {
            for k in 0..=n {
                let x = &b * Rational::from_integer(k.into()) + &r;
                let expected = Rational::from_integer(binomial(n, k)) * rising_factorial(&x, n - k, &b);
                assert_eq!(t.get(n as usize, k as usize).as_constant().unwrap(), expected);
            }
        }
    }
}
