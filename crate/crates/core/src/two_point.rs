//! Two-point Hsu-Shiue family `T(A, B, r, r'; s)`.
//!
//! A Sheffer family interpolating in `s` between `HS(-A, B, r')` at `s = -1`
//! and `HS(A, -B, r)` at `s = +1`. With `c = (1+s)/2` and `c' = (1-s)/2`,
//!
//! ```text
//! g_T = c [(1 + c'BD)/(1 - cBD)]^{-r/B} + c' [(1 - cBD)/(1 + c'BD)]^{r'/B}
//! f_T = ([1 - cBD]^{-A/B} - 1)/A - ([1 + c'BD]^{-A/B} - 1)/A
//! ```
//!
//! and the EGF is `ḡ_T(z) exp(t f̄_T(z))` where `[ḡ_T, f̄_T]` is the group
//! inverse of `[g_T, f_T]`. `f̄_T` always comes from series reversion; the
//! closed forms below are only used as cross-checks.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::egf::BivariateEGF;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use crate::riordan::RiordanPair;
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;
use crate::weyl::SingleAnnihilatorWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPointParams {
    #[serde(rename = "A", with = "crate::rational::serde_str")]
    pub a: Rational,
    #[serde(rename = "B", with = "crate::rational::serde_str")]
    pub b: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub r: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub r_prime: Rational,
    pub s: SParamPoly,
}

impl TwoPointParams {
    pub fn new(a: Rational, b: Rational, r: Rational, r_prime: Rational, s: SParamPoly) -> Self {
        Self {
            a,
            b,
            r,
            r_prime,
            s,
        }
    }

    /// `(A, B, r, r') = (e, 1, -L, R)` for the word `a†^L a a†^R`.
    pub fn for_word(w: &SingleAnnihilatorWord, s: SParamPoly) -> Self {
        Self::new(
            rat(w.excess().into()),
            Rational::one(),
            rat(-i64::from(w.left)),
            rat(w.right.into()),
            s,
        )
    }

    /// `((1+s)/2, (1-s)/2)`.
    fn weights(&self) -> (SParamPoly, SParamPoly) {
        let half = ratio(1, 2);
        let one = SParamPoly::one();
        ((&one + &self.s).scale(&half), (&one - &self.s).scale(&half))
    }
}

/// `(1 + u μ D)^{λ/μ}`, or `e^{u λ D}` when `μ = 0`.
fn stride_power(u: &SParamPoly, lambda: &Rational, mu: &Rational, order: usize) -> Result<TruncSeries> {
    if mu.is_zero() {
        return TruncSeries::monomial(u.scale(lambda), 1, order).exp();
    }
    let base = TruncSeries::new(vec![SParamPoly::one(), u.scale(mu)], order);
    base.pow_rational(&(lambda / mu))
}

/// `log(1 + u μ D)/μ`, or `u D` when `μ = 0`.
fn stride_log(u: &SParamPoly, mu: &Rational, order: usize) -> Result<TruncSeries> {
    if mu.is_zero() {
        return Ok(TruncSeries::monomial(u.clone(), 1, order));
    }
    let base = TruncSeries::new(vec![SParamPoly::one(), u.scale(mu)], order);
    Ok(base.log()?.scale_rat(&(Rational::one() / mu)))
}

/// `g_T(D)`.
pub fn g_t(p: &TwoPointParams, order: usize) -> Result<TruncSeries> {
    let (c, cp) = p.weights();
    let neg_c = -&c;
    let neg_r = -p.r.clone();
    let neg_rp = -p.r_prime.clone();
    let left = &stride_power(&cp, &neg_r, &p.b, order)? * &stride_power(&neg_c, &p.r, &p.b, order)?;
    let right =
        &stride_power(&neg_c, &p.r_prime, &p.b, order)? * &stride_power(&cp, &neg_rp, &p.b, order)?;
    Ok(&left.scale(&c) + &right.scale(&cp))
}

/// `f_T(D)`.
pub fn f_t(p: &TwoPointParams, order: usize) -> Result<TruncSeries> {
    let (c, cp) = p.weights();
    let neg_c = -&c;
    if p.a.is_zero() {
        return Ok(&stride_log(&cp, &p.b, order)? - &stride_log(&neg_c, &p.b, order)?);
    }
    let neg_a = -p.a.clone();
    let diff = &stride_power(&neg_c, &neg_a, &p.b, order)? - &stride_power(&cp, &neg_a, &p.b, order)?;
    Ok(diff.scale_rat(&(Rational::one() / &p.a)))
}

/// `S[g_T, f_T]` truncated at `D^order`.
pub fn two_point_pair(p: &TwoPointParams, order: usize) -> Result<RiordanPair> {
    RiordanPair::sheffer(g_t(p, order)?, f_t(p, order)?)
}

/// `[ḡ_T, f̄_T]` by group inversion.
pub fn two_point_inverse(p: &TwoPointParams, order: usize) -> Result<(TruncSeries, TruncSeries)> {
    let pair = two_point_pair(p, order)?.to_riordan()?;
    Ok((pair.first().clone(), pair.second().clone()))
}

/// `ḡ_T(z) exp(t f̄_T(z))` to `z^order`.
pub fn two_point_egf(p: &TwoPointParams, order: usize) -> Result<BivariateEGF> {
    two_point_pair(p, order)?.bivariate_egf()
}

/// Closed forms of `[ḡ_T, f̄_T]` for excess `e = 1`, i.e. `L + R = 2`.
///
/// With `Q = 1 + 2sz + z²`: `f̄_T = 2z/(1 + sz + √Q)` and
/// `ḡ_T = Q^{-1/2}` for `(1,1)`, `(1 - (z+s)/√Q)/(1-s)` for `(2,0)`,
/// `(1 + (z+s)/√Q)/(1+s)` for `(0,2)`. The `(2,0)` and `(0,2)` forms are
/// divided by `1 ∓ s` exactly in `Q[s]`, so they stay valid at `s = ±1`.
pub fn closed_form_e1(l: u32, r: u32, s: &SParamPoly, order: usize) -> Result<(TruncSeries, TruncSeries)> {
    if l + r != 2 {
        return Err(Error::InvalidParameter(format!(
            "closed forms exist for L + R = 2, got L = {l}, R = {r}"
        )));
    }
    let sym = SParamPoly::s();
    let q = TruncSeries::new(
        vec![SParamPoly::one(), sym.scale(&rat(2)), SParamPoly::one()],
        order,
    );
    let sqrt_q = q.pow_rational(&ratio(1, 2))?;
    let inv_sqrt_q = q.pow_rational(&ratio(-1, 2))?;
    let z = TruncSeries::var(order);
    let denom = &(&TruncSeries::one(order) + &z.scale(&sym)) + &sqrt_q;
    let fbar = z.scale_rat(&rat(2)).div(&denom)?;
    let z_plus_s = &z + &TruncSeries::constant(sym.clone(), order);
    let ratio_term = &z_plus_s * &inv_sqrt_q;
    let one = TruncSeries::one(order);
    let gbar = match (l, r) {
        (1, 1) => inv_sqrt_q,
        (2, 0) => divide_coeffs(&(&one - &ratio_term), &(&SParamPoly::one() - &sym))?,
        (0, 2) => divide_coeffs(&(&one + &ratio_term), &(&SParamPoly::one() + &sym))?,
        _ => unreachable!(),
    };
    Ok((gbar.substitute_s(s), fbar.substitute_s(s)))
}

fn divide_coeffs(f: &TruncSeries, divisor: &SParamPoly) -> Result<TruncSeries> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.div_exact(divisor))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::new(coeffs, f.trunc_order()))
}

/// Coefficients `[c_4, c_3, c_2, c_1, c_0]` of the quartic in `D` satisfied
/// by `D = f̄_T(z)` when `e = 2`; each is a polynomial in `z` over `Q[s]`
/// (index = power of `z`).
pub fn quartic_coefficients(s: &SParamPoly) -> [Vec<SParamPoly>; 5] {
    let one = SParamPoly::one();
    let one_minus_s2 = &one - &s.pow(2);
    let int = |k: i64| SParamPoly::from_int(k);
    [
        vec![SParamPoly::zero(), one_minus_s2.pow(2)],
        vec![SParamPoly::zero(), &(&int(8) * s) * &one_minus_s2],
        vec![
            &int(8) * s,
            &int(-8) * &(&one - &(&int(3) * &s.pow(2))),
        ],
        vec![int(-16), &int(-32) * s],
        vec![SParamPoly::zero(), int(16)],
    ]
}

/// The quartic evaluated at `D = f̄_T(z)` (from reversion) for `L + R = 3`.
/// Vanishes identically when the reversion is correct.
pub fn quartic_residual(l: u32, r: u32, s: &SParamPoly, order: usize) -> Result<TruncSeries> {
    if l + r != 3 {
        return Err(Error::InvalidParameter(format!(
            "the quartic applies to L + R = 3, got L = {l}, R = {r}"
        )));
    }
    let w = SingleAnnihilatorWord::new(l, r)?;
    let p = TwoPointParams::for_word(&w, s.clone());
    let (_, d) = two_point_inverse(&p, order)?;
    let coeffs = quartic_coefficients(s);
    let mut acc = TruncSeries::zero(order);
    let mut d_pow = TruncSeries::one(order);
    for power in 0..=4 {
        let zpoly = TruncSeries::new(coeffs[4 - power].clone(), order);
        acc = &acc + &(&zpoly * &d_pow);
        d_pow = &d_pow * &d;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hsu_shiue::{hs_egf, HSParams};

    fn s() -> SParamPoly {
        SParamPoly::s()
    }

    fn params(a: i64, b: i64, r: i64, rp: i64, s: SParamPoly) -> TwoPointParams {
        TwoPointParams::new(rat(a), rat(b), rat(r), rat(rp), s)
    }

    #[test]
    fn f_t_examples() {
        let n = 7;
        // log((2 + D - sD)/(2 - D - sD))
        let p = params(0, 1, -1, 0, s());
        let num = TruncSeries::new(vec![SParamPoly::from_int(2), &SParamPoly::one() - &s()], n);
        let den = TruncSeries::new(vec![SParamPoly::from_int(2), -&(&SParamPoly::one() + &s())], n);
        let expected = num.div(&den).unwrap().log().unwrap();
        assert_eq!(f_t(&p, n).unwrap(), expected);

        // 4D/(4 - D²) at s = 0
        let p = params(1, 1, -1, 1, SParamPoly::zero());
        let expected = TruncSeries::from_ints(&[0, 4], n)
            .div(&TruncSeries::from_ints(&[4, 0, -1], n))
            .unwrap();
        assert_eq!(f_t(&p, n).unwrap(), expected);
    }

    #[test]
    fn normalization() {
        for p in [
            params(2, 1, -1, 2, s()),
            params(0, 0, 3, -1, s()),
            TwoPointParams::new(ratio(1, 3), ratio(-2, 5), ratio(7, 2), rat(-1), s()),
        ] {
            let g = g_t(&p, 5).unwrap();
            let f = f_t(&p, 5).unwrap();
            assert!(g.coeff(0).is_one());
            assert!(f.coeff(0).is_zero());
            assert!(f.coeff(1).is_one());
        }
    }

    #[test]
    fn reductions_at_the_endpoints() {
        let p = params(1, 1, -1, 1, SParamPoly::from_int(-1));
        let egf = two_point_egf(&p, 4).unwrap();
        let row: Vec<_> = egf.row(2).iter().map(|c| c.as_constant().unwrap()).collect();
        assert_eq!(row, vec![rat(2), rat(4), rat(1)]);

        let generic = TwoPointParams::new(ratio(2, 3), ratio(-3, 2), ratio(1, 5), rat(2), s());
        let sym = two_point_egf(&generic, 6).unwrap();
        let at_minus = sym.substitute_s(&SParamPoly::from_int(-1));
        let at_plus = sym.substitute_s(&SParamPoly::from_int(1));
        let hs_minus = hs_egf(&HSParams::new(-generic.a.clone(), generic.b.clone(), generic.r_prime.clone()), 6).unwrap();
        let hs_plus = hs_egf(&HSParams::new(generic.a.clone(), -generic.b.clone(), generic.r.clone()), 6).unwrap();
        assert_eq!(at_minus, hs_minus);
        assert_eq!(at_plus, hs_plus);
    }

    #[test]
    fn closed_form_examples() {
        let (_, fbar) = closed_form_e1(1, 1, &SParamPoly::zero(), 6).unwrap();
        let q = |a, b| SParamPoly::constant(ratio(a, b));
        assert_eq!(
            fbar.coeffs(),
            &[q(0, 1), q(1, 1), q(0, 1), q(-1, 4), q(0, 1), q(1, 8), q(0, 1)]
        );
        let (gbar, _) = closed_form_e1(1, 1, &s(), 3).unwrap();
        assert_eq!(gbar.coeff(1), &-s());
        assert!(closed_form_e1(2, 1, &s(), 3).is_err());

        // (2,0) at s = -1 is a limit of the printed form; the reduced form is exact there
        let minus = SParamPoly::from_int(-1);
        let p = TwoPointParams::for_word(&SingleAnnihilatorWord::new(2, 0).unwrap(), minus.clone());
        let (gbar_rev, _) = two_point_inverse(&p, 6).unwrap();
        assert_eq!(closed_form_e1(2, 0, &minus, 6).unwrap().0, gbar_rev);
    }

    #[test]
    fn quartic_examples() {
        assert!(quartic_residual(2, 1, &s(), 6).unwrap().is_zero());
        assert!(quartic_residual(1, 1, &s(), 6).is_err());
        for sv in [-1, 1] {
            let c = quartic_coefficients(&SParamPoly::from_int(sv));
            assert!(c[0].iter().all(|x| x.is_zero()));
            assert!(c[1].iter().all(|x| x.is_zero()));
        }
        // at z = 0 only the -8(-s) D² and -16 D terms survive, and D(0) = 0
        let c = quartic_coefficients(&s());
        assert!(c[4][0].is_zero());
    }
}
