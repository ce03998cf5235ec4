//! Lowering and raising operators of a Sheffer sequence.
//!
//! For `S[g, f]` with row polynomials `s_n(t)` and `D = d/dt`, the lowering
//! operator `P = f(D)` gives `P s_n = n s_{n-1}` and the raising operator
//! `M = [t - g'(D)/g(D)] / f'(D)` gives `M s_n = s_{n+1}`. Both are applied
//! as series truncated past the input degree, which is exact on polynomials.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ladder {
    Lowering,
    Raising,
}

/// `Σ_j c_j D^j p(t)`; the sum stops at `deg p` since higher derivatives vanish.
pub fn apply_series_in_d(series: &TruncSeries, poly: &[SParamPoly]) -> Vec<SParamPoly> {
    let mut out = vec![SParamPoly::zero(); poly.len()];
    for j in 0..=series.trunc_order().min(poly.len().saturating_sub(1)) {
        let cj = series.coeff(j);
        if cj.is_zero() {
            continue;
        }
        for i in j..poly.len() {
            // D^j t^i = i!/(i-j)! t^(i-j)
            let w = Rational::new(factorial(i as u32), factorial((i - j) as u32));
            out[i - j] += &(cj * &poly[i]).scale(&w);
        }
    }
    trim(out)
}

fn trim(mut v: Vec<SParamPoly>) -> Vec<SParamPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(super) fn apply(
    g: &TruncSeries,
    f: &TruncSeries,
    which: Ladder,
    poly: &[SParamPoly],
) -> Result<Vec<SParamPoly>> {
    let poly = trim(poly.to_vec());
    let degree = poly.len().saturating_sub(1);
    if g.trunc_order() < degree + 1 {
        return Err(Error::InsufficientOrder {
            have: g.trunc_order(),
            need: degree + 1,
        });
    }
    match which {
        Ladder::Lowering => Ok(apply_series_in_d(f, &poly)),
        Ladder::Raising => {
            let q = apply_series_in_d(&f.derivative().reciprocal()?, &poly);
            let log_deriv = g.derivative().div(&g.truncate(degree))?;
            let correction = apply_series_in_d(&log_deriv, &q);
            let mut out = vec![SParamPoly::zero(); q.len() + 1];
            for (i, c) in q.iter().enumerate() {
                out[i + 1] += c;
            }
            for (i, c) in correction.iter().enumerate() {
                out[i] -= c;
            }
            Ok(trim(out))
        }
    }
}
