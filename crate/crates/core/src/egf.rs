//! Bivariate exponential generating functions `d(z) exp(t h(z))`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::riordan::Triangle;
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;

/// Series in `z` whose `z^n / n!` coefficient is a polynomial in `t`.
///
/// `rows[n][k]` is the coefficient of `t^k` in the `n`-th row polynomial;
/// rows are stored with length `n + 1` (the t-degree never exceeds `n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateEGF {
    #[serde(rename = "N")]
    trunc_order: usize,
    rows: Vec<Vec<SParamPoly>>,
}

impl BivariateEGF {
    /// Expands `d(z) exp(t h(z))` to order `min(ord d, ord h)`.
    ///
    /// `exp(t h)` is built with the first-order recurrence `E' = t h' E`
    /// directly in `Q[s][t]`, so this never forms the powers `h^k` that
    /// `Triangle` coefficient extraction uses.
    pub fn from_series(d: &TruncSeries, h: &TruncSeries) -> Result<Self> {
        if !h.coeff(0).is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = d.trunc_order().min(h.trunc_order());

        // ordinary coefficients E_m(t) of exp(t h(z)), as t-polynomials
        let mut exp_rows: Vec<Vec<SParamPoly>> = vec![vec![SParamPoly::one()]];
        for m in 1..=n {
            let mut acc = vec![SParamPoly::zero(); m + 1];
            for k in 1..=m {
                let hk = h.coeff(k);
                if hk.is_zero() {
                    continue;
                }
                let weight = hk.scale(&Rational::from_integer(k.into()));
                for (j, c) in exp_rows[m - k].iter().enumerate() {
                    acc[j + 1] += &(&weight * c);
                }
            }
            let inv_m = Rational::new(1.into(), m.into());
            exp_rows.push(acc.into_iter().map(|c| c.scale(&inv_m)).collect());
        }

        let mut rows = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut row = vec![SParamPoly::zero(); m + 1];
            for j in 0..=m {
                let dj = d.coeff(j);
                if dj.is_zero() {
                    continue;
                }
                for (k, c) in exp_rows[m - j].iter().enumerate() {
                    row[k] += &(dj * c);
                }
            }
            let fact = Rational::from_integer(factorial(m as u32));
            rows.push(row.into_iter().map(|c| c.scale(&fact)).collect());
        }
        Ok(Self {
            trunc_order: n,
            rows,
        })
    }

    pub fn from_triangle(tri: &Triangle) -> Self {
        Self {
            trunc_order: tri.order(),
            rows: tri.rows().to_vec(),
        }
    }

    pub fn to_triangle(&self) -> Triangle {
        Triangle::from_rows(self.rows.clone()).expect("EGF rows are lower-triangular")
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc_order
    }

    /// Row polynomial `n` (coefficients of `t^0 ..= t^n`).
    pub fn row(&self, n: usize) -> &[SParamPoly] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<SParamPoly>] {
        &self.rows
    }

    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.trunc_order);
        Self {
            trunc_order: n,
            rows: self.rows[..=n].to_vec(),
        }
    }

    pub fn substitute_s(&self, at: &SParamPoly) -> Self {
        Self {
            trunc_order: self.trunc_order,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.compose(at)).collect())
                .collect(),
        }
    }

    /// Value of row polynomial `n` at a rational `t`.
    pub fn eval_row(&self, n: usize, t: &Rational) -> SParamPoly {
        self.rows[n]
            .iter()
            .rev()
            .fold(SParamPoly::zero(), |acc, c| &acc.scale(t) + c)
    }
}
