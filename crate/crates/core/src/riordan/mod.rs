//! Exponential Riordan arrays and Sheffer sequences.
//!
//! `R[d, h]` has entries `s_{n,k} = (n!/k!) [z^n] d(z) h(z)^k`; its rows are
//! the coefficient lists of the polynomials with EGF `d(z) exp(t h(z))`.
//! The same array is `S[g, f]` in Sheffer notation, where `[g, f]` is the
//! group inverse of `[d, h]` and `g`, `f` are read as series in `D = d/dt`.

mod catalog;
mod ladder;
mod triangle;

pub use catalog::CatalogSequence;
pub use ladder::{apply_series_in_d, Ladder};
pub use triangle::Triangle;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::egf::BivariateEGF;
use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `R[d, h]`, series in `z`.
    Riordan,
    /// `S[g, f]`, series in `D`.
    Sheffer,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Riordan => "Riordan",
            Convention::Sheffer => "Sheffer",
        }
    }

    fn flip(self) -> Self {
        match self {
            Convention::Riordan => Convention::Sheffer,
            Convention::Sheffer => Convention::Riordan,
        }
    }
}

/// An ordered pair of truncated series with its convention tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiordanPair {
    first: TruncSeries,
    second: TruncSeries,
    convention: Convention,
}

impl RiordanPair {
    /// Checks `first(0) = 1`, `second(0) = 0`, `second'(0) = 1`, and truncates
    /// both series to the smaller order.
    pub fn new(first: TruncSeries, second: TruncSeries, convention: Convention) -> Result<Self> {
        let order = first.trunc_order().min(second.trunc_order());
        if order == 0 {
            return Err(Error::InsufficientOrder { have: 0, need: 1 });
        }
        if !first.coeff(0).is_one() {
            return Err(Error::ConstantTermNotOne(first.coeff(0).to_string()));
        }
        if !second.coeff(0).is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        if !second.coeff(1).is_one() {
            return Err(Error::InvalidParameter(format!(
                "second series must have linear coefficient 1, found {}",
                second.coeff(1)
            )));
        }
        Ok(Self {
            first: first.truncate(order),
            second: second.truncate(order),
            convention,
        })
    }

    pub fn riordan(d: TruncSeries, h: TruncSeries) -> Result<Self> {
        Self::new(d, h, Convention::Riordan)
    }

    pub fn sheffer(g: TruncSeries, f: TruncSeries) -> Result<Self> {
        Self::new(g, f, Convention::Sheffer)
    }

    /// `[1, z]`, the identity of the group, in the given convention.
    pub fn identity(order: usize, convention: Convention) -> Self {
        Self {
            first: TruncSeries::one(order),
            second: TruncSeries::var(order),
            convention,
        }
    }

    pub fn first(&self) -> &TruncSeries {
        &self.first
    }

    pub fn second(&self) -> &TruncSeries {
        &self.second
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn trunc_order(&self) -> usize {
        self.first.trunc_order()
    }

    fn require(&self, want: Convention) -> Result<()> {
        if self.convention != want {
            return Err(Error::ConventionMismatch {
                expected: want.name(),
                found: self.convention.name(),
            });
        }
        Ok(())
    }

    /// `[d1, h1]·[d2, h2] = [(d2∘h1) d1, h2∘h1]` on the raw pairs.
    fn raw_product(a: &Self, b: &Self) -> Result<(TruncSeries, TruncSeries)> {
        let first = &b.first.compose(&a.second)? * &a.first;
        let second = b.second.compose(&a.second)?;
        Ok((first, second))
    }

    /// `[1/(d∘h̄), h̄]` on the raw pair.
    fn raw_inverse(&self) -> Result<(TruncSeries, TruncSeries)> {
        let hbar = self.second.revert()?;
        let first = self.first.compose(&hbar)?.reciprocal()?;
        Ok((first, hbar))
    }

    /// Product whose array is the matrix product of the two arrays.
    ///
    /// Both factors must carry the same convention. Sheffer arrays are
    /// arrays of inverse pairs, so in that convention the raw pair product
    /// is taken in the opposite order.
    pub fn group_product(&self, other: &Self) -> Result<Self> {
        other.require(self.convention)?;
        let (first, second) = match self.convention {
            Convention::Riordan => Self::raw_product(self, other)?,
            Convention::Sheffer => Self::raw_product(other, self)?,
        };
        Ok(Self {
            first,
            second,
            convention: self.convention,
        })
    }

    /// Pair whose array is the matrix inverse; the convention is preserved.
    pub fn group_inverse(&self) -> Result<Self> {
        let (first, second) = self.raw_inverse()?;
        Ok(Self {
            first,
            second,
            convention: self.convention,
        })
    }

    /// Same array, written in Riordan convention.
    pub fn to_riordan(&self) -> Result<Self> {
        self.convert(Convention::Riordan)
    }

    /// Same array, written in Sheffer convention.
    pub fn to_sheffer(&self) -> Result<Self> {
        self.convert(Convention::Sheffer)
    }

    fn convert(&self, want: Convention) -> Result<Self> {
        if self.convention == want {
            return Ok(self.clone());
        }
        let (first, second) = self.raw_inverse()?;
        Ok(Self {
            first,
            second,
            convention: self.convention.flip(),
        })
    }

    /// The triangle `s_{n,k}` for `n ≤ order`.
    pub fn array_coeffs(&self, order: usize) -> Result<Triangle> {
        self.require(Convention::Riordan)?;
        if order > self.trunc_order() {
            return Err(Error::InsufficientOrder {
                have: self.trunc_order(),
                need: order,
            });
        }
        let d = self.first.truncate(order);
        let h = self.second.truncate(order);
        let mut columns: Vec<TruncSeries> = Vec::with_capacity(order + 1);
        let mut dhk = d;
        for _ in 0..=order {
            columns.push(dhk.clone());
            dhk = &dhk * &h;
        }
        Ok(Triangle::from_fn(order, |n, k| {
            let scale = Rational::new(factorial(n as u32), factorial(k as u32));
            columns[k].coeff(n).scale(&scale)
        }))
    }

    /// Array of either convention, converting when needed.
    pub fn triangle(&self, order: usize) -> Result<Triangle> {
        self.to_riordan()?.array_coeffs(order)
    }

    /// EGF of the array applied to the column vector with EGF `u`:
    /// `d(z) u(h(z))`.
    pub fn apply_to_egf(&self, u: &TruncSeries) -> Result<TruncSeries> {
        self.require(Convention::Riordan)?;
        Ok(&self.first * &u.compose(&self.second)?)
    }

    /// `d(z) exp(t h(z))` in Riordan convention.
    pub fn bivariate_egf(&self) -> Result<BivariateEGF> {
        let p = self.to_riordan()?;
        BivariateEGF::from_series(&p.first, &p.second)
    }

    /// Applies the lowering or raising operator of a Sheffer-convention pair
    /// to a polynomial in `t` given by its coefficients.
    pub fn ladder_apply(&self, which: Ladder, poly: &[SParamPoly]) -> Result<Vec<SParamPoly>> {
        self.require(Convention::Sheffer)?;
        ladder::apply(&self.first, &self.second, which, poly)
    }

    pub fn substitute_s(&self, at: &SParamPoly) -> Self {
        Self {
            first: self.first.substitute_s(at),
            second: self.second.substitute_s(at),
            convention: self.convention,
        }
    }
}
