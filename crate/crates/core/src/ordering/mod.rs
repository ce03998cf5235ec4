//! Ordered forms of `exp(λ ω)` and `ω^n` for single-annihilator words
//! `ω = a†^L a a†^R`.
//!
//! Two independent stacks live here. [`oracle_exponential`] only rewrites
//! words. Everything else goes through Riordan arrays and series, and never
//! calls the rewriter. Tests compare the two at the level of [`NormalForm`].

mod blasiak;
mod oracle;
mod theorems;
mod weyl_power;

pub use blasiak::blasiak_identity_check;
pub use oracle::{oracle_exponential, oracle_power_anti_normal, oracle_power_normal};
pub use theorems::{
    adjoint_image, cahill_glauber_symbol, laguerre_coefficient, laguerre_power,
    laguerre_power_anti_normal, power_anti_normal_form, power_form, power_normal_form, power_symbol,
    s_ordered_symbol, symbol_anti_normal_closed_form, symbol_normal_closed_form, PowerForm,
    Variant,
};
pub use weyl_power::{
    ordinary_array_coeffs, weyl_aaa_ordinary_pair, weyl_power_aaa, weyl_power_coefficient,
};

use serde::{Serialize, Serializer};

use crate::egf::BivariateEGF;
use crate::rational::{factorial, Rational};
use crate::spoly::SParamPoly;
use crate::weyl::{s_quantize, ClassicalPoly, NormalForm};

/// `Σ_n F_n λ^n` with classical-polynomial coefficients, tagged with the
/// ordering parameter it is a symbol for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSeries {
    terms: Vec<ClassicalPoly>,
    s: SParamPoly,
}

impl SymbolSeries {
    pub fn new(terms: Vec<ClassicalPoly>, s: SParamPoly) -> Self {
        Self { terms, s }
    }

    /// Substitutes `(t, z) = (α*α, λ α*^e)` into a bivariate EGF: the `λ^n`
    /// term is `α*^{en} T_n(α*α) / n!`.
    pub fn from_egf(egf: &BivariateEGF, excess: u32, s: SParamPoly) -> Self {
        let terms = (0..=egf.trunc_order())
            .map(|n| {
                let inv = Rational::new(1.into(), factorial(n as u32));
                let shift = excess * n as u32;
                ClassicalPoly::from_terms(
                    egf.row(n)
                        .iter()
                        .enumerate()
                        .map(|(k, c)| ((shift + k as u32, k as u32), c.scale(&inv))),
                )
            })
            .collect();
        Self { terms, s }
    }

    pub fn trunc_order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[ClassicalPoly] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &ClassicalPoly {
        &self.terms[n]
    }

    pub fn s(&self) -> &SParamPoly {
        &self.s
    }

    /// Quantizes each `λ` coefficient at the series' own `s`.
    pub fn quantize(&self) -> OperatorSeries {
        OperatorSeries::new(self.terms.iter().map(|f| s_quantize(f, &self.s)).collect())
    }

    pub fn substitute_s(&self, at: &SParamPoly) -> Self {
        Self {
            terms: self.terms.iter().map(|f| f.substitute_s(at)).collect(),
            s: self.s.compose(at),
        }
    }

    /// `lambda,n,m,coeff` lines, λ-power first.
    pub fn to_csv(&self) -> String {
        series_csv(self.terms.iter().map(|t| t.to_csv()))
    }
}

fn series_csv(tables: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    for (j, table) in tables.enumerate() {
        let mut lines = table.lines();
        let header = lines.next().unwrap_or_default();
        if j == 0 {
            out.push_str(&format!("lambda,{header}\n"));
        }
        for line in lines {
            out.push_str(&format!("{j},{line}\n"));
        }
    }
    out
}

impl Serialize for SymbolSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            s: &'a SParamPoly,
            #[serde(rename = "N")]
            order: usize,
            terms: &'a [ClassicalPoly],
        }
        Repr {
            s: &self.s,
            order: self.trunc_order(),
            terms: &self.terms,
        }
        .serialize(serializer)
    }
}

/// `Σ_n G_n λ^n` with normal-ordered operator coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSeries {
    terms: Vec<NormalForm>,
}

impl OperatorSeries {
    pub fn new(terms: Vec<NormalForm>) -> Self {
        Self { terms }
    }

    pub fn trunc_order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[NormalForm] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &NormalForm {
        &self.terms[n]
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    /// Termwise difference over the common λ-range.
    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.terms
                .iter()
                .zip(&other.terms)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `lambda,n,m,coeff` lines, λ-power first.
    pub fn to_csv(&self) -> String {
        series_csv(self.terms.iter().map(|t| t.to_csv()))
    }

    /// Drops monomials whose `a†` exponent exceeds `max_creators`.
    pub fn truncate_creators(&self, max_creators: u32) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|t| NormalForm::from_terms(t.iter().filter(|((n, _), _)| *n <= max_creators).map(|(k, c)| (*k, c.clone()))))
                .collect(),
        )
    }
}

impl Serialize for OperatorSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            #[serde(rename = "N")]
            order: usize,
            terms: &'a [NormalForm],
        }
        Repr {
            order: self.trunc_order(),
            terms: &self.terms,
        }
        .serialize(serializer)
    }
}
