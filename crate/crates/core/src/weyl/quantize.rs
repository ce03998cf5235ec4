//! Maps between operator normal forms and s-ordered classical symbols.
//!
//! Normal order is the internal anchor: `s_quantize` lands in a
//! [`NormalForm`], `s_transform` starts from one.

use num_traits::One;

use super::rewrite::{contractions, normal_mul_letter, normal_order};
use super::table::{ClassicalPoly, NormalForm};
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};
use crate::spoly::SParamPoly;

/// Largest `n + m` accepted by [`weyl_quantize_enumerated`].
pub const SHUFFLE_ENUMERATION_LIMIT: u32 = 14;

/// `∂²/∂α∂α*`.
pub fn mixed_derivative(f: &ClassicalPoly) -> ClassicalPoly {
    ClassicalPoly::from_terms(f.iter().filter(|((n, m), _)| *n > 0 && *m > 0).map(
        |(&(n, m), c)| ((n - 1, m - 1), c.scale(&Rational::from_integer((n * m).into()))),
    ))
}

/// Coefficientwise derivative in `s`.
pub fn s_derivative(f: &ClassicalPoly) -> ClassicalPoly {
    ClassicalPoly::from_terms(f.iter().map(|(k, c)| (*k, c.derivative())))
}

/// `exp(c ∂²/∂α∂α*) F`, summed until the derivatives vanish.
pub fn heat_flow(f: &ClassicalPoly, c: &SParamPoly) -> ClassicalPoly {
    let mut out = f.clone();
    let mut term = f.clone();
    let mut k = 1u32;
    loop {
        term = mixed_derivative(&term).scale(c);
        if term.is_empty() {
            break;
        }
        term = term.scale_rat(&Rational::new(1.into(), k.into()));
        out = &out + &term;
        k += 1;
    }
    out
}

/// Operator whose s-ordered symbol is `F`, written in normal order.
///
/// Each `α*^n α^m` becomes `Σ_k k! C(n,k) C(m,k) ((s+1)/2)^k a†^(n-k) a^(m-k)`.
pub fn s_quantize(f: &ClassicalPoly, s: &SParamPoly) -> NormalForm {
    let half = Rational::new(1.into(), 2.into());
    let c = (s + &SParamPoly::one()).scale(&half);
    let mut out = NormalForm::new();
    for (&(n, m), coeff) in f.iter() {
        let mut ck = SParamPoly::one();
        for k in 0..=n.min(m) {
            if k > 0 {
                ck = &ck * &c;
            }
            let w = Rational::from_integer(contractions(n, m, k));
            out.add_term(n - k, m - k, (coeff * &ck).scale(&w));
        }
    }
    out
}

/// s-ordered symbol of a normal-ordered operator.
pub fn s_transform(g: &NormalForm, s: &SParamPoly) -> ClassicalPoly {
    let half = Rational::new(1.into(), 2.into());
    let c = (-&(s + &SParamPoly::one())).scale(&half);
    heat_flow(&g.reinterpret(), &c)
}

/// Re-expresses an `s_from`-ordered symbol as the `s_to`-ordered symbol of
/// the same operator.
pub fn convert_order(f: &ClassicalPoly, s_from: &SParamPoly, s_to: &SParamPoly) -> ClassicalPoly {
    let half = Rational::new(1.into(), 2.into());
    heat_flow(f, &(s_from - s_to).scale(&half))
}

/// Normal form of the average of all `C(n+m, n)` orderings of `n` creators
/// and `m` annihilators.
///
/// The shuffles are summed through a lattice walk: the total over words with
/// `i` creators and `j` annihilators is the total over words ending in `a†`
/// plus the total over words ending in `a`, so each prefix is normal-ordered
/// once instead of once per word.
pub fn weyl_quantize_monomial(n: u32, m: u32) -> NormalForm {
    let (n, m) = (n as usize, m as usize);
    let mut grid: Vec<Vec<NormalForm>> = vec![vec![NormalForm::new(); m + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=m {
            grid[i][j] = if i == 0 && j == 0 {
                NormalForm::one()
            } else {
                let mut acc = NormalForm::new();
                if i > 0 {
                    acc = &acc + &normal_mul_letter(&grid[i - 1][j], Letter::Creator);
                }
                if j > 0 {
                    acc = &acc + &normal_mul_letter(&grid[i][j - 1], Letter::Annihilator);
                }
                acc
            };
        }
    }
    let total = Rational::from_integer(binomial(n as u32 + m as u32, n as u32));
    grid[n][m].scale_rat(&(Rational::one() / total))
}

/// Word-by-word version of [`weyl_quantize_monomial`]: lists every shuffle
/// and normal-orders it separately. Limited to `n + m ≤ 14`.
pub fn weyl_quantize_enumerated(n: u32, m: u32) -> Result<NormalForm> {
    if n + m > SHUFFLE_ENUMERATION_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "shuffle enumeration is limited to n + m <= {SHUFFLE_ENUMERATION_LIMIT}"
        )));
    }
    let words = Word::shuffles(n as usize, m as usize);
    let count = Rational::from_integer(words.len().into());
    let sum = words
        .iter()
        .fold(NormalForm::new(), |acc, w| &acc + &normal_order(w));
    Ok(sum.scale_rat(&(Rational::one() / count)))
}

/// Weyl quantization of an arbitrary symbol, by linearity.
pub fn weyl_quantize(f: &ClassicalPoly) -> NormalForm {
    f.iter().fold(NormalForm::new(), |acc, (&(n, m), c)| {
        &acc + &weyl_quantize_monomial(n, m).scale(c)
    })
}

impl ClassicalPoly {
    /// Evaluates every coefficient at `s = value`.
    pub fn at_s(&self, value: &Rational) -> ClassicalPoly {
        ClassicalPoly::from_terms(
            self.iter()
                .map(|(k, c)| (*k, SParamPoly::constant(c.eval(value)))),
        )
    }

    /// True when no coefficient depends on `s`.
    pub fn is_s_free(&self) -> bool {
        self.iter().all(|(_, c)| c.degree().unwrap_or(0) == 0)
    }
}
