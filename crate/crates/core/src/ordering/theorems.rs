//! Ordered representations obtained from Hsu-Shiue and two-point arrays.

use std::str::FromStr;

use num_traits::One;
use serde::{Serialize, Serializer};

use super::SymbolSeries;
use crate::egf::BivariateEGF;
use crate::error::{Error, Result};
use crate::hsu_shiue::{hs_triangle_rec, HSParams};
use crate::rational::{factorial, rat, Rational};
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;
use crate::two_point::{two_point_egf, TwoPointParams};
use crate::weyl::{AntiNormalForm, ClassicalPoly, NormalForm, SingleAnnihilatorWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Normal,
    AntiNormal,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "normal" => Ok(Variant::Normal),
            "antinormal" | "anti-normal" => Ok(Variant::AntiNormal),
            other => Err(Error::InvalidParameter(format!("unknown variant `{other}`"))),
        }
    }
}

/// A power of a word in one of the two canonical orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerForm {
    Normal(NormalForm),
    AntiNormal(AntiNormalForm),
}

impl Serialize for PowerForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, T: Serialize> {
            order: &'static str,
            terms: &'a T,
        }
        match self {
            PowerForm::Normal(g) => Repr { order: "normal", terms: g }.serialize(serializer),
            PowerForm::AntiNormal(g) => Repr {
                order: "anti-normal",
                terms: g,
            }
            .serialize(serializer),
        }
    }
}

impl PowerForm {
    pub fn to_csv(&self) -> String {
        match self {
            PowerForm::Normal(g) => g.to_csv(),
            PowerForm::AntiNormal(g) => g.to_csv(),
        }
    }
}

/// `ω^n = (a†^e)^n Σ_k HS_{n,k}(-e, 1, R) a†^k a^k`.
pub fn power_normal_form(w: &SingleAnnihilatorWord, n: usize) -> NormalForm {
    let e = w.excess();
    let p = HSParams::new(rat(-i64::from(e)), rat(1), rat(w.right.into()));
    let tri = hs_triangle_rec(&p, n);
    NormalForm::from_terms(
        tri.row(n)
            .iter()
            .enumerate()
            .map(|(k, c)| ((e * n as u32 + k as u32, k as u32), c.clone())),
    )
}

/// `ω^n = Σ_k HS_{n,k}(e, -1, -L) a^k a†^k (a†^e)^n`.
pub fn power_anti_normal_form(w: &SingleAnnihilatorWord, n: usize) -> AntiNormalForm {
    let e = w.excess();
    let p = HSParams::new(rat(e.into()), rat(-1), rat(-i64::from(w.left)));
    let tri = hs_triangle_rec(&p, n);
    AntiNormalForm::from_terms(
        tri.row(n)
            .iter()
            .enumerate()
            .map(|(k, c)| ((k as u32, k as u32 + e * n as u32), c.clone())),
    )
}

pub fn power_form(w: &SingleAnnihilatorWord, n: usize, variant: Variant) -> PowerForm {
    match variant {
        Variant::Normal => PowerForm::Normal(power_normal_form(w, n)),
        Variant::AntiNormal => PowerForm::AntiNormal(power_anti_normal_form(w, n)),
    }
}

/// `n!² / (k!² (n-k)!)`.
pub fn laguerre_coefficient(n: u32, k: u32) -> Rational {
    let nf = factorial(n);
    let kf = factorial(k);
    Rational::new(&nf * &nf, &kf * &kf * factorial(n - k))
}

/// `(a† a a†)^n = a†^n Σ_k n!²/(k!²(n-k)!) a†^k a^k`.
pub fn laguerre_power(n: u32) -> NormalForm {
    NormalForm::from_terms(
        (0..=n).map(|k| ((n + k, k), SParamPoly::constant(laguerre_coefficient(n, k)))),
    )
}

/// `(a† a a†)^n = Σ_k (-1)^{n-k} n!²/(k!²(n-k)!) a^k a†^k a†^n`.
pub fn laguerre_power_anti_normal(n: u32) -> AntiNormalForm {
    AntiNormalForm::from_terms((0..=n).map(|k| {
        let mut c = laguerre_coefficient(n, k);
        if (n - k) % 2 == 1 {
            c = -c;
        }
        ((k, n + k), SParamPoly::constant(c))
    }))
}

/// s-ordered symbol of `exp(λ ω)` to `λ^order`, from the two-point EGF with
/// `(A, B, r, r') = (e, 1, -L, R)`.
pub fn s_ordered_symbol(w: &SingleAnnihilatorWord, s: &SParamPoly, order: usize) -> Result<SymbolSeries> {
    let p = TwoPointParams::for_word(w, s.clone());
    let egf = two_point_egf(&p, order)?;
    Ok(SymbolSeries::from_egf(&egf, w.excess(), s.clone()))
}

/// s-ordered symbol of `ω^n`: `α*^{en} T_n(α*α)`.
pub fn power_symbol(w: &SingleAnnihilatorWord, n: usize, s: &SParamPoly) -> Result<ClassicalPoly> {
    let series = s_ordered_symbol(w, s, n.max(1))?;
    Ok(series
        .term(n)
        .scale_rat(&Rational::from_integer(factorial(n as u32))))
}

/// `(1 + c z)^{q/c}`, or `e^{qz}` when `c = 0`.
fn limit_power(c: i64, q: &Rational, order: usize) -> Result<TruncSeries> {
    if c == 0 {
        return TruncSeries::var(order).scale_rat(q).exp();
    }
    TruncSeries::from_ints(&[1, c], order).pow_rational(&(q / rat(c)))
}

/// Normal-ordered symbol written down directly:
/// `(1 - ez)^{-R/e} exp{[(1 - ez)^{-1/e} - 1] t}`, with `e → 0` giving
/// `e^{Rz} exp{(e^z - 1) t}`.
pub fn symbol_normal_closed_form(w: &SingleAnnihilatorWord, order: usize) -> Result<SymbolSeries> {
    let e = i64::from(w.excess());
    let d = limit_power(-e, &rat(w.right.into()), order)?;
    let h = &limit_power(-e, &rat(1), order)? - &TruncSeries::one(order);
    let egf = BivariateEGF::from_series(&d, &h)?;
    Ok(SymbolSeries::from_egf(&egf, w.excess(), SParamPoly::from_int(-1)))
}

/// Anti-normal symbol written down directly:
/// `exp{-t [(1 + ez)^{-1/e} - 1]} (1 + ez)^{-L/e}`, with `e → 0` giving
/// `exp{-t (e^{-z} - 1)} e^{-Lz}`.
pub fn symbol_anti_normal_closed_form(w: &SingleAnnihilatorWord, order: usize) -> Result<SymbolSeries> {
    let e = i64::from(w.excess());
    let d = limit_power(e, &rat(-i64::from(w.left)), order)?;
    let h = &TruncSeries::one(order) - &limit_power(e, &rat(-1), order)?;
    let egf = BivariateEGF::from_series(&d, &h)?;
    Ok(SymbolSeries::from_egf(&egf, w.excess(), SParamPoly::one()))
}

/// s-ordered symbol of `exp(λ a†a)` from the closed form
/// `2/(1 + e^λ - s(1 - e^λ)) · exp[2(e^λ - 1)/(1 + e^λ - s(1 - e^λ)) · α*α]`.
pub fn cahill_glauber_symbol(s: &SParamPoly, order: usize) -> Result<SymbolSeries> {
    let one = TruncSeries::one(order);
    let exp = TruncSeries::var(order).exp()?;
    let den = &(&one + &exp) - &(&one - &exp).scale(s);
    let inv = den.reciprocal()?;
    let prefactor = inv.scale_rat(&rat(2));
    let exponent = &(&exp - &one).scale_rat(&rat(2)) * &inv;
    let egf = BivariateEGF::from_series(&prefactor, &exponent)?;
    Ok(SymbolSeries::from_egf(&egf, 0, s.clone()))
}

/// Image of the `λ^j` normal-ordered coefficient for `(L, R)` under adjoint,
/// `a → a†`, `a† → -a`, `λ → -λ`: the `λ^j` anti-normal coefficient for
/// `(R, L)`. The monomial `a†^n a^m` goes to `(-1)^{m+j} a^m a†^n`.
pub fn adjoint_image(g: &NormalForm, j: usize) -> AntiNormalForm {
    AntiNormalForm::from_terms(g.iter().map(|(&(n, m), c)| {
        let c = if (m as usize + j) % 2 == 1 { -c } else { c.clone() };
        ((m, n), c)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::oracle::{oracle_power_anti_normal, oracle_power_normal};
    use crate::rational::ratio;

    fn word(l: u32, r: u32) -> SingleAnnihilatorWord {
        SingleAnnihilatorWord::new(l, r).unwrap()
    }

    #[test]
    fn katriel_rows() {
        let g = power_normal_form(&word(1, 0), 4);
        let row: Vec<_> = (1..=4).map(|k| g.get(k, k).as_constant().unwrap()).collect();
        assert_eq!(row, vec![rat(1), rat(7), rat(6), rat(1)]);
        let g = power_normal_form(&word(0, 1), 3);
        let row: Vec<_> = (0..=3).map(|k| g.get(k, k).as_constant().unwrap()).collect();
        assert_eq!(row, vec![rat(1), rat(7), rat(6), rat(1)]);
        assert_eq!(
            power_normal_form(&word(1, 1), 2),
            NormalForm::from_int_terms(&[((2, 0), 2), ((3, 1), 4), ((4, 2), 1)])
        );
    }

    #[test]
    fn power_forms_match_rewriting() {
        for (l, r) in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (1, 2), (0, 4)] {
            let w = word(l, r);
            let normal = oracle_power_normal(&w, 5);
            let anti = oracle_power_anti_normal(&w, 5);
            for n in 0..=5 {
                assert_eq!(power_normal_form(&w, n), normal[n], "({l},{r}) n={n}");
                assert_eq!(power_anti_normal_form(&w, n), anti[n], "({l},{r}) n={n}");
            }
        }
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre_power(1), NormalForm::from_int_terms(&[((1, 0), 1), ((2, 1), 1)]));
        let c: Vec<_> = (0..=2).map(|k| laguerre_coefficient(2, k)).collect();
        assert_eq!(c, vec![rat(2), rat(4), rat(1)]);
        assert_eq!(laguerre_power(0), NormalForm::one());
    }

    #[test]
    fn symbol_examples() {
        let s = SParamPoly::s();
        let number = s_ordered_symbol(&word(1, 0), &s, 3).unwrap();
        let expected = ClassicalPoly::from_terms([
            ((1, 1), SParamPoly::one()),
            ((0, 0), (&SParamPoly::one() + &s).scale(&ratio(-1, 2))),
        ]);
        assert_eq!(number.term(1), &expected);
        assert_eq!(number.term(0), &ClassicalPoly::one());
        assert_eq!(power_symbol(&word(1, 0), 1, &s).unwrap(), expected);

        assert_eq!(
            power_symbol(&word(1, 1), 1, &s).unwrap(),
            ClassicalPoly::from_terms([((2, 1), SParamPoly::one()), ((1, 0), -&s)])
        );
        assert_eq!(power_symbol(&word(2, 1), 0, &s).unwrap(), ClassicalPoly::one());
    }

    #[test]
    fn cahill_glauber_first_order() {
        let s = SParamPoly::s();
        let cg = cahill_glauber_symbol(&s, 4).unwrap();
        assert_eq!(cg, s_ordered_symbol(&word(1, 0), &s, 4).unwrap());
    }
}
