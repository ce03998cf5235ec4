//! The single-mode Heisenberg-Weyl algebra `[a, a†] = 1`.
//!
//! Ordering parameter convention: `s = -1` is normal order (creators left),
//! `s = 0` is Weyl (symmetric) order, `s = +1` is anti-normal order.

mod quantize;
mod rewrite;
mod table;
mod word;

use std::fmt;
use std::str::FromStr;

pub use quantize::{
    convert_order, heat_flow, mixed_derivative, s_derivative, s_quantize, s_transform,
    weyl_quantize, weyl_quantize_enumerated, weyl_quantize_monomial, SHUFFLE_ENUMERATION_LIMIT,
};
pub use rewrite::{
    anti_normal_mul_letter, anti_normal_order, anti_normal_order_rewrite, anti_normal_product,
    anti_normal_to_normal, normal_mul_letter, normal_order, normal_order_rewrite, normal_product,
    normal_to_anti_normal,
};
pub use table::{
    AntiNormal, AntiNormalForm, Classical, ClassicalPoly, Monomials, Normal, NormalForm, TableKind,
};
pub use word::{Letter, SingleAnnihilatorWord, Word};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::spoly::SParamPoly;

/// Value of the ordering parameter `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingParam {
    /// `s = -1`
    Normal,
    /// `s = 0`
    Weyl,
    /// `s = +1`
    AntiNormal,
    Value(Rational),
    /// Keep `s` as an indeterminate.
    Symbolic,
}

impl OrderingParam {
    pub fn to_spoly(&self) -> SParamPoly {
        match self {
            OrderingParam::Normal => SParamPoly::from_int(-1),
            OrderingParam::Weyl => SParamPoly::from_int(0),
            OrderingParam::AntiNormal => SParamPoly::from_int(1),
            OrderingParam::Value(q) => SParamPoly::constant(q.clone()),
            OrderingParam::Symbolic => SParamPoly::s(),
        }
    }

    /// Rational value, or `None` when symbolic.
    pub fn value(&self) -> Option<Rational> {
        match self {
            OrderingParam::Symbolic => None,
            other => other.to_spoly().as_constant(),
        }
    }
}

/// Accepts `normal`, `weyl`, `antinormal` (or `anti-normal`), `symbolic`,
/// or an exact rational such as `1/3`.
impl FromStr for OrderingParam {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Ok(match text.trim().to_ascii_lowercase().as_str() {
            "normal" => OrderingParam::Normal,
            "weyl" | "symmetric" => OrderingParam::Weyl,
            "antinormal" | "anti-normal" => OrderingParam::AntiNormal,
            "symbolic" | "s" => OrderingParam::Symbolic,
            other => OrderingParam::Value(parse_rational(other)?),
        })
    }
}

impl fmt::Display for OrderingParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderingParam::Normal => write!(f, "normal"),
            OrderingParam::Weyl => write!(f, "weyl"),
            OrderingParam::AntiNormal => write!(f, "antinormal"),
            OrderingParam::Value(q) => write!(f, "{q}"),
            OrderingParam::Symbolic => write!(f, "symbolic"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn ordering_param_parsing() {
        assert_eq!("normal".parse::<OrderingParam>().unwrap().to_spoly(), SParamPoly::from_int(-1));
        assert_eq!("Anti-Normal".parse::<OrderingParam>().unwrap(), OrderingParam::AntiNormal);
        assert_eq!(
            "-1/3".parse::<OrderingParam>().unwrap().value(),
            Some(ratio(-1, 3))
        );
        assert_eq!("symbolic".parse::<OrderingParam>().unwrap().value(), None);
        assert!("sideways".parse::<OrderingParam>().is_err());
    }
}
