//! Classical Sheffer sequences with their pairs in both conventions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use super::RiordanPair;
use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, ratio, rat, Rational};
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogSequence {
    /// Touchard (exponential) polynomials, `S[1, log(1+D)]`.
    Touchard,
    /// Probabilists' Hermite polynomials `He_n`, `S[e^{D²/2}, D]`.
    Hermite,
    /// `n! L_n(-t)`, `S[1/(1+D), D/(1+D)]`.
    Laguerre,
    /// Abel polynomials `t (t-n)^{n-1}`, `S[1, D e^D]`.
    Abel,
}

impl CatalogSequence {
    pub const ALL: [CatalogSequence; 4] = [
        CatalogSequence::Touchard,
        CatalogSequence::Hermite,
        CatalogSequence::Laguerre,
        CatalogSequence::Abel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogSequence::Touchard => "touchard",
            CatalogSequence::Hermite => "hermite",
            CatalogSequence::Laguerre => "laguerre",
            CatalogSequence::Abel => "abel",
        }
    }

    /// `[g, f]` as series in `D`.
    pub fn sheffer_pair(self, order: usize) -> Result<RiordanPair> {
        let d = TruncSeries::var(order);
        let one = TruncSeries::one(order);
        let (g, f) = match self {
            CatalogSequence::Touchard => (one.clone(), (&one + &d).log()?),
            CatalogSequence::Hermite => {
                let half_d2 = TruncSeries::monomial(SParamPoly::constant(ratio(1, 2)), 2, order);
                (half_d2.exp()?, d)
            }
            CatalogSequence::Laguerre => {
                let inv = (&one + &d).reciprocal()?;
                (inv.clone(), &d * &inv)
            }
            CatalogSequence::Abel => (one, &d * &d.exp()?),
        };
        RiordanPair::sheffer(g, f)
    }

    /// `[d, h]` as series in `z`, written down from closed forms rather than
    /// by inverting the Sheffer pair.
    pub fn riordan_pair(self, order: usize) -> Result<RiordanPair> {
        let z = TruncSeries::var(order);
        let one = TruncSeries::one(order);
        let (d, h) = match self {
            CatalogSequence::Touchard => (one.clone(), &z.exp()? - &one),
            CatalogSequence::Hermite => {
                let half_z2 = TruncSeries::monomial(SParamPoly::constant(ratio(-1, 2)), 2, order);
                (half_z2.exp()?, z)
            }
            CatalogSequence::Laguerre => {
                let inv = (&one - &z).reciprocal()?;
                (inv.clone(), &z * &inv)
            }
            CatalogSequence::Abel => {
                // Lambert W: Σ (-n)^(n-1) z^n / n!
                let coeffs = (0..=order)
                    .map(|n| {
                        if n == 0 {
                            Rational::zero()
                        } else {
                            let num: BigInt = Pow::pow(BigInt::from(-(n as i64)), (n - 1) as u32);
                            Rational::new(num, factorial(n as u32))
                        }
                    })
                    .collect();
                (one, TruncSeries::from_rationals(coeffs, order))
            }
        };
        RiordanPair::riordan(d, h)
    }

    /// Coefficients of `s_n(t)` from a recurrence or closed form that does
    /// not go through Riordan arrays.
    pub fn row_polynomial(self, n: usize) -> Vec<Rational> {
        match self {
            CatalogSequence::Touchard => {
                let mut row = vec![Rational::one()];
                for m in 1..=n {
                    let mut next = vec![Rational::zero(); m + 1];
                    for k in 1..=m {
                        let same = if k < m { row[k].clone() * rat(k as i64) } else { Rational::zero() };
                        next[k] = same + row[k - 1].clone();
                    }
                    row = next;
                }
                row
            }
            CatalogSequence::Hermite => {
                let mut prev: Vec<Rational> = vec![];
                let mut cur = vec![Rational::one()];
                for m in 0..n {
                    let mut next = vec![Rational::zero(); m + 2];
                    for (i, c) in cur.iter().enumerate() {
                        next[i + 1] += c;
                    }
                    for (i, c) in prev.iter().enumerate() {
                        next[i] -= c * rat(m as i64);
                    }
                    prev = std::mem::replace(&mut cur, next);
                }
                cur
            }
            CatalogSequence::Laguerre => (0..=n)
                .map(|k| {
                    Rational::from_integer(binomial(n as u32, k as u32))
                        * Rational::new(factorial(n as u32), factorial(k as u32))
                })
                .collect(),
            CatalogSequence::Abel => {
                if n == 0 {
                    return vec![Rational::one()];
                }
                // t (t - n)^(n-1) = Σ_j C(n-1, j) (-n)^(n-1-j) t^(j+1)
                let mut row = vec![Rational::zero(); n + 1];
                for j in 0..n {
                    let p: BigInt = Pow::pow(BigInt::from(-(n as i64)), (n - 1 - j) as u32);
                    row[j + 1] = Rational::from_integer(binomial(n as u32 - 1, j as u32) * p);
                }
                row
            }
        }
    }
}

impl FromStr for CatalogSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown sequence `{s}`")))
    }
}

impl fmt::Display for CatalogSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riordan::Ladder;

    const N: usize = 9;

    fn as_rats(row: &[SParamPoly]) -> Vec<Rational> {
        row.iter().map(|c| c.as_constant().unwrap()).collect()
    }

    fn as_polys(row: &[Rational]) -> Vec<SParamPoly> {
        row.iter().map(|c| SParamPoly::constant(c.clone())).collect()
    }

    #[test]
    fn oracle_rows() {
        let ints = |v: &[i64]| v.iter().map(|&c| rat(c)).collect::<Vec<_>>();
        assert_eq!(CatalogSequence::Touchard.row_polynomial(4), ints(&[0, 1, 7, 6, 1]));
        assert_eq!(CatalogSequence::Hermite.row_polynomial(3), ints(&[0, -3, 0, 1]));
        assert_eq!(CatalogSequence::Laguerre.row_polynomial(2), ints(&[2, 4, 1]));
        assert_eq!(CatalogSequence::Abel.row_polynomial(3), ints(&[0, 9, -6, 1]));
    }

    #[test]
    fn both_conventions_give_the_oracle_rows() {
        for seq in CatalogSequence::ALL {
            let from_sheffer = seq.sheffer_pair(N).unwrap().triangle(N - 1).unwrap();
            let from_riordan = seq.riordan_pair(N).unwrap().array_coeffs(N - 1).unwrap();
            assert_eq!(from_sheffer, from_riordan, "{seq}");
            for n in 0..N {
                assert_eq!(as_rats(from_riordan.row(n)), seq.row_polynomial(n), "{seq} row {n}");
            }
        }
    }

    #[test]
    fn ladder_actions() {
        for seq in CatalogSequence::ALL {
            let pair = seq.sheffer_pair(N + 1).unwrap();
            for n in 0..=8usize {
                let sn = as_polys(&seq.row_polynomial(n));
                let up = pair.ladder_apply(Ladder::Raising, &sn).unwrap();
                assert_eq!(as_rats(&up), seq.row_polynomial(n + 1), "{seq} M s_{n}");
                let down = pair.ladder_apply(Ladder::Lowering, &sn).unwrap();
                let expected: Vec<Rational> = if n == 0 {
                    vec![]
                } else {
                    seq.row_polynomial(n - 1).into_iter().map(|c| c * rat(n as i64)).collect()
                };
                assert_eq!(as_rats(&down), expected, "{seq} P s_{n}");
            }
        }
    }

    #[test]
    fn ladder_examples() {
        let touchard = CatalogSequence::Touchard.sheffer_pair(4).unwrap();
        let t = as_polys(&[rat(0), rat(1)]);
        assert_eq!(
            as_rats(&touchard.ladder_apply(Ladder::Raising, &t).unwrap()),
            vec![rat(0), rat(1), rat(1)]
        );
        assert!(touchard
            .ladder_apply(Ladder::Lowering, &[SParamPoly::one()])
            .unwrap()
            .is_empty());
        let hermite = CatalogSequence::Hermite.sheffer_pair(4).unwrap();
        let he2 = as_polys(&[rat(-1), rat(0), rat(1)]);
        assert_eq!(
            as_rats(&hermite.ladder_apply(Ladder::Lowering, &he2).unwrap()),
            vec![rat(0), rat(2)]
        );
        let short = CatalogSequence::Hermite.sheffer_pair(2).unwrap();
        assert!(short.ladder_apply(Ladder::Raising, &he2).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("Abel".parse::<CatalogSequence>().unwrap(), CatalogSequence::Abel);
        assert!("bessel".parse::<CatalogSequence>().is_err());
    }
}
