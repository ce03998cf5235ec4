//! Weyl-ordered powers of `a† a a†`.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::rational::{binomial, factorial, rat, Rational};
use crate::riordan::Triangle;
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;
use crate::weyl::ClassicalPoly;

/// Coefficient of `α*^{n+k} α^k` in the Weyl symbol of `(a† a a†)^n`:
/// `(-1)^{(n-k)/2} 2^{-(n-k)} C(n, (n-k)/2) n!/k!`, zero for odd `n - k`.
pub fn weyl_power_coefficient(n: u32, k: u32) -> Rational {
    if k > n || (n - k) % 2 == 1 {
        return Rational::zero();
    }
    let j = (n - k) / 2;
    let mut c = Rational::new(binomial(n, j) * factorial(n), factorial(k) << (n - k) as usize);
    if j % 2 == 1 {
        c = -c;
    }
    c
}

pub fn weyl_power_aaa(n: u32) -> ClassicalPoly {
    ClassicalPoly::from_terms(
        (0..=n).map(|k| ((n + k, k), SParamPoly::constant(weyl_power_coefficient(n, k)))),
    )
}

/// Ordinary Riordan array `[z^n] d(z) h(z)^k`.
pub fn ordinary_array_coeffs(d: &TruncSeries, h: &TruncSeries, order: usize) -> Triangle {
    let d = d.truncate(order);
    let h = h.truncate(order);
    let mut col = d;
    let mut rows = vec![Vec::with_capacity(order + 1); order + 1];
    for k in 0..=order {
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row.push(col.coeff(n).clone());
        }
        col = &col * &h;
    }
    Triangle::from_fn(order, |n, k| rows[n][k].clone())
}

/// `(1/sqrt(1 + 4z²), 2z/(1 + sqrt(1 + 4z²)))`, whose ordinary array holds
/// `(-1)^{(n-k)/2} C(n, (n-k)/2)`.
pub fn weyl_aaa_ordinary_pair(order: usize) -> Result<(TruncSeries, TruncSeries)> {
    let q = TruncSeries::from_ints(&[1, 0, 4], order);
    let root = q.pow_rational(&Rational::new(1.into(), 2.into()))?;
    let d = root.reciprocal()?;
    let h = TruncSeries::var(order)
        .scale_rat(&rat(2))
        .div(&(&TruncSeries::one(order) + &root))?;
    debug_assert!(d.coeff(0).is_one());
    Ok((d, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::power_symbol;
    use crate::weyl::{weyl_quantize, SingleAnnihilatorWord};

    #[test]
    fn small_powers() {
        assert_eq!(weyl_power_aaa(0), ClassicalPoly::one());
        assert_eq!(weyl_power_aaa(1), ClassicalPoly::from_int_terms(&[((2, 1), 1)]));
        assert_eq!(
            weyl_power_aaa(2),
            ClassicalPoly::from_int_terms(&[((4, 2), 1), ((2, 0), -1)])
        );
    }

    #[test]
    fn ordinary_array_entries() {
        let (d, h) = weyl_aaa_ordinary_pair(10).unwrap();
        let tri = ordinary_array_coeffs(&d, &h, 10);
        for n in 0..=10u32 {
            for k in 0..=n {
                let expected = if (n - k) % 2 == 1 {
                    Rational::zero()
                } else {
                    let j = (n - k) / 2;
                    let b = Rational::from_integer(binomial(n, j));
                    if j % 2 == 1 { -b } else { b }
                };
                let entry = tri.get(n as usize, k as usize).as_constant().unwrap();
                assert_eq!(entry, expected, "n={n} k={k}");
                let scaled = &entry
                    * Rational::new(factorial(n), factorial(k) << (n - k) as usize);
                assert_eq!(scaled, weyl_power_coefficient(n, k));
            }
        }
    }

    #[test]
    fn agrees_with_two_point_symbol() {
        let w = SingleAnnihilatorWord::new(1, 1).unwrap();
        for n in 0..=6 {
            let sym = power_symbol(&w, n, &SParamPoly::zero()).unwrap();
            assert_eq!(sym, weyl_power_aaa(n as u32), "n={n}");
        }
    }

    #[test]
    fn quantizes_to_laguerre() {
        for n in 0..=4 {
            assert_eq!(weyl_quantize(&weyl_power_aaa(n)), crate::ordering::laguerre_power(n));
        }
    }
}
