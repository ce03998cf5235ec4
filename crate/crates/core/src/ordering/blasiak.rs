//! Normal-ordered exponential of `X = u(a†) (a - g'/g(a†))`, `u = 1/f'`.
//!
//! With `a† ↦ x`, `a ↦ d/dx`, the flow of `X` is `T = f̄(f(x) + λ)` and
//! `exp(λX) = Σ_m g(x)/g(T) (T - x)^m/m! a^m`. The check expands the left
//! side by repeated normal products and the right side from the pair, and
//! returns the difference.

use super::OperatorSeries;
use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::riordan::{Convention, RiordanPair};
use crate::series::TruncSeries;
use crate::weyl::{normal_product, NormalForm};

/// Series in `λ` whose coefficients are series in `x`.
type Bivariate = Vec<TruncSeries>;

fn inv_factorial(n: usize) -> Rational {
    Rational::new(1.into(), factorial(n as u32))
}

fn bi_mul(p: &Bivariate, q: &Bivariate) -> Bivariate {
    let len = p.len().min(q.len());
    (0..len)
        .map(|j| {
            (0..=j).fold(TruncSeries::zero(p[0].trunc_order()), |acc, i| {
                &acc + &(&p[i] * &q[j - i])
            })
        })
        .collect()
}

fn bi_reciprocal(p: &Bivariate) -> Result<Bivariate> {
    let c0 = p[0].reciprocal()?;
    let mut out = vec![c0.clone()];
    for j in 1..p.len() {
        let sum = (1..=j).fold(TruncSeries::zero(c0.trunc_order()), |acc, i| {
            &acc + &(&p[i] * &out[j - i])
        });
        out.push(-&(&c0 * &sum));
    }
    Ok(out)
}

fn series_to_normal(x: &TruncSeries, annihilators: u32) -> NormalForm {
    NormalForm::from_terms(
        x.coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| ((n as u32, annihilators), c.clone())),
    )
}

/// Residual of the identity up to `λ^{n_lambda}`, keeping monomials with at
/// most `n_d` creators. Zero iff the identity holds to that precision.
pub fn blasiak_identity_check(
    pair: &RiordanPair,
    n_d: usize,
    n_lambda: usize,
) -> Result<OperatorSeries> {
    if pair.convention() != Convention::Sheffer {
        return Err(Error::ConventionMismatch {
            expected: Convention::Sheffer.name(),
            found: pair.convention().name(),
        });
    }
    let need = n_d + 2 * n_lambda + 1;
    if pair.trunc_order() < need {
        return Err(Error::InsufficientOrder {
            have: pair.trunc_order(),
            need,
        });
    }
    // Each application of `a` costs one degree in x.
    let p = n_d + n_lambda;
    let g = pair.first();
    let f = pair.second();

    let u = f.derivative().reciprocal()?.truncate(p);
    let w = (&u * &g.derivative().div(g)?).truncate(p);
    let x_op = &series_to_normal(&u, 1) - &series_to_normal(&w, 0);

    let mut lhs = vec![NormalForm::one()];
    let mut power = NormalForm::one();
    for j in 1..=n_lambda {
        power = NormalForm::from_terms(
            normal_product(&x_op, &power)
                .iter()
                .filter(|((n, _), _)| *n as usize <= p)
                .map(|(k, c)| (*k, c.clone())),
        );
        lhs.push(power.scale_rat(&inv_factorial(j)));
    }

    // Y = Σ_j λ^j f̄^{(j)}(f(x)) / j!
    let f_bar = f.revert()?;
    let f_p = f.truncate(p);
    let mut y: Bivariate = vec![TruncSeries::zero(p)];
    let mut deriv = f_bar.clone();
    for j in 1..=n_lambda {
        deriv = deriv.derivative();
        y.push(deriv.truncate(p).compose(&f_p)?.scale_rat(&inv_factorial(j)));
    }

    // g(x + Y) = Σ_k g^{(k)}(x) Y^k / k!
    let mut g_shift: Bivariate = vec![TruncSeries::zero(p); n_lambda + 1];
    let mut y_pow: Bivariate = std::iter::once(TruncSeries::one(p))
        .chain(std::iter::repeat_n(TruncSeries::zero(p), n_lambda))
        .collect();
    let mut g_k = g.clone();
    for k in 0..=n_lambda {
        let coeff = g_k.truncate(p).scale_rat(&inv_factorial(k));
        for (slot, term) in g_shift.iter_mut().zip(&y_pow) {
            *slot = &*slot + &(&coeff * term);
        }
        y_pow = bi_mul(&y_pow, &y);
        g_k = g_k.derivative();
    }
    let g_p = g.truncate(p);
    let ratio: Bivariate = bi_reciprocal(&g_shift)?
        .iter()
        .map(|c| &g_p * c)
        .collect();

    let mut rhs = vec![NormalForm::new(); n_lambda + 1];
    let mut y_m = ratio;
    for m in 0..=n_lambda {
        let scale = inv_factorial(m);
        for (slot, c) in rhs.iter_mut().zip(&y_m) {
            *slot = &*slot + &series_to_normal(&c.scale_rat(&scale), m as u32);
        }
        y_m = bi_mul(&y_m, &y);
    }

    Ok(OperatorSeries::new(lhs)
        .sub(&OperatorSeries::new(rhs))
        .truncate_creators(n_d as u32))
}
