//! Brute-force reference: powers of a word by letter-by-letter rewriting.

use super::OperatorSeries;
use crate::rational::{factorial, Rational};
use crate::weyl::{
    anti_normal_mul_letter, normal_mul_letter, AntiNormalForm, NormalForm, SingleAnnihilatorWord,
};

/// Normal forms of `ω^0, ..., ω^n`.
pub fn oracle_power_normal(w: &SingleAnnihilatorWord, n: u32) -> Vec<NormalForm> {
    let letters = w.to_word();
    let mut out = vec![NormalForm::one()];
    for _ in 0..n {
        let next = letters
            .letters()
            .iter()
            .fold(out.last().unwrap().clone(), |acc, &l| normal_mul_letter(&acc, l));
        out.push(next);
    }
    out
}

/// Anti-normal forms of `ω^0, ..., ω^n`.
pub fn oracle_power_anti_normal(w: &SingleAnnihilatorWord, n: u32) -> Vec<AntiNormalForm> {
    let letters = w.to_word();
    let mut out = vec![AntiNormalForm::one()];
    for _ in 0..n {
        let next = letters
            .letters()
            .iter()
            .fold(out.last().unwrap().clone(), |acc, &l| anti_normal_mul_letter(&acc, l));
        out.push(next);
    }
    out
}

/// `exp(λ ω)` to `λ^order`: the `λ^n` term is `normal_order(ω^n) / n!`.
pub fn oracle_exponential(w: &SingleAnnihilatorWord, order: usize) -> OperatorSeries {
    OperatorSeries::new(
        oracle_power_normal(w, order as u32)
            .into_iter()
            .enumerate()
            .map(|(n, g)| g.scale_rat(&Rational::new(1.into(), factorial(n as u32))))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::spoly::SParamPoly;
    use crate::weyl::{normal_order, normal_product};

    #[test]
    fn examples() {
        let number = SingleAnnihilatorWord::new(1, 0).unwrap();
        let half = |c| SParamPoly::constant(ratio(c, 2));
        assert_eq!(
            oracle_exponential(&number, 2).term(2),
            &NormalForm::from_terms([((2, 2), half(1)), ((1, 1), half(1))])
        );
        let aaa = SingleAnnihilatorWord::new(1, 1).unwrap();
        let series = oracle_exponential(&aaa, 3);
        assert_eq!(
            series.term(2),
            &NormalForm::from_terms([((4, 2), half(1)), ((3, 1), half(4)), ((2, 0), half(2))])
        );
        assert_eq!(series.term(0), &NormalForm::one());
    }

    #[test]
    fn powers_compose() {
        for (l, r) in [(2, 1), (0, 3), (1, 2)] {
            let w = SingleAnnihilatorWord::new(l, r).unwrap();
            let single = normal_order(&w.to_word());
            let pows = oracle_power_normal(&w, 4);
            for n in 0..4 {
                assert_eq!(pows[n + 1], normal_product(&pows[n], &single));
            }
        }
    }
}
