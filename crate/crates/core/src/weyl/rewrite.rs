//! Reduction of boson words to normal and anti-normal form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::table::{AntiNormalForm, NormalForm};
use super::word::{Letter, Word};
use crate::rational::{binomial, factorial, Rational};
use crate::spoly::SParamPoly;

/// `k! C(n,k) C(m,k)`: number of ways to contract `k` pairs.
pub(crate) fn contractions(n: u32, m: u32, k: u32) -> BigInt {
    factorial(k) * binomial(n, k) * binomial(m, k)
}

fn int(c: &BigInt) -> Rational {
    Rational::from_integer(c.clone())
}

/// Right multiplication by a single letter, keeping normal order.
///
/// `a†^n a^m · a† = a†^(n+1) a^m + m a†^n a^(m-1)`.
pub fn normal_mul_letter(g: &NormalForm, letter: Letter) -> NormalForm {
    let mut out = NormalForm::new();
    for (&(n, m), c) in g.iter() {
        match letter {
            Letter::Annihilator => out.add_term(n, m + 1, c.clone()),
            Letter::Creator => {
                out.add_term(n + 1, m, c.clone());
                if m > 0 {
                    out.add_term(n, m - 1, c.scale(&Rational::from_integer(m.into())));
                }
            }
        }
    }
    out
}

/// Right multiplication by a single letter, keeping anti-normal order.
///
/// `a^m a†^n · a = a^(m+1) a†^n - n a^m a†^(n-1)`.
pub fn anti_normal_mul_letter(g: &AntiNormalForm, letter: Letter) -> AntiNormalForm {
    let mut out = AntiNormalForm::new();
    for (&(m, n), c) in g.iter() {
        match letter {
            Letter::Creator => out.add_term(m, n + 1, c.clone()),
            Letter::Annihilator => {
                out.add_term(m + 1, n, c.clone());
                if n > 0 {
                    out.add_term(m, n - 1, c.scale(&-Rational::from_integer(n.into())));
                }
            }
        }
    }
    out
}

/// Normal form of a word.
///
/// Letters are absorbed one at a time into an already-normal prefix, which
/// is the leftmost `a a† → a† a + 1` strategy with the commutations for each
/// new letter batched. [`normal_order_rewrite`] performs the literal rewriting.
pub fn normal_order(w: &Word) -> NormalForm {
    w.letters()
        .iter()
        .fold(NormalForm::one(), |acc, &l| normal_mul_letter(&acc, l))
}

/// Anti-normal form of a word, keyed `(m, n)` for `a^m a†^n`.
pub fn anti_normal_order(w: &Word) -> AntiNormalForm {
    w.letters()
        .iter()
        .fold(AntiNormalForm::one(), |acc, &l| anti_normal_mul_letter(&acc, l))
}

/// Literal term rewriting: repeatedly replace the leftmost occurrence of
/// `from` in any word by `swapped + sign`. Exponential; intended for short words.
fn rewrite(w: &Word, from: (Letter, Letter), sign: i64) -> BTreeMap<Word, BigInt> {
    let mut done: BTreeMap<Word, BigInt> = BTreeMap::new();
    let mut pending: Vec<(Word, BigInt)> = vec![(w.clone(), BigInt::one())];
    while let Some((word, c)) = pending.pop() {
        let letters = word.letters();
        let pos = letters.windows(2).position(|p| (p[0], p[1]) == from);
        match pos {
            None => {
                let e = done.entry(word).or_insert_with(BigInt::zero);
                *e += c;
            }
            Some(i) => {
                let mut swapped = letters.to_vec();
                swapped.swap(i, i + 1);
                let mut contracted = letters[..i].to_vec();
                contracted.extend_from_slice(&letters[i + 2..]);
                pending.push((Word::new(contracted), &c * sign));
                pending.push((Word::new(swapped), c));
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

/// Normal form by leftmost `a a† → a† a + 1` rewriting, step by step.
pub fn normal_order_rewrite(w: &Word) -> NormalForm {
    let terms = rewrite(w, (Letter::Annihilator, Letter::Creator), 1);
    NormalForm::from_terms(terms.into_iter().map(|(word, c)| {
        let n = word.count_creators() as u32;
        let m = word.count_annihilators() as u32;
        ((n, m), SParamPoly::constant(int(&c)))
    }))
}

/// Anti-normal form by leftmost `a† a → a a† - 1` rewriting.
pub fn anti_normal_order_rewrite(w: &Word) -> AntiNormalForm {
    let terms = rewrite(w, (Letter::Creator, Letter::Annihilator), -1);
    AntiNormalForm::from_terms(terms.into_iter().map(|(word, c)| {
        let n = word.count_creators() as u32;
        let m = word.count_annihilators() as u32;
        ((m, n), SParamPoly::constant(int(&c)))
    }))
}

/// Product of two normal forms, returned in normal form.
pub fn normal_product(x: &NormalForm, y: &NormalForm) -> NormalForm {
    let mut out = NormalForm::new();
    for (&(n1, m1), c1) in x.iter() {
        for (&(n2, m2), c2) in y.iter() {
            let c = c1 * c2;
            for k in 0..=m1.min(n2) {
                out.add_term(
                    n1 + n2 - k,
                    m1 + m2 - k,
                    c.scale(&int(&contractions(m1, n2, k))),
                );
            }
        }
    }
    out
}

/// Product of two anti-normal forms, returned in anti-normal form.
pub fn anti_normal_product(x: &AntiNormalForm, y: &AntiNormalForm) -> AntiNormalForm {
    let mut out = AntiNormalForm::new();
    for (&(m1, n1), c1) in x.iter() {
        for (&(m2, n2), c2) in y.iter() {
            let c = c1 * c2;
            for k in 0..=n1.min(m2) {
                let mut w = int(&contractions(n1, m2, k));
                if k % 2 == 1 {
                    w = -w;
                }
                out.add_term(m1 + m2 - k, n1 + n2 - k, c.scale(&w));
            }
        }
    }
    out
}

/// Rewrites an anti-normal form in normal order.
pub fn anti_normal_to_normal(x: &AntiNormalForm) -> NormalForm {
    let mut out = NormalForm::new();
    for (&(m, n), c) in x.iter() {
        for k in 0..=m.min(n) {
            out.add_term(n - k, m - k, c.scale(&int(&contractions(n, m, k))));
        }
    }
    out
}

/// Rewrites a normal form in anti-normal order.
pub fn normal_to_anti_normal(x: &NormalForm) -> AntiNormalForm {
    let mut out = AntiNormalForm::new();
    for (&(n, m), c) in x.iter() {
        for k in 0..=m.min(n) {
            let mut w = int(&contractions(n, m, k));
            if k % 2 == 1 {
                w = -w;
            }
            out.add_term(m - k, n - k, c.scale(&w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn normal_order_examples() {
        assert_eq!(
            normal_order(&w("a a+")),
            NormalForm::from_int_terms(&[((1, 1), 1), ((0, 0), 1)])
        );
        assert_eq!(
            normal_order(&w("a+ a a+")),
            NormalForm::from_int_terms(&[((2, 1), 1), ((1, 0), 1)])
        );
        assert_eq!(
            normal_order(&w("a+ a a+ a+ a a+")),
            NormalForm::from_int_terms(&[((4, 2), 1), ((3, 1), 4), ((2, 0), 2)])
        );
        assert_eq!(normal_order(&Word::empty()), NormalForm::one());
    }

    #[test]
    fn anti_normal_order_examples() {
        assert_eq!(
            anti_normal_order(&w("a+ a")),
            AntiNormalForm::from_int_terms(&[((1, 1), 1), ((0, 0), -1)])
        );
        assert_eq!(
            anti_normal_order(&w("a+ a a+")),
            AntiNormalForm::from_int_terms(&[((1, 2), 1), ((0, 1), -1)])
        );
        assert_eq!(
            anti_normal_order(&w("a+ a+ a")),
            AntiNormalForm::from_int_terms(&[((1, 2), 1), ((0, 1), -2)])
        );
    }

    #[test]
    fn letter_fold_agrees_with_literal_rewriting() {
        for n in 0..=4 {
            for m in 0..=4 {
                for word in Word::shuffles(n, m) {
                    assert_eq!(normal_order(&word), normal_order_rewrite(&word), "{word}");
                    assert_eq!(
                        anti_normal_order(&word),
                        anti_normal_order_rewrite(&word),
                        "{word}"
                    );
                }
            }
        }
    }

    #[test]
    fn a_squared_adag_squared() {
        let g = normal_order(&w("a a a+ a+"));
        assert_eq!(
            g,
            NormalForm::from_int_terms(&[((2, 2), 1), ((1, 1), 4), ((0, 0), 2)])
        );
        let anti = AntiNormalForm::monomial(2, 2, SParamPoly::one());
        assert_eq!(anti_normal_to_normal(&anti), g);
    }

    #[test]
    fn order_conversions_are_inverse() {
        let words = ["a+ a a+ a a", "a a a+", "a+ a+ a a+ a"];
        for s in words {
            let word = w(s);
            let g = normal_order(&word);
            let h = anti_normal_order(&word);
            assert_eq!(normal_to_anti_normal(&g), h);
            assert_eq!(anti_normal_to_normal(&h), g);
        }
    }

    #[test]
    fn products_are_morphisms() {
        let (x, y) = (w("a a+ a"), w("a+ a+ a a+"));
        assert_eq!(
            normal_product(&normal_order(&x), &normal_order(&y)),
            normal_order(&x.concat(&y))
        );
        assert_eq!(
            anti_normal_product(&anti_normal_order(&x), &anti_normal_order(&y)),
            anti_normal_order(&x.concat(&y))
        );
    }
}
