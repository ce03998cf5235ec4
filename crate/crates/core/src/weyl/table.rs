//! Sparse coefficient tables keyed by exponent pairs.
//!
//! One generic container backs three different readings of a key `(i, j)`:
//!
//! | kind          | key      | monomial         |
//! |---------------|----------|------------------|
//! | [`Normal`]    | `(n, m)` | `a†^n a^m`       |
//! | [`AntiNormal`]| `(m, n)` | `a^m a†^n`       |
//! | [`Classical`] | `(n, m)` | `α*^n α^m`       |
//!
//! Keeping the kinds as distinct types stops a normal-ordered table from
//! being fed to a function that expects a symbol.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::rational::Rational;
use crate::spoly::SParamPoly;

pub trait TableKind: Clone + fmt::Debug + PartialEq + Eq + Default {
    /// JSON field names for the two key components, in key order.
    const KEY_NAMES: (&'static str, &'static str);
    const NAME: &'static str;
    /// Renders the monomial for key `(i, j)`.
    fn monomial(i: u32, j: u32) -> String;
}

fn power(sym: &str, k: u32) -> Option<String> {
    match k {
        0 => None,
        1 => Some(sym.to_string()),
        _ => Some(format!("{sym}^{k}")),
    }
}

fn join(parts: [Option<String>; 2]) -> String {
    let v: Vec<String> = parts.into_iter().flatten().collect();
    if v.is_empty() {
        "1".into()
    } else {
        v.join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Normal;
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AntiNormal;
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Classical;

impl TableKind for Normal {
    const KEY_NAMES: (&'static str, &'static str) = ("n", "m");
    const NAME: &'static str = "normal";
    fn monomial(n: u32, m: u32) -> String {
        join([power("a†", n), power("a", m)])
    }
}

impl TableKind for AntiNormal {
    const KEY_NAMES: (&'static str, &'static str) = ("m", "n");
    const NAME: &'static str = "anti-normal";
    fn monomial(m: u32, n: u32) -> String {
        join([power("a", m), power("a†", n)])
    }
}

impl TableKind for Classical {
    const KEY_NAMES: (&'static str, &'static str) = ("n", "m");
    const NAME: &'static str = "classical";
    fn monomial(n: u32, m: u32) -> String {
        join([power("α*", n), power("α", m)])
    }
}

/// Finite linear combination of monomials; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Monomials<K: TableKind> {
    terms: BTreeMap<(u32, u32), SParamPoly>,
    _kind: PhantomData<K>,
}

/// `Σ c a†^n a^m`, keyed `(n, m)`.
pub type NormalForm = Monomials<Normal>;
/// `Σ c a^m a†^n`, keyed `(m, n)`.
pub type AntiNormalForm = Monomials<AntiNormal>;
/// `Σ c α*^n α^m` in the commuting symbol ring, keyed `(n, m)`.
pub type ClassicalPoly = Monomials<Classical>;

impl<K: TableKind> Monomials<K> {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, SParamPoly::one())
    }

    pub fn monomial(i: u32, j: u32, c: SParamPoly) -> Self {
        let mut t = Self::new();
        t.add_term(i, j, c);
        t
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), SParamPoly)>>(iter: I) -> Self {
        let mut t = Self::new();
        for ((i, j), c) in iter {
            t.add_term(i, j, c);
        }
        t
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(terms: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, SParamPoly::from_int(c))))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: SParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, i: u32, j: u32) -> SParamPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &SParamPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &SParamPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.scale(c))))
    }

    pub fn substitute_s(&self, at: &SParamPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.compose(at))))
    }

    /// Same coefficients under a different reading of the keys.
    pub fn reinterpret<J: TableKind>(&self) -> Monomials<J> {
        Monomials {
            terms: self.terms.clone(),
            _kind: PhantomData,
        }
    }

    /// Largest `i + j` over stored terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }
}

impl<K: TableKind> Add for &Monomials<K> {
    type Output = Monomials<K>;
    fn add(self, rhs: &Monomials<K>) -> Monomials<K> {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl<K: TableKind> Sub for &Monomials<K> {
    type Output = Monomials<K>;
    fn sub(self, rhs: &Monomials<K>) -> Monomials<K> {
        self + &(-rhs)
    }
}

impl<K: TableKind> Neg for &Monomials<K> {
    type Output = Monomials<K>;
    fn neg(self) -> Monomials<K> {
        Monomials::from_terms(self.terms.iter().map(|(k, v)| (*k, -v)))
    }
}

impl<K: TableKind> fmt::Display for Monomials<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((i, j), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mono = K::monomial(*i, *j);
            match (c.is_one(), mono.as_str()) {
                (true, _) => write!(f, "{mono}")?,
                (false, "1") => write!(f, "({c})")?,
                (false, _) => write!(f, "({c}) {mono}")?,
            }
        }
        Ok(())
    }
}

impl<K: TableKind> Monomials<K> {
    /// Header line with the key names, then one `i,j,coeff` line per term.
    pub fn to_csv(&self) -> String {
        let (ki, kj) = K::KEY_NAMES;
        let mut out = format!("{ki},{kj},coeff\n");
        for ((i, j), c) in &self.terms {
            out.push_str(&format!("{i},{j},{}\n", c.csv_cell()));
        }
        out
    }
}

impl<K: TableKind> Serialize for Monomials<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            #[serde(flatten)]
            keys: BTreeMap<&'static str, u32>,
            coeff: &'a SParamPoly,
        }
        let (ki, kj) = K::KEY_NAMES;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for ((i, j), c) in &self.terms {
            let mut keys = BTreeMap::new();
            keys.insert(ki, *i);
            keys.insert(kj, *j);
            seq.serialize_element(&Entry {
                keys,
                coeff: c,
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut t = NormalForm::from_int_terms(&[((1, 1), 2)]);
        t.add_term(1, 1, SParamPoly::from_int(-2));
        assert!(t.is_empty());
        t.add_term(3, 0, SParamPoly::zero());
        assert!(t.is_empty());
    }

    #[test]
    fn display_reads_naturally() {
        let t = NormalForm::from_int_terms(&[((2, 1), 1), ((1, 0), 1)]);
        assert_eq!(t.to_string(), "a† + a†^2 a");
        let c = ClassicalPoly::from_terms([((1, 0), -SParamPoly::s())]);
        assert_eq!(c.to_string(), "(-s) α*");
        let a = AntiNormalForm::from_int_terms(&[((0, 0), -1), ((1, 1), 1)]);
        assert_eq!(a.to_string(), "(-1) + a a†");
    }

    #[test]
    fn json_is_sorted_and_keyed() {
        let t = NormalForm::from_int_terms(&[((2, 1), 1), ((1, 0), 3)]);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"[{"m":0,"n":1,"coeff":["3"]},{"m":1,"n":2,"coeff":["1"]}]"#
        );
    }
}
