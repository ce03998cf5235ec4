use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    /// `a`
    #[serde(rename = "a")]
    Annihilator,
    /// `a†`
    #[serde(rename = "a+")]
    Creator,
}

/// A product of boson letters, read left to right. Empty is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn creators(k: usize) -> Self {
        Self::new(vec![Letter::Creator; k])
    }

    pub fn annihilators(k: usize) -> Self {
        Self::new(vec![Letter::Annihilator; k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    pub fn pow(&self, n: u32) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n as usize);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word::new(letters)
    }

    pub fn count_creators(&self) -> usize {
        self.letters.iter().filter(|l| **l == Letter::Creator).count()
    }

    pub fn count_annihilators(&self) -> usize {
        self.len() - self.count_creators()
    }

    /// Every arrangement of `n` creators and `m` annihilators, in lexicographic
    /// order with `a` before `a†`.
    pub fn shuffles(n: usize, m: usize) -> Vec<Word> {
        fn go(n: usize, m: usize, prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
            if n == 0 && m == 0 {
                out.push(Word::new(prefix.clone()));
                return;
            }
            if m > 0 {
                prefix.push(Letter::Annihilator);
                go(n, m - 1, prefix, out);
                prefix.pop();
            }
            if n > 0 {
                prefix.push(Letter::Creator);
                go(n - 1, m, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, m, &mut Vec::with_capacity(n + m), &mut out);
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<&str> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::Annihilator => "a",
                Letter::Creator => "a†",
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses whitespace-separated letters: `a` for the annihilator and any of
/// `a+`, `ad`, `a†` for the creator. `1` or the empty string is the empty word.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "a" => letters.push(Letter::Annihilator),
                "a+" | "ad" | "a†" => letters.push(Letter::Creator),
                "1" => {}
                _ => return Err(Error::InvalidParameter(format!("unknown letter `{tok}`"))),
            }
        }
        Ok(Word::new(letters))
    }
}

/// The word `a†^L a a†^R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingleAnnihilatorWord {
    #[serde(rename = "L")]
    pub left: u32,
    #[serde(rename = "R")]
    pub right: u32,
}

impl SingleAnnihilatorWord {
    /// Requires `L + R ≥ 1`, so the excess is non-negative.
    pub fn new(left: u32, right: u32) -> Result<Self> {
        if left + right == 0 {
            return Err(Error::InvalidParameter(
                "single-annihilator word needs L + R >= 1".into(),
            ));
        }
        Ok(Self { left, right })
    }

    /// Number of creators minus number of annihilators.
    pub fn excess(&self) -> u32 {
        self.left + self.right - 1
    }

    pub fn to_word(&self) -> Word {
        let mut letters = vec![Letter::Creator; self.left as usize];
        letters.push(Letter::Annihilator);
        letters.extend(std::iter::repeat_n(Letter::Creator, self.right as usize));
        Word::new(letters)
    }
}

impl fmt::Display for SingleAnnihilatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: Word = "a+ a ad".parse().unwrap();
        assert_eq!(w.to_string(), "a† a a†");
        assert_eq!("1".parse::<Word>().unwrap(), Word::empty());
        assert!("b".parse::<Word>().is_err());
    }

    #[test]
    fn shuffles_are_complete() {
        let sh = Word::shuffles(2, 1);
        assert_eq!(sh.len(), 3);
        assert_eq!(Word::shuffles(4, 3).len(), 35);
        assert!(sh.iter().all(|w| w.count_creators() == 2 && w.count_annihilators() == 1));
    }

    #[test]
    fn single_annihilator_word() {
        let w = SingleAnnihilatorWord::new(1, 1).unwrap();
        assert_eq!(w.excess(), 1);
        assert_eq!(w.to_word().to_string(), "a† a a†");
        assert_eq!(SingleAnnihilatorWord::new(0, 3).unwrap().excess(), 2);
        assert!(SingleAnnihilatorWord::new(0, 0).is_err());
    }
}
