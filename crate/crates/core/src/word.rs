//! Words of the free monoid on `n` generators.
//!
//! Letters are 1-based everywhere in the public API. Words are ordered
//! length-lexicographically (shorter first, then letter by letter), which is
//! the canonical basis order used by every matrix in this crate.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word `i_1 i_2 ... i_k` over the letters `1..=n`. The empty word is
/// the monoid unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-based letters. Letters are not checked against an
    /// alphabet here; see [`Alphabet::check`].
    pub fn new(letters: impl Into<Vec<u32>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(i: u32) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    /// Returns `v` such that `self = prefix · v`, if `prefix` is a prefix.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.letters()).map(|s| Word(s.to_vec()))
    }

    /// Returns `u` such that `self = u · suffix`, if `suffix` is a suffix.
    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0.strip_suffix(suffix.letters()).map(|s| Word(s.to_vec()))
    }

    /// All factorizations `self = u·v`, from `(∅, self)` to `(self, ∅)`.
    pub fn factorizations(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(move |k| (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec())))
    }

    /// Evaluates the word at a point of `C^n`: the product of `lambda[i-1]`
    /// over the letters `i`.
    pub fn eval(&self, lambda: &[Complex64]) -> Complex64 {
        self.0
            .iter()
            .fold(Complex64::new(1.0, 0.0), |acc, &i| acc * lambda[i as usize - 1])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&[u32]> for Word {
    fn from(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }
}

impl<const K: usize> From<[u32; K]> for Word {
    fn from(letters: [u32; K]) -> Self {
        Word(letters.to_vec())
    }
}

/// Longest word that is a prefix of every member of `words`.
///
/// Returns `None` only for an empty collection.
pub fn max_common_prefix<'a, I>(words: I) -> Option<Word>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut iter = words.into_iter();
    let first = iter.next()?;
    let mut len = first.len();
    for w in iter {
        len = first.0[..len]
            .iter()
            .zip(w.0.iter())
            .take_while(|(a, b)| a == b)
            .count();
    }
    Some(Word(first.0[..len].to_vec()))
}

/// The number of generators of the free monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    n: u32,
}

impl Alphabet {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet { n })
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&i| i == 0 || i > self.n) {
            Some(&letter) => Err(Error::InvalidLetter { letter, n: self.n }),
            None => Ok(()),
        }
    }

    /// Number of words of length exactly `len`.
    pub fn count_of_length(&self, len: usize) -> usize {
        (self.n as usize).pow(len as u32)
    }

    /// Number of words of length at most `depth`.
    pub fn count_up_to(&self, depth: usize) -> usize {
        let n = self.n as usize;
        if n == 1 {
            depth + 1
        } else {
            (n.pow(depth as u32 + 1) - 1) / (n - 1)
        }
    }

    /// All words of length at most `depth` in length-lexicographic order.
    pub fn enumerate(&self, depth: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.count_up_to(depth));
        out.push(Word::empty());
        let mut start = 0;
        for _ in 0..depth {
            let end = out.len();
            for idx in start..end {
                for i in 1..=self.n {
                    let mut letters = out[idx].0.clone();
                    letters.push(i);
                    out.push(Word(letters));
                }
            }
            start = end;
        }
        out
    }

    /// Position of `w` in the length-lexicographic enumeration.
    pub fn index_of(&self, w: &Word) -> usize {
        let n = self.n as usize;
        let rank = w.0.iter().fold(0usize, |acc, &i| acc * n + (i as usize - 1));
        if w.is_empty() {
            0
        } else {
            self.count_up_to(w.len() - 1) + rank
        }
    }

    /// Inverse of [`Alphabet::index_of`].
    pub fn word_at(&self, mut index: usize) -> Word {
        let n = self.n as usize;
        let mut len = 0;
        while index >= self.count_of_length(len) {
            index -= self.count_of_length(len);
            len += 1;
        }
        let mut letters = vec![0u32; len];
        for slot in letters.iter_mut().rev() {
            *slot = (index % n) as u32 + 1;
            index /= n;
        }
        Word(letters)
    }

    /// Text form: `e` for the empty word, letters run together for `n <= 9`,
    /// dot-separated otherwise.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        let sep = if self.n <= 9 { "" } else { "." };
        w.0.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let bad = || Error::Parse(format!("not a word: {s:?}"));
        if s == "e" {
            return Ok(Word::empty());
        }
        let letters: Vec<u32> = if self.n <= 9 {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        } else {
            s.split('.')
                .map(|p| p.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        let w = Word(letters);
        self.check(&w)?;
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}
