use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// The span of `{ξ_w : |w| <= depth}` inside the full Fock space, with basis
/// vectors indexed in length-lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FockSpace {
    alphabet: Alphabet,
    depth: usize,
    dim: usize,
}

impl FockSpace {
    pub fn new(n: u32, depth: usize) -> Result<Self> {
        Ok(Self::over(Alphabet::new(n)?, depth))
    }

    pub fn over(alphabet: Alphabet, depth: usize) -> Self {
        FockSpace { alphabet, depth, dim: alphabet.count_up_to(depth) }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> u32 {
        self.alphabet.size()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn words(&self) -> Vec<Word> {
        self.alphabet.enumerate(self.depth)
    }

    /// Basis index of `ξ_w`.
    pub fn index_of(&self, w: &Word) -> Result<usize> {
        self.alphabet.check(w)?;
        if w.len() > self.depth {
            return Err(Error::WordTooLong { len: w.len(), depth: self.depth });
        }
        Ok(self.alphabet.index_of(w))
    }

    /// Like [`FockSpace::index_of`] but `None` for words beyond the depth.
    pub fn try_index(&self, w: &Word) -> Option<usize> {
        (w.len() <= self.depth).then(|| self.alphabet.index_of(w))
    }

    pub fn word_at(&self, index: usize) -> Word {
        self.alphabet.word_at(index)
    }

    /// Number of basis words of length at most `len` (they occupy the first
    /// indices in canonical order).
    pub fn prefix_dim(&self, len: usize) -> usize {
        self.alphabet.count_up_to(len.min(self.depth))
    }

    /// Length of the word at a basis index, without materializing it.
    pub fn length_at(&self, index: usize) -> usize {
        let mut len = 0;
        while self.alphabet.count_up_to(len) <= index {
            len += 1;
        }
        len
    }
}

/// One tensor factor: a truncated Fock space or a plain `C^d` auxiliary space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Factor {
    Fock(FockSpace),
    Aux(usize),
}

impl Factor {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Fock(h) => h.dim(),
            Factor::Aux(d) => *d,
        }
    }

    pub fn label(&self, index: usize) -> String {
        match self {
            Factor::Fock(h) => h.alphabet().format_word(&h.word_at(index)),
            Factor::Aux(_) => index.to_string(),
        }
    }

    pub fn as_fock(&self) -> Option<&FockSpace> {
        match self {
            Factor::Fock(h) => Some(h),
            Factor::Aux(_) => None,
        }
    }
}

impl From<FockSpace> for Factor {
    fn from(h: FockSpace) -> Self {
        Factor::Fock(h)
    }
}

/// Ordered tensor product of factors. Basis indices are row-major: the first
/// factor varies slowest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSpace {
    factors: Vec<Factor>,
    dim: usize,
}

impl TensorSpace {
    pub fn new(factors: Vec<Factor>) -> Self {
        let dim = factors.iter().map(Factor::dim).product();
        TensorSpace { factors, dim }
    }

    /// `h^{⊗k}`.
    pub fn power(h: FockSpace, k: usize) -> Self {
        Self::new(vec![Factor::Fock(h); k])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The lone Fock factor of a single-factor space.
    pub fn as_fock(&self) -> Option<&FockSpace> {
        match self.factors.as_slice() {
            [f] => f.as_fock(),
            _ => None,
        }
    }

    pub fn tensor(&self, other: &TensorSpace) -> TensorSpace {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        TensorSpace::new(factors)
    }

    /// Splits off the first factor: `(first, rest)`.
    pub fn split_first(&self) -> Option<(Factor, TensorSpace)> {
        let (first, rest) = self.factors.split_first()?;
        Some((*first, TensorSpace::new(rest.to_vec())))
    }

    /// Splits off the last factor: `(rest, last)`.
    pub fn split_last(&self) -> Option<(TensorSpace, Factor)> {
        let (last, rest) = self.factors.split_last()?;
        Some((TensorSpace::new(rest.to_vec()), *last))
    }

    pub fn join(&self, parts: &[usize]) -> usize {
        debug_assert_eq!(parts.len(), self.factors.len());
        parts
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&p, f)| acc * f.dim() + p)
    }

    pub fn split(&self, mut index: usize) -> Vec<usize> {
        let mut parts = vec![0; self.factors.len()];
        for (slot, f) in parts.iter_mut().zip(&self.factors).rev() {
            *slot = index % f.dim();
            index /= f.dim();
        }
        parts
    }

    /// Index of `ξ_{w_1} ⊗ ... ⊗ ξ_{w_k}`; every factor must be a Fock space.
    pub fn index_of_words(&self, words: &[Word]) -> Result<usize> {
        if words.len() != self.factors.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} words for {} factors",
                words.len(),
                self.factors.len()
            )));
        }
        let parts = words
            .iter()
            .zip(&self.factors)
            .map(|(w, f)| match f {
                Factor::Fock(h) => h.index_of(w),
                Factor::Aux(_) => Err(Error::SpaceMismatch("word given for auxiliary factor".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.join(&parts))
    }

    pub fn labels(&self, index: usize) -> Vec<String> {
        self.split(index)
            .into_iter()
            .zip(&self.factors)
            .map(|(p, f)| f.label(p))
            .collect()
    }
}

impl From<FockSpace> for TensorSpace {
    fn from(h: FockSpace) -> Self {
        TensorSpace::new(vec![Factor::Fock(h)])
    }
}

impl From<Factor> for TensorSpace {
    fn from(f: Factor) -> Self {
        TensorSpace::new(vec![f])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        let h = FockSpace::new(2, 3).unwrap();
        assert_eq!(h.dim(), 15);
        assert_eq!(TensorSpace::power(h, 2).dim(), 225);
        assert_eq!(h.prefix_dim(1), 3);
        assert_eq!(h.length_at(0), 0);
        assert_eq!(h.length_at(2), 1);
        assert_eq!(h.length_at(3), 2);
        assert_eq!(h.length_at(14), 3);
    }

    #[test]
    fn row_major_split_join() {
        let h = FockSpace::new(2, 2).unwrap();
        let t = TensorSpace::new(vec![Factor::Fock(h), Factor::Aux(3), Factor::Fock(h)]);
        assert_eq!(t.dim(), 7 * 3 * 7);
        for i in 0..t.dim() {
            assert_eq!(t.join(&t.split(i)), i);
        }
        assert_eq!(t.join(&[1, 0, 0]), 21);
    }

    #[test]
    fn word_too_long() {
        let h = FockSpace::new(2, 2).unwrap();
        assert!(matches!(
            h.index_of(&Word::from([1, 1, 1])),
            Err(Error::WordTooLong { len: 3, depth: 2 })
        ));
        assert_eq!(h.try_index(&Word::from([1, 1, 1])), None);
    }
}
