use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::word::{Alphabet, Word};

/// A finitely supported Fourier series `Σ a_w L_w`.
///
/// Zero coefficients are never stored, so two series are equal exactly when
/// their supports and coefficients agree.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierSeries {
    alphabet: Alphabet,
    coeffs: BTreeMap<Word, Complex64>,
}

impl FourierSeries {
    pub fn zero(alphabet: Alphabet) -> Self {
        FourierSeries { alphabet, coeffs: BTreeMap::new() }
    }

    /// `δ_w`, the series of `L_w`.
    pub fn monomial(alphabet: Alphabet, w: Word) -> Result<Self> {
        Self::from_pairs(alphabet, [(w, Complex64::new(1.0, 0.0))])
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, Word::empty()).expect("empty word is valid")
    }

    pub fn from_pairs(alphabet: Alphabet, pairs: impl IntoIterator<Item = (Word, Complex64)>) -> Result<Self> {
        let mut s = Self::zero(alphabet);
        for (w, c) in pairs {
            alphabet.check(&w)?;
            s.add_term(w, c);
        }
        Ok(s)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Adds `c` to the coefficient of `w`, dropping it if the sum vanishes.
    pub fn add_term(&mut self, w: Word, c: Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        match self.coeffs.entry(w) {
            Entry::Vacant(e) => {
                if c != zero {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == zero {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> Complex64 {
        self.coeffs.get(w).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest word length in the support (0 for the zero series).
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = Self::zero(self.alphabet);
        for (w, v) in &self.coeffs {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &FourierSeries) -> Self {
        let mut out = self.clone();
        for (w, v) in &other.coeffs {
            out.add_term(w.clone(), *v);
        }
        out
    }

    /// Product of the corresponding operators: the coefficient of `w` is
    /// `Σ_{uv = w} s_u t_v`.
    pub fn mul(&self, other: &FourierSeries) -> Self {
        let mut out = Self::zero(self.alphabet);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `Σ_w |a_w|`.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    pub fn max_abs_diff(&self, other: &FourierSeries) -> f64 {
        let mut worst = 0.0f64;
        for (w, v) in &self.coeffs {
            worst = worst.max((v - other.coeff(w)).norm());
        }
        for (w, v) in &other.coeffs {
            if !self.coeffs.contains_key(w) {
                worst = worst.max(v.norm());
            }
        }
        worst
    }
}

impl Serialize for FourierSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (w, c) in &self.coeffs {
            map.serialize_entry(&self.alphabet.format_word(w), &[c.re, c.im])?;
        }
        map.end()
    }
}
