use num_complex::Complex64;

use super::space::{FockSpace, TensorSpace};
use crate::error::{Error, Result};
use crate::word::Word;

/// A dense complex vector on a (tensor) space in canonical basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    space: TensorSpace,
    entries: Vec<Complex64>,
}

impl Vector {
    pub fn zeros(space: impl Into<TensorSpace>) -> Self {
        let space = space.into();
        let entries = vec![Complex64::new(0.0, 0.0); space.dim()];
        Vector { space, entries }
    }

    pub fn from_entries(space: impl Into<TensorSpace>, entries: Vec<Complex64>) -> Result<Self> {
        let space = space.into();
        if entries.len() != space.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a space of dimension {}",
                entries.len(),
                space.dim()
            )));
        }
        Ok(Vector { space, entries })
    }

    pub fn unit(space: impl Into<TensorSpace>, index: usize) -> Self {
        let mut v = Self::zeros(space);
        v.entries[index] = Complex64::new(1.0, 0.0);
        v
    }

    /// `ξ_w`.
    pub fn basis(space: &FockSpace, w: &Word) -> Result<Self> {
        Ok(Self::unit(*space, space.index_of(w)?))
    }

    /// `ξ_{w_1} ⊗ ... ⊗ ξ_{w_k}`.
    pub fn basis_tuple(space: &TensorSpace, words: &[Word]) -> Result<Self> {
        let index = space.index_of_words(words)?;
        Ok(Self::unit(space.clone(), index))
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [Complex64] {
        &mut self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `(x, y) = Σ x_i conj(y_i)`, linear in the first slot.
    pub fn inner(&self, other: &Vector) -> Result<Complex64> {
        self.check_same(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b.conj())
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_same(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Vector { space: self.space.clone(), entries })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_same(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Vector { space: self.space.clone(), entries })
    }

    pub fn scale(&self, c: Complex64) -> Vector {
        Vector { space: self.space.clone(), entries: self.entries.iter().map(|z| z * c).collect() }
    }

    pub fn conj(&self) -> Vector {
        Vector { space: self.space.clone(), entries: self.entries.iter().map(|z| z.conj()).collect() }
    }

    /// `x ⊗ y` in row-major order.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let entries = self
            .entries
            .iter()
            .flat_map(|a| other.entries.iter().map(move |b| a * b))
            .collect();
        Vector { space: self.space.tensor(&other.space), entries }
    }

    pub fn max_abs_diff(&self, other: &Vector) -> Result<f64> {
        self.check_same(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn check_same(&self, other: &Vector) -> Result<()> {
        if self.space != other.space {
            return Err(Error::ShapeMismatch(format!(
                "vectors of dimension {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_orthonormal() {
        let h = FockSpace::new(2, 3).unwrap();
        let words = h.words();
        for u in &words {
            for v in &words {
                let ip = Vector::basis(&h, u).unwrap().inner(&Vector::basis(&h, v).unwrap()).unwrap();
                let expected = if u == v { 1.0 } else { 0.0 };
                assert_eq!(ip, Complex64::new(expected, 0.0));
            }
        }
    }

    #[test]
    fn basis_index_of_11() {
        let h = FockSpace::new(2, 3).unwrap();
        let v = Vector::basis(&h, &Word::from([1, 1])).unwrap();
        let ones: Vec<usize> = (0..v.dim()).filter(|&i| v.entries()[i] != Complex64::new(0.0, 0.0)).collect();
        assert_eq!(ones, vec![3]);
        assert!(Vector::basis(&h, &Word::from([1, 1, 1, 1])).is_err());
    }

    #[test]
    fn tuple_basis_is_row_major() {
        let h = FockSpace::new(2, 2).unwrap();
        let t = TensorSpace::power(h, 2);
        let (u, v) = (Word::from([2]), Word::from([1, 2]));
        let x = Vector::basis_tuple(&t, &[u.clone(), v.clone()]).unwrap();
        let expected = Vector::basis(&h, &u).unwrap().tensor(&Vector::basis(&h, &v).unwrap());
        assert_eq!(x, expected);
        assert_eq!(x.entries()[2 * 7 + 4], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn inner_is_conjugate_linear_in_second_slot() {
        let h = FockSpace::new(1, 1).unwrap();
        let x = Vector::from_entries(h, vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        let y = x.scale(Complex64::i());
        assert_eq!(x.inner(&y).unwrap(), -Complex64::i());
        assert_eq!(y.inner(&x).unwrap(), Complex64::i());
    }
}
