//! The truncated predual of `L_n` as a convolution algebra.
//!
//! A functional is stored by its value array `(φ(L_w))_{|w|<=N}`. Because
//! `Δ(L_w) = L_w ⊗ L_w`, convolution `φ∗ψ = (φ⊗ψ)∘Δ` is the pointwise product
//! of value arrays.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fock::{FockSpace, Vector};
use crate::regrep::{shift_map, Side};
use crate::word::Word;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A functional on truncated `L_n`, given by its values on the monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional {
    space: FockSpace,
    values: Vec<Complex64>,
    provenance: Option<Vec<(Vector, Vector)>>,
}

impl Functional {
    pub fn from_values(space: FockSpace, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != space.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a space of dimension {}",
                values.len(),
                space.dim()
            )));
        }
        Ok(Functional { space, values, provenance: None })
    }

    pub fn zero(space: FockSpace) -> Self {
        Functional { space, values: vec![ZERO; space.dim()], provenance: None }
    }

    /// The functional with value `1` on `L_w` and `0` on every other monomial.
    pub fn indicator(space: FockSpace, w: &Word) -> Result<Self> {
        let mut f = Self::zero(space);
        f.values[space.index_of(w)?] = ONE;
        Ok(f)
    }

    /// `Σ_j [ξ_j η_j*]`, with values `Σ_j (L_w ξ_j, η_j)`.
    pub fn from_rank_one(space: FockSpace, pairs: Vec<(Vector, Vector)>) -> Result<Self> {
        let expected = space.into();
        if pairs.iter().any(|(x, y)| x.space() != &expected || y.space() != &expected) {
            return Err(Error::SpaceMismatch("rank-one vectors must live on the functional's space".into()));
        }
        let mut values = vec![ZERO; space.dim()];
        for (idx, w) in space.words().iter().enumerate() {
            let map = shift_map(&space, w, Side::Left)?;
            values[idx] = pairs
                .iter()
                .map(|(xi, eta)| {
                    map.iter()
                        .enumerate()
                        .filter_map(|(u, t)| t.map(|t| xi.entries()[u] * eta.entries()[t].conj()))
                        .sum::<Complex64>()
                })
                .sum();
        }
        Ok(Functional { space, values, provenance: Some(pairs) })
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, w: &Word) -> Result<Complex64> {
        Ok(self.values[self.space.index_of(w)?])
    }

    pub fn provenance(&self) -> Option<&[(Vector, Vector)]> {
        self.provenance.as_deref()
    }

    /// `φ∗ψ`: pointwise product of value arrays.
    pub fn convolve(&self, other: &Functional) -> Result<Functional> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(Functional { space: self.space, values, provenance: None })
    }

    /// `φ^†`: entrywise conjugate of the value array.
    pub fn dagger(&self) -> Functional {
        Functional { space: self.space, values: self.values.iter().map(|v| v.conj()).collect(), provenance: None }
    }

    pub fn add(&self, other: &Functional) -> Result<Functional> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Functional { space: self.space, values, provenance: None })
    }

    pub fn scale(&self, c: Complex64) -> Functional {
        Functional { space: self.space, values: self.values.iter().map(|v| v * c).collect(), provenance: None }
    }

    pub fn max_abs_diff(&self, other: &Functional) -> Result<f64> {
        self.check_same(other)?;
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// `Δ_*(φ)(L_u ⊗ L_v) = φ(L_{uv})` for `|u| + |v| <= N`.
    pub fn comult(&self) -> TensorFunctional {
        let words = self.space.words();
        let alphabet = self.space.alphabet();
        let mut values = BTreeMap::new();
        for u in &words {
            for v in words.iter().take_while(|v| u.len() + v.len() <= self.space.depth()) {
                let uv = alphabet.index_of(&u.concat(v));
                values.insert(vec![u.clone(), v.clone()], self.values[uv]);
            }
        }
        TensorFunctional { space: self.space, values }
    }

    /// `(Δ_* ⊗ id)Δ_*(φ)` on admissible triples: `Δ_*φ(L_{uv} ⊗ L_w)`.
    pub fn comult_left_iterate(&self) -> TensorFunctional {
        let pair = self.comult();
        self.iterate(|u, v, w| pair.get(&[u.concat(v), w.clone()]))
    }

    /// `(id ⊗ Δ_*)Δ_*(φ)` on admissible triples: `Δ_*φ(L_u ⊗ L_{vw})`.
    pub fn comult_right_iterate(&self) -> TensorFunctional {
        let pair = self.comult();
        self.iterate(|u, v, w| pair.get(&[u.clone(), v.concat(w)]))
    }

    fn iterate(&self, value: impl Fn(&Word, &Word, &Word) -> Option<Complex64>) -> TensorFunctional {
        let words = self.space.words();
        let depth = self.space.depth();
        let mut values = BTreeMap::new();
        for u in &words {
            for v in words.iter().take_while(|v| u.len() + v.len() <= depth) {
                for w in words.iter().take_while(|w| u.len() + v.len() + w.len() <= depth) {
                    let x = value(u, v, w).expect("admissible triple stays within depth");
                    values.insert(vec![u.clone(), v.clone(), w.clone()], x);
                }
            }
        }
        TensorFunctional { space: self.space, values }
    }

    fn check_same(&self, other: &Functional) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch("functionals on different spaces".into()));
        }
        Ok(())
    }
}

impl Serialize for Functional {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let alphabet = self.space.alphabet();
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for (i, v) in self.values.iter().enumerate() {
            map.serialize_entry(&alphabet.format_word(&self.space.word_at(i)), &[v.re, v.im])?;
        }
        map.end()
    }
}

/// A functional on a tensor power of truncated `L_n`, stored by its values on
/// admissible monomial tuples `L_{w_1} ⊗ ... ⊗ L_{w_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorFunctional {
    space: FockSpace,
    values: BTreeMap<Vec<Word>, Complex64>,
}

impl TensorFunctional {
    pub fn get(&self, words: &[Word]) -> Option<Complex64> {
        self.values.get(words).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, &Complex64)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Tuples with a nonzero value.
    pub fn support(&self) -> Vec<&Vec<Word>> {
        self.values.iter().filter(|(_, v)| **v != ZERO).map(|(k, _)| k).collect()
    }

    /// Pointwise product on the common tuples.
    pub fn convolve(&self, other: &TensorFunctional) -> Result<TensorFunctional> {
        if self.space != other.space || self.values.len() != other.values.len() {
            return Err(Error::SpaceMismatch("tensor functionals on different spaces".into()));
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| {
                let w = other.values.get(k).ok_or_else(|| Error::SpaceMismatch("tuple sets differ".into()))?;
                Ok((k.clone(), v * w))
            })
            .collect::<Result<_>>()?;
        Ok(TensorFunctional { space: self.space, values })
    }

    pub fn max_abs_diff(&self, other: &TensorFunctional) -> Result<f64> {
        if self.values.len() != other.values.len() {
            return Err(Error::SpaceMismatch("tuple sets differ".into()));
        }
        self.values
            .iter()
            .map(|(k, v)| {
                let w = other.values.get(k).ok_or_else(|| Error::SpaceMismatch("tuple sets differ".into()))?;
                Ok((v - w).norm())
            })
            .try_fold(0.0, |acc, d: Result<f64>| Ok(f64::max(acc, d?)))
    }
}

/// The point evaluation `φ_λ(L_w) = w(λ)` for `λ` in the open unit ball,
/// together with its vector-state realization `[ν_λ ν_λ*]`.
///
/// `ν_λ` is the normalized truncation of `Σ_w conj(w(λ)) ξ_w`. Its vector
/// state satisfies `[ν_λν_λ*](L_w) = w(λ)·(1 - r^{N-|w|+1}) / (1 - r^{N+1})`
/// with `r = ‖λ‖²`, so the gap to `w(λ)` is at most `r^{N-|w|+1} / (1 - r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointFunctional {
    lambda: Vec<Complex64>,
    functional: Functional,
    nu: Vector,
    nu_state: Functional,
}

impl PointFunctional {
    pub fn new(space: FockSpace, lambda: Vec<Complex64>) -> Result<Self> {
        if lambda.len() != space.n() as usize {
            return Err(Error::ShapeMismatch(format!("point has {} coordinates, expected {}", lambda.len(), space.n())));
        }
        let norm_sq: f64 = lambda.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq >= 1.0 || norm_sq.is_nan() {
            return Err(Error::OutsideBall { norm_sq });
        }
        let words = space.words();
        let values: Vec<Complex64> = words.iter().map(|w| w.eval(&lambda)).collect();
        let functional = Functional::from_values(space, values.clone())?;
        let raw = Vector::from_entries(space, values.iter().map(|v| v.conj()).collect())?;
        let nu = raw.scale(Complex64::new(1.0 / raw.norm(), 0.0));
        let nu_state = Functional::from_rank_one(space, vec![(nu.clone(), nu.clone())])?;
        Ok(PointFunctional { lambda, functional, nu, nu_state })
    }

    pub fn lambda(&self) -> &[Complex64] {
        &self.lambda
    }

    pub fn functional(&self) -> &Functional {
        &self.functional
    }

    pub fn nu(&self) -> &Vector {
        &self.nu
    }

    /// The value array of `[ν_λ ν_λ*]`.
    pub fn nu_state(&self) -> &Functional {
        &self.nu_state
    }

    pub fn norm_sq(&self) -> f64 {
        self.lambda.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `|[ν_λν_λ*](L_w) - w(λ)|`.
    pub fn reconstruction_error(&self, w: &Word) -> Result<f64> {
        Ok((self.nu_state.value(w)? - self.functional.value(w)?).norm())
    }

    /// `r^{N-|w|+1} / (1 - r)` with `r = ‖λ‖²`.
    pub fn tail_bound(&self, w: &Word) -> f64 {
        let r = self.norm_sq();
        let depth = self.functional.space().depth();
        r.powi((depth - w.len().min(depth) + 1) as i32) / (1.0 - r)
    }

    /// `λ̄`.
    pub fn conj_point(&self) -> Vec<Complex64> {
        self.lambda.iter().map(|z| z.conj()).collect()
    }
}

/// `λ * μ = (λ_1 μ_1, ..., λ_n μ_n)`.
pub fn point_product(lambda: &[Complex64], mu: &[Complex64]) -> Vec<Complex64> {
    lambda.iter().zip(mu).map(|(a, b)| a * b).collect()
}

/// `max |φ_λ∗φ_μ - φ_{λ*μ}|` and `max |φ_λ^† - φ_{λ̄}|` over value arrays.
pub fn point_convolve_check(space: FockSpace, lambda: &[Complex64], mu: &[Complex64]) -> Result<(f64, f64)> {
    let pl = PointFunctional::new(space, lambda.to_vec())?;
    let pm = PointFunctional::new(space, mu.to_vec())?;
    let prod = PointFunctional::new(space, point_product(lambda, mu))?;
    let conv = pl.functional().convolve(pm.functional())?.max_abs_diff(prod.functional())?;
    let bar = PointFunctional::new(space, pl.conj_point())?;
    let dag = pl.functional().dagger().max_abs_diff(bar.functional())?;
    Ok((conv, dag))
}

/// `max(|φ(I) - 1|, max_i |φ(L_i) - 1|)`; a convolution unit has defect 0.
pub fn counit_defect(phi: &Functional) -> f64 {
    let space = phi.space();
    let one = (phi.values[0] - ONE).norm();
    (1..=space.n())
        .filter_map(|i| space.try_index(&Word::letter(i)))
        .map(|idx| (phi.values[idx] - ONE).norm())
        .fold(one, f64::max)
}

/// The value array that a convolution unit would need: `1` on every monomial.
pub fn unit_candidate(space: FockSpace) -> Functional {
    Functional { space, values: vec![ONE; space.dim()], provenance: None }
}
