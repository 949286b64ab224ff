//! Kronecker products, the flip, slice maps and leg embeddings.
//!
//! Every tensor index is row-major: the first factor varies slowest.

use num_complex::Complex64;

use super::operator::{ColumnBuilder, Operator};
use super::space::{Factor, TensorSpace};
use super::vector::Vector;
use crate::error::{Error, Result};

/// `A ⊗ B`.
pub fn tensor_op(a: &Operator, b: &Operator) -> Operator {
    kron_impl(a, b, None)
}

/// The columns of `A ⊗ B` listed in `cols` (sorted ascending); all other
/// columns are left zero.
pub fn tensor_op_on_columns(a: &Operator, b: &Operator, cols: &[usize]) -> Operator {
    kron_impl(a, b, Some(cols))
}

fn kron_impl(a: &Operator, b: &Operator, cols: Option<&[usize]>) -> Operator {
    let domain = a.domain().tensor(b.domain());
    let codomain = a.codomain().tensor(b.codomain());
    let (bd, bc) = (b.domain().dim(), b.codomain().dim());
    let mut builder = ColumnBuilder::new(domain.clone(), codomain);
    let emit = |builder: &mut ColumnBuilder, c: usize| {
        let (ca, cb) = (c / bd, c % bd);
        for (ra, va) in a.column_entries(ca) {
            for (rb, vb) in b.column_entries(cb) {
                builder.add(ra * bc + rb, va * vb);
            }
        }
    };
    match cols {
        None => {
            for c in 0..domain.dim() {
                emit(&mut builder, c);
                builder.finish_column();
            }
        }
        Some(cols) => {
            let mut next = 0;
            for &c in cols {
                while next < c {
                    builder.finish_column();
                    next += 1;
                }
                emit(&mut builder, c);
                builder.finish_column();
                next += 1;
            }
        }
    }
    builder.build()
}

/// The flip `x ⊗ y ↦ y ⊗ x` from `left ⊗ right` to `right ⊗ left`.
pub fn flip(left: &TensorSpace, right: &TensorSpace) -> Operator {
    let (dl, dr) = (left.dim(), right.dim());
    let one = Complex64::new(1.0, 0.0);
    let triplets = (0..dl * dr)
        .map(|i| {
            let (a, b) = (i / dr, i % dr);
            (b * dl + a, i, one)
        })
        .collect();
    Operator::from_triplets(left.tensor(right), right.tensor(left), triplets)
}

/// A finite sum `Σ_j [ξ_j η_j*]` of rank-one functionals on one factor.
pub type RankOnePairs = [(Vector, Vector)];

/// Coefficients `M[a][b] = Σ_j ξ_j[a]·conj(η_j[b])`.
fn pair_matrix(pairs: &RankOnePairs, factor: &Factor) -> Result<Vec<Vec<Complex64>>> {
    let dim = factor.dim();
    let expected = TensorSpace::from(*factor);
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (xi, eta) in pairs {
        if xi.space() != &expected || eta.space() != &expected {
            return Err(Error::SpaceMismatch("functional vectors do not live on the sliced leg".into()));
        }
        for (a, &x) in xi.entries().iter().enumerate() {
            if x == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (b, &y) in eta.entries().iter().enumerate() {
                m[a][b] += x * y.conj();
            }
        }
    }
    Ok(m)
}

/// `(φ ⊗ id)(T)`: the operator `S` on the remaining legs with
/// `(Sx, y) = Σ_j (T(ξ_j ⊗ x), η_j ⊗ y)`.
pub fn slice_left(pairs: &RankOnePairs, t: &Operator) -> Result<Operator> {
    let (fd, rest_d) = t.domain().split_first().ok_or_else(|| Error::SpaceMismatch("empty space".into()))?;
    let (fc, rest_c) = t.codomain().split_first().ok_or_else(|| Error::SpaceMismatch("empty space".into()))?;
    if fd != fc {
        return Err(Error::SpaceMismatch("sliced leg differs between domain and codomain".into()));
    }
    let m = pair_matrix(pairs, &fd)?;
    let (kd, kc) = (rest_d.dim(), rest_c.dim());
    let mut triplets = Vec::new();
    for (row, col, v) in t.entries() {
        let (a, x) = (col / kd, col % kd);
        let (b, y) = (row / kc, row % kc);
        let w = m[a][b];
        if w != Complex64::new(0.0, 0.0) {
            triplets.push((y, x, v * w));
        }
    }
    Ok(Operator::from_triplets(rest_d, rest_c, triplets))
}

/// `(id ⊗ φ)(T)`: the operator `S` with `(Sx, y) = Σ_j (T(x ⊗ ξ_j), y ⊗ η_j)`.
pub fn slice_right(pairs: &RankOnePairs, t: &Operator) -> Result<Operator> {
    let (rest_d, fd) = t.domain().split_last().ok_or_else(|| Error::SpaceMismatch("empty space".into()))?;
    let (rest_c, fc) = t.codomain().split_last().ok_or_else(|| Error::SpaceMismatch("empty space".into()))?;
    if fd != fc {
        return Err(Error::SpaceMismatch("sliced leg differs between domain and codomain".into()));
    }
    let m = pair_matrix(pairs, &fd)?;
    let (ld, lc) = (fd.dim(), fc.dim());
    let mut triplets = Vec::new();
    for (row, col, v) in t.entries() {
        let (x, a) = (col / ld, col % ld);
        let (y, b) = (row / lc, row % lc);
        let w = m[a][b];
        if w != Complex64::new(0.0, 0.0) {
            triplets.push((y, x, v * w));
        }
    }
    Ok(Operator::from_triplets(rest_d, rest_c, triplets))
}

/// Places an operator on a two-factor space onto legs `(i, j)` (1-based,
/// `i < j`) of a three-factor ambient space, acting as the identity on the
/// remaining leg.
pub fn leg_embed(v: &Operator, legs: (usize, usize), ambient: &TensorSpace) -> Result<Operator> {
    let (i, j) = legs;
    if ambient.rank() != 3 || !(1 <= i && i < j && j <= 3) {
        return Err(Error::ShapeMismatch(format!("legs ({i},{j}) in a rank-{} space", ambient.rank())));
    }
    if !v.is_square() || v.domain().rank() != 2 {
        return Err(Error::ShapeMismatch("leg embedding needs a square operator on two factors".into()));
    }
    let f = ambient.factors();
    if v.domain().factors() != [f[i - 1], f[j - 1]] {
        return Err(Error::SpaceMismatch(format!("operator factors do not match legs ({i},{j})")));
    }
    let other = 6 - i - j;
    let dj = f[j - 1].dim();
    let mut builder = ColumnBuilder::new(ambient.clone(), ambient.clone());
    let mut parts = [0usize; 3];
    for col in 0..ambient.dim() {
        let c = ambient.split(col);
        let vcol = c[i - 1] * dj + c[j - 1];
        for (r, val) in v.column_entries(vcol) {
            parts[i - 1] = r / dj;
            parts[j - 1] = r % dj;
            parts[other - 1] = c[other - 1];
            builder.add(ambient.join(&parts), val);
        }
        builder.finish_column();
    }
    Ok(builder.build())
}

/// Conjugates a square operator by the leg permutation sending factor
/// `perm[k]` of the input to position `k` of the output.
pub fn permute_legs(t: &Operator, perm: &[usize]) -> Result<Operator> {
    let space = t.domain();
    if !t.is_square() || perm.len() != space.rank() {
        return Err(Error::ShapeMismatch("permutation does not match the operator's legs".into()));
    }
    let factors: Vec<Factor> = perm.iter().map(|&p| space.factors()[p]).collect();
    let target = TensorSpace::new(factors);
    let map = |idx: usize| {
        let parts = space.split(idx);
        let permuted: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
        target.join(&permuted)
    };
    let triplets = t.entries().map(|(r, c, v)| (map(r), map(c), v)).collect();
    Ok(Operator::from_triplets(target.clone(), target, triplets))
}
