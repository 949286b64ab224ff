//! Left and right regular representations on a truncated Fock space, Fourier
//! coefficients of operators, Cesàro sums, and the truncated-`L_n` membership
//! test.
//!
//! Generators are compressions: `L_i ξ_w = ξ_{iw}` when `|w| < N` and `0` at
//! the top level. Identities involving operator words of total length `d` are
//! exact on the [`SafeZone`] of slack `d`.
//!
//! `R_w = R_{i_1} ··· R_{i_k}` appends the *reversal* of `w`:
//! `R_w ξ_u = ξ_{u w̃}`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{ColumnBuilder, FockSpace, Operator};
use crate::series::FourierSeries;
use crate::word::Word;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The span of `{ξ_w : |w| <= N - slack}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SafeZone {
    space: FockSpace,
    slack: usize,
}

impl SafeZone {
    pub fn new(space: FockSpace, slack: usize) -> Self {
        SafeZone { space, slack }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    /// Largest word length inside the zone, `None` if the zone is empty.
    pub fn max_len(&self) -> Option<usize> {
        self.space.depth().checked_sub(self.slack)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.max_len().is_some_and(|m| w.len() <= m)
    }

    /// Basis indices in the zone; they form an initial segment.
    pub fn indices(&self) -> Vec<usize> {
        match self.max_len() {
            Some(m) => (0..self.space.prefix_dim(m)).collect(),
            None => Vec::new(),
        }
    }

    /// Basis indices of `H^{⊗k}` whose every factor word lies in the zone.
    pub fn tensor_indices(&self, k: usize) -> Vec<usize> {
        let dim = self.space.dim();
        let inner = self.indices();
        let mut out = vec![0usize];
        for _ in 0..k {
            out = out
                .iter()
                .flat_map(|&base| inner.iter().map(move |&i| base * dim + i))
                .collect();
        }
        if inner.is_empty() {
            out.clear();
        }
        out
    }
}

/// For each basis index `u`, the index of `ξ_{wu}` (left) or `ξ_{u w̃}`
/// (right), or `None` when the result falls beyond the depth.
pub fn shift_map(space: &FockSpace, w: &Word, side: Side) -> Result<Vec<Option<usize>>> {
    space.index_of(w)?;
    let alphabet = space.alphabet();
    let rev = w.reverse();
    Ok(space
        .words()
        .iter()
        .map(|u| {
            if u.len() + w.len() > space.depth() {
                return None;
            }
            let target = match side {
                Side::Left => w.concat(u),
                Side::Right => u.concat(&rev),
            };
            Some(alphabet.index_of(&target))
        })
        .collect())
}

fn from_shift_map(space: &FockSpace, map: &[Option<usize>]) -> Operator {
    let mut b = ColumnBuilder::new((*space).into(), (*space).into());
    for target in map {
        if let Some(r) = target {
            b.add(*r, ONE);
        }
        b.finish_column();
    }
    b.build()
}

/// The compressed generator `L_i`.
pub fn left_gen(space: &FockSpace, i: u32) -> Result<Operator> {
    op_word(space, &Word::letter(i), Side::Left)
}

/// The compressed generator `R_i`.
pub fn right_gen(space: &FockSpace, i: u32) -> Result<Operator> {
    op_word(space, &Word::letter(i), Side::Right)
}

/// `L_w` or `R_w`, built directly from the word action.
pub fn op_word(space: &FockSpace, w: &Word, side: Side) -> Result<Operator> {
    Ok(from_shift_map(space, &shift_map(space, w, side)?))
}

/// `Σ a_w L_w` on the space.
pub fn realize(series: &FourierSeries, space: &FockSpace) -> Result<Operator> {
    if series.alphabet() != space.alphabet() {
        return Err(Error::SpaceMismatch("series and space use different alphabets".into()));
    }
    if series.degree() > space.depth() {
        return Err(Error::DegreeOverflow { degree: series.degree(), depth: space.depth() });
    }
    let maps = series
        .iter()
        .map(|(w, c)| Ok((shift_map(space, w, Side::Left)?, *c)))
        .collect::<Result<Vec<_>>>()?;
    let mut b = ColumnBuilder::new((*space).into(), (*space).into());
    for col in 0..space.dim() {
        for (map, c) in &maps {
            if let Some(r) = map[col] {
                b.add(r, *c);
            }
        }
        b.finish_column();
    }
    Ok(b.build())
}

fn fock_of(t: &Operator) -> Result<FockSpace> {
    if !t.is_square() {
        return Err(Error::ShapeMismatch("expected a square operator".into()));
    }
    t.domain()
        .as_fock()
        .copied()
        .ok_or_else(|| Error::SpaceMismatch("expected an operator on a single Fock space".into()))
}

/// `a_w = (T ξ_∅, ξ_w)` for every `|w| <= N`.
pub fn fourier_of(t: &Operator) -> Result<FourierSeries> {
    let space = fock_of(t)?;
    let pairs = t.column_entries(0).map(|(r, v)| (space.word_at(r), v));
    FourierSeries::from_pairs(space.alphabet(), pairs)
}

/// The `k`-th Cesàro sum: coefficient `(1 - |w|/k)·a_w` for `|w| < k`.
pub fn cesaro(series: &FourierSeries, k: usize) -> FourierSeries {
    assert!(k >= 1, "Cesàro index must be positive");
    let pairs = series
        .iter()
        .filter(|(w, _)| w.len() < k)
        .map(|(w, c)| (w.clone(), c * (1.0 - w.len() as f64 / k as f64)));
    FourierSeries::from_pairs(series.alphabet(), pairs).expect("letters already checked")
}

/// `Σ_w (|w|/k)|a_w|`, the triangle-inequality bound on
/// `‖(Σ_k(A) - A)x‖ / ‖x‖` for `k > deg` and `x` in the safe zone.
pub fn cesaro_error_bound(series: &FourierSeries, k: usize) -> f64 {
    series
        .iter()
        .map(|(w, c)| (w.len().min(k) as f64 / k as f64) * c.norm())
        .sum()
}

/// Distance of `T` from the Fourier pattern of truncated `L_n`.
///
/// With `a = fourier_of(T)`, this is the largest `|(Tξ_w, ξ_{uw}) - a_u|`
/// plus the largest `|(Tξ_w, ξ_v)|` over rows `v` not of the form `uw`. It
/// vanishes exactly on `{realize(s)}`.
pub fn membership_defect(t: &Operator) -> Result<f64> {
    let space = fock_of(t)?;
    let a = fourier_of(t)?;
    let words = space.words();
    let alphabet = space.alphabet();
    let mut pattern = 0.0f64;
    let mut stray = 0.0f64;
    for (col, w) in words.iter().enumerate() {
        for u in words.iter().take_while(|u| u.len() + w.len() <= space.depth()) {
            let row = alphabet.index_of(&u.concat(w));
            pattern = pattern.max((t.get(row, col) - a.coeff(u)).norm());
        }
        for (row, v) in t.column_entries(col) {
            if !w.is_suffix_of(&words[row]) {
                stray = stray.max(v.norm());
            }
        }
    }
    Ok(pattern + stray)
}

fn max_column_norm(op: &Operator, cols: &[usize]) -> f64 {
    cols.iter()
        .map(|&c| op.column_entries(c).map(|(_, v)| v.norm_sqr()).sum::<f64>().sqrt())
        .fold(0.0, f64::max)
}

/// `max_{i,j,|w|<=N-2} ‖(L_i R_j - R_j L_i) ξ_w‖`; zero for every space.
pub fn commutation_defect_lr(space: &FockSpace) -> Result<f64> {
    let zone = SafeZone::new(*space, 2).indices();
    let mut worst = 0.0f64;
    for i in 1..=space.n() {
        let l = left_gen(space, i)?;
        for j in 1..=space.n() {
            let r = right_gen(space, j)?;
            let diff = l.compose(&r)?.sub(&r.compose(&l)?)?;
            worst = worst.max(max_column_norm(&diff, &zone));
        }
    }
    Ok(worst)
}

/// `‖[L_u ⊗ L_v, R_a ⊗ R_b]‖` on tensor basis vectors of the safe zone of
/// slack `max(|u|+|a|, |v|+|b|)`.
pub fn tensor_commutation_defect(space: &FockSpace, left: (&Word, &Word), right: (&Word, &Word)) -> Result<f64> {
    use crate::fock::tensor_op;
    let ll = tensor_op(&op_word(space, left.0, Side::Left)?, &op_word(space, left.1, Side::Left)?);
    let rr = tensor_op(&op_word(space, right.0, Side::Right)?, &op_word(space, right.1, Side::Right)?);
    let slack = (left.0.len() + right.0.len()).max(left.1.len() + right.1.len());
    let cols = SafeZone::new(*space, slack).tensor_indices(2);
    let diff = ll.compose(&rr)?.sub(&rr.compose(&ll)?)?;
    Ok(max_column_norm(&diff, &cols))
}

/// The projection onto `span{ξ_w : |w| <= len}`.
pub fn level_projection(space: &FockSpace, len: usize) -> Operator {
    Operator::diagonal((*space).into(), (0..space.prefix_dim(len)).map(|i| (i, ONE)))
}

/// Entrywise `max |L_i* L_j - δ_ij P_{N-1}|` over all `i, j`.
pub fn isometry_defect(space: &FockSpace) -> Result<f64> {
    let gens = (1..=space.n()).map(|i| left_gen(space, i)).collect::<Result<Vec<_>>>()?;
    isometry_defect_of(space, &gens)
}

/// Same as [`isometry_defect`] for caller-supplied generators.
pub fn isometry_defect_of(space: &FockSpace, gens: &[Operator]) -> Result<f64> {
    let p = match space.depth() {
        0 => Operator::zero((*space).into(), (*space).into()),
        d => level_projection(space, d - 1),
    };
    let zero = Operator::zero((*space).into(), (*space).into());
    let mut worst = 0.0f64;
    for (i, li) in gens.iter().enumerate() {
        let adj = li.adjoint();
        for (j, lj) in gens.iter().enumerate() {
            let expected = if i == j { &p } else { &zero };
            worst = worst.max(adj.compose(lj)?.max_abs_diff(expected)?);
        }
    }
    Ok(worst)
}

/// Entrywise defect of `Σ_i L_i L_i* = I - P_0` on the levels `1..=N`.
pub fn row_contraction_defect(space: &FockSpace) -> Result<f64> {
    let mut sum = Operator::zero((*space).into(), (*space).into());
    for i in 1..=space.n() {
        let l = left_gen(space, i)?;
        sum = sum.add(&l.compose(&l.adjoint())?)?;
    }
    let expected = Operator::identity(*space).sub(&level_projection(space, 0))?;
    sum.max_abs_diff(&expected)
}
