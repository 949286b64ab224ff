//! The wandering subspace of `L^{⊗k}`.
//!
//! `K` is spanned by the basis tuples `ξ_{u_1} ⊗ ··· ⊗ ξ_{u_k}` whose entries
//! have no common prefix. Every basis tuple is `(L_w)^{⊗k}` applied to exactly
//! one element of `K`, with `w` the maximal common prefix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fock::FockSpace;
use crate::regrep::{shift_map, Side};
use crate::word::{max_common_prefix, Word};

/// `true` when the entries share no nonempty prefix.
pub fn is_wandering(tuple: &[Word]) -> bool {
    max_common_prefix(tuple).is_none_or(|w| w.is_empty())
}

/// Splits a tuple as `(w, κ)` with `tuple_i = w κ_i` and `κ` wandering.
pub fn decompose(tuple: &[Word]) -> (Word, Vec<Word>) {
    let w = max_common_prefix(tuple).unwrap_or_default();
    let kappa = tuple.iter().map(|u| u.strip_prefix(&w).expect("common prefix")).collect();
    (w, kappa)
}

/// Mixed-radix index of a tuple of basis indices, first factor slowest.
fn tuple_index(indices: &[usize], dim: usize) -> usize {
    indices.iter().fold(0, |acc, &i| acc * dim + i)
}

fn tuple_digits(index: usize, dim: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    fill_digits(index, dim, &mut digits);
    digits
}

fn fill_digits(mut index: usize, dim: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = index % dim;
        index /= dim;
    }
}

/// Length of the common prefix of the words at the given indices.
fn prefix_len_of(words: &[Word], digits: &[usize]) -> usize {
    let first = words[digits[0]].letters();
    digits[1..].iter().fold(first.len(), |len, &i| {
        first[..len].iter().zip(words[i].letters()).take_while(|(a, b)| a == b).count()
    })
}

/// Basis tuples of `K` inside the depth-`N` truncation of `H^{⊗k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct WanderingBasis {
    space: FockSpace,
    k: usize,
    tuples: Vec<usize>,
}

impl WanderingBasis {
    pub fn new(n: u32, k: usize, depth: usize, exec: Exec) -> Result<Self> {
        if k == 0 {
            return Err(Error::ShapeMismatch("fold count must be at least 1".into()));
        }
        let space = FockSpace::new(n, depth)?;
        let words = space.words();
        let dim = space.dim();
        let tail = dim.pow(k as u32 - 1);
        let chunks = exec.map_range(dim, |first| {
            let mut digits = vec![0; k];
            (first * tail..(first + 1) * tail)
                .filter(|&t| {
                    fill_digits(t, dim, &mut digits);
                    prefix_len_of(&words, &digits) == 0
                })
                .collect::<Vec<_>>()
        });
        Ok(WanderingBasis { space, k, tuples: chunks.concat() })
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.tuples.len()
    }

    /// Tensor-basis indices of the spanning tuples, ascending.
    pub fn indices(&self) -> &[usize] {
        &self.tuples
    }

    pub fn tuples(&self) -> Vec<Vec<Word>> {
        let dim = self.space.dim();
        self.tuples
            .iter()
            .map(|&t| tuple_digits(t, dim, self.k).into_iter().map(|i| self.space.word_at(i)).collect())
            .collect()
    }

    pub fn contains(&self, tuple: &[Word]) -> Result<bool> {
        let idx = tuple.iter().map(|w| self.space.index_of(w)).collect::<Result<Vec<_>>>()?;
        Ok(self.tuples.binary_search(&tuple_index(&idx, self.space.dim())).is_ok())
    }
}

/// `dim K` counted by enumeration.
pub fn dim_k_enumerated(n: u32, k: usize, depth: usize, exec: Exec) -> Result<usize> {
    Ok(WanderingBasis::new(n, k, depth, exec)?.dim())
}

/// `T^k - n·S^k` with `T` the number of words of length `<= N` and `S` the
/// number of length `<= N - 1`.
pub fn dim_k_closed_form(n: u32, k: usize, depth: usize) -> Result<usize> {
    let space = FockSpace::new(n, depth)?;
    let t = space.dim();
    let s = depth.checked_sub(1).map_or(0, |d| space.prefix_dim(d));
    Ok(t.pow(k as u32) - n as usize * s.pow(k as u32))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WanderingReport {
    pub n: u32,
    pub k: usize,
    pub depth: usize,
    pub tensor_dim: usize,
    pub dim_k: usize,
    pub closed_form: usize,
    /// Largest inner product between translates by distinct words.
    pub orthogonality_defect: f64,
    /// Largest inner product between distinct images under one translate.
    pub isometry_defect: f64,
    /// Number of (w, κ) pairs whose translate stays within depth.
    pub translate_count: usize,
    /// Every tensor basis tuple is hit exactly once.
    pub complete: bool,
    /// Every tuple was reached from its maximal common prefix.
    pub decomposition_exact: bool,
    /// `dim K` at depths `1..=N`.
    pub growth: Vec<usize>,
    pub growth_strict: bool,
}

impl WanderingReport {
    pub fn passed(&self) -> bool {
        self.dim_k == self.closed_form
            && self.orthogonality_defect == 0.0
            && self.isometry_defect == 0.0
            && self.translate_count == self.tensor_dim
            && self.complete
            && self.decomposition_exact
            && self.growth_strict
    }
}

/// Translates `K` by every `(L_w)^{⊗k}` that keeps it within depth and
/// checks that the images tile the tensor basis.
pub fn wandering_check(n: u32, k: usize, depth: usize, exec: Exec) -> Result<WanderingReport> {
    let basis = WanderingBasis::new(n, k, depth, exec)?;
    let space = basis.space;
    let dim = space.dim();
    let tensor_dim = dim.pow(k as u32);
    let words = space.words();

    let images: Vec<Vec<usize>> = exec.map(&words, |w| {
        let shift = shift_map(&space, w, Side::Left).expect("word within depth");
        let mut digits = vec![0; k];
        basis
            .tuples
            .iter()
            .filter_map(|&t| {
                fill_digits(t, dim, &mut digits);
                digits.iter().try_fold(0, |acc, &i| shift[i].map(|j| acc * dim + j))
            })
            .collect()
    });

    let mut owner = vec![usize::MAX; tensor_dim];
    let (mut orthogonality_defect, mut isometry_defect) = (0.0f64, 0.0f64);
    let mut translate_count = 0;
    for (wi, imgs) in images.iter().enumerate() {
        for &t in imgs {
            translate_count += 1;
            match owner[t] {
                usize::MAX => owner[t] = wi,
                o if o == wi => isometry_defect = 1.0,
                _ => orthogonality_defect = 1.0,
            }
        }
    }
    let complete = owner.iter().all(|&o| o != usize::MAX) && translate_count == tensor_dim;

    // the translate that hit each tuple must be its maximal common prefix
    let decomposition_exact = complete
        && exec
            .map_range(dim, |first| {
                let mut digits = vec![0; k];
                (first * tensor_dim / dim..(first + 1) * tensor_dim / dim).all(|t| {
                    fill_digits(t, dim, &mut digits);
                    let w = &words[owner[t]];
                    w.len() == prefix_len_of(&words, &digits)
                        && digits.iter().all(|&i| w.is_prefix_of(&words[i]))
                })
            })
            .into_iter()
            .all(|ok| ok);

    let growth = (1..=depth)
        .map(|d| dim_k_enumerated(n, k, d, exec))
        .collect::<Result<Vec<_>>>()?;
    let growth_strict = growth.windows(2).all(|p| p[0] < p[1]);

    Ok(WanderingReport {
        n,
        k,
        depth,
        tensor_dim,
        dim_k: basis.dim(),
        closed_form: dim_k_closed_form(n, k, depth)?,
        orthogonality_defect,
        isometry_defect,
        translate_count,
        complete,
        decomposition_exact,
        growth,
        growth_strict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub n: u32,
    pub k: usize,
    pub depth: usize,
    pub tensor_dim: usize,
    pub dim_k: usize,
    pub closed_form: usize,
}

/// `dim K` for every depth `1..=max_depth`.
pub fn dim_table(n: u32, k: usize, max_depth: usize, exec: Exec) -> Result<Vec<DimRow>> {
    (1..=max_depth)
        .map(|depth| {
            let t = FockSpace::new(n, depth)?.dim();
            Ok(DimRow {
                n,
                k,
                depth,
                tensor_dim: t.pow(k as u32),
                dim_k: dim_k_enumerated(n, k, depth, exec)?,
                closed_form: dim_k_closed_form(n, k, depth)?,
            })
        })
        .collect()
}
