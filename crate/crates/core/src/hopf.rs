//! The comultiplication `Δ(L_w) = L_w ⊗ L_w` on Fourier data, its iterates,
//! the Hopf-structure defects, the vacuum integral and grouplike solving.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{flip, slice_left, slice_right, tensor_op, ColumnBuilder, FockSpace, Operator, TensorSpace, Vector};
use crate::regrep::{op_word, realize, shift_map, SafeZone, Side};
use crate::series::FourierSeries;
use crate::word::Word;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn check_degree(series: &FourierSeries, space: &FockSpace) -> Result<()> {
    if series.alphabet() != space.alphabet() {
        return Err(Error::SpaceMismatch("series and space use different alphabets".into()));
    }
    if series.degree() > space.depth() {
        return Err(Error::DegreeOverflow { degree: series.degree(), depth: space.depth() });
    }
    Ok(())
}

/// `Δ_k(A) = Σ_w a_w (L_w)^{⊗k}` on `H^{⊗k}`.
pub fn delta(series: &FourierSeries, space: &FockSpace, k: usize) -> Result<Operator> {
    delta_impl(series, space, k, None)
}

/// The columns of [`delta`] listed in `cols` (ascending); others are zero.
pub fn delta_on_columns(series: &FourierSeries, space: &FockSpace, k: usize, cols: &[usize]) -> Result<Operator> {
    delta_impl(series, space, k, Some(cols))
}

fn delta_impl(series: &FourierSeries, space: &FockSpace, k: usize, cols: Option<&[usize]>) -> Result<Operator> {
    check_degree(series, space)?;
    let maps = series
        .iter()
        .map(|(w, c)| Ok((shift_map(space, w, Side::Left)?, *c)))
        .collect::<Result<Vec<_>>>()?;
    let tspace = TensorSpace::power(*space, k);
    let dim = space.dim();
    let mut b = ColumnBuilder::new(tspace.clone(), tspace.clone());
    let mut parts = vec![0usize; k];
    let mut emit = |b: &mut ColumnBuilder, col: usize| {
        let mut rest = col;
        for slot in parts.iter_mut().rev() {
            *slot = rest % dim;
            rest /= dim;
        }
        'terms: for (map, c) in &maps {
            let mut row = 0;
            for &p in &parts {
                match map[p] {
                    Some(t) => row = row * dim + t,
                    None => continue 'terms,
                }
            }
            b.add(row, *c);
        }
    };
    match cols {
        None => {
            for col in 0..tspace.dim() {
                emit(&mut b, col);
                b.finish_column();
            }
        }
        Some(cols) => {
            let mut next = 0;
            for &col in cols {
                while next < col {
                    b.finish_column();
                    next += 1;
                }
                emit(&mut b, col);
                b.finish_column();
                next += 1;
            }
        }
    }
    Ok(b.build())
}

/// `Σ_j c_j · (A_j ⊗ B_j)` restricted to the listed columns.
fn sum_kron_on_columns(terms: &[(Complex64, Operator, Operator)], domain: TensorSpace, cols: &[usize]) -> Operator {
    let mut b = ColumnBuilder::new(domain.clone(), domain);
    let mut next = 0;
    for &col in cols {
        while next < col {
            b.finish_column();
            next += 1;
        }
        for (c, a, m) in terms {
            let (bd, bc) = (m.domain().dim(), m.codomain().dim());
            let (ca, cb) = (col / bd, col % bd);
            for (ra, va) in a.column_entries(ca) {
                for (rb, vb) in m.column_entries(cb) {
                    b.add(ra * bc + rb, c * va * vb);
                }
            }
        }
        b.finish_column();
        next += 1;
    }
    b.build()
}

/// Coassociativity defect on the safe zone of slack `deg(A)`.
///
/// `(Δ⊗id)` and `(id⊗Δ)` act leg-wise on the decomposition
/// `Δ(A) = Σ a_w L_w ⊗ L_w`; both results are compared with each other and
/// with `Δ_3(A)`.
pub fn coassoc_defect(series: &FourierSeries, space: &FockSpace) -> Result<f64> {
    check_degree(series, space)?;
    let cols = SafeZone::new(*space, series.degree()).tensor_indices(3);
    let triple = TensorSpace::power(*space, 3);
    let mut left_terms = Vec::new();
    let mut right_terms = Vec::new();
    for (w, c) in series.iter() {
        let mono = FourierSeries::monomial(space.alphabet(), w.clone())?;
        let lw = op_word(space, w, Side::Left)?;
        let dw = delta(&mono, space, 2)?;
        left_terms.push((*c, dw.clone(), lw.clone()));
        right_terms.push((*c, lw, dw));
    }
    let left = sum_kron_on_columns(&left_terms, triple.clone(), &cols);
    let right = sum_kron_on_columns(&right_terms, triple, &cols);
    let d3 = delta_on_columns(series, space, 3, &cols)?;
    Ok(left
        .max_abs_diff_on(&right, Some(&cols))?
        .max(left.max_abs_diff_on(&d3, Some(&cols))?)
        .max(right.max_abs_diff_on(&d3, Some(&cols))?))
}

/// `max |Σ Δ(A) Σ - Δ(A)|` with `Σ` the flip on `H ⊗ H`.
pub fn cocommute_defect(series: &FourierSeries, space: &FockSpace) -> Result<f64> {
    let d = delta(series, space, 2)?;
    let h = TensorSpace::from(*space);
    let sigma = flip(&h, &h);
    sigma.compose(&d)?.compose(&sigma)?.max_abs_diff(&d)
}

/// `max |Δ(st) - Δ(s)Δ(t)|` on the safe zone of slack `deg s + deg t`.
pub fn hom_defect(s: &FourierSeries, t: &FourierSeries, space: &FockSpace) -> Result<f64> {
    let total = s.degree() + t.degree();
    if total > space.depth() {
        return Err(Error::DegreeOverflow { degree: total, depth: space.depth() });
    }
    let cols = SafeZone::new(*space, total).tensor_indices(2);
    let lhs = delta(&s.mul(t), space, 2)?;
    let rhs = delta(s, space, 2)?.compose(&delta(t, space, 2)?)?;
    lhs.max_abs_diff_on(&rhs, Some(&cols))
}

/// The vacuum integral `φ₀(A) = (Aξ_∅, ξ_∅) = a_∅`.
pub fn integral_value(series: &FourierSeries) -> Complex64 {
    series.coeff(&Word::empty())
}

/// Largest entrywise gap between either slice of `Δ(A)` against `φ₀` and
/// `a_∅ · I`.
pub fn integral_invariance_defect(series: &FourierSeries, space: &FockSpace) -> Result<f64> {
    let d = delta(series, space, 2)?;
    let vac = Vector::basis(space, &Word::empty())?;
    let pairs = [(vac.clone(), vac)];
    let expected = Operator::identity(*space).scale(integral_value(series));
    let right = slice_right(&pairs, &d)?;
    let left = slice_left(&pairs, &d)?;
    Ok(right.max_abs_diff(&expected)?.max(left.max_abs_diff(&expected)?))
}

/// Checks the vacuum expansion `Δ(A)(ξ_∅⊗ξ_∅) = Σ_w a_w ξ_w ⊗ ξ_w`, returning
/// the largest coefficient error.
pub fn vacuum_expansion_defect(series: &FourierSeries, space: &FockSpace) -> Result<f64> {
    let d = delta(series, space, 2)?;
    let dim = space.dim();
    let mut worst = 0.0f64;
    let column: std::collections::HashMap<usize, Complex64> = d.column_entries(0).collect();
    for (u_idx, u) in space.words().iter().enumerate() {
        for v_idx in 0..dim {
            let got = column.get(&(u_idx * dim + v_idx)).copied().unwrap_or(ZERO);
            let expected = if u_idx == v_idx { series.coeff(u) } else { ZERO };
            worst = worst.max((got - expected).norm());
        }
    }
    Ok(worst)
}

/// `max_{u,v} |s_u s_v - δ_uv s_u|` over the words of the space: the
/// coefficient form of `Δ(A) = A ⊗ A`.
pub fn grouplike_residual(series: &FourierSeries, space: &FockSpace) -> f64 {
    let words = space.words();
    let mut worst = 0.0f64;
    for (i, u) in words.iter().enumerate() {
        let su = series.coeff(u);
        for v in &words[i..] {
            let target = if u == v { su } else { ZERO };
            worst = worst.max((su * series.coeff(v) - target).norm());
        }
    }
    worst
}

/// Entrywise `|Δ(A) - A ⊗ A|` on the safe zone of slack `deg(A)`.
pub fn grouplike_operator_defect(series: &FourierSeries, space: &FockSpace) -> Result<f64> {
    let a = realize(series, space)?;
    let cols = SafeZone::new(*space, series.degree()).tensor_indices(2);
    delta(series, space, 2)?.max_abs_diff_on(&tensor_op(&a, &a), Some(&cols))
}

/// A nonzero solution of the grouplike equations together with its
/// operator-level verification.
#[derive(Clone, Debug, PartialEq)]
pub struct Grouplike {
    pub series: FourierSeries,
    pub operator_defect: f64,
}

/// All nonzero series of degree `<= N` with `s_u s_v = δ_uv s_u`.
///
/// The diagonal equations `x² = x` give each coefficient the roots `{0, 1}`;
/// a depth-first search over those roots prunes any branch violating an
/// off-diagonal equation `x_u x_v = 0`. Every solution is then checked against
/// `Δ(A) = A ⊗ A` on operators.
pub fn grouplike_solve(space: &FockSpace) -> Result<Vec<Grouplike>> {
    let words = space.words();
    let mut solutions = Vec::new();
    let mut assignment: Vec<Complex64> = Vec::with_capacity(words.len());
    search(&words, &mut assignment, &mut solutions, space.alphabet());
    solutions
        .into_iter()
        .map(|series| {
            let operator_defect = grouplike_operator_defect(&series, space)?;
            Ok(Grouplike { series, operator_defect })
        })
        .collect()
}

fn search(
    words: &[Word],
    assignment: &mut Vec<Complex64>,
    out: &mut Vec<FourierSeries>,
    alphabet: crate::word::Alphabet,
) {
    let k = assignment.len();
    if k == words.len() {
        if assignment.iter().any(|&x| x != ZERO) {
            let pairs = words.iter().cloned().zip(assignment.iter().copied());
            out.push(FourierSeries::from_pairs(alphabet, pairs).expect("enumerated words are valid"));
        }
        return;
    }
    // roots of x(x - 1) = 0
    for root in [ZERO, Complex64::new(1.0, 0.0)] {
        let consistent = assignment.iter().all(|&y| y * root == ZERO);
        if consistent {
            assignment.push(root);
            search(words, assignment, out, alphabet);
            assignment.pop();
        }
    }
}
