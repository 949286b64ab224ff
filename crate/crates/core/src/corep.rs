//! Corepresentations of truncated `L_n` and representations of its predual.
//!
//! A corepresentation is an operator `V = Σ_w L_w ⊗ B_w` on `H ⊗ K`. At
//! finite depth the defining identity `V_{13}V_{23} = (Δ⊗id)(V)` reduces to
//! the idempotent-family condition `B_u B_v = δ_uv B_u`, which is also the
//! representation law of the convolution algebra on the indicator basis.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::fock::{leg_embed, slice_left, tensor_op, Factor, FockSpace, Operator, TensorSpace, Vector};
use crate::hopf::delta;
use crate::predual::Functional;
use crate::regrep::{op_word, SafeZone, Side};
use crate::series::FourierSeries;
use crate::word::Word;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `max_{u,v} |B_u B_v - δ_uv B_u|` entrywise.
fn idempotent_family_defect(family: &[Operator]) -> Result<f64> {
    let mut worst = 0.0f64;
    for (i, bu) in family.iter().enumerate() {
        for (j, bv) in family.iter().enumerate() {
            let prod = bu.compose(bv)?;
            let d = if i == j { prod.max_abs_diff(bu)? } else { prod.max_abs() };
            worst = worst.max(d);
        }
    }
    Ok(worst)
}

/// `[ξ_∅ ξ_w*]` as a one-term pair list.
fn coefficient_pair(h: &FockSpace, w: &Word) -> Result<[(Vector, Vector); 1]> {
    Ok([(Vector::basis(h, &Word::empty())?, Vector::basis(h, w)?)])
}

fn analytic_sum(h: FockSpace, k: &TensorSpace, family: &[Operator]) -> Result<Operator> {
    if family.len() != h.dim() {
        return Err(Error::ShapeMismatch(format!("{} coefficients for {} words", family.len(), h.dim())));
    }
    let mut triplets = Vec::new();
    for (w, bw) in h.words().iter().zip(family) {
        if bw.domain() != k || bw.codomain() != k {
            return Err(Error::SpaceMismatch("coefficients must act on K".into()));
        }
        if bw.nnz() > 0 {
            triplets.extend(tensor_op(&op_word(&h, w, Side::Left)?, bw).entries());
        }
    }
    let space = TensorSpace::from(h).tensor(k);
    Ok(Operator::from_triplets(space.clone(), space, triplets))
}

/// An operator on `H ⊗ K` together with its slice decomposition
/// `B_w = (ξ_∅ξ_w* ⊗ id)(V)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Corepresentation {
    h: FockSpace,
    k: TensorSpace,
    v: Operator,
    b: Vec<Operator>,
}

/// The three corepresentation defects; all vanish for a valid corepresentation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorepReport {
    /// `max |V - Σ_w L_w ⊗ B_w|`.
    pub reconstruction: f64,
    /// `max |B_u B_v - δ_uv B_u|`.
    pub criterion: f64,
    /// `max |V_{13} V_{23} - Σ_w L_w ⊗ L_w ⊗ B_w|`.
    pub leg_identity: f64,
}

impl CorepReport {
    pub fn max(&self) -> f64 {
        self.reconstruction.max(self.criterion).max(self.leg_identity)
    }
}

impl Corepresentation {
    /// Wraps `V` on `H ⊗ K`, extracting its decomposition by slicing.
    pub fn new(h: FockSpace, k: TensorSpace, v: Operator) -> Result<Self> {
        let space = TensorSpace::from(h).tensor(&k);
        if v.domain() != &space || v.codomain() != &space {
            return Err(Error::SpaceMismatch("corepresentation must act on H ⊗ K".into()));
        }
        let b = h
            .words()
            .iter()
            .map(|w| slice_left(&coefficient_pair(&h, w)?, &v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Corepresentation { h, k, v, b })
    }

    pub fn h(&self) -> FockSpace {
        self.h
    }

    pub fn k(&self) -> &TensorSpace {
        &self.k
    }

    pub fn operator(&self) -> &Operator {
        &self.v
    }

    /// `B_w`, indexed by word.
    pub fn coefficient(&self, w: &Word) -> Result<&Operator> {
        Ok(&self.b[self.h.index_of(w)?])
    }

    pub fn coefficients(&self) -> &[Operator] {
        &self.b
    }

    /// `V = Σ_w L_w ⊗ B_w` for an arbitrary family, idempotent or not.
    pub fn from_family(h: FockSpace, k: TensorSpace, family: &[Operator]) -> Result<Self> {
        let v = analytic_sum(h, &k, family)?;
        Self::new(h, k, v)
    }

    /// `Σ_w L_w ⊗ B_w`.
    pub fn reconstruct(&self) -> Result<Operator> {
        analytic_sum(self.h, &self.k, &self.b)
    }

    /// Runs all three defect computations.
    pub fn check(&self) -> Result<CorepReport> {
        let reconstruction = self.v.max_abs_diff(&self.reconstruct()?)?;
        let criterion = idempotent_family_defect(&self.b)?;
        let leg_identity = self.leg_identity_defect()?;
        Ok(CorepReport { reconstruction, criterion, leg_identity })
    }

    /// Compares `V_{13} V_{23}` with `Σ_w L_w ⊗ L_w ⊗ B_w` on `H ⊗ H ⊗ K`.
    ///
    /// A multi-factor `K` is treated as one auxiliary leg of the same
    /// dimension; row-major indices are unchanged by that regrouping.
    pub fn leg_identity_defect(&self) -> Result<f64> {
        let hf = Factor::Fock(self.h);
        let kf = match self.k.factors() {
            [f] => *f,
            _ => Factor::Aux(self.k.dim()),
        };
        let pair = TensorSpace::new(vec![hf, kf]);
        let v = self.v.clone().reshape(pair.clone(), pair)?;
        let ambient = TensorSpace::new(vec![hf, hf, kf]);
        let lhs = leg_embed(&v, (1, 3), &ambient)?.compose(&leg_embed(&v, (2, 3), &ambient)?)?;
        let mut triplets = Vec::new();
        for (w, bw) in self.h.words().iter().zip(&self.b) {
            if bw.nnz() == 0 {
                continue;
            }
            let mono = FourierSeries::monomial(self.h.alphabet(), w.clone())?;
            let term = tensor_op(&delta(&mono, &self.h, 2)?, bw);
            triplets.extend(term.entries());
        }
        let rhs = Operator::from_triplets(ambient.clone(), ambient, triplets);
        lhs.max_abs_diff(&rhs)
    }

    /// `{w: coordinate list of B_w}` for the nonzero coefficients.
    pub fn to_json(&self) -> Value {
        let alphabet = self.h.alphabet();
        let mut map = Map::new();
        for (w, bw) in self.h.words().iter().zip(&self.b) {
            if bw.nnz() > 0 {
                map.insert(alphabet.format_word(w), bw.to_json());
            }
        }
        Value::Object(map)
    }
}

/// `W(ξ_u ⊗ ξ_v) = ξ_{vu} ⊗ ξ_v` when `|u| + |v| <= N`, zero otherwise.
pub fn fundamental_w(n: u32, depth: usize) -> Result<Corepresentation> {
    let h = FockSpace::new(n, depth)?;
    let words = h.words();
    let alphabet = h.alphabet();
    let dim = h.dim();
    let space = TensorSpace::power(h, 2);
    let mut triplets = Vec::new();
    for (ui, u) in words.iter().enumerate() {
        for (vi, v) in words.iter().enumerate() {
            if u.len() + v.len() <= depth {
                let vu = alphabet.index_of(&v.concat(u));
                triplets.push((vu * dim + vi, ui * dim + vi, ONE));
            }
        }
    }
    let w = Operator::from_triplets(space.clone(), space, triplets);
    Corepresentation::new(h, h.into(), w)
}

/// `max |(L_w ⊗ L_w) W - W (I ⊗ L_w)|` on the safe zone of slack `|w|`.
pub fn w_intertwining_defect(w_corep: &Corepresentation, w: &Word) -> Result<f64> {
    let h = w_corep.h;
    let lw = op_word(&h, w, Side::Left)?;
    let id = Operator::identity(h);
    let lhs = tensor_op(&lw, &lw).compose(&w_corep.v)?;
    let rhs = w_corep.v.compose(&tensor_op(&id, &lw))?;
    let cols = SafeZone::new(h, w.len()).tensor_indices(2);
    lhs.max_abs_diff_on(&rhs, Some(&cols))
}

/// `max |W (R_u ⊗ I) - (R_u ⊗ I) W|` on the safe zone of slack `|u|`.
pub fn w_right_commutation_defect(w_corep: &Corepresentation, u: &Word) -> Result<f64> {
    let h = w_corep.h;
    let ru = tensor_op(&op_word(&h, u, Side::Right)?, &Operator::identity(h));
    let lhs = w_corep.v.compose(&ru)?;
    let rhs = ru.compose(&w_corep.v)?;
    let cols = SafeZone::new(h, u.len()).tensor_indices(2);
    lhs.max_abs_diff_on(&rhs, Some(&cols))
}

/// A representation of the truncated predual on `K`, stored by the images
/// `π_w` of the indicator functionals.
#[derive(Clone, Debug, PartialEq)]
pub struct CBRep {
    h: FockSpace,
    k: TensorSpace,
    pis: Vec<Operator>,
}

impl CBRep {
    /// Validates the representation law `π_u π_v = δ_uv π_u` exactly.
    pub fn new(h: FockSpace, k: TensorSpace, pis: Vec<Operator>) -> Result<Self> {
        let rep = Self::unchecked(h, k, pis)?;
        let defect = rep.law_defect()?;
        if defect != 0.0 {
            return Err(Error::RepresentationLaw(defect));
        }
        Ok(rep)
    }

    /// Builds without checking the representation law.
    pub fn unchecked(h: FockSpace, k: TensorSpace, pis: Vec<Operator>) -> Result<Self> {
        if pis.len() != h.dim() {
            return Err(Error::ShapeMismatch(format!("{} images for {} basis functionals", pis.len(), h.dim())));
        }
        if pis.iter().any(|p| p.domain() != &k || p.codomain() != &k) {
            return Err(Error::SpaceMismatch("representation images must act on K".into()));
        }
        Ok(CBRep { h, k, pis })
    }

    pub fn h(&self) -> FockSpace {
        self.h
    }

    pub fn k(&self) -> &TensorSpace {
        &self.k
    }

    pub fn image(&self, w: &Word) -> Result<&Operator> {
        Ok(&self.pis[self.h.index_of(w)?])
    }

    pub fn images(&self) -> &[Operator] {
        &self.pis
    }

    pub fn law_defect(&self) -> Result<f64> {
        idempotent_family_defect(&self.pis)
    }

    /// `π(φ) = Σ_w φ(L_w) π_w`.
    pub fn evaluate(&self, phi: &Functional) -> Result<Operator> {
        if phi.space() != self.h {
            return Err(Error::SpaceMismatch("functional lives on a different Fock space".into()));
        }
        let mut out = Operator::zero(self.k.clone(), self.k.clone());
        for (value, pi) in phi.values().iter().zip(&self.pis) {
            if *value != ZERO && pi.nnz() > 0 {
                out = out.combine(pi, *value)?;
            }
        }
        Ok(out)
    }
}

/// `π_V(φ) = (φ ⊗ id)(V)`, read off on the indicator basis by slicing.
pub fn rep_from_corep(v: &Corepresentation) -> Result<CBRep> {
    let criterion = idempotent_family_defect(&v.b)?;
    if criterion != 0.0 {
        return Err(Error::InvalidCorepresentation(criterion));
    }
    let pis = v
        .h
        .words()
        .iter()
        .map(|w| slice_left(&coefficient_pair(&v.h, w)?, &v.v))
        .collect::<Result<Vec<_>>>()?;
    CBRep::new(v.h, v.k.clone(), pis)
}

/// Builds `V_π` from `(V_π(ξ_a ⊗ x), ξ_b ⊗ y) = (π([ξ_a ξ_b*]) x, y)`.
///
/// On basis vectors `[ξ_a ξ_b*](L_w) = δ_{wa, b}`, so the functional is the
/// indicator of the unique `w` with `b = wa`, or zero.
pub fn corep_from_rep(pi: &CBRep) -> Result<Corepresentation> {
    let defect = pi.law_defect()?;
    if defect != 0.0 {
        return Err(Error::RepresentationLaw(defect));
    }
    let h = pi.h;
    let words = h.words();
    let dk = pi.k.dim();
    let mut triplets = Vec::new();
    for (a, wa) in words.iter().enumerate() {
        for (b, wb) in words.iter().enumerate() {
            let Some(w) = wb.strip_suffix(wa) else { continue };
            let phi = Functional::indicator(h, &w)?;
            let image = pi.evaluate(&phi)?;
            for (y, x, val) in image.entries() {
                triplets.push((b * dk + y, a * dk + x, val));
            }
        }
    }
    let space = TensorSpace::from(h).tensor(&pi.k);
    let v = Operator::from_triplets(space.clone(), space, triplets);
    let corep = Corepresentation::new(h, pi.k.clone(), v)?;
    let gap = corep.v.max_abs_diff(&corep.reconstruct()?)?;
    if gap != 0.0 {
        return Err(Error::InvalidCorepresentation(gap));
    }
    Ok(corep)
}

/// The character `ρ_w(φ) = φ(L_w)` as a representation on `C`.
pub fn character(h: FockSpace, w: &Word) -> Result<CBRep> {
    let k = TensorSpace::from(Factor::Aux(1));
    let target = h.index_of(w)?;
    let pis = (0..h.dim())
        .map(|i| {
            if i == target {
                Operator::identity(k.clone())
            } else {
                Operator::zero(k.clone(), k.clone())
            }
        })
        .collect();
    CBRep::new(h, k, pis)
}

/// The trivial representation `π_w = δ_{w,∅} I` on `K`.
pub fn trivial_rep(h: FockSpace, k: TensorSpace) -> Result<CBRep> {
    let pis = (0..h.dim())
        .map(|i| if i == 0 { Operator::identity(k.clone()) } else { Operator::zero(k.clone(), k.clone()) })
        .collect();
    CBRep::new(h, k, pis)
}

/// `max_{u,v} |b_u b_v - δ_uv b_u|` for a scalar family.
pub fn scalar_character_residual(values: &[Complex64]) -> f64 {
    let mut worst = 0.0f64;
    for (i, &bu) in values.iter().enumerate() {
        for (j, &bv) in values.iter().enumerate() {
            let target = if i == j { bu } else { ZERO };
            worst = worst.max((bu * bv - target).norm());
        }
    }
    worst
}

/// All nonzero solutions of `b_u b_v = δ_uv b_u` over the words of the space.
///
/// Each coordinate is a root of `x² = x`. Supports are grown level by level:
/// a support of size `s` is a candidate only if every subset of size `s - 1`
/// solved the system, and a candidate is kept if the full system holds with
/// ones on the support.
pub fn solve_characters(h: &FockSpace) -> Vec<Vec<Complex64>> {
    let dim = h.dim();
    let to_values = |support: &[usize]| {
        let mut v = vec![ZERO; dim];
        support.iter().for_each(|&i| v[i] = ONE);
        v
    };
    let mut solutions = Vec::new();
    let mut level: Vec<Vec<usize>> = (0..dim)
        .map(|i| vec![i])
        .filter(|s| scalar_character_residual(&to_values(s)) == 0.0)
        .collect();
    while !level.is_empty() {
        solutions.extend(level.iter().map(|s| to_values(s)));
        let valid: std::collections::BTreeSet<Vec<usize>> = level.iter().cloned().collect();
        let mut next = Vec::new();
        for (i, a) in level.iter().enumerate() {
            for b in &level[i + 1..] {
                if a[..a.len() - 1] != b[..b.len() - 1] {
                    continue;
                }
                let mut cand = a.clone();
                cand.push(*b.last().expect("nonempty support"));
                let subsets_ok = (0..cand.len()).all(|drop| {
                    let mut sub = cand.clone();
                    sub.remove(drop);
                    valid.contains(&sub)
                });
                if subsets_ok && scalar_character_residual(&to_values(&cand)) == 0.0 {
                    next.push(cand);
                }
            }
        }
        level = next;
    }
    solutions
}

/// The Gelfand spectrum at depth `N`: the words labelling the characters.
pub fn spectrum(h: &FockSpace) -> Vec<Word> {
    solve_characters(h)
        .into_iter()
        .map(|values| {
            let idx = values.iter().position(|&v| v != ZERO).expect("characters are nonzero");
            h.word_at(idx)
        })
        .collect()
}

/// Checks that the coefficient operators `c^ρ_{1,1}` of the characters are
/// exactly the grouplike series, with no extras on either side.
pub fn spectrum_matches_grouplikes(h: &FockSpace) -> Result<bool> {
    let k = TensorSpace::from(Factor::Aux(1));
    let one = Vector::unit(k.clone(), 0);
    let mut from_chars = Vec::new();
    for values in solve_characters(h) {
        let pis = values
            .iter()
            .map(|&b| Operator::identity(k.clone()).scale(b))
            .collect();
        let rep = CBRep::new(*h, k.clone(), pis)?;
        from_chars.push(coefficient_operator(&rep, &one, &one)?.series);
    }
    let grouplikes = crate::hopf::grouplike_solve(h)?;
    if grouplikes.iter().any(|g| g.operator_defect != 0.0) || grouplikes.len() != from_chars.len() {
        return Ok(false);
    }
    Ok(grouplikes.iter().all(|g| from_chars.contains(&g.series)))
}

/// The coefficient operator `c^π_{x,y}`, with `c_w = (π_w x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientOperator {
    pub series: FourierSeries,
    space: FockSpace,
}

impl CoefficientOperator {
    pub fn operator(&self) -> Result<Operator> {
        crate::regrep::realize(&self.series, &self.space)
    }

    pub fn membership_defect(&self) -> Result<f64> {
        crate::regrep::membership_defect(&self.operator()?)
    }

    /// `⟨φ, c⟩ = Σ_w φ(L_w) c_w`.
    pub fn pair(&self, phi: &Functional) -> Result<Complex64> {
        let mut total = ZERO;
        for (w, c) in self.series.iter() {
            total += phi.value(w)? * c;
        }
        Ok(total)
    }
}

pub fn coefficient_operator(pi: &CBRep, x: &Vector, y: &Vector) -> Result<CoefficientOperator> {
    let pairs = pi
        .h
        .words()
        .into_iter()
        .zip(&pi.pis)
        .map(|(w, p)| Ok((w, p.apply(x)?.inner(y)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientOperator { series: FourierSeries::from_pairs(pi.h.alphabet(), pairs)?, space: pi.h })
}

/// `(π₁ × π₂)_w = Σ_{uv = w} π₁_u ⊗ π₂_v` on `K₁ ⊗ K₂`.
pub fn tensor_rep(p1: &CBRep, p2: &CBRep) -> Result<CBRep> {
    if p1.h != p2.h {
        return Err(Error::SpaceMismatch("representations over different Fock spaces".into()));
    }
    let h = p1.h;
    let k = p1.k.tensor(&p2.k);
    let mut terms: BTreeMap<usize, Vec<(usize, usize, Complex64)>> = BTreeMap::new();
    for w in h.words() {
        let idx = h.index_of(&w)?;
        let entry = terms.entry(idx).or_default();
        for (u, v) in w.factorizations() {
            let (a, b) = (&p1.pis[h.index_of(&u)?], &p2.pis[h.index_of(&v)?]);
            if a.nnz() > 0 && b.nnz() > 0 {
                entry.extend(tensor_op(a, b).entries());
            }
        }
    }
    let pis = terms
        .into_values()
        .map(|t| Operator::from_triplets(k.clone(), k.clone(), t))
        .collect();
    CBRep::new(h, k, pis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fundamental_operator_action() {
        let w = fundamental_w(2, 3).unwrap();
        let h = w.h();
        let t = TensorSpace::power(h, 2);
        let x = Vector::basis_tuple(&t, &[Word::from([1]), Word::from([2])]).unwrap();
        let y = w.operator().apply(&x).unwrap();
        assert_eq!(y, Vector::basis_tuple(&t, &[Word::from([2, 1]), Word::from([2])]).unwrap());
        let top = Vector::basis_tuple(&t, &[Word::from([1, 1]), Word::from([2, 2])]).unwrap();
        assert_eq!(w.operator().apply(&top).unwrap().norm(), 0.0);
        // B_v is the projection onto ξ_v
        for (i, bv) in w.coefficients().iter().enumerate() {
            assert_eq!(bv, &Operator::diagonal(h.into(), [(i, ONE)]));
        }
        let r = w.check().unwrap();
        assert_eq!(r, CorepReport { reconstruction: 0.0, criterion: 0.0, leg_identity: 0.0 });
    }

    #[test]
    fn w_intertwines_and_commutes() {
        for depth in [2, 3] {
            let w = fundamental_w(2, depth).unwrap();
            for u in w.h().words() {
                assert_eq!(w_intertwining_defect(&w, &u).unwrap(), 0.0);
                assert_eq!(w_right_commutation_defect(&w, &u).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn w_is_isometric_on_admissible_span() {
        let w = fundamental_w(2, 3).unwrap();
        let h = w.h();
        let gram = w.operator().adjoint().compose(w.operator()).unwrap();
        let words = h.words();
        let dim = h.dim();
        for (ui, u) in words.iter().enumerate() {
            for (vi, v) in words.iter().enumerate() {
                let col = ui * dim + vi;
                let expected = if u.len() + v.len() <= 3 { ONE } else { ZERO };
                assert_eq!(gram.get(col, col), expected);
            }
        }
    }

    #[test]
    fn shift_corepresentations() {
        let h = FockSpace::new(2, 3).unwrap();
        let k = TensorSpace::from(Factor::Aux(1));
        for w in h.words() {
            let v = tensor_op(&op_word(&h, &w, Side::Left).unwrap(), &Operator::identity(k.clone()));
            let corep = Corepresentation::new(h, k.clone(), v).unwrap();
            assert_eq!(corep.check().unwrap().max(), 0.0);
            let rep = rep_from_corep(&corep).unwrap();
            assert_eq!(rep, character(h, &w).unwrap());
            let back = corep_from_rep(&character(h, &w).unwrap()).unwrap();
            assert_eq!(back.operator(), corep.operator());
        }
    }

    #[test]
    fn sum_of_two_shifts_is_rejected() {
        let h = FockSpace::new(2, 3).unwrap();
        let k = TensorSpace::from(Factor::Aux(2));
        let id = Operator::identity(k.clone());
        let (u, v) = (Word::from([1]), Word::from([2, 1]));
        let op = tensor_op(&op_word(&h, &u, Side::Left).unwrap(), &id)
            .add(&tensor_op(&op_word(&h, &v, Side::Left).unwrap(), &id))
            .unwrap();
        let corep = Corepresentation::new(h, k, op).unwrap();
        let r = corep.check().unwrap();
        assert_eq!(r.reconstruction, 0.0);
        assert_eq!(r.criterion, 1.0);
        assert!(r.leg_identity > 0.0);
        assert!(matches!(rep_from_corep(&corep), Err(Error::InvalidCorepresentation(_))));
    }

    #[test]
    fn non_analytic_operator_fails_reconstruction() {
        let h = FockSpace::new(2, 2).unwrap();
        let k = TensorSpace::from(Factor::Aux(1));
        let v = tensor_op(&op_word(&h, &Word::from([1]), Side::Left).unwrap().adjoint(), &Operator::identity(k.clone()));
        let r = Corepresentation::new(h, k, v).unwrap().check().unwrap();
        assert!(r.reconstruction > 0.0);
        assert!(r.leg_identity > 0.0);
    }

    #[test]
    fn pi_w_is_left_multiplication() {
        let w = fundamental_w(2, 3).unwrap();
        let h = w.h();
        let rep = rep_from_corep(&w).unwrap();
        let phi = Functional::from_values(h, (0..15).map(|i| c(i as f64, -0.5)).collect()).unwrap();
        let op = rep.evaluate(&phi).unwrap();
        for u in h.words() {
            let xu = Vector::basis(&h, &u).unwrap();
            assert_eq!(op.apply(&xu).unwrap(), xu.scale(phi.value(&u).unwrap()));
        }
        let back = corep_from_rep(&rep).unwrap();
        assert_eq!(back.operator(), w.operator());
        assert_eq!(rep_from_corep(&back).unwrap(), rep);
    }

    #[test]
    fn representation_is_multiplicative() {
        let w = fundamental_w(2, 2).unwrap();
        let h = w.h();
        let rep = rep_from_corep(&w).unwrap();
        let phi = Functional::from_values(h, (0..7).map(|i| c(0.5 * i as f64, 1.0)).collect()).unwrap();
        let psi = Functional::from_values(h, (0..7).map(|i| c(1.0, -(i as f64))).collect()).unwrap();
        let lhs = rep.evaluate(&phi.convolve(&psi).unwrap()).unwrap();
        let rhs = rep.evaluate(&phi).unwrap().compose(&rep.evaluate(&psi).unwrap()).unwrap();
        assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-12);
    }

    #[test]
    fn zero_rep_gives_zero_corep() {
        let h = FockSpace::new(2, 2).unwrap();
        let k = TensorSpace::from(Factor::Aux(2));
        let rep = CBRep::new(h, k.clone(), vec![Operator::zero(k.clone(), k.clone()); 7]).unwrap();
        assert_eq!(corep_from_rep(&rep).unwrap().operator().nnz(), 0);
    }

    #[test]
    fn law_violation_is_reported() {
        let h = FockSpace::new(1, 1).unwrap();
        let k = TensorSpace::from(Factor::Aux(1));
        let id = Operator::identity(k.clone());
        assert!(matches!(CBRep::new(h, k, vec![id.clone(), id]), Err(Error::RepresentationLaw(_))));
    }

    #[test]
    fn spectrum_examples() {
        let h = FockSpace::new(2, 2).unwrap();
        let words: Vec<String> = spectrum(&h).iter().map(|w| h.alphabet().format_word(w)).collect();
        assert_eq!(words, ["e", "1", "2", "11", "12", "21", "22"]);
        assert_eq!(spectrum(&FockSpace::new(1, 3).unwrap()).len(), 4);
        assert!(spectrum_matches_grouplikes(&h).unwrap());
        // ρ_u + ρ_v
        let mut values = vec![ZERO; 7];
        values[1] = ONE;
        values[4] = ONE;
        assert_eq!(scalar_character_residual(&values), 1.0);
    }

    #[test]
    fn coefficient_operators() {
        let w = fundamental_w(2, 3).unwrap();
        let h = w.h();
        let rep = rep_from_corep(&w).unwrap();
        for u in h.words() {
            let xu = Vector::basis(&h, &u).unwrap();
            let c = coefficient_operator(&rep, &xu, &xu).unwrap();
            assert_eq!(c.series, FourierSeries::monomial(h.alphabet(), u.clone()).unwrap());
            assert_eq!(c.membership_defect().unwrap(), 0.0);
            let one = Vector::unit(TensorSpace::from(Factor::Aux(1)), 0);
            let rho = character(h, &u).unwrap();
            assert_eq!(coefficient_operator(&rho, &one, &one).unwrap().series, c.series);
        }
    }

    #[test]
    fn characters_form_a_partial_semigroup() {
        let h = FockSpace::new(2, 3).unwrap();
        let words = h.words();
        for u in &words {
            for v in &words {
                let uv = u.concat(v);
                if uv.len() > 3 {
                    continue;
                }
                let prod = tensor_rep(&character(h, u).unwrap(), &character(h, v).unwrap()).unwrap();
                let expected = character(h, &uv).unwrap();
                for (a, b) in prod.images().iter().zip(expected.images()) {
                    assert_eq!(a.to_dense(), b.to_dense());
                }
            }
        }
    }

    #[test]
    fn tensor_with_trivial_rep() {
        let w = fundamental_w(2, 2).unwrap();
        let h = w.h();
        let rep = rep_from_corep(&w).unwrap();
        let aux = TensorSpace::from(Factor::Aux(2));
        let prod = tensor_rep(&rep, &trivial_rep(h, aux.clone()).unwrap()).unwrap();
        for (p, pi) in prod.images().iter().zip(rep.images()) {
            assert_eq!(p, &tensor_op(pi, &Operator::identity(aux.clone())));
        }
        let ww = tensor_rep(&rep, &rep).unwrap();
        assert_eq!(ww.law_defect().unwrap(), 0.0);
        let corep = corep_from_rep(&ww).unwrap();
        assert_eq!(corep.check().unwrap().max(), 0.0);
    }

    #[test]
    fn json_lists_nonzero_coefficients() {
        let w = fundamental_w(1, 1).unwrap();
        let json = w.to_json();
        let obj = json.as_object().unwrap();
        assert_eq!(obj.keys().cloned().collect::<Vec<_>>(), ["1", "e"]);
        assert_eq!(obj["e"][0]["row"], serde_json::json!(["e"]));
    }
}
