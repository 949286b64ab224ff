//! Check definitions for each suite.
//!
//! A [`CheckGroup`] computes one or more named defects from a single seeded
//! generator. Exact identities use threshold `0`; everything else uses the
//! configured tolerance or a fixed bound.

use num_complex::Complex64;
use serde_json::Value;

use fockhopf::corep::{
    character, coefficient_operator, corep_from_rep, fundamental_w, rep_from_corep, spectrum,
    spectrum_matches_grouplikes, tensor_rep, w_intertwining_defect, w_right_commutation_defect, CBRep,
    Corepresentation,
};
use fockhopf::exec::Exec;
use fockhopf::fock::{slice_left, tensor_op, Factor, FockSpace, Operator, TensorSpace, Vector};
use fockhopf::hopf::{
    cocommute_defect, coassoc_defect, delta, grouplike_solve, hom_defect, integral_invariance_defect,
    vacuum_expansion_defect,
};
use fockhopf::predual::{counit_defect, point_convolve_check, Functional, PointFunctional};
use fockhopf::random::{self, Rng64, BITS};
use fockhopf::regrep::{
    cesaro, cesaro_error_bound, commutation_defect_lr, fourier_of, isometry_defect_of, left_gen, membership_defect,
    op_word, realize, row_contraction_defect, Side,
};
use fockhopf::wandering::wandering_check;
use fockhopf::{FourierSeries, Result, Word};

use crate::config::Suite;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

type Runner = Box<dyn Fn(&mut Rng64) -> Result<Vec<f64>> + Send + Sync>;

pub struct CheckGroup {
    pub suite: Suite,
    pub n: u32,
    pub depth: usize,
    pub extra: Vec<(&'static str, Value)>,
    /// `(name, threshold)` for each defect the runner returns.
    pub checks: Vec<(&'static str, f64)>,
    pub run: Runner,
}

impl CheckGroup {
    pub fn label(&self) -> String {
        let names: Vec<&str> = self.checks.iter().map(|c| c.0).collect();
        let extra: Vec<String> = self.extra.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}/{}/{}/{}/{}", self.suite, names.join("+"), self.n, self.depth, extra.join(","))
    }
}

/// Shared knobs for building groups.
#[derive(Clone, Copy, Debug)]
pub struct Scale {
    pub n: u32,
    pub depth: usize,
    pub tol: f64,
    pub trials: usize,
    pub inject_fault: bool,
    pub exec: Exec,
}

struct Builder {
    scale: Scale,
    suite: Suite,
    groups: Vec<CheckGroup>,
}

impl Builder {
    fn new(scale: Scale, suite: Suite) -> Self {
        Builder { scale, suite, groups: Vec::new() }
    }

    fn group(
        &mut self,
        extra: Vec<(&'static str, Value)>,
        checks: Vec<(&'static str, f64)>,
        run: impl Fn(&mut Rng64) -> Result<Vec<f64>> + Send + Sync + 'static,
    ) {
        self.groups.push(CheckGroup {
            suite: self.suite,
            n: self.scale.n,
            depth: self.scale.depth,
            extra,
            checks,
            run: Box::new(run),
        });
    }

    fn single(&mut self, name: &'static str, threshold: f64, run: impl Fn(&mut Rng64) -> Result<f64> + Send + Sync + 'static) {
        self.group(Vec::new(), vec![(name, threshold)], move |rng| Ok(vec![run(rng)?]));
    }

    /// A check repeated over `trials` seeded draws; the defect is the max.
    fn trials(&mut self, name: &'static str, threshold: f64, run: impl Fn(&mut Rng64) -> Result<f64> + Send + Sync + 'static) {
        let trials = self.scale.trials;
        self.group(vec![("trials", trials.into())], vec![(name, threshold)], move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..trials {
                worst = worst.max(run(rng)?);
            }
            Ok(vec![worst])
        });
    }
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

pub fn groups(suite: Suite, scale: Scale) -> Result<Vec<CheckGroup>> {
    match suite {
        Suite::Regrep => regrep(scale),
        Suite::Hopf => hopf(scale),
        Suite::Predual => predual(scale),
        Suite::Corep => corep(scale),
        Suite::Wandering => wandering(scale),
    }
}

fn regrep(scale: Scale) -> Result<Vec<CheckGroup>> {
    let h = FockSpace::new(scale.n, scale.depth)?;
    let mut b = Builder::new(scale, Suite::Regrep);
    let fault = scale.inject_fault;
    b.single("isometry", 0.0, move |_| {
        let mut gens = (1..=h.n()).map(|i| left_gen(&h, i)).collect::<Result<Vec<_>>>()?;
        if fault {
            // a stray vacuum-to-vacuum entry breaks L_1* L_1 = P
            let stray = Operator::diagonal(h.into(), [(0, Complex64::new(0.0625, 0.0))]);
            gens[0] = gens[0].add(&stray)?;
        }
        isometry_defect_of(&h, &gens)
    });
    b.single("row_contraction", 0.0, move |_| row_contraction_defect(&h));
    b.single("lr_commutation", 0.0, move |_| commutation_defect_lr(&h));
    b.trials("fourier_round_trip", 0.0, move |rng| {
        let degree = (random::unit(rng, 8) * (h.depth() + 1) as f64) as usize;
        let s = random::series(rng, h.alphabet(), degree, BITS);
        Ok(fourier_of(&realize(&s, &h)?)?.max_abs_diff(&s))
    });
    b.trials("product_membership", 0.0, move |rng| {
        let s = random::series(rng, h.alphabet(), h.depth(), BITS);
        let t = random::series(rng, h.alphabet(), h.depth(), BITS);
        membership_defect(&realize(&s, &h)?.compose(&realize(&t, &h)?)?)
    });
    let degree = h.depth().min(3);
    b.trials("cesaro_bound", 1e-12, move |rng| {
        let s = random::series(rng, h.alphabet(), degree, BITS);
        let a = realize(&s, &h)?;
        let x = random::vector(rng, h, BITS);
        let mut excess = 0.0f64;
        for k in 1..=12 {
            let lhs = realize(&cesaro(&s, k), &h)?.sub(&a)?.apply(&x)?.norm();
            excess = excess.max(lhs - cesaro_error_bound(&s, k) * x.norm());
        }
        Ok(excess.max(0.0))
    });
    Ok(b.groups)
}

fn hopf(scale: Scale) -> Result<Vec<CheckGroup>> {
    let h = FockSpace::new(scale.n, scale.depth)?;
    let mut b = Builder::new(scale, Suite::Hopf);
    let deg = h.depth().min(2);
    let series = move |rng: &mut Rng64, d: usize| random::series(rng, h.alphabet(), d, BITS);
    b.trials("coassociativity", 0.0, move |rng| coassoc_defect(&series(rng, deg), &h));
    b.trials("cocommutativity", 0.0, move |rng| cocommute_defect(&series(rng, deg), &h));
    b.trials("integral_invariance", 0.0, move |rng| integral_invariance_defect(&series(rng, deg), &h));
    b.trials("vacuum_expansion", 0.0, move |rng| vacuum_expansion_defect(&series(rng, h.depth()), &h));
    let deg_t = (h.depth() - deg).min(2);
    b.trials("homomorphism", 0.0, move |rng| {
        let s = series(rng, deg);
        let t = series(rng, deg_t);
        hom_defect(&s, &t, &h)
    });
    b.single("unital", 0.0, move |_| {
        let one = FourierSeries::one(h.alphabet());
        delta(&one, &h, 2)?.max_abs_diff(&Operator::identity(TensorSpace::power(h, 2)))
    });
    b.single("grouplikes", 0.0, move |_| {
        let found = grouplike_solve(&h)?;
        let words = h.words();
        let mut defect = flag(found.len() == words.len());
        for (g, w) in found.iter().zip(&words) {
            let expected = FourierSeries::monomial(h.alphabet(), w.clone())?;
            defect = defect.max(g.operator_defect).max(flag(found.iter().any(|x| x.series == expected)));
            defect = defect.max(flag(g.series.support_len() == 1));
        }
        Ok(defect)
    });
    Ok(b.groups)
}

fn predual(scale: Scale) -> Result<Vec<CheckGroup>> {
    let h = FockSpace::new(scale.n, scale.depth)?;
    let mut b = Builder::new(scale, Suite::Predual);
    let tol = scale.tol;
    b.trials("convolution_commutative", 0.0, move |rng| {
        let (x, y) = (random::functional(rng, h, BITS), random::functional(rng, h, BITS));
        x.convolve(&y)?.max_abs_diff(&y.convolve(&x)?)
    });
    b.trials("convolution_associative", 0.0, move |rng| {
        let (x, y, z) = (random::functional(rng, h, BITS), random::functional(rng, h, BITS), random::functional(rng, h, BITS));
        x.convolve(&y)?.convolve(&z)?.max_abs_diff(&x.convolve(&y.convolve(&z)?)?)
    });
    b.trials("slice_oracle", tol.min(1e-12), move |rng| {
        let pair = |rng: &mut Rng64| vec![(random::vector(rng, h, BITS), random::vector(rng, h, BITS))];
        let (p, q) = (pair(rng), pair(rng));
        let conv = Functional::from_rank_one(h, p.clone())?.convolve(&Functional::from_rank_one(h, q.clone())?)?;
        let mut worst = 0.0f64;
        for w in h.words() {
            let d = delta(&FourierSeries::monomial(h.alphabet(), w.clone())?, &h, 2)?;
            let oracle = slice_left(&p, &d)?.apply(&q[0].0)?.inner(&q[0].1)?;
            worst = worst.max((conv.value(&w)? - oracle).norm());
        }
        Ok(worst)
    });
    b.trials("comult_coassociative", 0.0, move |rng| {
        let x = random::functional(rng, h, BITS);
        let left = x.comult_left_iterate();
        let mut worst = left.max_abs_diff(&x.comult_right_iterate())?;
        for (t, v) in left.iter() {
            worst = worst.max((v - x.value(&t[0].concat(&t[1]).concat(&t[2]))?).norm());
        }
        Ok(worst)
    });
    b.trials("comult_homomorphism", 0.0, move |rng| {
        let (x, y) = (random::functional(rng, h, BITS), random::functional(rng, h, BITS));
        x.convolve(&y)?.comult().max_abs_diff(&x.comult().convolve(&y.comult())?)
    });
    let bits = random::point_bits(h.depth());
    b.trials("point_convolution", 0.0, move |rng| {
        let (l, m) = (random::point(rng, h.n(), 0.7, bits), random::point(rng, h.n(), 0.7, bits));
        Ok(point_convolve_check(h, &l, &m)?.0)
    });
    b.trials("point_adjoint", 0.0, move |rng| {
        let (l, m) = (random::point(rng, h.n(), 0.7, bits), random::point(rng, h.n(), 0.7, bits));
        Ok(point_convolve_check(h, &l, &m)?.1)
    });
    b.trials("non_unital_witness", 0.0, move |rng| {
        let l = random::point(rng, h.n(), 0.99, bits);
        let p = PointFunctional::new(h, l.clone())?;
        let defect = counit_defect(p.functional());
        let floor = 1.0 - l.iter().map(|z| z.norm()).fold(0.0, f64::max);
        Ok((floor - defect).max(0.0).max(flag(defect > 0.0)))
    });
    b.single("nu_tail_bound", 1e-12, move |_| {
        let mut lambda = vec![Complex64::new(0.0, 0.0); h.n() as usize];
        lambda[0] = Complex64::new(0.5, 0.0);
        let p = PointFunctional::new(h, lambda)?;
        let mut excess = 0.0f64;
        for w in h.words().iter().filter(|w| w.len() <= 2) {
            excess = excess.max(p.reconstruction_error(w)? - p.tail_bound(w));
        }
        Ok(excess.max(0.0))
    });
    Ok(b.groups)
}

/// `V = L_u ⊗ I + L_v ⊗ I` for `u ≠ v` on `K = C`.
fn two_shift_sum(h: FockSpace) -> Result<Corepresentation> {
    let k = TensorSpace::from(Factor::Aux(1));
    let id = Operator::identity(k.clone());
    let u = tensor_op(&op_word(&h, &Word::empty(), Side::Left)?, &id);
    let v = tensor_op(&op_word(&h, &Word::letter(1), Side::Left)?, &id);
    Corepresentation::new(h, k, u.add(&v)?)
}

fn random_family(rng: &mut Rng64, h: FockSpace, k: usize) -> Vec<Operator> {
    let aux = TensorSpace::from(Factor::Aux(k));
    let owners: Vec<usize> = (0..k).map(|_| (random::unit(rng, 16) * (h.dim() + 1) as f64) as usize).collect();
    (0..h.dim())
        .map(|w| Operator::diagonal(aux.clone(), (0..k).filter(|&x| owners[x] == w).map(|x| (x, ONE))))
        .collect()
}

fn corep(scale: Scale) -> Result<Vec<CheckGroup>> {
    let h = FockSpace::new(scale.n, scale.depth)?;
    let (n, depth) = (scale.n, scale.depth);
    let tol = scale.tol;
    let mut b = Builder::new(scale, Suite::Corep);
    b.group(
        Vec::new(),
        vec![("w_reconstruction", 0.0), ("w_criterion", 0.0), ("w_leg_identity", 0.0)],
        move |_| {
            let r = fundamental_w(n, depth)?.check()?;
            Ok(vec![r.reconstruction, r.criterion, r.leg_identity])
        },
    );
    b.single("w_round_trip", 0.0, move |_| {
        let w = fundamental_w(n, depth)?;
        let pi = rep_from_corep(&w)?;
        let back = corep_from_rep(&pi)?;
        let again = rep_from_corep(&back)?;
        let mut defect = back.operator().max_abs_diff(w.operator())?;
        for (a, b) in again.images().iter().zip(pi.images()) {
            defect = defect.max(a.max_abs_diff(b)?);
        }
        Ok(defect)
    });
    b.single("character_round_trip", 0.0, move |_| {
        let k = TensorSpace::from(Factor::Aux(1));
        let mut defect = 0.0f64;
        for w in h.words() {
            let rho = character(h, &w)?;
            let v = corep_from_rep(&rho)?;
            let lw = tensor_op(&op_word(&h, &w, Side::Left)?, &Operator::identity(k.clone()));
            defect = defect.max(v.operator().max_abs_diff(&lw)?);
            defect = defect.max(flag(rep_from_corep(&v)? == rho));
        }
        Ok(defect)
    });
    b.single("w_intertwining", 0.0, move |_| {
        let w = fundamental_w(n, depth)?;
        h.words().iter().try_fold(0.0, |acc, u| Ok(f64::max(acc, w_intertwining_defect(&w, u)?)))
    });
    b.single("w_right_commutation", 0.0, move |_| {
        let w = fundamental_w(n, depth)?;
        h.words().iter().try_fold(0.0, |acc, u| Ok(f64::max(acc, w_right_commutation_defect(&w, u)?)))
    });
    b.single("criterion_witness", 0.0, move |_| {
        let r = two_shift_sum(h)?.check()?;
        Ok((r.criterion - 1.0).abs().max(flag(r.reconstruction == 0.0 && r.leg_identity > 0.0)))
    });
    b.trials("rep_multiplicative", tol.min(1e-12), move |rng| {
        let pi = rep_from_corep(&fundamental_w(n, depth)?)?;
        let (x, y) = (random::functional(rng, h, BITS), random::functional(rng, h, BITS));
        pi.evaluate(&x.convolve(&y)?)?.max_abs_diff(&pi.evaluate(&x)?.compose(&pi.evaluate(&y)?)?)
    });
    b.trials("defect_implications", 0.0, move |rng| {
        let k = 2;
        let aux = TensorSpace::from(Factor::Aux(k));
        let mut family = random_family(rng, h, k);
        let valid = corep_from_rep(&CBRep::new(h, aux.clone(), family.clone())?)?;
        // breaking one B_w keeps V analytic, so (b) and (c) must agree
        let w = (random::unit(rng, 16) * h.dim() as f64) as usize;
        let x = (random::unit(rng, 16) * k as f64) as usize;
        let y = (random::unit(rng, 16) * k as f64) as usize;
        family[w] = family[w].add(&Operator::from_triplets(aux.clone(), aux.clone(), vec![(x, y, ONE)]))?;
        let analytic = Corepresentation::from_family(h, aux.clone(), &family)?;
        // a raw entry bump may leave the analytic form entirely
        let space = valid.operator().domain().clone();
        let r = (random::unit(rng, 16) * space.dim() as f64) as usize;
        let c = (random::unit(rng, 16) * space.dim() as f64) as usize;
        let bump = Operator::from_triplets(space.clone(), space, vec![(r, c, ONE)]);
        let raw = Corepresentation::new(h, aux, valid.operator().add(&bump)?)?;
        let mut violations = 0.0f64;
        for v in [&valid, &analytic, &raw] {
            let d = v.check()?;
            let (a, b, c) = (d.reconstruction == 0.0, d.criterion == 0.0, d.leg_identity == 0.0);
            violations = violations.max(flag(!(a && b) || c)).max(flag(!(a && c) || b));
        }
        Ok(violations)
    });
    b.single("spectrum", 0.0, move |_| Ok(flag(spectrum(&h) == h.words())));
    b.single("spectrum_grouplikes", 0.0, move |_| Ok(flag(spectrum_matches_grouplikes(&h)?)));
    b.single("character_semigroup", 0.0, move |_| {
        let words = h.words();
        let mut defect = 0.0f64;
        for u in &words {
            for v in words.iter().filter(|v| u.len() + v.len() <= depth) {
                let prod = tensor_rep(&character(h, u)?, &character(h, v)?)?;
                let expected = character(h, &u.concat(v))?;
                for (a, b) in prod.images().iter().zip(expected.images()) {
                    defect = defect.max(a.max_abs_diff(&b.clone().reshape(a.domain().clone(), a.codomain().clone())?)?);
                }
            }
        }
        Ok(defect)
    });
    b.single("coefficients_of_w", 0.0, move |_| {
        let pi = rep_from_corep(&fundamental_w(n, depth)?)?;
        let mut defect = 0.0f64;
        for u in h.words() {
            let xu = Vector::basis(&h, &u)?;
            let c = coefficient_operator(&pi, &xu, &xu)?;
            defect = defect.max(c.series.max_abs_diff(&FourierSeries::monomial(h.alphabet(), u)?));
            defect = defect.max(c.membership_defect()?);
        }
        Ok(defect)
    });
    b.trials("coefficients_random", 0.0, move |rng| {
        let pi = rep_from_corep(&fundamental_w(n, depth)?)?;
        let (x, y) = (random::vector(rng, h, BITS), random::vector(rng, h, BITS));
        coefficient_operator(&pi, &x, &y)?.membership_defect()
    });
    b.single("coefficients_span", 0.0, move |_| {
        let one = Vector::unit(TensorSpace::from(Factor::Aux(1)), 0);
        let mut defect = 0.0f64;
        for w in h.words() {
            let c = coefficient_operator(&character(h, &w)?, &one, &one)?;
            defect = defect.max(c.series.max_abs_diff(&FourierSeries::monomial(h.alphabet(), w)?));
            defect = defect.max(c.membership_defect()?);
        }
        Ok(defect)
    });
    b.single("tensor_law", tol.min(1e-12), move |_| {
        let pi = rep_from_corep(&fundamental_w(n, depth)?)?;
        tensor_rep(&pi, &pi)?.law_defect()
    });
    Ok(b.groups)
}

fn wandering(scale: Scale) -> Result<Vec<CheckGroup>> {
    let (n, depth, exec) = (scale.n, scale.depth, scale.exec);
    let mut b = Builder::new(scale, Suite::Wandering);
    for k in 2..=3usize {
        b.group(
            vec![("k", k.into())],
            vec![("dim_closed_form", 0.0), ("orthogonality", 0.0), ("isometry", 0.0), ("completeness", 0.0), ("growth", 0.0)],
            move |_| {
                let r = wandering_check(n, k, depth, exec)?;
                let completeness = (r.translate_count as f64 - r.tensor_dim as f64).abs()
                    + flag(r.complete)
                    + flag(r.decomposition_exact);
                Ok(vec![
                    (r.dim_k as f64 - r.closed_form as f64).abs(),
                    r.orthogonality_defect,
                    r.isometry_defect,
                    completeness,
                    flag(r.growth_strict),
                ])
            },
        );
    }
    Ok(b.groups)
}
