//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.

use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use fockhopf::corep::{
    character, coefficient_operator, corep_from_rep, fundamental_w, rep_from_corep, spectrum, tensor_rep,
    w_intertwining_defect, w_right_commutation_defect,
};
use fockhopf::exec::Exec;
use fockhopf::fock::{slice_left, tensor_op, Factor, FockSpace, Operator, TensorSpace, Vector};
use fockhopf::hopf::{cocommute_defect, coassoc_defect, delta, hom_defect, integral_invariance_defect};
use fockhopf::predual::{counit_defect, point_convolve_check, Functional, PointFunctional};
use fockhopf::random::{self, Rng64, BITS};
use fockhopf::regrep::{cesaro, cesaro_error_bound, fourier_of, isometry_defect, op_word, realize, Side};
use fockhopf::wandering::{dim_k_closed_form, dim_k_enumerated, wandering_check};
use fockhopf::FourierSeries;

/// Runs `body`, prints the verdict line, and fails the test on a miss.
fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; took {elapsed:.2?}, limit {limit:.0?}")),
        Err(e) => (false, e),
    };
    println!("criterion {id:>2} {} {title}: {detail} ({elapsed:.2?})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn rng(label: &str) -> Rng64 {
    random::rng(random::derive_seed(2024, label))
}

#[test]
fn criterion_01_isometry_relations() {
    criterion(1, "isometry relations", Duration::from_secs(1), || {
        for n in 1..=3 {
            for depth in 2..=5 {
                let d = isometry_defect(&FockSpace::new(n, depth).unwrap()).unwrap();
                require(d == 0.0, || format!("defect {d} at n={n} N={depth}"))?;
            }
        }
        Ok("defect 0 on 12 spaces".into())
    });
}

#[test]
fn criterion_02_fourier_round_trip() {
    criterion(2, "Fourier round trip", Duration::from_secs(1), || {
        let mut count = 0;
        for n in 1..=3 {
            for depth in 2..=5 {
                let h = FockSpace::new(n, depth).unwrap();
                let mut rng = rng(&format!("fourier/{n}/{depth}"));
                for _ in 0..100 {
                    let degree = (random::unit(&mut rng, 8) * (depth + 1) as f64) as usize;
                    let s = random::series(&mut rng, h.alphabet(), degree, BITS);
                    let t = realize(&s, &h).unwrap();
                    let back = fourier_of(&t).unwrap();
                    require(back == s, || format!("series changed at n={n} N={depth}"))?;
                    require(realize(&back, &h).unwrap() == t, || format!("operator changed at n={n} N={depth}"))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} series exact"))
    });
}

#[test]
fn criterion_03_cesaro_bound() {
    criterion(3, "Cesàro bound", Duration::from_secs(2), || {
        let h = FockSpace::new(2, 5).unwrap();
        let mut rng = rng("cesaro");
        let mut min_slack = f64::INFINITY;
        for _ in 0..100 {
            let s = random::series(&mut rng, h.alphabet(), 3, BITS);
            let a = realize(&s, &h).unwrap();
            let x = random::vector(&mut rng, h, BITS);
            for k in 4..=12 {
                let lhs = realize(&cesaro(&s, k), &h).unwrap().sub(&a).unwrap().apply(&x).unwrap().norm();
                let slack = cesaro_error_bound(&s, k) * x.norm() - lhs;
                min_slack = min_slack.min(slack);
                require(slack >= -1e-12, || format!("bound violated by {} at k={k}", -slack))?;
            }
        }
        Ok(format!("min slack {min_slack:.3e}"))
    });
}

#[test]
fn criterion_04_hopf_axioms() {
    criterion(4, "Hopf axioms", Duration::from_secs(60), || {
        let h = FockSpace::new(2, 4).unwrap();
        let mut rng = rng("hopf");
        for trial in 0..50 {
            let s = random::series(&mut rng, h.alphabet(), 2, BITS);
            let t = random::series(&mut rng, h.alphabet(), 2, BITS);
            let defects = [
                ("coassociativity", coassoc_defect(&s, &h).unwrap()),
                ("cocommutativity", cocommute_defect(&s, &h).unwrap()),
                ("homomorphism", hom_defect(&s, &t, &h).unwrap()),
                ("integral invariance", integral_invariance_defect(&s, &h).unwrap()),
            ];
            for (name, d) in defects {
                require(d == 0.0, || format!("{name} defect {d} in trial {trial}"))?;
            }
        }
        Ok("four defects exactly 0 over 50 series".into())
    });
}

#[test]
fn criterion_05_convolution_algebra() {
    criterion(5, "convolution algebra", Duration::from_secs(10), || {
        let h = FockSpace::new(2, 4).unwrap();
        let mut rng = rng("convolution");
        let deltas: Vec<Operator> = h
            .words()
            .into_iter()
            .map(|w| delta(&FourierSeries::monomial(h.alphabet(), w).unwrap(), &h, 2).unwrap())
            .collect();
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let p = vec![(random::vector(&mut rng, h, BITS), random::vector(&mut rng, h, BITS))];
            let q = vec![(random::vector(&mut rng, h, BITS), random::vector(&mut rng, h, BITS))];
            let phi = Functional::from_rank_one(h, p.clone()).unwrap();
            let psi = Functional::from_rank_one(h, q.clone()).unwrap();
            let conv = phi.convolve(&psi).unwrap();
            for (d, w) in deltas.iter().zip(h.words()) {
                let oracle = slice_left(&p, d).unwrap().apply(&q[0].0).unwrap().inner(&q[0].1).unwrap();
                worst = worst.max((conv.value(&w).unwrap() - oracle).norm());
            }
            require(worst <= 1e-12, || format!("slice oracle gap {worst:.3e}"))?;
            let (a, b, c) = (
                random::functional(&mut rng, h, BITS),
                random::functional(&mut rng, h, BITS),
                random::functional(&mut rng, h, BITS),
            );
            require(a.convolve(&b).unwrap() == b.convolve(&a).unwrap(), || "not commutative".into())?;
            let left = a.convolve(&b).unwrap().convolve(&c).unwrap();
            require(left == a.convolve(&b.convolve(&c).unwrap()).unwrap(), || "not associative".into())?;
            let coassoc = a.comult_left_iterate().max_abs_diff(&a.comult_right_iterate()).unwrap();
            require(coassoc == 0.0, || format!("comultiplication coassociativity {coassoc}"))?;
            let hom = a.convolve(&b).unwrap().comult().max_abs_diff(&a.comult().convolve(&b.comult()).unwrap()).unwrap();
            require(hom == 0.0, || format!("comultiplication homomorphism {hom}"))?;
        }
        Ok(format!("slice oracle gap {worst:.3e}; algebra identities exact"))
    });
}

#[test]
fn criterion_06_point_functionals() {
    criterion(6, "point functionals", Duration::from_secs(5), || {
        let h = FockSpace::new(2, 4).unwrap();
        let bits = random::point_bits(h.depth());
        let mut rng = rng("points");
        for _ in 0..50 {
            let lambda = random::point(&mut rng, 2, 0.7, bits);
            let mu = random::point(&mut rng, 2, 0.7, bits);
            let (conv, dag) = point_convolve_check(h, &lambda, &mu).unwrap();
            require(conv == 0.0 && dag == 0.0, || format!("convolution {conv}, adjoint {dag}"))?;
        }
        let p = PointFunctional::new(FockSpace::new(2, 8).unwrap(), vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0)])
            .unwrap();
        let mut worst = 0.0f64;
        for w in p.functional().space().words().iter().filter(|w| w.len() <= 2) {
            let e = p.reconstruction_error(w).unwrap();
            require(e <= p.tail_bound(w), || format!("error {e} above tail bound at {w}"))?;
            worst = worst.max(e);
        }
        require(worst < 1e-3, || format!("reconstruction error {worst:.3e}"))?;
        Ok(format!("50 pairs exact; reconstruction error {worst:.3e}"))
    });
}

#[test]
fn criterion_07_non_unitality() {
    criterion(7, "non-unitality witness", Duration::from_secs(1), || {
        let h = FockSpace::new(2, 4).unwrap();
        let bits = random::point_bits(h.depth());
        let mut rng = rng("counit");
        let mut min_gap = f64::INFINITY;
        for _ in 0..100 {
            let lambda = random::point(&mut rng, 2, 0.99, bits);
            let d = counit_defect(PointFunctional::new(h, lambda.clone()).unwrap().functional());
            let floor = 1.0 - lambda.iter().map(|z| z.norm()).fold(0.0, f64::max);
            require(d >= floor && d > 0.0, || format!("defect {d} below {floor}"))?;
            min_gap = min_gap.min(d);
        }
        Ok(format!("smallest counit defect {min_gap:.3}"))
    });
}

#[test]
fn criterion_08_corepresentations() {
    criterion(8, "corepresentation suite", Duration::from_secs(30), || {
        for depth in 3..=4 {
            let w = fundamental_w(2, depth).unwrap();
            let r = w.check().unwrap();
            require(r.max() == 0.0, || format!("W defects {r:?} at N={depth}"))?;
            let pi = rep_from_corep(&w).unwrap();
            let back = corep_from_rep(&pi).unwrap();
            require(back.operator() == w.operator(), || "W round trip".into())?;
            require(rep_from_corep(&back).unwrap() == pi, || "π_W round trip".into())?;
            let h = w.h();
            let aux = TensorSpace::from(Factor::Aux(1));
            for u in h.words() {
                let rho = character(h, &u).unwrap();
                let v = corep_from_rep(&rho).unwrap();
                let lu = tensor_op(&op_word(&h, &u, Side::Left).unwrap(), &Operator::identity(aux.clone()));
                require(v.operator() == &lu && rep_from_corep(&v).unwrap() == rho, || format!("ρ_{u} round trip"))?;
                let d = w_intertwining_defect(&w, &u).unwrap().max(w_right_commutation_defect(&w, &u).unwrap());
                require(d == 0.0, || format!("intertwining/commutation defect {d} for {u}"))?;
            }
        }
        Ok("W and all characters exact at N = 3, 4".into())
    });
}

#[test]
fn criterion_09_spectrum() {
    criterion(9, "spectrum", Duration::from_secs(5), || {
        for n in 1..=3 {
            for depth in 2..=3 {
                let h = FockSpace::new(n, depth).unwrap();
                let words = h.words();
                require(spectrum(&h) == words, || format!("spectrum mismatch at n={n} N={depth}"))?;
                for u in &words {
                    for v in words.iter().filter(|v| u.len() + v.len() <= depth) {
                        let prod = tensor_rep(&character(h, u).unwrap(), &character(h, v).unwrap()).unwrap();
                        let expected = character(h, &u.concat(v)).unwrap();
                        let same = prod.images().iter().zip(expected.images()).all(|(a, b)| a.to_dense() == b.to_dense());
                        require(same, || format!("ρ_{u} × ρ_{v} ≠ ρ_{}", u.concat(v)))?;
                    }
                }
            }
        }
        Ok("all words, semigroup law exact".into())
    });
}

#[test]
fn criterion_10_duality() {
    criterion(10, "duality", Duration::from_secs(10), || {
        let h = FockSpace::new(2, 4).unwrap();
        let pi = rep_from_corep(&fundamental_w(2, 4).unwrap()).unwrap();
        let words = h.words();
        for a in &words {
            for b in &words {
                let c = coefficient_operator(&pi, &Vector::basis(&h, a).unwrap(), &Vector::basis(&h, b).unwrap()).unwrap();
                let d = c.membership_defect().unwrap();
                require(d == 0.0, || format!("membership defect {d} for ({a}, {b})"))?;
            }
        }
        let mut rng = rng("duality");
        for _ in 0..20 {
            let (x, y) = (random::vector(&mut rng, h, BITS), random::vector(&mut rng, h, BITS));
            let d = coefficient_operator(&pi, &x, &y).unwrap().membership_defect().unwrap();
            require(d == 0.0, || format!("membership defect {d} for random vectors"))?;
        }
        let one = Vector::unit(TensorSpace::from(Factor::Aux(1)), 0);
        for w in &words {
            let c = coefficient_operator(&character(h, w).unwrap(), &one, &one).unwrap();
            require(c.membership_defect().unwrap() == 0.0, || format!("ρ_{w} coefficient not in the algebra"))?;
            require(c.series == FourierSeries::monomial(h.alphabet(), w.clone()).unwrap(), || format!("δ_{w} missing"))?;
        }
        Ok(format!("{} coefficient operators in the algebra; every δ_w attained", words.len() * words.len() + 20))
    });
}

#[test]
fn criterion_11_wandering() {
    criterion(11, "wandering decomposition", Duration::from_secs(30), || {
        for n in 1..=3 {
            for k in 1..=3 {
                for depth in 1..=4 {
                    let enumerated = dim_k_enumerated(n, k, depth, Exec::default()).unwrap();
                    let closed = dim_k_closed_form(n, k, depth).unwrap();
                    require(enumerated == closed, || format!("dim K {enumerated} vs {closed} at n={n} k={k} N={depth}"))?;
                    if k >= 2 {
                        let r = wandering_check(n, k, depth, Exec::default()).unwrap();
                        require(r.passed(), || format!("wandering check failed: {r:?}"))?;
                    }
                }
            }
        }
        let example = dim_k_enumerated(2, 2, 3, Exec::default()).unwrap();
        require(example == 127, || format!("n=2 k=2 N=3 gives {example}"))?;
        Ok("closed form matches on 36 cases; dim K = 127 at n=2 k=2 N=3".into())
    });
}

#[test]
fn criterion_12_harness_determinism() {
    criterion(12, "harness determinism", Duration::from_secs(600), || {
        let run = || {
            let start = Instant::now();
            let out = Command::new(env!("CARGO_BIN_EXE_fockhopf"))
                .args(["verify", "--full", "--seed", "7", "--no-timestamp", "--format", "json"])
                .output()
                .map_err(|e| e.to_string())?;
            Ok::<_, String>((out, start.elapsed()))
        };
        let (first, t1) = run()?;
        let (second, t2) = run()?;
        require(first.status.code() == Some(0), || format!("exit status {:?}", first.status.code()))?;
        require(first.stdout == second.stdout, || "reports differ".into())?;
        let limit = Duration::from_secs(300);
        require(t1 < limit && t2 < limit, || format!("grid took {t1:.2?} and {t2:.2?}"))?;
        let report: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
        Ok(format!(
            "{} bytes identical, {} checks passed, runs took {t1:.1?} and {t2:.1?}",
            first.stdout.len(),
            report["summary"]["passed"]
        ))
    });
}
