use fockhopf::fock::{slice_left, FockSpace};
use fockhopf::hopf::delta;
use fockhopf::predual::{counit_defect, point_convolve_check, Functional, PointFunctional};
use fockhopf::random;
use fockhopf::FourierSeries;
use proptest::prelude::*;

fn space() -> FockSpace {
    FockSpace::new(2, 4).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convolution_is_commutative_and_associative(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let h = space();
        let (a, b, c) = (
            random::functional(&mut rng, h, 8),
            random::functional(&mut rng, h, 8),
            random::functional(&mut rng, h, 8),
        );
        prop_assert_eq!(a.convolve(&b).unwrap(), b.convolve(&a).unwrap());
        prop_assert_eq!(
            a.convolve(&b).unwrap().convolve(&c).unwrap(),
            a.convolve(&b.convolve(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn convolution_matches_slice_maps(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let h = space();
        let pair = |rng: &mut random::Rng64| vec![(random::vector(rng, h, 8), random::vector(rng, h, 8))];
        let (p, q) = (pair(&mut rng), pair(&mut rng));
        let phi = Functional::from_rank_one(h, p.clone()).unwrap();
        let psi = Functional::from_rank_one(h, q.clone()).unwrap();
        let conv = phi.convolve(&psi).unwrap();
        for w in h.words() {
            let mono = FourierSeries::monomial(h.alphabet(), w.clone()).unwrap();
            let sliced = slice_left(&p, &delta(&mono, &h, 2).unwrap()).unwrap();
            let oracle = {
                let (x, y) = &q[0];
                sliced.apply(x).unwrap().inner(y).unwrap()
            };
            prop_assert!((conv.value(&w).unwrap() - oracle).norm() < 1e-12);
        }
    }

    #[test]
    fn comultiplication_is_coassociative_and_multiplicative(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let h = space();
        let (a, b) = (random::functional(&mut rng, h, 8), random::functional(&mut rng, h, 8));
        let left = a.comult_left_iterate();
        let right = a.comult_right_iterate();
        prop_assert_eq!(left.max_abs_diff(&right).unwrap(), 0.0);
        for (triple, v) in left.iter() {
            let uvw = triple[0].concat(&triple[1]).concat(&triple[2]);
            prop_assert_eq!(*v, a.value(&uvw).unwrap());
        }
        let lhs = a.convolve(&b).unwrap().comult();
        let rhs = a.comult().convolve(&b.comult()).unwrap();
        prop_assert_eq!(lhs.max_abs_diff(&rhs).unwrap(), 0.0);
    }

    #[test]
    fn characters_are_multiplicative(seed in any::<u64>(), idx in 0usize..31) {
        let mut rng = random::rng(seed);
        let h = space();
        let (a, b) = (random::functional(&mut rng, h, 8), random::functional(&mut rng, h, 8));
        let w = h.word_at(idx);
        prop_assert_eq!(a.convolve(&b).unwrap().value(&w).unwrap(), a.value(&w).unwrap() * b.value(&w).unwrap());
    }

    #[test]
    fn point_functionals(seed in any::<u64>(), n in 1u32..=3) {
        let h = FockSpace::new(n, 4).unwrap();
        let mut rng = random::rng(seed);
        let bits = random::point_bits(4);
        let lambda = random::point(&mut rng, n, 0.7, bits);
        let mu = random::point(&mut rng, n, 0.7, bits);
        prop_assert_eq!(point_convolve_check(h, &lambda, &mu).unwrap(), (0.0, 0.0));
        let p = PointFunctional::new(h, lambda.clone()).unwrap();
        let max = lambda.iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(counit_defect(p.functional()) >= 1.0 - max);
        prop_assert!(counit_defect(p.functional()) > 0.0);
    }
}

#[test]
fn nu_reconstruction_converges_geometrically() {
    let lambda = vec![num_complex::Complex64::new(0.5, 0.0), Default::default()];
    let mut previous = f64::INFINITY;
    for depth in 4..=10 {
        let p = PointFunctional::new(FockSpace::new(2, depth).unwrap(), lambda.clone()).unwrap();
        let worst = p
            .functional()
            .space()
            .words()
            .iter()
            .filter(|w| w.len() <= 2)
            .map(|w| {
                let e = p.reconstruction_error(w).unwrap();
                assert!(e <= p.tail_bound(w) + 1e-15);
                e
            })
            .fold(0.0, f64::max);
        assert!(worst < previous);
        previous = worst;
        if depth == 8 {
            assert!(worst < 1e-3);
        }
    }
}
