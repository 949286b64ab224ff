use fockhopf::fock::FockSpace;
use fockhopf::random;
use fockhopf::regrep::{
    cesaro, cesaro_error_bound, fourier_of, isometry_defect, left_gen, membership_defect, realize, row_contraction_defect,
    SafeZone,
};
use proptest::prelude::*;

#[test]
fn isometry_and_row_contraction_on_grid() {
    for n in 1..=3 {
        for depth in 1..=5 {
            let h = FockSpace::new(n, depth).unwrap();
            assert_eq!(isometry_defect(&h).unwrap(), 0.0, "n={n} N={depth}");
            assert_eq!(row_contraction_defect(&h).unwrap(), 0.0, "n={n} N={depth}");
        }
    }
}

#[test]
fn row_sum_is_at_most_identity_on_the_diagonal() {
    let h = FockSpace::new(3, 3).unwrap();
    let mut sum = fockhopf::fock::Operator::zero(h.into(), h.into());
    for i in 1..=3 {
        let l = left_gen(&h, i).unwrap();
        sum = sum.add(&l.compose(&l.adjoint()).unwrap()).unwrap();
    }
    for (idx, w) in h.words().iter().enumerate() {
        let d = sum.get(idx, idx).re;
        assert!(d <= 1.0);
        assert_eq!(d, if w.is_empty() { 0.0 } else { 1.0 });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fourier_round_trip(seed in any::<u64>(), n in 1u32..=3, depth in 1usize..=4) {
        let h = FockSpace::new(n, depth).unwrap();
        let mut rng = random::rng(seed);
        let degree = random::unit(&mut rng, 8) * (depth + 1) as f64;
        let s = random::series(&mut rng, h.alphabet(), degree as usize, random::BITS);
        let t = realize(&s, &h).unwrap();
        prop_assert_eq!(fourier_of(&t).unwrap(), s);
        prop_assert_eq!(membership_defect(&t).unwrap(), 0.0);
    }

    #[test]
    fn cesaro_bound_holds(seed in any::<u64>(), k in 1usize..=12) {
        let h = FockSpace::new(2, 5).unwrap();
        let mut rng = random::rng(seed);
        let s = random::series(&mut rng, h.alphabet(), 3, random::BITS);
        let x = random::vector(&mut rng, h, random::BITS);
        let gap = realize(&cesaro(&s, k), &h).unwrap().sub(&realize(&s, &h).unwrap()).unwrap();
        let lhs = gap.apply(&x).unwrap().norm();
        prop_assert!(lhs <= cesaro_error_bound(&s, k) * x.norm() + 1e-12);
    }

    #[test]
    fn products_stay_in_the_algebra(seed in any::<u64>()) {
        let h = FockSpace::new(2, 4).unwrap();
        let mut rng = random::rng(seed);
        let s = random::series(&mut rng, h.alphabet(), 2, random::BITS);
        let t = random::series(&mut rng, h.alphabet(), 2, random::BITS);
        let prod = realize(&s, &h).unwrap().compose(&realize(&t, &h).unwrap()).unwrap();
        prop_assert_eq!(membership_defect(&prod).unwrap(), 0.0);
        let cols = SafeZone::new(h, 4).indices();
        prop_assert_eq!(prod.max_abs_diff_on(&realize(&s.mul(&t), &h).unwrap(), Some(&cols)).unwrap(), 0.0);
    }
}
