use fockhopf::{max_common_prefix, Alphabet, Word};
use num_complex::Complex64;
use proptest::prelude::*;

fn word(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max_len).prop_map(Word::new)
}

proptest! {
    #[test]
    fn concat_is_associative(u in word(3, 5), v in word(3, 5), w in word(3, 5)) {
        prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
    }

    #[test]
    fn index_respects_length(n in 1u32..=4, u in word(4, 4), v in word(4, 4)) {
        let a = Alphabet::new(n).unwrap();
        prop_assume!(a.check(&u).is_ok() && a.check(&v).is_ok());
        if u.len() < v.len() {
            prop_assert!(a.index_of(&u) < a.index_of(&v));
        }
        prop_assert_eq!(a.index_of(&u).cmp(&a.index_of(&v)), u.cmp(&v));
        prop_assert_eq!(a.word_at(a.index_of(&u)), u);
    }

    #[test]
    fn common_prefix_is_maximal(stem in word(2, 3), tails in prop::collection::vec(word(2, 3), 1..5)) {
        let ws: Vec<Word> = tails.iter().map(|t| stem.concat(t)).collect();
        let p = max_common_prefix(&ws).unwrap();
        prop_assert!(stem.is_prefix_of(&p));
        prop_assert!(ws.iter().all(|w| p.is_prefix_of(w)));
        for i in 1..=2 {
            let longer = p.concat(&Word::letter(i));
            prop_assert!(!ws.iter().all(|w| longer.is_prefix_of(w)));
        }
    }

    #[test]
    fn eval_ignores_order(w in word(3, 6), re in prop::collection::vec(-8i32..8, 3), im in prop::collection::vec(-8i32..8, 3)) {
        let lambda: Vec<Complex64> = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a as f64 / 8.0, b as f64 / 8.0)).collect();
        prop_assert_eq!(w.reverse().eval(&lambda), w.eval(&lambda));
    }

    #[test]
    fn text_form_round_trips(n in 1u32..=12, letters in prop::collection::vec(1u32..=12, 0..5)) {
        let a = Alphabet::new(n).unwrap();
        let w = Word::new(letters.into_iter().map(|i| (i - 1) % n + 1).collect::<Vec<u32>>());
        prop_assert_eq!(a.parse_word(&a.format_word(&w)).unwrap(), w);
    }
}
