//! Property tests for braid-word operations.

use bdl_core::{BraidWord, Permutation};
use proptest::prelude::*;

fn letters_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(
        (1..n as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g }),
        0..=max_len,
    )
}

proptest! {
    #[test]
    fn free_reduce_idempotent_and_shorter(letters in letters_strategy(5, 32)) {
        let w = BraidWord::new(5, letters).unwrap();
        let red = w.free_reduce();
        prop_assert!(red.len() <= w.len());
        prop_assert_eq!(red.free_reduce(), red.clone());
        // No adjacent cancelling pair survives.
        prop_assert!(red.letters().windows(2).all(|p| p[0] != -p[1]));
    }

    #[test]
    fn word_times_inverse_cancels(letters in letters_strategy(6, 32)) {
        let w = BraidWord::new(6, letters).unwrap();
        prop_assert!(w.compose(&w.inverse()).unwrap().is_empty());
        prop_assert!(w.inverse().compose(&w).unwrap().is_empty());
    }

    #[test]
    fn exponent_sum_is_additive(a in letters_strategy(4, 16), b in letters_strategy(4, 16)) {
        let wa = BraidWord::new(4, a).unwrap();
        let wb = BraidWord::new(4, b).unwrap();
        let ab = wa.compose(&wb).unwrap();
        prop_assert_eq!(ab.exponent_sum(), wa.exponent_sum() + wb.exponent_sum());
    }

    #[test]
    fn permutation_composes_right_factor_after(a in letters_strategy(5, 12), b in letters_strategy(5, 12)) {
        let wa = BraidWord::new(5, a).unwrap();
        let wb = BraidWord::new(5, b).unwrap();
        let ab = wa.compose(&wb).unwrap();
        prop_assert_eq!(
            ab.permutation(),
            wb.permutation().then(&wa.permutation())
        );
    }

    #[test]
    fn permutation_is_invariant_under_free_reduction(letters in letters_strategy(5, 24)) {
        let w = BraidWord::new(5, letters).unwrap();
        prop_assert_eq!(w.permutation(), w.free_reduce().permutation());
        prop_assert_eq!(w.exponent_sum(), w.free_reduce().exponent_sum());
    }

    #[test]
    fn power_matches_repeated_compose(letters in letters_strategy(4, 8), k in 0i64..5) {
        let w = BraidWord::new(4, letters).unwrap();
        let mut acc = BraidWord::identity(4).unwrap();
        for _ in 0..k {
            acc = acc.compose(&w).unwrap();
        }
        prop_assert_eq!(w.power(k), acc);
        prop_assert_eq!(w.power(-k), w.inverse().power(k));
    }
}

#[test]
fn permutation_rejects_non_bijection() {
    assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
    assert!(Permutation::from_images(vec![0, 2, 3]).is_err());
    assert!(Permutation::from_images(vec![1, 2, 4]).is_err());
}
