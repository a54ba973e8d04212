//! Property tests for the algebraic invariants of words, detectors, and
//! morphisms.

use proptest::prelude::*;

use cyclav::avoidance::{
    circular_abelian_avoids, circular_ordinary_avoids, cyclic_abelian_avoids,
    cyclic_ordinary_avoids, verify_occurrence, Mode,
};
use cyclav::morphism::builtin_morphism;
use cyclav::rational::rational;
use cyclav::word::{delta, parikh, ParikhVector, PrefixCountTable, Word};

fn word_strategy(max_alphabet: usize, max_len: usize) -> impl Strategy<Value = Word> {
    (2..=max_alphabet).prop_flat_map(move |k| {
        prop::collection::vec(0..k as u8, 0..=max_len)
            .prop_map(move |symbols| Word::new(symbols, k).unwrap())
    })
}

fn nonempty_word(max_alphabet: usize, max_len: usize) -> impl Strategy<Value = Word> {
    (2..=max_alphabet).prop_flat_map(move |k| {
        prop::collection::vec(0..k as u8, 1..=max_len)
            .prop_map(move |symbols| Word::new(symbols, k).unwrap())
    })
}

proptest! {
    #[test]
    fn parikh_is_additive_over_concatenation(
        a in word_strategy(4, 30),
        b in word_strategy(4, 30),
    ) {
        let k = a.alphabet_size().max(b.alphabet_size());
        let a = a.with_alphabet_size(k).unwrap();
        let b = b.with_alphabet_size(k).unwrap();
        let sum = parikh(&a) + parikh(&b);
        prop_assert_eq!(parikh(&a.concat(&b)), sum);
    }

    #[test]
    fn parikh_and_delta_are_conjugacy_invariant(w in nonempty_word(4, 30), rot in 0usize..30) {
        let conj = w.conjugate(rot % (w.len() + 1)).unwrap();
        prop_assert_eq!(parikh(&conj), parikh(&w));
        if w.alphabet_size() == 2 {
            prop_assert_eq!(delta(&conj).unwrap(), delta(&w).unwrap());
        }
    }

    #[test]
    fn complement_reverse_involutes_and_negates(symbols in prop::collection::vec(0u8..2, 0..40)) {
        let w = Word::new(symbols, 2).unwrap();
        let cr = w.complement_reverse().unwrap();
        prop_assert_eq!(delta(&cr).unwrap(), -delta(&w).unwrap());
        prop_assert_eq!(cr.complement_reverse().unwrap(), w);
    }

    #[test]
    fn prefix_table_blocks_match_direct_parikh(w in word_strategy(4, 40), a in 0usize..40, b in 0usize..40) {
        let table = PrefixCountTable::new(&w);
        let (a, b) = (a.min(w.len()), b.min(w.len()));
        let (a, b) = (a.min(b), a.max(b));
        prop_assert_eq!(table.block(a, b), parikh(&w.factor(a, b)));
        prop_assert_eq!(table.block(0, 0), ParikhVector::zero(w.alphabet_size()));
    }

    #[test]
    fn morphism_image_length_and_counts_are_homomorphic(
        symbols in prop::collection::vec(0u8..2, 0..25),
    ) {
        let sigma3 = builtin_morphism("sigma3").unwrap();
        let w = Word::new(symbols, 2).unwrap();
        let image = sigma3.apply(&w).unwrap();
        let expected_len: usize = w.symbols().iter().map(|&s| sigma3.image(s).len()).sum();
        prop_assert_eq!(image.len(), expected_len);
        let mut counts = ParikhVector::zero(2);
        for &s in w.symbols() {
            counts += parikh(&sigma3.image(s));
        }
        prop_assert_eq!(parikh(&image), counts);
    }

    #[test]
    fn cyclic_and_circular_verdicts_are_conjugacy_invariant(
        w in nonempty_word(3, 10),
        rot in 0usize..10,
        exponent in 2u32..5,
    ) {
        let conj = w.conjugate(rot % w.len()).unwrap();
        prop_assert_eq!(
            cyclic_abelian_avoids(&conj, exponent).unwrap().verdict,
            cyclic_abelian_avoids(&w, exponent).unwrap().verdict
        );
        prop_assert_eq!(
            circular_abelian_avoids(&conj, exponent).unwrap().verdict,
            circular_abelian_avoids(&w, exponent).unwrap().verdict
        );
        let e = rational(exponent as i64, 1);
        prop_assert_eq!(
            cyclic_ordinary_avoids(&conj, e, false).unwrap().verdict,
            cyclic_ordinary_avoids(&w, e, false).unwrap().verdict
        );
        prop_assert_eq!(
            circular_ordinary_avoids(&conj, e, true).unwrap().verdict,
            circular_ordinary_avoids(&w, e, true).unwrap().verdict
        );
    }

    #[test]
    fn avoiding_n_implies_avoiding_n_plus_one(w in nonempty_word(3, 12), exponent in 2u32..7) {
        if cyclic_abelian_avoids(&w, exponent).unwrap().verdict {
            prop_assert!(cyclic_abelian_avoids(&w, exponent + 1).unwrap().verdict);
        }
    }

    #[test]
    fn every_reported_witness_reverifies(w in nonempty_word(3, 12), exponent in 2u32..5) {
        let report = cyclic_abelian_avoids(&w, exponent).unwrap();
        if let Some(occ) = &report.witness {
            prop_assert!(!report.verdict);
            prop_assert!(verify_occurrence(&w, Mode::Cyclic, occ));
        }
        let e = rational(exponent as i64, 1);
        for (mode, report) in [
            (Mode::Cyclic, cyclic_ordinary_avoids(&w, e, false).unwrap()),
            (Mode::Circular, circular_ordinary_avoids(&w, e, true).unwrap()),
        ] {
            if let Some(occ) = &report.witness {
                prop_assert!(verify_occurrence(&w, mode, occ));
            }
        }
    }
}
