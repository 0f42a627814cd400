mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use qshuffle::catalan::{elevation, is_catalan, profile};
use qshuffle::freealg::commutator_with_x_expanded;
use qshuffle::qring::{q_int, q_minus_q_inv};
use qshuffle::{Element, LaurentPoly, Word};

proptest! {
    #![proptest_config(seeded(256))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn polynomial_text_and_json_roundtrip(a in poly_strategy()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&j).unwrap(), a);
    }

    #[test]
    fn element_text_and_json_roundtrip(e in element_strategy(6, 5)) {
        prop_assert_eq!(e.to_string().parse::<Element>().unwrap(), e.clone());
        let j = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&j).unwrap(), e);
    }

    #[test]
    fn shuffle_is_associative(a in word_strategy(4), b in word_strategy(4), c in word_strategy(4)) {
        let (a, b, c) = (Element::from_word(a), Element::from_word(b), Element::from_word(c));
        prop_assert_eq!(a.shuffle(&b).shuffle(&c), a.shuffle(&b.shuffle(&c)));
    }

    #[test]
    fn shuffle_is_graded_and_counts_interleavings(u in word_strategy(8), v in word_strategy(8)) {
        let p = Element::from_word(u).shuffle(&Element::from_word(v));
        prop_assert!(p.is_homogeneous_of(u.len() + v.len()));
        let one = BigRational::one();
        let total: BigRational = p.terms().map(|(_, c)| c.eval_at(&one).unwrap()).sum();
        let expect = binomial((u.len() + v.len()) as u64, u.len() as u64);
        prop_assert_eq!(total, BigRational::from_integer(BigInt::from(expect)));
    }

    #[test]
    fn zeta_is_a_shuffle_antiautomorphism(a in element_strategy(5, 3), b in element_strategy(5, 3)) {
        prop_assert_eq!(a.shuffle(&b).zeta(), b.zeta().shuffle(&a.zeta()));
        prop_assert_eq!(a.concat(&b).zeta(), b.zeta().concat(&a.zeta()));
        prop_assert_eq!(a.zeta().zeta(), a);
    }

    #[test]
    fn shuffle_is_bilinear(a in element_strategy(4, 3), b in element_strategy(4, 3), c in element_strategy(4, 3), k in poly_strategy()) {
        prop_assert_eq!(a.shuffle(&(&b + &c)), &a.shuffle(&b) + &a.shuffle(&c));
        prop_assert_eq!(a.scale(&k).shuffle(&b), a.shuffle(&b).scale(&k));
    }

    #[test]
    fn bilinear_form_is_symmetric(a in element_strategy(4, 6), b in element_strategy(4, 6)) {
        prop_assert_eq!(a.bilinear_form(&b), b.bilinear_form(&a));
        for (w, c) in a.terms() {
            prop_assert_eq!(&Element::from_word(*w).bilinear_form(&a), c);
        }
    }

    #[test]
    fn elevation_characterizes_catalan(word in word_strategy(12)) {
        let e = elevation(&word).0;
        let by_elev = *e.last().unwrap() == 0 && e.iter().all(|h| *h >= 0);
        prop_assert_eq!(by_elev, is_catalan(&word));
        if is_catalan(&word) {
            prop_assert_eq!(profile(&word).to_word().unwrap(), word);
        }
    }
}

/// Dyck words from a random walk that never goes below zero.
fn catalan_word_strategy(max_half: usize) -> impl Strategy<Value = Word> {
    (0..=max_half, prop::collection::vec(prop::bool::ANY, 2 * max_half)).prop_map(|(n, coins)| {
        let mut word = Word::empty();
        let (mut up, mut height) = (n, 0usize);
        for coin in coins {
            if up == 0 && height == 0 {
                break;
            }
            if up > 0 && (height == 0 || coin) {
                word = word.push(qshuffle::Letter::X);
                up -= 1;
                height += 1;
            } else {
                word = word.push(qshuffle::Letter::Y);
                height -= 1;
            }
        }
        while height > 0 {
            word = word.push(qshuffle::Letter::Y);
            height -= 1;
        }
        word
    })
}

proptest! {
    #![proptest_config(seeded(256))]

    #[test]
    fn commutator_expansion(word in catalan_word_strategy(5)) {
        prop_assert!(is_catalan(&word));
        let via_division = Element::from_word(word).commutator_with_x().unwrap();
        prop_assert_eq!(via_division, commutator_with_x_expanded(word).unwrap());
    }
}

#[test]
fn commutator_expansion_all_short_catalan_words() {
    for n in 0..=5 {
        for word in qshuffle::catalan::enumerate_catalan(n) {
            let lhs = Element::from_word(word).commutator_with_x().unwrap();
            assert_eq!(lhs, commutator_with_x_expanded(word).unwrap(), "{word}");
        }
    }
}

#[test]
fn q_int_identities_through_64() {
    let one = BigRational::one();
    for n in 0..=64u32 {
        let lhs = &q_int(n) * &q_minus_q_inv();
        let rhs = &LaurentPoly::q_pow(n as i32) - &LaurentPoly::q_pow(-(n as i32));
        assert_eq!(lhs, rhs);
        assert_eq!(q_int(n).eval_at(&one).unwrap(), BigRational::from_integer(n.into()));
    }
}

#[test]
fn bilinear_form_nondegenerate_on_word_sets() {
    let words = all_words(4);
    for a in &words {
        let row: Vec<LaurentPoly> = words
            .iter()
            .map(|b| Element::from_word(*a).bilinear_form(&Element::from_word(*b)))
            .collect();
        assert_eq!(row.iter().filter(|c| c.is_one()).count(), 1);
        assert_eq!(row.iter().filter(|c| c.is_zero()).count(), words.len() - 1);
    }
}
