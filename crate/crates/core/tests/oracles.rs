mod common;

use common::*;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use qshuffle::alternating::{d_closed, d_one_step, d_recursive, d_recursive_all, q_int_sq};
use qshuffle::catalan::{catalan_number, enumerate_catalan};
use qshuffle::qring::{q_fact, q_int};
use qshuffle::{Element, LaurentPoly, Letter, Word};

#[test]
fn left_rule_matches_right_rule_exhaustively() {
    for total in 0..=8 {
        for a in 0..=total {
            for u in all_words(a) {
                for v in all_words(total - a) {
                    let fast = Element::from_word(u).shuffle(&Element::from_word(v));
                    assert_eq!(fast, shuffle_right_rule(u, v), "{u} * {v}");
                }
            }
        }
    }
}

#[test]
fn single_letter_rules() {
    for len in 0..=7 {
        for v in all_words(len) {
            for l in [Letter::X, Letter::Y] {
                let le = Element::letter(l);
                let ve = Element::from_word(v);
                assert_eq!(le.shuffle(&ve), letter_shuffle_word(l, v), "{l:?} * {v}");
                assert_eq!(ve.shuffle(&le), word_shuffle_letter(v, l), "{v} * {l:?}");
            }
        }
    }
}

#[test]
fn letter_times_letter() {
    for u in [Letter::X, Letter::Y] {
        for v in [Letter::X, Letter::Y] {
            let uv = Word::letter_word(u).push(v);
            let vu = Word::letter_word(v).push(u);
            let expect = &Element::from_word(uv)
                + &Element::monomial(vu, LaurentPoly::q_pow(u.pairing(v)));
            assert_eq!(Element::letter(u).shuffle(&Element::letter(v)), expect);
        }
    }
}

#[test]
fn long_words_stay_consistent() {
    // 10 + 12 letters: exercises deep tables without the exhaustive loop
    let u = w("xxyxyyxyxy");
    let v = w("yxxyxyyxxyxy");
    let fast = Element::from_word(u).shuffle(&Element::from_word(v));
    assert!(fast.is_homogeneous_of(22));
    let one = BigRational::one();
    let total: BigRational = fast.terms().map(|(_, c)| c.eval_at(&one).unwrap()).sum();
    assert_eq!(total, BigRational::from_integer(binomial(22, 10).into()));
    assert_eq!(fast.zeta(), Element::from_word(v.zeta()).shuffle(&Element::from_word(u.zeta())));
}

#[test]
fn catalan_enumeration_matches_brute_force() {
    for n in 0..=6 {
        assert_eq!(enumerate_catalan(n), brute_force_catalan(n), "n = {n}");
    }
    assert_eq!(brute_force_catalan(4).len(), 14);
}

#[test]
fn catalan_numbers_from_binomials() {
    for n in 0..=20u64 {
        assert_eq!(catalan_number(n as usize), binomial(2 * n, n) / BigUint::from(n + 1));
    }
    assert_eq!(catalan_number(8), BigUint::from(1430u32));
}

#[test]
fn fourth_peak_coefficient_from_recursion() {
    // oracle: the coefficient of xxxxyyyy in the convolution-built D_4
    let d4 = d_recursive(4);
    let c = Element::from_word(w("xxxxyyyy")).bilinear_form(&d4);
    let e = &(&q_int(4) * &q_int(3)) * &q_int(2);
    assert_eq!(c, &e * &e);
    assert_eq!(q_fact(4), e);
}

#[test]
fn d_examples_by_every_route() {
    let two = q_int_sq(2);
    let d2 = el("xyxy + (q^2 + 2 + q^-2)*xxyy");
    let d = d_recursive_all(6);
    assert_eq!(d[2], d2);
    assert_eq!(Element::from_word(w("xxyy")).bilinear_form(&d2), two);
    assert_eq!(d_closed(5).unwrap(), d[5]);
    assert_eq!(d_one_step(6).unwrap(), d[6]);
    assert_eq!(d_one_step(1).unwrap(), el("-xy"));
}
