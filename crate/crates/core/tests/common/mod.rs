//! Independent reference implementations used only by tests.
#![allow(dead_code)]

use num_bigint::BigUint;
use proptest::prelude::*;
use qshuffle::catalan::is_catalan;
use qshuffle::{Element, LaurentPoly, Letter, Word};

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn el(s: &str) -> Element {
    s.parse().unwrap()
}

fn weight_pairing(l: Letter, word: Word) -> i32 {
    word.letters().map(|v| l.pairing(v)).sum()
}

/// `u * v` by the right-letter recursion
/// `u * v = (u * v_1..v_(s-1)) v_s + (u_1..u_(r-1) * v) u_r q^(<u_r,v_1> + ... + <u_r,v_s>)`,
/// with no memoization.
pub fn shuffle_right_rule(u: Word, v: Word) -> Element {
    if u.is_empty() {
        return Element::from_word(v);
    }
    if v.is_empty() {
        return Element::from_word(u);
    }
    let (r, s) = (u.len(), v.len());
    let vs = v.letter(s - 1);
    let ur = u.letter(r - 1);
    let a = shuffle_right_rule(u, v.prefix(s - 1)).concat_word(Word::letter_word(vs));
    let b = shuffle_right_rule(u.prefix(r - 1), v)
        .concat_word(Word::letter_word(ur))
        .shift(weight_pairing(ur, v));
    &a + &b
}

/// `u * v` for a letter `u`: `sum_i v_1..v_i u v_(i+1)..v_n q^(<u,v_1> + ... + <u,v_i>)`.
pub fn letter_shuffle_word(u: Letter, v: Word) -> Element {
    let mut out = Element::zero();
    for i in 0..=v.len() {
        let word = v.prefix(i).push(u).concat(v.suffix(i));
        out.add_term(word, &LaurentPoly::q_pow(weight_pairing(u, v.prefix(i))));
    }
    out
}

/// `v * u` for a letter `u`: `sum_i v_1..v_i u v_(i+1)..v_n q^(<u,v_(i+1)> + ... + <u,v_n>)`.
pub fn word_shuffle_letter(v: Word, u: Letter) -> Element {
    let mut out = Element::zero();
    for i in 0..=v.len() {
        let word = v.prefix(i).push(u).concat(v.suffix(i));
        out.add_term(word, &LaurentPoly::q_pow(weight_pairing(u, v.suffix(i))));
    }
    out
}

/// Every word of length `len`.
pub fn all_words(len: usize) -> Vec<Word> {
    (0u64..(1 << len))
        .map(|bits| {
            Word::from_letters((0..len).map(|i| if bits >> i & 1 == 0 { Letter::X } else { Letter::Y }))
                .unwrap()
        })
        .collect()
}

/// Catalan words of length `2n` by filtering all `2^(2n)` words.
pub fn brute_force_catalan(n: usize) -> Vec<Word> {
    let mut v: Vec<Word> = all_words(2 * n).into_iter().filter(is_catalan).collect();
    v.sort();
    v
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|bits| {
        Word::from_letters(bits.into_iter().map(|b| if b { Letter::Y } else { Letter::X })).unwrap()
    })
}

pub fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i32..=6, -20i64..=20), 0..5)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, c.into()))))
}

/// An element with up to `terms` words, each of length at most `max_len`.
pub fn element_strategy(max_len: usize, terms: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((word_strategy(max_len), poly_strategy()), 0..=terms)
        .prop_map(Element::from_terms)
}

/// Fixed-seed proptest configuration with `cases` cases.
pub fn seeded(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed_0001),
        failure_persistence: None,
        ..proptest::test_runner::Config::default()
    }
}
