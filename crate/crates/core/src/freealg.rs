//! Words over `{x, y}`, elements of the free algebra, and the q-shuffle product.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qring::{q_int_signed, q_minus_q_inv, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// `+1` for `x`, `-1` for `y`.
    pub fn sign(self) -> i32 {
        match self {
            Letter::X => 1,
            Letter::Y => -1,
        }
    }

    /// The pairing `<u, v>`: `2` on equal letters, `-2` on distinct ones.
    pub fn pairing(self, other: Letter) -> i32 {
        2 * self.sign() * other.sign()
    }

    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u64) -> Letter {
        if b & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word of at most [`Word::MAX_LEN`] letters, packed one bit per letter.
///
/// Bit `i` holds letter `i` (`x = 0`, `y = 1`). The derived order compares
/// length first and then the packed integer, whose most significant letter is
/// the last one: words of equal length are ordered colexicographically with
/// `x < y`. That order lists `Cat_3` as `xyxyxy, xxyyxy, xyxxyy, xxyxyy, xxxyyy`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Word {
    pub const MAX_LEN: usize = 64;

    /// The trivial word.
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letter_word(l: Letter) -> Word {
        Word { len: 1, bits: l.bit() }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut w = Word::empty();
        for (i, l) in letters.into_iter().enumerate() {
            if i >= Self::MAX_LEN {
                return Err(Error::WordTooLong(i + 1));
            }
            w = w.push(l);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letter(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index {i} out of range for length {}", self.len);
        Letter::from_bit(self.bits >> i)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    /// Appends a letter. Panics past [`Word::MAX_LEN`].
    pub fn push(self, l: Letter) -> Word {
        assert!(self.len() < Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        Word {
            len: self.len + 1,
            bits: self.bits | (l.bit() << self.len),
        }
    }

    /// Prepends a letter. Panics past [`Word::MAX_LEN`].
    pub fn prepend(self, l: Letter) -> Word {
        assert!(self.len() < Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        Word {
            len: self.len + 1,
            bits: (self.bits << 1) | l.bit(),
        }
    }

    pub fn try_concat(self, other: Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > Self::MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        let bits = if other.is_empty() {
            self.bits
        } else {
            self.bits | (other.bits << self.len)
        };
        Ok(Word { len: len as u8, bits })
    }

    /// Concatenation. Panics past [`Word::MAX_LEN`].
    pub fn concat(self, other: Word) -> Word {
        self.try_concat(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Letters `start..len`.
    pub fn suffix(&self, start: usize) -> Word {
        assert!(start <= self.len());
        if start == self.len() {
            return Word::empty();
        }
        Word {
            len: (self.len() - start) as u8,
            bits: self.bits >> start,
        }
    }

    /// Letters `0..end`.
    pub fn prefix(&self, end: usize) -> Word {
        assert!(end <= self.len());
        Word {
            len: end as u8,
            bits: self.bits & mask(end),
        }
    }

    /// Sum of letter signs.
    pub fn weight(&self) -> i64 {
        self.len() as i64 - 2 * self.bits.count_ones() as i64
    }

    /// Swap `x <-> y` and reverse.
    pub fn zeta(&self) -> Word {
        if self.is_empty() {
            return *self;
        }
        let rev = self.bits.reverse_bits() >> (64 - self.len());
        Word {
            len: self.len,
            bits: !rev & mask(self.len()),
        }
    }

    /// Repeats `self` `n` times.
    pub fn pow(self, n: usize) -> Word {
        (0..n).fold(Word::empty(), |acc, _| acc.concat(self))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty word; the trivial word is written \"1\"".into()));
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(Error::Parse(format!("unexpected letter {other:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_letters(letters)
    }
}

/// Sorted `(exponent, multiplicity)` pairs: a Laurent polynomial with
/// nonnegative machine coefficients, the shape of every word-by-word shuffle
/// coefficient.
type Monos = Vec<(i32, u64)>;

fn merge_monos(dst: &mut Monos, src: &Monos, shift: i32) {
    if dst.is_empty() {
        dst.extend(src.iter().map(|(e, c)| (e + shift, *c)));
        return;
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        let a = dst.get(i).copied();
        let b = src.get(j).map(|(e, c)| (e + shift, *c));
        match (a, b) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                out.push((a.0, a.1 + b.1));
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                out.push(a);
                i += 1;
            }
            (Some(_), Some(b)) | (None, Some(b)) => {
                out.push(b);
                j += 1;
            }
            (Some(a), None) => {
                out.push(a);
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    *dst = out;
}

/// `u * v` for single words, by the left-letter recursion
///
/// `u * v = u_1((u_2..u_r) * v) + v_1(u * (v_2..v_s)) q^(<v_1,u_1> + ... + <v_1,u_r>)`
///
/// memoized over all pairs of suffixes. The inner sum of pairings is
/// `2 sign(v_1) weight(u)`, read from a suffix-weight table.
fn shuffle_words(u: Word, v: Word) -> Vec<(Word, Monos)> {
    let (r, s) = (u.len(), v.len());
    assert!(r + s <= Word::MAX_LEN, "shuffle result exceeds {} letters", Word::MAX_LEN);
    if r == 0 {
        return vec![(v, vec![(0, 1)])];
    }
    if s == 0 {
        return vec![(u, vec![(0, 1)])];
    }
    let mut suffix_weight = vec![0i32; r + 1];
    for i in (0..r).rev() {
        suffix_weight[i] = suffix_weight[i + 1] + u.letter(i).sign();
    }
    type Cell = FxHashMap<u64, Monos>;
    let single = |w: Word| -> Cell {
        let mut c = Cell::default();
        c.insert(w.bits, vec![(0, 1)]);
        c
    };

    // `below[j]` is the cell for suffixes (u[i+1..], v[j..]).
    let mut below: Vec<Cell> = (0..=s).map(|j| single(v.suffix(j))).collect();
    for i in (0..r).rev() {
        let ui = u.letter(i).bit();
        let mut row: Vec<Cell> = Vec::with_capacity(s + 1);
        row.resize_with(s + 1, Cell::default);
        row[s] = single(u.suffix(i));
        for j in (0..s).rev() {
            let vj = v.letter(j);
            let twist = 2 * vj.sign() * suffix_weight[i];
            let mut cell = Cell::default();
            cell.reserve(below[j].len() + row[j + 1].len());
            for (w, m) in &below[j] {
                merge_monos(cell.entry((w << 1) | ui).or_default(), m, 0);
            }
            for (w, m) in &row[j + 1] {
                merge_monos(cell.entry((w << 1) | vj.bit()).or_default(), m, twist);
            }
            row[j] = cell;
        }
        below = row;
    }
    let len = (r + s) as u8;
    below
        .swap_remove(0)
        .into_iter()
        .map(|(bits, m)| (Word { len, bits }, m))
        .collect()
}

/// A finite `Z[q, q^-1]`-linear combination of words.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, LaurentPoly>,
}

type Accumulator = FxHashMap<Word, LaurentPoly>;

fn merge_acc(mut a: Accumulator, b: Accumulator) -> Accumulator {
    if a.len() < b.len() {
        return merge_acc(b, a);
    }
    for (w, c) in b {
        *a.entry(w).or_default() += &c;
    }
    a
}

/// Pairs of terms above which a shuffle product is split across threads.
const PARALLEL_PAIRS: usize = 64;

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    /// The trivial word with coefficient 1.
    pub fn one() -> Element {
        Element::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Element {
        Element::monomial(w, LaurentPoly::one())
    }

    pub fn letter(l: Letter) -> Element {
        Element::from_word(Word::letter_word(l))
    }

    pub fn monomial(w: Word, c: LaurentPoly) -> Element {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Element { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly)>>(terms: I) -> Element {
        let mut out = Element::zero();
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    fn from_acc(acc: Accumulator) -> Element {
        Element {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Adds `c * w` in place.
    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words with a nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Coefficient of `w` (zero when absent).
    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The common length of all words, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(|w| w.len());
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// True when every word has length `deg` (vacuously for zero).
    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.terms.keys().all(|w| w.len() == deg)
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.values().map(|c| c.max_coeff_bits()).max().unwrap_or(0)
    }

    fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (*w, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Element {
        self.map_coeffs(|a| a * c)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Element {
        self.map_coeffs(|a| a.shift(k))
    }

    /// Divides every coefficient exactly by `d`.
    pub fn divide_exact(&self, d: &LaurentPoly) -> Result<Element> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| Ok((*w, c.divide_exact(d)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Element { terms })
    }

    /// The free-algebra (concatenation) product.
    pub fn concat(&self, other: &Element) -> Element {
        let mut acc = Accumulator::default();
        for (w, a) in &self.terms {
            for (v, b) in &other.terms {
                *acc.entry(w.concat(*v)).or_default() += &(a * b);
            }
        }
        Element::from_acc(acc)
    }

    /// Right concatenation by a single word.
    pub fn concat_word(&self, w: Word) -> Element {
        Element {
            terms: self.terms.iter().map(|(v, c)| (v.concat(w), c.clone())).collect(),
        }
    }

    /// Left concatenation by a single word.
    pub fn word_concat(&self, w: Word) -> Element {
        Element {
            terms: self.terms.iter().map(|(v, c)| (w.concat(*v), c.clone())).collect(),
        }
    }

    /// The q-shuffle product `self * other`.
    pub fn shuffle(&self, other: &Element) -> Element {
        let rows: Vec<(&Word, &LaurentPoly)> = self.terms.iter().collect();
        let fold_row = |mut acc: Accumulator, (w, a): (&Word, &LaurentPoly)| {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (word, monos) in shuffle_words(*w, *v) {
                    let slot = acc.entry(word).or_default();
                    for (e, mult) in monos {
                        slot.add_scaled_shifted(&ab, e, mult as i64);
                    }
                }
            }
            acc
        };
        let acc = if rows.len() * other.num_terms() >= PARALLEL_PAIRS && rayon::current_num_threads() > 1 {
            rows.into_par_iter()
                .fold(Accumulator::default, fold_row)
                .reduce(Accumulator::default, merge_acc)
        } else {
            rows.into_iter().fold(Accumulator::default(), fold_row)
        };
        Element::from_acc(acc)
    }

    /// The antiautomorphism swapping `x <-> y` and reversing each word.
    pub fn zeta(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.zeta(), c.clone())).collect(),
        }
    }

    /// `A y^-1`: removes the final `y` of every word.
    pub fn strip_right_y(&self) -> Result<Element> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            match w.last() {
                Some(Letter::Y) => {
                    terms.insert(w.prefix(w.len() - 1), c.clone());
                }
                Some(Letter::X) => return Err(strip_err("strip_right_y", w, "ends with x")),
                None => return Err(strip_err("strip_right_y", w, "is trivial")),
            }
        }
        Ok(Element { terms })
    }

    /// `x^-1 B`: removes the leading `x` of every word.
    pub fn strip_left_x(&self) -> Result<Element> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            match w.first() {
                Some(Letter::X) => {
                    terms.insert(w.suffix(1), c.clone());
                }
                Some(Letter::Y) => return Err(strip_err("strip_left_x", w, "starts with y")),
                None => return Err(strip_err("strip_left_x", w, "is trivial")),
            }
        }
        Ok(Element { terms })
    }

    /// The form making the words orthonormal.
    pub fn bilinear_form(&self, other: &Element) -> LaurentPoly {
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = LaurentPoly::zero();
        for (w, a) in &small.terms {
            if let Some(b) = large.terms.get(w) {
                acc += &(a * b);
            }
        }
        acc
    }

    /// `(q x * w - q^-1 w * x) / (q - q^-1)`, through exact division.
    pub fn commutator_with_x(&self) -> Result<Element> {
        let x = Element::letter(Letter::X);
        let lhs = &x.shuffle(self).shift(1) - &self.shuffle(&x).shift(-1);
        lhs.divide_exact(&q_minus_q_inv())
    }
}

fn strip_err(op: &'static str, w: &Word, reason: &'static str) -> Error {
    Error::StripLetter {
        op,
        word: w.to_string(),
        reason,
    }
}

/// `sum_i a_1..a_i x a_(i+1)..a_m [1 + 2(a_1 + ... + a_i)]_q` for a word whose
/// prefix sign-sums are all nonnegative.
pub fn commutator_with_x_expanded(w: Word) -> Result<Element> {
    let mut out = Element::zero();
    let mut elevation = 0i64;
    for i in 0..=w.len() {
        if i > 0 {
            elevation += w.letter(i - 1).sign() as i64;
        }
        let inserted = w.prefix(i).push(Letter::X).concat(w.suffix(i));
        out.add_term(inserted, &q_int_signed(1 + 2 * elevation)?);
    }
    Ok(out)
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c);
        }
        out
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, &-c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.map_coeffs(|c| -c)
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Element {
        Element::from_word(w)
    }
}

impl fmt::Display for Element {
    /// `xyxy + (q^2 + 2 + q^-2)*xxyy`; a term whose coefficient has a negative
    /// leading coefficient is joined with ` - ` and printed negated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.leading_is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{w}")?;
            } else if mag.num_terms() == 1 {
                write!(f, "{mag}*{w}")?;
            } else {
                write!(f, "({mag})*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

fn parse_term(src: &str) -> Result<(Word, LaurentPoly)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => split = Some(i),
            _ => {}
        }
    }
    let parse_coeff = |s: &str| -> Result<LaurentPoly> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        inner.parse()
    };
    match split {
        Some(i) => Ok((src[i + 1..].parse()?, parse_coeff(&src[..i])?)),
        None if src.contains(['x', 'y']) => Ok((src.parse()?, LaurentPoly::one())),
        None => Ok((Word::empty(), parse_coeff(src)?)),
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Accepts the rendering produced by `Display`.
    fn from_str(s: &str) -> Result<Element> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if compact == "0" {
            return Ok(Element::zero());
        }
        let chars: Vec<char> = compact.chars().collect();
        let mut out = Element::zero();
        let mut depth = 0i32;
        let mut start = 0;
        let mut negative = false;
        let mut i = 0;
        if chars[0] == '-' || chars[0] == '+' {
            negative = chars[0] == '-';
            start = 1;
            i = 1;
        }
        let mut flush = |from: usize, to: usize, negative: bool| -> Result<()> {
            let piece: String = chars[from..to].iter().collect();
            if piece.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (w, c) = parse_term(&piece)?;
            out.add_term(w, &if negative { -c } else { c });
            Ok(())
        };
        while i < chars.len() {
            match chars[i] {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > start && chars[i - 1] != '^' => {
                    flush(start, i, negative)?;
                    negative = chars[i] == '-';
                    start = i + 1;
                }
                _ => {}
            }
            i += 1;
        }
        flush(start, chars.len(), negative)?;
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: String,
    coeff: LaurentPoly,
}

impl Serialize for Element {
    /// A list of `{word, coeff}` entries in canonical word order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(w, c)| TermRepr {
            word: w.to_string(),
            coeff: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut out = Element::zero();
        for t in reprs {
            let w: Word = t.word.parse().map_err(serde::de::Error::custom)?;
            out.add_term(w, &t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::q_int;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn word_basics() {
        assert_eq!(w("1"), Word::empty());
        assert_eq!(w("xyy").to_string(), "xyy");
        assert_eq!(w("xxy").zeta(), w("xyy"));
        assert_eq!(Word::empty().zeta(), Word::empty());
        assert_eq!(w("xy").concat(w("x")), w("xyx"));
        assert_eq!(w("xyxy").suffix(1), w("yxy"));
        assert_eq!(w("xyxy").prefix(3), w("xyx"));
        assert_eq!(w("xxyx").weight(), 2);
        assert!("xz".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
        assert_eq!("x".repeat(65).parse::<Word>(), Err(Error::WordTooLong(65)));
        assert_eq!("y".repeat(64).parse::<Word>().unwrap().len(), 64);
        assert_eq!(w(&"y".repeat(64)).zeta(), w(&"x".repeat(64)));
    }

    #[test]
    fn canonical_order_is_length_then_colex() {
        let mut v = [w("xxxyyy"), w("xyxyxy"), w("xxyxyy"), w("xy"), w("xyxxyy"), w("xxyyxy")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["xy", "xyxyxy", "xxyyxy", "xyxxyy", "xxyxyy", "xxxyyy"]);
    }

    #[test]
    fn pairing_values() {
        assert_eq!(Letter::X.pairing(Letter::X), 2);
        assert_eq!(Letter::Y.pairing(Letter::Y), 2);
        assert_eq!(Letter::X.pairing(Letter::Y), -2);
        assert_eq!(Letter::Y.pairing(Letter::X), -2);
    }

    #[test]
    fn small_shuffles() {
        let v = e("xy + 3*yyx");
        assert_eq!(Element::one().shuffle(&v), v);
        assert_eq!(v.shuffle(&Element::one()), v);
        assert_eq!(e("x").shuffle(&e("y")), e("xy + q^-2*yx"));
        assert_eq!(e("x").shuffle(&e("x")), e("(q^2 + 1)*xx"));
        assert_eq!(e("x").shuffle(&e("yy")), e("xyy + q^-2*yxy + q^-4*yyx"));
        assert!(Element::zero().shuffle(&v).is_zero());
    }

    #[test]
    fn concatenation() {
        assert_eq!(e("xy").concat(&e("x")), e("xyx"));
        assert_eq!(Element::one().concat(&e("xy - yx")), e("xy - yx"));
        assert_eq!(e("x").concat(&e("q*y")), e("q*xy"));
    }

    #[test]
    fn bilinear_form_extracts_coefficients() {
        assert!(e("xy").bilinear_form(&e("xy")).is_one());
        assert!(e("xy").bilinear_form(&e("yx")).is_zero());
        let d2 = e("xyxy + (q^2 + 2 + q^-2)*xxyy");
        assert_eq!(e("xxyy").bilinear_form(&d2), &q_int(2) * &q_int(2));
        let a = e("2*xy + q*yx");
        let b = e("q^-1*xy + yy");
        assert_eq!(a.bilinear_form(&b), b.bilinear_form(&a));
    }

    #[test]
    fn stripping() {
        assert_eq!(e("xy").strip_right_y().unwrap(), e("x"));
        assert_eq!(e("xyxy").strip_right_y().unwrap(), e("xyx"));
        assert!(e("xx").strip_right_y().is_err());
        assert!(Element::one().strip_right_y().is_err());
        assert_eq!(e("xy").strip_left_x().unwrap(), e("y"));
        let d2 = e("xyxy + (q^2 + 2 + q^-2)*xxyy");
        assert_eq!(d2.strip_left_x().unwrap(), e("yxy + (q^2 + 2 + q^-2)*xyy"));
        assert!(e("yx").strip_left_x().is_err());
        assert!(Element::zero().strip_left_x().unwrap().is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(e("xyxy + (q^2+2+q^-2)*xxyy").to_string(), "xyxy + (q^2 + 2 + q^-2)*xxyy");
        assert_eq!(e("-xy").to_string(), "-xy");
        assert_eq!(Element::one().to_string(), "1");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(e("x").shuffle(&e("y")).to_string(), "q^-2*yx + xy");
        assert_eq!(e("-2*q^3*xy - (q - q^-1)*yx").to_string(), "-(q - q^-1)*yx - 2*q^3*xy");
        assert_eq!(e("(q + 1)*1").to_string(), "(q + 1)*1");
        assert_eq!(e("3"), Element::monomial(Word::empty(), LaurentPoly::constant(3)));
        assert!("xy +".parse::<Element>().is_err());
        assert!("(q*xy".parse::<Element>().is_err());
    }

    #[test]
    fn json_format() {
        let v = e("xy + q^-2*yx");
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[{"word":"yx","coeff":{"-2":"1"}},{"word":"xy","coeff":{"0":"1"}}]"#);
        let back: Element = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn homogeneity() {
        assert_eq!(e("xy + yx").degree(), Some(2));
        assert_eq!(e("xy + x").degree(), None);
        assert!(Element::zero().is_homogeneous_of(5));
    }
}
