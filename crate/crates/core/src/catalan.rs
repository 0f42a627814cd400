//! Catalan words, elevation sequences, and profiles.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::{Letter, Word};

/// True iff every proper prefix has nonnegative sign-sum and the whole word
/// sums to zero.
pub fn is_catalan(w: &Word) -> bool {
    let mut sum = 0i64;
    for (i, l) in w.letters().enumerate() {
        sum += l.sign() as i64;
        if i + 1 < w.len() && sum < 0 {
            return false;
        }
    }
    sum == 0
}

/// All Catalan words of length `2n`, in canonical order.
pub fn enumerate_catalan(n: usize) -> Vec<Word> {
    fn extend(prefix: Word, height: usize, opens_left: usize, out: &mut Vec<Word>) {
        if opens_left == 0 && height == 0 {
            out.push(prefix);
            return;
        }
        if opens_left > 0 {
            extend(prefix.push(Letter::X), height + 1, opens_left - 1, out);
        }
        if height > 0 {
            extend(prefix.push(Letter::Y), height - 1, opens_left, out);
        }
    }
    assert!(2 * n <= Word::MAX_LEN, "Catalan words of length {} exceed the word capacity", 2 * n);
    let mut out = Vec::new();
    extend(Word::empty(), 0, n, &mut out);
    out.sort_unstable();
    out
}

/// `binomial(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step
    (0..n).fold(BigUint::one(), |c, k| c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2))
}

/// The running sign-sums `(e_0, ..., e_n)` of a word, with `e_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElevationSeq(pub Vec<i64>);

pub fn elevation(w: &Word) -> ElevationSeq {
    let mut values = Vec::with_capacity(w.len() + 1);
    let mut e = 0i64;
    values.push(e);
    for l in w.letters() {
        e += l.sign() as i64;
        values.push(e);
    }
    ElevationSeq(values)
}

impl ElevationSeq {
    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for ElevationSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Endpoints and turning points `(l_0, h_1, l_1, ..., h_r, l_r)` of an
/// elevation sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(pub Vec<i64>);

pub fn profile(w: &Word) -> Profile {
    let e = elevation(w).0;
    let n = e.len() - 1;
    let values = (0..=n)
        .filter(|&i| i == 0 || i == n || e[i + 1] - e[i] != e[i] - e[i - 1])
        .map(|i| e[i])
        .collect();
    Profile(values)
}

impl Profile {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// Number of peaks `r`.
    pub fn peaks_count(&self) -> usize {
        self.0.len() / 2
    }

    /// `l_0, ..., l_r`.
    pub fn valleys(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().step_by(2).copied()
    }

    /// `h_1, ..., h_r`.
    pub fn peaks(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().skip(1).step_by(2).copied()
    }

    /// `l_0 = l_r = 0`, entries nonnegative, and each peak strictly above its
    /// neighbouring valleys.
    pub fn is_catalan(&self) -> bool {
        let v = &self.0;
        if v.len().is_multiple_of(2) || v[0] != 0 || *v.last().unwrap() != 0 {
            return false;
        }
        v.iter().all(|x| *x >= 0)
            && (1..v.len()).step_by(2).all(|i| v[i] > v[i - 1].max(v[i + 1]))
    }

    /// Rebuilds the Catalan word: `h_i - l_(i-1)` ascents then `h_i - l_i`
    /// descents per peak.
    pub fn to_word(&self) -> Result<Word> {
        if !self.is_catalan() {
            return Err(Error::NotCatalanProfile(self.to_string()));
        }
        let mut letters = Vec::new();
        for i in (1..self.0.len()).step_by(2) {
            let (l_prev, h, l_next) = (self.0[i - 1], self.0[i], self.0[i + 1]);
            letters.extend(std::iter::repeat_n(Letter::X, (h - l_prev) as usize));
            letters.extend(std::iter::repeat_n(Letter::Y, (h - l_next) as usize));
        }
        Word::from_letters(letters)
    }
}

impl fmt::Display for Profile {
    /// `(0,2,1,2,0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}
