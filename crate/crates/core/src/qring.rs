//! Exact arithmetic in the ring `Z[q, q^-1]` of integer Laurent polynomials.
//!
//! Coefficients are arbitrary precision. A polynomial whose coefficients all
//! fit in an `i64` is stored in machine words and every operation on such
//! polynomials runs with checked `i128` intermediates; any overflow promotes
//! the result to `BigInt` storage, so the two representations are an
//! implementation detail and never produce different values.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// An element of `Z[q, q^-1]`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. The first
/// and last stored coefficients are nonzero and the zero polynomial stores
/// nothing, so structural equality is value equality.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Coeffs,
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn trim_bounds<T>(v: &[T], is_zero: impl Fn(&T) -> bool) -> Option<(usize, usize)> {
    let start = v.iter().position(|c| !is_zero(c))?;
    let end = v.iter().rposition(|c| !is_zero(c)).unwrap();
    Some((start, end + 1))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Coeffs::Small(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: i64, exp: i32) -> Self {
        Self::from_small(exp, vec![c])
    }

    pub fn big_monomial(c: BigInt, exp: i32) -> Self {
        Self::from_big(exp, vec![c])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigInt)>,
    {
        let mut acc = LaurentPoly::zero();
        for (e, c) in terms {
            acc += &LaurentPoly::big_monomial(c, e);
        }
        acc
    }

    fn from_small(low: i32, mut v: Vec<i64>) -> Self {
        match trim_bounds(&v, |c| *c == 0) {
            None => Self::zero(),
            Some((s, e)) => {
                v.truncate(e);
                v.drain(..s);
                LaurentPoly {
                    low: low + s as i32,
                    coeffs: Coeffs::Small(v),
                }
            }
        }
    }

    fn from_wide(low: i32, v: Vec<i128>) -> Self {
        if v.iter().all(|c| i64::try_from(*c).is_ok()) {
            Self::from_small(low, v.into_iter().map(|c| c as i64).collect())
        } else {
            Self::from_big(low, v.into_iter().map(BigInt::from).collect())
        }
    }

    fn from_big(low: i32, mut v: Vec<BigInt>) -> Self {
        match trim_bounds(&v, |c| c.is_zero()) {
            None => Self::zero(),
            Some((s, e)) => {
                v.truncate(e);
                v.drain(..s);
                let low = low + s as i32;
                let small: Option<Vec<i64>> = v.iter().map(|c| c.to_i64()).collect();
                match small {
                    Some(small) => LaurentPoly {
                        low,
                        coeffs: Coeffs::Small(small),
                    },
                    None => LaurentPoly {
                        low,
                        coeffs: Coeffs::Big(v),
                    },
                }
            }
        }
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    fn big_slice(&self) -> Cow<'_, [BigInt]> {
        match &self.coeffs {
            Coeffs::Small(v) => Cow::Owned(v.iter().map(|c| BigInt::from(*c)).collect()),
            Coeffs::Big(v) => Cow::Borrowed(v),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && matches!(&self.coeffs, Coeffs::Small(v) if v.as_slice() == [1])
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let k = exp as i64 - self.low as i64;
        if k < 0 || k >= self.len() as i64 {
            return BigInt::zero();
        }
        match &self.coeffs {
            Coeffs::Small(v) => BigInt::from(v[k as usize]),
            Coeffs::Big(v) => v[k as usize].clone(),
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, in increasing exponent order.
    pub fn terms(&self) -> Vec<(i32, BigInt)> {
        self.big_slice()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.low + k as i32, c.clone()))
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.iter().filter(|c| **c != 0).count(),
            Coeffs::Big(v) => v.iter().filter(|c| !c.is_zero()).count(),
        }
    }

    /// Sign of the coefficient of the highest power of `q`.
    pub fn leading_is_negative(&self) -> bool {
        match &self.coeffs {
            Coeffs::Small(v) => v.last().is_some_and(|c| *c < 0),
            Coeffs::Big(v) => v.last().is_some_and(|c| c.is_negative()),
        }
    }

    /// Largest bit length among the absolute values of the coefficients.
    pub fn max_coeff_bits(&self) -> u64 {
        match &self.coeffs {
            Coeffs::Small(v) => v
                .iter()
                .map(|c| 64 - c.unsigned_abs().leading_zeros() as u64)
                .max()
                .unwrap_or(0),
            Coeffs::Big(v) => v.iter().map(|c| c.bits()).max().unwrap_or(0),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        let mut out = self.clone();
        if !out.is_zero() {
            out.low += k;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self * &LaurentPoly::big_monomial(c.clone(), 0)
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let high = self.max_exponent().unwrap();
        let coeffs = match &self.coeffs {
            Coeffs::Small(v) => Coeffs::Small(v.iter().rev().copied().collect()),
            Coeffs::Big(v) => Coeffs::Big(v.iter().rev().cloned().collect()),
        };
        LaurentPoly { low: -high, coeffs }
    }

    /// Adds `factor * q^shift * other` to `self` in place.
    pub fn add_scaled_shifted(&mut self, other: &LaurentPoly, shift: i32, factor: i64) {
        if other.is_zero() || factor == 0 {
            return;
        }
        if self.is_zero() {
            *self = other.shift(shift);
            if factor != 1 {
                *self = &*self * &LaurentPoly::constant(factor);
            }
            return;
        }
        let o_low = other.low + shift;
        let new_low = self.low.min(o_low);
        let new_high = self
            .max_exponent()
            .unwrap()
            .max(o_low + other.len() as i32 - 1);
        let new_len = (new_high - new_low + 1) as usize;
        if let (Coeffs::Small(dst), Coeffs::Small(src)) = (&mut self.coeffs, &other.coeffs) {
            let pad = (self.low - new_low) as usize;
            let off = (o_low - new_low) as usize;
            let at = |k: usize| -> i64 {
                k.checked_sub(pad).and_then(|i| dst.get(i)).copied().unwrap_or(0)
            };
            let fits = src.iter().enumerate().all(|(k, c)| {
                *c == 0 || i64::try_from(at(off + k) as i128 + (*c as i128) * (factor as i128)).is_ok()
            });
            if fits {
                if pad > 0 || dst.len() < new_len {
                    let mut grown = vec![0i64; new_len];
                    grown[pad..pad + dst.len()].copy_from_slice(dst);
                    *dst = grown;
                }
                for (k, c) in src.iter().enumerate() {
                    if *c != 0 {
                        dst[off + k] += c * factor;
                    }
                }
                let v = std::mem::take(dst);
                *self = Self::from_small(new_low, v);
                return;
            }
        }
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); new_len];
        let pad = (self.low - new_low) as usize;
        for (k, c) in self.big_slice().iter().enumerate() {
            acc[pad + k] += c;
        }
        let off = (o_low - new_low) as usize;
        let f = BigInt::from(factor);
        for (k, c) in other.big_slice().iter().enumerate() {
            if !c.is_zero() {
                acc[off + k] += c * &f;
            }
        }
        *self = Self::from_big(new_low, acc);
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] when no quotient exists in
    /// `Z[q, q^-1]`; callers treat that as a defect, never as a value.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let d = divisor.big_slice();
        let d_low = divisor.low;
        let d_span = d.len() as i32 - 1;
        let d_lead = d.last().unwrap().clone();

        let mut rem: Vec<BigInt> = self.big_slice().into_owned();
        let rem_low = self.low;
        let mut top = rem.len() as i32 - 1;
        let q_low = rem_low - d_low;
        let q_len = (rem.len() as i32 - d_span).max(0) as usize;
        let mut quot = vec![BigInt::zero(); q_len];
        while top >= 0 {
            if rem[top as usize].is_zero() {
                top -= 1;
                continue;
            }
            if top < d_span {
                return Err(not_divisible());
            }
            let (qc, r) = rem[top as usize].div_rem(&d_lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            let base = (top - d_span) as usize;
            for (k, dc) in d.iter().enumerate() {
                if !dc.is_zero() {
                    rem[base + k] -= &qc * dc;
                }
            }
            quot[base] = qc;
            top -= 1;
        }
        Ok(Self::from_big(q_low, quot))
    }

    /// Exact value at `q = v`.
    pub fn eval_at(&self, v: &BigRational) -> Result<BigRational> {
        if v.is_zero() {
            return Err(Error::EvaluateAtZero);
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c) * Pow::pow(v, e);
        }
        Ok(acc)
    }
}

/// `q - q^-1`, the denominator of every q-integer.
pub fn q_minus_q_inv() -> LaurentPoly {
    LaurentPoly::from_small(-1, vec![-1, 0, 1])
}

/// The q-integer `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn q_int(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let n = n as i32;
    let v: Vec<i64> = (0..2 * n - 1).map(|k| if k % 2 == 0 { 1 } else { 0 }).collect();
    LaurentPoly::from_small(1 - n, v)
}

/// `q_int` for a signed argument; negative values are rejected.
pub fn q_int_signed(n: i64) -> Result<LaurentPoly> {
    u32::try_from(n)
        .map(q_int)
        .map_err(|_| Error::NegativeArgument {
            what: "q-integer",
            value: n,
        })
}

/// The q-factorial `[n]_q^! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q^! = 1`.
pub fn q_fact(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_int(k))
}

pub fn q_fact_signed(n: i64) -> Result<LaurentPoly> {
    u32::try_from(n)
        .map(q_fact)
        .map_err(|_| Error::NegativeArgument {
            what: "q-factorial",
            value: n,
        })
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.low != other.low || self.len() != other.len() {
            return false;
        }
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Small(a), Coeffs::Small(b)) => a == b,
            (Coeffs::Big(a), Coeffs::Big(b)) => a == b,
            // canonical storage: a value that fits in i64 words is never Big
            _ => false,
        }
    }
}

impl Eq for LaurentPoly {}

impl Hash for LaurentPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.low.hash(state);
        match &self.coeffs {
            Coeffs::Small(v) => v.hash(state),
            Coeffs::Big(v) => v.hash(state),
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, 0, 1);
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, 0, -1);
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, 0, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, 0, -1);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        match &self.coeffs {
            Coeffs::Small(v) if v.iter().all(|c| *c != i64::MIN) => LaurentPoly {
                low: self.low,
                coeffs: Coeffs::Small(v.iter().map(|c| -c).collect()),
            },
            _ => LaurentPoly::from_big(self.low, self.big_slice().iter().map(|c| -c).collect()),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn mul_small(a: &[i64], b: &[i64]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if *y == 0 {
                continue;
            }
            let p = (*x as i128) * (*y as i128);
            out[i + j] = out[i + j].checked_add(p)?;
        }
    }
    Some(out)
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let low = self.low + rhs.low;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &rhs.coeffs) {
            if let Some(wide) = mul_small(a, b) {
                return LaurentPoly::from_wide(low, wide);
            }
        }
        let a = self.big_slice();
        let b = rhs.big_slice();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        LaurentPoly::from_big(low, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::big_monomial(c, 0)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing exponent order, e.g. `q^2 + 2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().into_iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(src: &'a str) -> Self {
        PolyParser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in Laurent polynomial {:?}", self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let d = self.digits().ok_or_else(|| self.err("missing exponent"))?;
        let e: i32 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    // term := INT | INT '*' qpow | qpow
    fn term(&mut self) -> Result<(i32, BigInt)> {
        let mut coeff = BigInt::one();
        let mut had_int = false;
        if let Some(d) = self.digits() {
            coeff = d.parse().unwrap();
            had_int = true;
            if !self.eat('*') {
                return Ok((0, coeff));
            }
        }
        if self.eat('q') {
            return Ok((self.exponent()?, coeff));
        }
        Err(self.err(if had_int {
            "expected q after '*'"
        } else {
            "expected a term"
        }))
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut neg = self.eat('-');
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if neg { -c } else { c }));
            match self.peek() {
                None => break,
                Some('+') => neg = false,
                Some('-') => neg = true,
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolyParser::new(s).parse()
    }
}

impl Serialize for LaurentPoly {
    /// A map from exponent strings to integer strings, highest exponent first.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms();
        let mut map = serializer.serialize_map(Some(terms.len()))?;
        for (e, c) in terms.iter().rev() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from exponent strings to integer strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut terms = Vec::new();
                while let Some((e, c)) = map.next_entry::<String, String>()? {
                    let e: i32 = e.parse().map_err(de::Error::custom)?;
                    let c: BigInt = c.parse().map_err(de::Error::custom)?;
                    terms.push((e, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    /// An arbitrary total order (by exponent range, then coefficients) so
    /// polynomials can live in ordered collections.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.terms();
        let b = other.terms();
        a.cmp(&b)
    }
}
