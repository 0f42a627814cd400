//! Alternating words and the elements `D_n`.
//!
//! `D(t) = sum D_n t^n` is the shuffle inverse of `G~(t) = sum (xy)^n t^n`.
//! Three constructions are provided and must agree exactly:
//!
//! * [`d_recursive`]: the convolution `D_n = -sum_{k<n} D_k * G~_(n-k)`;
//! * [`d_closed`]: `D_n = (-1)^n sum_{w in Cat_n} D(w) w` with `D(w)` a
//!   product of q-integers read off the elevation sequence of `w`;
//! * [`d_one_step`]: `D_n = ((q^-1 D_(n-1) * x - q x * D_(n-1)) y) / (q - q^-1)`.
//!
//! [`d_one_step`] is the production path; the other two serve as oracles.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalan::{catalan_number, elevation, enumerate_catalan, is_catalan, profile, Profile};
use crate::error::{Error, Result};
use crate::freealg::{Element, Letter, Word};
use crate::qring::{q_fact_signed, q_int, q_int_signed, q_minus_q_inv, LaurentPoly};

fn xy() -> Word {
    Word::letter_word(Letter::X).push(Letter::Y)
}

/// `G~_n = (xy)^n`.
pub fn gtilde_word(n: usize) -> Word {
    xy().pow(n)
}

/// `G_n = (yx)^n`.
pub fn g_word(n: usize) -> Word {
    Word::letter_word(Letter::Y).push(Letter::X).pow(n)
}

/// `W_-n = (xy)^n x`.
pub fn w_minus(n: usize) -> Word {
    gtilde_word(n).push(Letter::X)
}

/// `W_(n+1) = y (xy)^n`.
pub fn w_plus(n: usize) -> Word {
    gtilde_word(n).prepend(Letter::Y)
}

/// Which construction of `D_n` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Recursive,
    Closed,
    OneStep,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Recursive, Mode::Closed, Mode::OneStep];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Recursive => "recursive",
            Mode::Closed => "closed",
            Mode::OneStep => "one-step",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `D_n` by the chosen construction.
pub fn d_element(n: usize, mode: Mode) -> Result<Element> {
    match mode {
        Mode::Recursive => Ok(d_recursive(n)),
        Mode::Closed => d_closed(n),
        Mode::OneStep => d_one_step(n),
    }
}

/// `D_0, ..., D_n` by the chosen construction.
pub fn d_elements(n: usize, mode: Mode) -> Result<Vec<Element>> {
    match mode {
        Mode::Recursive => Ok(d_recursive_all(n)),
        Mode::Closed => (0..=n).map(d_closed).collect(),
        Mode::OneStep => d_one_step_all(n),
    }
}

/// `D_0, ..., D_n` from the convolution recursion.
pub fn d_recursive_all(n: usize) -> Vec<Element> {
    let mut ds = vec![Element::one()];
    for m in 1..=n {
        let mut acc = Element::zero();
        for (k, dk) in ds.iter().enumerate() {
            acc = &acc + &dk.shuffle(&Element::from_word(gtilde_word(m - k)));
        }
        ds.push(-acc);
    }
    ds
}

pub fn d_recursive(n: usize) -> Element {
    d_recursive_all(n).pop().unwrap()
}

/// `((q^-1 prev * x - q x * prev) y) / (q - q^-1)`.
pub fn one_step(prev: &Element) -> Result<Element> {
    let x = Element::letter(Letter::X);
    let numer = &prev.shuffle(&x).shift(-1) - &x.shuffle(prev).shift(1);
    numer.concat_word(Word::letter_word(Letter::Y)).divide_exact(&q_minus_q_inv())
}

pub fn d_one_step_all(n: usize) -> Result<Vec<Element>> {
    let mut ds = vec![Element::one()];
    for _ in 0..n {
        let next = one_step(ds.last().unwrap())?;
        ds.push(next);
    }
    Ok(ds)
}

/// `D_n` by iterating [`one_step`] from `D_0 = 1`.
pub fn d_one_step(n: usize) -> Result<Element> {
    let mut d = Element::one();
    for _ in 0..n {
        d = one_step(&d)?;
    }
    Ok(d)
}

fn require_catalan(w: &Word) -> Result<()> {
    if is_catalan(w) {
        Ok(())
    } else {
        Err(Error::NotCatalan(w.to_string()))
    }
}

/// `D(w) = prod_i [a_1 + ... + a_(i-1) + (a_i + 1)/2]_q` for a Catalan word.
pub fn d_coeff_pointwise(w: &Word) -> Result<LaurentPoly> {
    require_catalan(w)?;
    let mut before = 0i64;
    let mut acc = LaurentPoly::one();
    for l in w.letters() {
        let bump = match l {
            Letter::X => 1,
            Letter::Y => 0,
        };
        acc = &acc * &q_int_signed(before + bump)?;
        before += l.sign() as i64;
    }
    Ok(acc)
}

/// The two equal product forms of `E(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EVariant {
    /// Elevations after each `x`.
    XForm,
    /// Elevations before each `y`.
    YForm,
}

pub fn e_coeff(w: &Word, variant: EVariant) -> Result<LaurentPoly> {
    require_catalan(w)?;
    let e = elevation(w).0;
    let mut acc = LaurentPoly::one();
    for (i, l) in w.letters().enumerate() {
        let factor = match (variant, l) {
            (EVariant::XForm, Letter::X) => e[i + 1],
            (EVariant::YForm, Letter::Y) => e[i],
            _ => continue,
        };
        acc = &acc * &q_int_signed(factor)?;
    }
    Ok(acc)
}

/// `[h_1]!...[h_r]! / ([l_0]!...[l_r]!)` for any alternating valley/peak
/// sequence of nonnegative entries; the division is exact.
pub fn profile_ratio(values: &[i64]) -> Result<LaurentPoly> {
    let mut numer = LaurentPoly::one();
    let mut denom = LaurentPoly::one();
    for (i, v) in values.iter().enumerate() {
        let f = q_fact_signed(*v)?;
        if i % 2 == 1 {
            numer = &numer * &f;
        } else {
            denom = &denom * &f;
        }
    }
    numer.divide_exact(&denom)
}

/// `D(l_0, h_1, ..., h_r, l_r)`, the squared factorial ratio of a Catalan profile.
pub fn d_coeff_profile(p: &Profile) -> Result<LaurentPoly> {
    if !p.is_catalan() {
        return Err(Error::NotCatalanProfile(p.to_string()));
    }
    let r = profile_ratio(p.values())?;
    Ok(&r * &r)
}

/// The right-hand side of the profile telescoping identity:
///
/// `sum_{j=xi}^{r-1} D(l_0, h_1, ..., h_j, l_j, h_(j+1)-1, ..., h_r-1, l_r) ([h_(j+1)]^2 - [l_j]^2)`
///
/// with `xi` the last index `j < r` such that `l_j = 0`. Requires `r >= 1`.
pub fn telescoping_sum(p: &Profile) -> Result<LaurentPoly> {
    if !p.is_catalan() || p.peaks_count() == 0 {
        return Err(Error::NotCatalanProfile(p.to_string()));
    }
    let v = p.values();
    let r = p.peaks_count();
    let valley = |j: usize| v[2 * j];
    let peak = |j: usize| v[2 * j - 1];
    let xi = (0..r).rev().find(|&j| valley(j) == 0).unwrap();
    let mut acc = LaurentPoly::zero();
    for j in xi..r {
        let mut lowered = v.to_vec();
        for entry in &mut lowered[2 * j + 1..2 * r] {
            *entry -= 1;
        }
        let ratio = profile_ratio(&lowered)?;
        let hq = q_int_signed(peak(j + 1))?;
        let lq = q_int_signed(valley(j))?;
        let weight = &(&hq * &hq) - &(&lq * &lq);
        acc += &(&(&ratio * &ratio) * &weight);
    }
    Ok(acc)
}

/// `D_n` from the closed formula, coefficients evaluated in parallel.
pub fn d_closed(n: usize) -> Result<Element> {
    let words = enumerate_catalan(n);
    let coeffs: Vec<LaurentPoly> = words.par_iter().map(d_coeff_pointwise).collect::<Result<_>>()?;
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    Ok(Element::from_terms(
        words
            .into_iter()
            .zip(coeffs)
            .map(|(w, c)| (w, if sign < 0 { -c } else { c })),
    ))
}

/// `sum_{w in Cat_(n-1)} D(w) ((q x * w - q^-1 w * x) y) / (q - q^-1)`.
///
/// The expansion identity says this equals `sum_{v in Cat_n} D(v) v`.
pub fn expansion_sum(n: usize) -> Result<Element> {
    assert!(n >= 1);
    let y = Word::letter_word(Letter::Y);
    let parts: Vec<Element> = enumerate_catalan(n - 1)
        .par_iter()
        .map(|w| {
            let comm = Element::from_word(*w).commutator_with_x()?;
            Ok(comm.concat_word(y).scale(&d_coeff_pointwise(w)?))
        })
        .collect::<Result<_>>()?;
    Ok(parts.iter().fold(Element::zero(), |acc, p| &acc + p))
}

/// A power series in `t` with element coefficients, truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    order: usize,
    coeffs: Vec<Element>,
}

impl Series {
    /// Builds a series from `c_0, ..., c_N`. Panics on an empty list.
    pub fn new(coeffs: Vec<Element>) -> Series {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn identity(order: usize) -> Series {
        let mut coeffs = vec![Element::zero(); order + 1];
        coeffs[0] = Element::one();
        Series::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Element {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs[..=order.min(self.order)].to_vec())
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0] == Element::one() && self.coeffs[1..].iter().all(Element::is_zero)
    }
}

/// Cauchy product with `*` on coefficients, truncated at the smaller order.
pub fn series_mul(a: &Series, b: &Series) -> Series {
    let order = a.order.min(b.order);
    let coeffs = (0..=order)
        .into_par_iter()
        .map(|n| {
            (0..=n).fold(Element::zero(), |acc, k| &acc + &a.coeffs[k].shuffle(&b.coeffs[n - k]))
        })
        .collect();
    Series::new(coeffs)
}

pub fn gtilde_series(order: usize) -> Series {
    Series::new((0..=order).map(|n| Element::from_word(gtilde_word(n))).collect())
}

pub fn d_series(order: usize, mode: Mode) -> Result<Series> {
    Ok(Series::new(d_elements(order, mode)?))
}

/// One identity evaluated at one index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub index: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Per-identity outcome of [`identity_suite`], in a fixed order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

/// `(identity, passed, total)`.
pub type IdentitySummary = (&'static str, usize, usize);

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn checks_for<'a>(&'a self, identity: &'a str) -> impl Iterator<Item = &'a IdentityCheck> {
        self.checks.iter().filter(move |c| c.identity == identity)
    }

    /// Identities in first-appearance order with pass counts.
    pub fn summary(&self) -> Vec<IdentitySummary> {
        let mut out: Vec<IdentitySummary> = Vec::new();
        for c in &self.checks {
            let slot = match out.iter_mut().find(|s| s.0 == c.identity) {
                Some(s) => s,
                None => {
                    out.push((c.identity, 0, 0));
                    out.last_mut().unwrap()
                }
            };
            slot.2 += 1;
            if c.passed {
                slot.1 += 1;
            }
        }
        out
    }
}

pub mod identity {
    pub const ORACLE_EQUIVALENCE: &str = "oracle equivalence (recursive = closed = one-step)";
    pub const CATALAN_SUPPORT: &str = "D_n supported on Cat_n";
    pub const SQUARE_COEFFICIENTS: &str = "D(w) = E_x(w)^2 = E_y(w)^2, bar-invariant";
    pub const PROFILE_FORMULA: &str = "pointwise D(w) = profile D(w)";
    pub const TELESCOPING: &str = "profile telescoping sum";
    pub const EXPANSION: &str = "commutator expansion of D_n";
    pub const SERIES_LEFT: &str = "G~(t) * D(t) = 1";
    pub const SERIES_RIGHT: &str = "D(t) * G~(t) = 1";
    pub const INVERSE_STEP: &str = "q G~_k * x = (q - q^-1) W_-k + q^-1 x * G~_k";
    pub const X_RECURRENCE: &str = "D_n = ((q^-1 D_(n-1) * x - q x * D_(n-1)) y) / (q - q^-1)";
    pub const Y_RECURRENCE: &str = "D_n = x (q^-1 y * D_(n-1) - q D_(n-1) * y) / (q - q^-1)";
    pub const X_STRIPPED: &str = "x^-1 D_n y^-1 + D_(n-1) = (q^-1 x^-1 D_(n-1) * x - q^3 x * x^-1 D_(n-1)) / (q - q^-1)";
    pub const Y_STRIPPED: &str = "x^-1 D_n y^-1 + D_(n-1) = (q^-1 y * D_(n-1) y^-1 - q^3 D_(n-1) y^-1 * y) / (q - q^-1)";
    pub const D_D_COMMUTE: &str = "D_n * D_m = D_m * D_n";
    pub const D_G_COMMUTE: &str = "D_n * G~_m = G~_m * D_n";
    pub const W_MINUS_COMMUTE: &str = "W_-i * W_-j = W_-j * W_-i";
    pub const W_PLUS_COMMUTE: &str = "W_(i+1) * W_(j+1) = W_(j+1) * W_(i+1)";
    pub const G_COMMUTE: &str = "G_i * G_j = G_j * G_i";
    pub const GTILDE_COMMUTE: &str = "G~_i * G~_j = G~_j * G~_i";
    pub const ZETA_D: &str = "zeta(D_n) = D_n";
    pub const ZETA_GTILDE: &str = "zeta(G~_n) = G~_n";
}

#[derive(Clone, Copy)]
enum Task {
    Oracle(usize),
    Support(usize),
    Squares(usize),
    ProfileFormula(usize),
    Telescoping(usize),
    Expansion(usize),
    SeriesLeft,
    SeriesRight,
    InverseStep(usize),
    XRecurrence(usize),
    YRecurrence(usize),
    XStripped(usize),
    YStripped(usize),
    DDCommute(usize, usize),
    DGCommute(usize, usize),
    WMinusCommute(usize, usize),
    WPlusCommute(usize, usize),
    GCommute(usize, usize),
    GTildeCommute(usize, usize),
    ZetaD(usize),
    ZetaGTilde(usize),
}

impl Task {
    fn label(self) -> (&'static str, String) {
        use identity::*;
        let one = |n: usize| format!("n={n}");
        let two = |a: &str, i: usize, b: &str, j: usize| format!("{a}={i},{b}={j}");
        match self {
            Task::Oracle(n) => (ORACLE_EQUIVALENCE, one(n)),
            Task::Support(n) => (CATALAN_SUPPORT, one(n)),
            Task::Squares(n) => (SQUARE_COEFFICIENTS, one(n)),
            Task::ProfileFormula(n) => (PROFILE_FORMULA, one(n)),
            Task::Telescoping(n) => (TELESCOPING, one(n)),
            Task::Expansion(n) => (EXPANSION, one(n)),
            Task::SeriesLeft => (SERIES_LEFT, "all orders".into()),
            Task::SeriesRight => (SERIES_RIGHT, "all orders".into()),
            Task::InverseStep(k) => (INVERSE_STEP, format!("k={k}")),
            Task::XRecurrence(n) => (X_RECURRENCE, one(n)),
            Task::YRecurrence(n) => (Y_RECURRENCE, one(n)),
            Task::XStripped(n) => (X_STRIPPED, one(n)),
            Task::YStripped(n) => (Y_STRIPPED, one(n)),
            Task::DDCommute(n, m) => (D_D_COMMUTE, two("n", n, "m", m)),
            Task::DGCommute(n, m) => (D_G_COMMUTE, two("n", n, "m", m)),
            Task::WMinusCommute(i, j) => (W_MINUS_COMMUTE, two("i", i, "j", j)),
            Task::WPlusCommute(i, j) => (W_PLUS_COMMUTE, two("i", i, "j", j)),
            Task::GCommute(i, j) => (G_COMMUTE, two("i", i, "j", j)),
            Task::GTildeCommute(i, j) => (GTILDE_COMMUTE, two("i", i, "j", j)),
            Task::ZetaD(n) => (ZETA_D, one(n)),
            Task::ZetaGTilde(n) => (ZETA_GTILDE, one(n)),
        }
    }
}

fn commute(a: Word, b: Word) -> bool {
    let (a, b) = (Element::from_word(a), Element::from_word(b));
    a.shuffle(&b) == b.shuffle(&a)
}

struct Suite {
    // D_n from the defining convolution; every identity below is checked on these
    d: Vec<Element>,
    d_one_step: Vec<Element>,
    n_max: usize,
}

impl Suite {
    fn gtilde(n: usize) -> Element {
        Element::from_word(gtilde_word(n))
    }

    fn run(&self, task: Task) -> Result<bool> {
        let x = Element::letter(Letter::X);
        let y = Element::letter(Letter::Y);
        let denom = q_minus_q_inv();
        let d = &self.d;
        Ok(match task {
            Task::Oracle(n) => d[n] == d_closed(n)? && d[n] == self.d_one_step[n],
            Task::Support(n) => {
                d[n].words().all(|w| w.len() == 2 * n && is_catalan(w))
                    && num_bigint::BigUint::from(d[n].num_terms()) == catalan_number(n)
            }
            Task::Squares(n) => {
                let sign = if n % 2 == 0 { LaurentPoly::one() } else { LaurentPoly::constant(-1) };
                let mut ok = true;
                for w in enumerate_catalan(n) {
                    let ex = e_coeff(&w, EVariant::XForm)?;
                    let ey = e_coeff(&w, EVariant::YForm)?;
                    let coeff = Element::from_word(w).bilinear_form(&d[n]);
                    let square = &ex * &ex;
                    ok &= ex == ey && coeff == &sign * &square && coeff.bar() == coeff;
                }
                ok
            }
            Task::ProfileFormula(n) => {
                let mut ok = true;
                for w in enumerate_catalan(n) {
                    ok &= d_coeff_pointwise(&w)? == d_coeff_profile(&profile(&w))?;
                }
                ok
            }
            Task::Telescoping(n) => {
                let mut ok = true;
                for w in enumerate_catalan(n) {
                    let p = profile(&w);
                    ok &= telescoping_sum(&p)? == d_coeff_profile(&p)?;
                }
                ok
            }
            Task::Expansion(n) => {
                let unsigned = if n % 2 == 0 { d[n].clone() } else { -&d[n] };
                expansion_sum(n)? == unsigned
            }
            Task::SeriesLeft => {
                series_mul(&gtilde_series(self.n_max), &Series::new(d.clone())).is_identity()
            }
            Task::SeriesRight => {
                series_mul(&Series::new(d.clone()), &gtilde_series(self.n_max)).is_identity()
            }
            Task::InverseStep(k) => {
                let g = Self::gtilde(k);
                let lhs = g.shuffle(&x).shift(1);
                let rhs = &Element::from_word(w_minus(k)).scale(&denom) + &x.shuffle(&g).shift(-1);
                lhs == rhs
            }
            Task::XRecurrence(n) => d[n] == one_step(&d[n - 1])?,
            Task::YRecurrence(n) => {
                let inner = &y.shuffle(&d[n - 1]).shift(-1) - &d[n - 1].shuffle(&y).shift(1);
                d[n] == inner.word_concat(Word::letter_word(Letter::X)).divide_exact(&denom)?
            }
            Task::XStripped(n) => {
                let lhs = &d[n].strip_right_y()?.strip_left_x()? + &d[n - 1];
                let inner = d[n - 1].strip_left_x()?;
                let rhs = &inner.shuffle(&x).shift(-1) - &x.shuffle(&inner).shift(3);
                lhs == rhs.divide_exact(&denom)?
            }
            Task::YStripped(n) => {
                let lhs = &d[n].strip_right_y()?.strip_left_x()? + &d[n - 1];
                let inner = d[n - 1].strip_right_y()?;
                let rhs = &y.shuffle(&inner).shift(-1) - &inner.shuffle(&y).shift(3);
                lhs == rhs.divide_exact(&denom)?
            }
            Task::DDCommute(n, m) => d[n].shuffle(&d[m]) == d[m].shuffle(&d[n]),
            Task::DGCommute(n, m) => {
                let g = Self::gtilde(m);
                d[n].shuffle(&g) == g.shuffle(&d[n])
            }
            Task::WMinusCommute(i, j) => commute(w_minus(i), w_minus(j)),
            Task::WPlusCommute(i, j) => commute(w_plus(i), w_plus(j)),
            Task::GCommute(i, j) => commute(g_word(i), g_word(j)),
            Task::GTildeCommute(i, j) => commute(gtilde_word(i), gtilde_word(j)),
            Task::ZetaD(n) => d[n].zeta() == d[n],
            Task::ZetaGTilde(n) => gtilde_word(n).zeta() == gtilde_word(n),
        })
    }
}

fn suite_tasks(n_max: usize) -> Vec<Task> {
    let mut tasks = Vec::new();
    let upto = |lo: usize| lo..=n_max;
    tasks.extend(upto(0).map(Task::Oracle));
    tasks.extend(upto(0).map(Task::Support));
    tasks.extend(upto(0).map(Task::Squares));
    tasks.extend(upto(0).map(Task::ProfileFormula));
    tasks.extend(upto(1).map(Task::Telescoping));
    tasks.extend(upto(1).map(Task::Expansion));
    tasks.push(Task::SeriesLeft);
    tasks.push(Task::SeriesRight);
    tasks.extend(upto(0).map(Task::InverseStep));
    tasks.extend(upto(1).map(Task::XRecurrence));
    tasks.extend(upto(1).map(Task::YRecurrence));
    tasks.extend(upto(2).map(Task::XStripped));
    tasks.extend(upto(2).map(Task::YStripped));
    let pairs = |distinct: bool| -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..=n_max {
            for j in 0..=n_max - i {
                if !distinct || i < j {
                    v.push((i, j));
                }
            }
        }
        v
    };
    tasks.extend(pairs(true).into_iter().map(|(n, m)| Task::DDCommute(n, m)));
    tasks.extend(pairs(false).into_iter().map(|(n, m)| Task::DGCommute(n, m)));
    tasks.extend(pairs(true).into_iter().map(|(i, j)| Task::WMinusCommute(i, j)));
    tasks.extend(pairs(true).into_iter().map(|(i, j)| Task::WPlusCommute(i, j)));
    tasks.extend(pairs(true).into_iter().map(|(i, j)| Task::GCommute(i, j)));
    tasks.extend(pairs(true).into_iter().map(|(i, j)| Task::GTildeCommute(i, j)));
    tasks.extend(upto(0).map(Task::ZetaD));
    tasks.extend(upto(0).map(Task::ZetaGTilde));
    tasks
}

/// Evaluates every identity about `D_n` and the alternating words exactly,
/// for all indices up to `n_max` (pairs `(n, m)` with `n + m <= n_max`).
///
/// Failures, including an inexact division inside an identity, are report
/// entries rather than errors.
pub fn identity_suite(n_max: usize) -> IdentityReport {
    let suite = Suite {
        d: d_recursive_all(n_max),
        d_one_step: d_one_step_all(n_max).unwrap_or_default(),
        n_max,
    };
    let checks = suite_tasks(n_max)
        .into_par_iter()
        .map(|task| {
            let (identity, index) = task.label();
            let (passed, error) = match suite.run(task) {
                Ok(p) => (p, None),
                Err(e) => (false, Some(e.to_string())),
            };
            IdentityCheck {
                identity,
                index,
                passed,
                error,
            }
        })
        .collect();
    IdentityReport { checks }
}

/// Bit lengths and sizes of `D_n`, for reporting growth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthStats {
    pub n: usize,
    pub terms: usize,
    pub max_coeff_bits: u64,
}

pub fn growth_stats(n: usize, d: &Element) -> GrowthStats {
    GrowthStats {
        n,
        terms: d.num_terms(),
        max_coeff_bits: d.max_coeff_bits(),
    }
}

/// `[n]_q^2`, handy when writing expected coefficients.
pub fn q_int_sq(n: u32) -> LaurentPoly {
    let v = q_int(n);
    &v * &v
}
