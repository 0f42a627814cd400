//! Exact computation in the q-shuffle algebra on the letters `x`, `y`.
//!
//! Everything is computed over `Z[q, q^-1]` with arbitrary-precision integer
//! coefficients, so identities are checked by exact equality.
//!
//! * [`qring`]: Laurent polynomials, q-integers and q-factorials.
//! * [`freealg`]: words, elements of the free algebra, the q-shuffle product,
//!   concatenation, the coefficient form and the antiautomorphism `zeta`.
//! * [`catalan`]: Catalan words, elevation sequences and profiles.
//! * [`alternating`]: the alternating words, the inverse series `D(t)` of
//!   `G~(t)`, closed forms for its coefficients and an identity suite.
//!
//! ```
//! use qshuffle::alternating::{d_one_step, Mode, d_element};
//!
//! let d2 = d_one_step(2).unwrap();
//! assert_eq!(d2.to_string(), "xyxy + (q^2 + 2 + q^-2)*xxyy");
//! assert_eq!(d_element(5, Mode::Closed).unwrap(), d_element(5, Mode::Recursive).unwrap());
//! ```

pub mod alternating;
pub mod catalan;
pub mod error;
pub mod freealg;
pub mod qring;

pub use error::{Error, Result};
pub use freealg::{Element, Letter, Word};
pub use qring::LaurentPoly;
