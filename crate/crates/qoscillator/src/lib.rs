//! Exact symbolic computation for the q-oscillator algebra and the
//! q-orthogonal polynomial families attached to it.
//!
//! Everything is computed over an exact scalar tower: big rationals,
//! Laurent polynomials in a base variable `p` with `q = p^4` (so every
//! quarter-integer power of `q` is an integer power of `p`), and rational
//! functions in `p`. On top of that sit Laurent polynomials in `z`
//! (with `x = (z + z^-1)/2`, `z = e^{i theta}`) carrying an optional
//! formal parameter, and truncated formal power series.
//!
//! The crate provides:
//! - [`ring`]: the exact arithmetic kernel ([`ring::PPoly`],
//!   [`ring::PRational`], [`ring::ZLaurent`], [`ring::TruncatedSeries`]).
//! - [`qfunctions`]: q-Pochhammer symbols, Gaussian binomials,
//!   q-exponential families, basic hypergeometric sums, and the
//!   continuous (big) q-Hermite, Wall and q-Laguerre polynomials.
//! - [`oscillator`]: a truncated matrix representation of the algebra,
//!   its difference-operator realization on Laurent polynomials, and
//!   matrix elements of products of q-exponentials of the generators
//!   (closed form and a brute-force truncated oracle).
//! - [`identity`]: drivers that check each identity exactly and emit
//!   machine-readable reports.
//! - [`numeric`]: floating-point evaluation and the classical `q -> 1`
//!   limit checks.
//!
//! ```
//! use qoscillator::qfunctions::continuous_q_hermite;
//! use qoscillator::render::render_zlaurent;
//!
//! let h2 = continuous_q_hermite(2);
//! assert_eq!(render_zlaurent(&h2, "z", "a"), "z^2 + (1+q) + z^-2");
//! ```

pub mod identity;
pub mod numeric;
pub mod oscillator;
pub mod qfunctions;
pub mod render;
pub mod ring;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QError {
    /// No exact Laurent quotient exists.
    #[error("not divisible: no exact Laurent quotient exists")]
    NotDivisible,
    /// Division by the zero element.
    #[error("division by zero")]
    DivisionByZero,
    /// Series arithmetic between series of different truncation orders.
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    /// Reciprocal of a series whose constant coefficient is zero or not a scalar.
    #[error("series constant term is zero or not invertible as a scalar")]
    ZeroConstantTerm,
    /// Real-x substitution requested for an element that is not z <-> 1/z symmetric.
    #[error("element is not z <-> 1/z symmetric; real-x substitution undefined")]
    AsymmetricElement,
    /// A lower hypergeometric parameter produced a vanishing Pochhammer factor.
    #[error("lower parameter pole: (b;q)_k vanishes inside the summation range")]
    LowerParameterPole,
    /// Truncation window too small for the requested matrix element.
    #[error("truncation window too small: need dim > max(m,n) + order and order >= m + n")]
    WindowTooSmall,
    /// Non-finite intermediate value in a numeric limit evaluation.
    #[error("numeric overflow: non-finite intermediate value")]
    NumericOverflow,
}

pub type Result<T> = std::result::Result<T, QError>;
