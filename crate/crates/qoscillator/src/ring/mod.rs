//! Exact arithmetic kernel.
//!
//! The scalar tower is: [`num::BigRational`] coefficients, Laurent
//! polynomials [`PPoly`] in the base variable `p` (with the global
//! convention `q = p^4`), rational functions [`PRational`] in `p`,
//! bivariate Laurent polynomials [`ZLaurent`] in `z` and a formal
//! parameter, and truncated formal power series [`TruncatedSeries`].
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything here is freely shareable across threads.

mod ppoly;
mod prational;
mod series;
mod upoly;
mod zlaurent;

pub use ppoly::PPoly;
pub use prational::PRational;
pub use series::TruncatedSeries;
pub use upoly::UPoly;
pub use zlaurent::ZLaurent;

pub use num::BigRational;
