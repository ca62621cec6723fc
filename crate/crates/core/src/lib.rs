//! Exact local Rankin–Selberg L-factors for Steinberg and Speh-type pairs
//! of `GL_n` over a non-archimedean field, and the unramified zeta
//! integrals that realize them.
//!
//! Scalars live in ℚ(u) with `u = q^{1/2}`; L-factors and integrals are
//! rational functions, respectively truncated power series, in `X = q^{-s}`.

pub mod battery;
pub mod error;
pub mod halfint;
pub mod integral;
pub mod json;
pub mod lfactor;
pub mod ratfunc;
pub mod render;
pub mod scalar;
pub mod segment;
pub mod series;
pub mod upoly;
pub mod whittaker;
pub mod xpoly;

pub use error::{AlgebraError, IntegralError, LFactorError, SegmentError, WhittakerError};
pub use halfint::HalfInt;
pub use ratfunc::RationalFunction;
pub use scalar::BaseScalar;
pub use series::{series_eq, TruncatedSeries};
pub use upoly::{Rational, UPoly};
pub use xpoly::XPoly;
