//! Exact symbolic calculus for weighted-homogeneous model domains.
//!
//! The library works over the Gaussian rationals and mechanizes the
//! bookkeeping that shows up around Siegel-type model domains:
//!
//! - [`exact`]: arbitrary-precision rational and Gaussian-rational scalars,
//!   plus exact dense linear algebra (nullspace, real linearization of
//!   complex-conjugate-linear systems).
//! - [`wpoly`]: weight systems, mixed polynomials in `(w, wb, u, z, zb)`,
//!   signature decomposition, balanced parts, boundary substitution,
//!   weighted coordinate changes and dilations.
//! - [`vfield`]: holomorphic polynomial vector fields, their weight grading,
//!   commutators, the tangency residual against a boundary graph, exact
//!   solvers for the spaces of tangential fields, the canonical dilation /
//!   half-weight / unit-weight fields, and the constructive straightening of
//!   a negative-weight field.
//! - [`models`]: the bounded and unbounded model domains, the rational
//!   transform between them (verified numerically in high precision),
//!   scalings, admissible weight assignment, homogeneous-model extraction,
//!   and zero-set diagnostics.
//! - [`parse`] / [`print`]: a small text DSL for polynomials and fields with
//!   a canonical, round-trip-stable printer.

pub mod error;
pub mod exact;
pub mod models;
pub mod numeric;
pub mod parse;
pub mod print;
pub mod vfield;
pub mod wpoly;

pub use error::Error;
pub use exact::{gq, rat, ComplexLinearForm, ExactMatrix, Gq, Int, Rat};
pub use wpoly::{Ctx, MixedPoly, Monomial, WeightSystem};
