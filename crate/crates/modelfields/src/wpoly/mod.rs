//! Weighted multi-index grading and mixed polynomials.
//!
//! A [`WeightSystem`] assigns rational weights `d_j = 1/(2 m_j)` to the
//! variables `z_1..z_n` and weight `1` to `w`.  [`MixedPoly`] is a finitely
//! supported map from monomials in `(w, wb, u, z, zb)` to Gaussian-rational
//! coefficients, in one of two variable contexts: ambient `(w, wb, z, zb)`
//! or boundary `(u, z, zb)` where `u` stands for the real part of `w` on the
//! boundary graph.  On top of that sit the signature decomposition, balanced
//! parts, weight-graded parts, boundary substitution, weighted coordinate
//! changes and exact dilations.

mod grading;
mod monomial;
mod poly;
mod subst;
mod weights;

pub use grading::{
    balanced_part, coefficient_functions, is_homogeneous_of, signature_decompose,
    weight_graded_parts, weighted_homogeneous_weight, SignatureDecomposition,
};
pub use monomial::Monomial;
pub use poly::{Ctx, MixedPoly};
pub use subst::{
    dilate, invert_weighted_substitution, substitute_boundary, weighted_substitution,
};
pub use weights::WeightSystem;
