//! Exact calculus of left-invariant differential operators on step-two groups.

pub mod algebra;
pub mod diffop;
pub mod pipeline;
pub mod poly;

pub use algebra::{
    exact_hilbert, exact_rho_prime, radon_reduce, replace_constant_coeff_defect, restrict_to_quotient, StepTwoAlgebra,
    Symmetrizer,
};
pub use diffop::DiffOp;
pub use poly::{ExactPoly, GaussRat, Monomial};
