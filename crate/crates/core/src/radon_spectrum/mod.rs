//! Radon reduction on Gaussian test functions, the spectral map Θ, the index
//! sets E_n and the constructive Hadamard split.

pub mod combinatorics;
pub mod gaussian;
pub mod hadamard;
pub mod quadrature;
pub mod theta;
pub mod transform;

pub use combinatorics::{e_n_set, ENIndex};
pub use gaussian::{CPoly, GaussianPoly};
pub use hadamard::{bump, hadamard_split, DualFn, HadamardSplit, SmoothFunction};
pub use quadrature::QuadSpec;
pub use theta::{line_d, theta_injectivity, theta_inverse, theta_map, theta_weights, InjectivityReport, Line8Variant, OmegaRegion};
pub use transform::{check_radon_commutation, CommutationResidual, radon_commutation_residual, radon_transform, FnSampled, RadonTransform, SampledFunction};
