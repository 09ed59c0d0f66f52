//! Numeric thresholds used across the crate and the acceptance suite.

/// Relative singular-value cutoff for every numeric rank decision.
pub const RANK_REL_TOL: f64 = 1e-8;

/// Singular values in this relative band make a rank decision ambiguous.
pub const RANK_AMBIGUITY_BAND: (f64, f64) = (1e-11, 1e-6);

/// Group-level invariance residual gate.
pub const GROUP_INVARIANCE: f64 = 1e-8;

/// Infinitesimal invariance residual gate.
pub const INFINITESIMAL_INVARIANCE: f64 = 1e-6;

/// Bracket equivariance certificate from the least-squares center solve.
pub const EQUIVARIANCE: f64 = 1e-9;

/// Skewness of generators.
pub const SKEW: f64 = 1e-12;

/// Orthogonality of sampled group elements.
pub const ORTHOGONALITY: f64 = 1e-10;

/// H-type identity |J_z v| = |z||v|.
pub const H_TYPE: f64 = 1e-10;

/// Bi-degree scaling check, relative.
pub const BIDEGREE: f64 = 1e-9;

/// Restriction of ρ to 𝔫′ against ρ′.
pub const RESTRICTION: f64 = 1e-9;

/// Invariance of a central subspace under a_z.
pub const SUBSPACE_INVARIANCE: f64 = 1e-10;

/// Quadrature identities on Gaussian test functions.
pub const QUADRATURE: f64 = 1e-6;

/// Pf² = det, relative.
pub const PFAFFIAN: f64 = 1e-8;

/// Minimal fraction of random points with full Jacobian rank.
pub const JACOBIAN_PASS_RATE: f64 = 0.95;
