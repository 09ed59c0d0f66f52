pub mod composition_algebras;
pub mod error;
pub mod group_actions;
pub mod invariant_engine;
pub mod linalg;
pub mod matrix;
pub mod pair_catalog;
pub mod radon_spectrum;
pub mod par;
pub mod ring;
pub mod symm_calculus;
pub mod tolerances;
pub mod verify;
