//! Finite-dimensional standard-subspace laboratory: modular pairs `(Δ, J)`,
//! standard subspaces and symplectic complements, KMS and reflection
//! positivity checks, twisted multiplier subspaces, reproducing kernels on
//! the upper half plane, and the discretized one-dimensional representation.

mod antilinear;
mod checks;
mod kernel;
mod pair;
mod rep1d;
mod twisted;

pub use antilinear::{
    complexify_vector, realified_i, realify_antilinear, realify_linear, realify_vector, Antilinear,
};
pub use checks::{
    hardy_embed, j_positivity_check, j_positivity_pair, kms_check, modular_flow_invariance,
    os_isometry_check, rigidity_search, herm_spectrum, RigiditySearch,
};
pub use kernel::kernel_gram;
pub use pair::{
    modular_objects, orthonormal_columns, random_modular_pair, standard_from_pair,
    symplectic_complement, ModularPair, StandardSubspace,
};
pub use rep1d::{supp_control_pairing, DiscreteRep1D, SuppControl};
pub use twisted::{sharp_flat_criterion, twisted_subspaces, TwistedTriple};
