//! Numerical laboratory for euclidean Jordan algebras, their symmetric cones
//! and wedge domains, Riesz distribution boundary values, and
//! finite-dimensional modular theory (standard subspaces, KMS, reflection
//! positivity).
//!
//! The crate is organized around four subject areas:
//!
//! * [`jalg`] — Jordan algebra arithmetic and spectral theory for the
//!   classical simple families,
//! * [`wedge`] — boost generators `h_k`, the tube `E + iC⁰`, and the wedge
//!   domains `W(h_k)`,
//! * [`riesz`] — the Riesz distributions `μ̃_s`, their boundary values, and
//!   the support analysis of the imaginary part,
//! * [`modular`] — standard subspaces, modular pairs `(Δ, J)`, and the
//!   discretized one-dimensional representation.
//!
//! All operations are pure functions of immutable inputs; randomized audits
//! take explicit seeds.

pub mod error;
pub mod jalg;
pub mod linalg;
pub mod modular;
pub mod quad;
pub mod rational;
pub mod report;
pub mod riesz;
pub mod suite;
pub mod wedge;

pub use error::{JtError, Result};
