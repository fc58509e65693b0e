//! Exact algebra of the two-dimensional quantum Poincare group at an odd root
//! of unity `q^p = 1`: the reduced group algebra, its translation extension,
//! the dual quantum algebra, their pairing, invariant integrals, Hermitian
//! forms and the pseudo-unitary representations with their matrix elements.

pub mod error;
pub mod export;
pub mod expr;
pub mod hopf_a;
pub mod hopf_ext;
pub mod hopf_u;
pub mod invariants;
pub mod linalg;
pub mod duality;
pub mod linear;
pub mod report;
pub mod repr;
pub mod scalars;
pub mod suite;

pub use error::{AlgebraError, Result};
