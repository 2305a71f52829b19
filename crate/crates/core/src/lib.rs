pub mod algebra;
pub mod error;
pub mod group;
pub mod harmonic;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod suite;
pub mod symmetry;
pub mod weyl;

pub use algebra::{
    AlgebraElement, AlgebraSpec, Family, GradedContactAlgebra, Side, VerificationReport,
};
pub use error::{Error, Result};
pub use group::{GroupElement, ProjectiveGroupElement, QuotientVector};
pub use symmetry::SymmetryCandidate;
