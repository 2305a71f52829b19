use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not in p+ or g-: {0}")]
    NotNilpotentPart(String),
    #[error("group element does not preserve the filtration")]
    NotInParabolic,
    #[error("no solution found: {0}")]
    NotFound(String),
    #[error("candidate is not a symmetry at the origin")]
    NotASymmetry,
    #[error("operation not supported for family {0}")]
    UnsupportedFamily(String),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("matrix is not in the algebra: {0}")]
    NotInAlgebra(String),
    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
