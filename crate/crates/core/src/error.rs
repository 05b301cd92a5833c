use thiserror::Error;

/// Errors raised by algebra, space and module operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MobiError {
    #[error("{value} is not in the carrier of {carrier}")]
    Domain { carrier: String, value: String },

    #[error("singular boundary system (determinant {det:e})")]
    Singular { det: f64 },

    #[error("boundary system has no solution: {0}")]
    Solver(String),

    #[error("antipodal points {0} need a chooser to pick a geodesic")]
    Antipodal(String),

    #[error("space is not affine: {0}")]
    NotAffine(String),

    #[error("algebra {0} has no element 2 with p(0, 1/2, 2) = 1")]
    MissingTwo(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = MobiError> = std::result::Result<T, E>;

pub(crate) fn domain(carrier: &str, value: &impl std::fmt::Debug) -> MobiError {
    MobiError::Domain { carrier: carrier.to_string(), value: format!("{value:?}") }
}
