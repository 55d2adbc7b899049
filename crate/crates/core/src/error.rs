use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade index {0} is outside 0..=3")]
    InvalidGrade(usize),

    #[error("vector ({x}, {y}, {z}) is not unit length (norm {norm})")]
    NotUnit { x: f64, y: f64, z: f64, norm: f64 },

    #[error("non-finite coefficient in {0}")]
    NonFinite(&'static str),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("hidden-variable orientation must be +1 or -1, got {0}")]
    InvalidOrientation(i32),

    #[error("probability grid is empty")]
    EmptyGrid,

    #[error("audit tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("scalarizer `{0}` acts jointly on both settings and does not factorize")]
    NonFactorizing(String),

    #[error("scalarizer `{id}` produced {value}, outside [-1, 1]")]
    ScalarizerRange { id: String, value: f64 },

    #[error("invalid audit configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
