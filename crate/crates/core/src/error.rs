use thiserror::Error;

/// Errors raised anywhere in the scattering pipeline.
///
/// Validation problems (bad parameters, malformed input tables) are kept
/// apart from numerical failures so the command-line frontend can map them
/// onto different exit codes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("singularity not inverse-square: {0}")]
    NotInverseSquare(String),

    #[error("non-finite partial potential at rho = {rho}")]
    NonFinitePotential { rho: f64 },

    #[error("matching instability: {0}")]
    MatchingInstability(String),

    #[error("phase unwrap ambiguity: {0}")]
    UnwrapAmbiguity(String),

    #[error("node count not converged: {0}")]
    NodeCountUnstable(String),

    #[error("bracketing failure: {0}")]
    Bracketing(String),

    #[error("ill-conditioned zero-energy fit: {0}")]
    IllConditionedFit(String),

    #[error("convergence failure: {0}")]
    Convergence(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by bad input rather than by the numerics.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::InvalidParameter(_) | Error::InvalidTable(_) | Error::Io(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
