use thiserror::Error;

/// Everything that can go wrong while evaluating series, locating zeros or
/// solving radius equations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid series configuration: {0}")]
    InvalidConfig(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge within {terms_used} terms")]
    Truncation { terms_used: usize },

    #[error("argument r = {r} is too close to a zero of the denominator")]
    NearPole { r: f64 },

    #[error("no sign change on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("root refinement did not reach tolerance within {iterations} iterations")]
    Convergence { iterations: usize },

    #[error("zero scan reached r = {ceiling} after finding {found} of {wanted} zeros")]
    ScanExhausted {
        found: usize,
        wanted: usize,
        ceiling: f64,
    },

    #[error("zero at r = {r} has residual {residual:e} above {tol:e}")]
    ZeroResidual { r: f64, residual: f64, tol: f64 },
}

impl Error {
    /// Stable machine-readable code, used by the CLI and the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "invalid-params",
            Error::InvalidConfig(_) => "invalid-config",
            Error::Domain(_) => "domain",
            Error::Truncation { .. } => "truncation",
            Error::NearPole { .. } => "near-pole",
            Error::Bracket { .. } => "bracket",
            Error::Convergence { .. } => "convergence",
            Error::ScanExhausted { .. } => "scan-exhausted",
            Error::ZeroResidual { .. } => "zero-residual",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
