use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("elliptic curve is singular (discriminant 0)")]
    SingularCurve,

    #[error("config {path}: line {line}: {msg}")]
    Config {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("coefficient table too short: need n <= {needed}, table has {have}")]
    TableTooShort { needed: u64, have: u64 },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("{path}: line {line}: {msg}")]
    ZeroParse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("prime cutoff {cutoff} exceeds compute budget {budget}; build and cache the table explicitly")]
    ComputeBudget { cutoff: u64, budget: u64 },

    #[error("missing coefficient source: {0}")]
    MissingCoefficientSource(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("residue extrapolation did not converge (spread {spread:.3e})")]
    NonConvergent { spread: f64 },

    #[error("tail bound {bound:.3e} exceeds tolerance {tol:.3e}; extend the tabulation range")]
    TailBound { bound: f64, tol: f64 },

    #[error("zero list does not cover |gamma| <= {needed}; max available {have}")]
    ZeroCoverage { needed: f64, have: f64 },

    #[error("bad cache file {path}: {msg}")]
    Cache { path: PathBuf, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
