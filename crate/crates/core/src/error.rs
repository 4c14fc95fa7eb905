use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("non-invertible series")]
    NonInvertibleSeries,
    #[error("non-isolated contribution: zero weight in an Euler class")]
    NonIsolated,
    #[error("degenerate specialization, re-seed")]
    DegenerateSeed,
    #[error("no usable specialization after {0} retries")]
    SeedsExhausted(usize),
    #[error("non-constant localization sum: {0}")]
    NonConstant(String),
    #[error("unknown surface: {0}")]
    UnknownSurface(String),
    #[error("higher cohomology present; use chi_character")]
    HigherCohomology,
    #[error("unsupported twist: {0}")]
    UnsupportedTwist(String),
    #[error("Ext² obstruction present")]
    Ext2Obstruction,
    #[error("negative multiplicity in a genuine character: {0}")]
    NotGenuine(String),
    #[error("general genus not implemented")]
    GeneralGenus,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported: M^s fixed-locus data unavailable")]
    MsUnavailable,
    #[error("inconsistent weight data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
