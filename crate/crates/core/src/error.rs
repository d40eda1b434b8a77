use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown matrix label `{0}`")]
    UnknownLabel(String),

    #[error("matrix is not unitary: u·u† ≠ I")]
    NotUnitary,

    #[error("basis rank is {0}, expected 16")]
    RankDeficient(usize),

    #[error("unknown system id `{0}`")]
    UnknownSystem(String),

    #[error("unknown Dirac form `{0}`")]
    UnknownForm(String),

    #[error("cannot compare systems along different axes ({0} vs {1})")]
    AxisMismatch(crate::Axis, crate::Axis),

    #[error("invalid bispinor map: {0}")]
    InvalidMap(String),

    #[error("invalid plane-wave parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed deviation ledger: {0}")]
    Ledger(#[from] serde_json::Error),
}
