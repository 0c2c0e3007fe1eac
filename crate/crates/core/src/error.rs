use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field out of range: {0}")]
    FieldOutOfRange(String),
    #[error("invalid characteristic: {0}")]
    InvalidCharacteristic(u64),
    #[error("incoherent tower: base degree {base} does not divide {degree}")]
    IncoherentTower { base: u32, degree: u32 },
    #[error("no canonical embedding from degree {from} into degree {to}")]
    NoEmbedding { from: u32, to: u32 },
    #[error("cannot factor zero")]
    FactorZero,
    #[error("identically zero")]
    IdenticallyZero,
    #[error("not quadratic")]
    NotQuadratic,
    #[error("no square root possible: odd degree {0}")]
    OddDegree(usize),
    #[error("determinant undefined for {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("at most eight points")]
    TooManyPoints,
    #[error("points must be distinct")]
    DuplicatePoints,
    #[error("more than 8 geometric points")]
    SpecOverflow,
    #[error("table corrupt at ({group}, {index}): {reason}")]
    TableCorrupt { group: String, index: usize, reason: String },
    #[error("eigenvalue data inconsistent")]
    EigenvalueInconsistent,
    #[error("no matching class")]
    NoMatchingClass,
    #[error("not a del Pezzo surface")]
    NotDelPezzo,
    #[error("extension out of range: {0}")]
    ExtensionOutOfRange(String),
    #[error("no rational-curve lower bound for this type: {0}")]
    NoLowerBound(usize),
    #[error("no such family: {0}")]
    NoSuchFamily(String),
    #[error("checkpoint mismatch: {0}")]
    Checkpoint(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
