//! Crate-wide error type.

use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({word}, {meaning}) out of bounds for {words} words x {meanings} meanings")]
    EdgeOutOfBounds {
        word: usize,
        meaning: usize,
        words: usize,
        meanings: usize,
    },
    #[error("duplicate edge ({word}, {meaning})")]
    DuplicateEdge { word: usize, meaning: usize },
    /// Strict mode forbids words without meanings.
    #[error("word {0} has no meanings")]
    ZeroDegreeWord(usize),
    #[error("meaning {0} has no words")]
    UnlinkedMeaning(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not connected")]
    Disconnected,
    #[error("generator gave up after {attempts} attempts: {reason}")]
    InfeasibleGeneration { attempts: u32, reason: &'static str },
    #[error("degree {d} out of range [1, {max}]")]
    DegreeOutOfRange { d: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("distribution is not normalized (sum = {sum})")]
    NotNormalized { sum: f64 },
    #[error("prior places mass {mass} on unlinked meaning {meaning}")]
    PriorOnUnlinkedMeaning { meaning: usize, mass: f64 },
    #[error("fit needs at least two distinct x values, got {0}")]
    DegenerateFit(usize),
    #[error("power-law fit requires strictly positive finite values")]
    NonPositiveData,
    #[error("token total {expected} does not match frequency sum {actual}")]
    CountMismatch { expected: u64, actual: u64 },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("census has no recorded steps")]
    EmptyCensus,
    #[error("census shapes do not match")]
    CensusShapeMismatch,
}

pub type Result<T> = core::result::Result<T, Error>;
