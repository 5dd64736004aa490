use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("schema: missing required column `{column}`")]
    MissingColumn { column: String },

    #[error("validation: {0}")]
    Validation(String),

    #[error("duplicate id `{0}`")]
    DuplicateId(String),

    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("term `{0}` is not in the vocabulary")]
    UnknownTerm(String),

    #[error("class {0} has no training documents")]
    AbsentClass(String),

    #[error("training data needs at least two classes, found {0}")]
    SingleClass(usize),

    #[error("training diverged at epoch {epoch} (loss = {loss})")]
    Divergence { epoch: usize, loss: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("correlation undefined: zero variance")]
    UndefinedCorrelation,

    #[error("contingency table has a zero marginal")]
    ZeroMarginal,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("model vocabulary digest {model} does not match {vocab}")]
    DigestMismatch { model: String, vocab: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
