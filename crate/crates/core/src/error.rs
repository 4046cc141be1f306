use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("malformed word `{0}`")]
    MalformedWord(String),

    #[error("invalid tag sequence: {0}")]
    InvalidTagSequence(String),

    #[error("lexicon {0} contains no entries")]
    EmptyLexicon(PathBuf),

    #[error("corpora are misaligned at sentence {sentence}: {reason}")]
    Alignment { sentence: usize, reason: String },

    #[error("node {0} is not in the tree")]
    InvalidNode(usize),

    #[error("model parse error at line {line}: {reason}")]
    ModelParse { line: usize, reason: String },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
