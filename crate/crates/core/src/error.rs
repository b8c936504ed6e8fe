use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("graph is not {k}-colorable, no colorings exist")]
    NotColorable { k: usize },

    #[error("graph is not planar")]
    NotPlanar,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("computation exceeded its deadline")]
    Timeout,

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<crate::deadline::Timeout> for Error {
    fn from(_: crate::deadline::Timeout) -> Self {
        Error::Timeout
    }
}
