use std::fmt;

/// Group axiom that a multiplication table failed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    Inverses,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverses => "inverses",
            Axiom::Associativity => "associativity",
        })
    }
}

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid group spec {spec:?}: {message}")]
    Spec { spec: String, message: String },
    #[error("table is not a group: {axiom} fails ({detail})")]
    Validation { axiom: Axiom, detail: String },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
