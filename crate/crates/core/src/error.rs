use thiserror::Error;

/// Errors raised by graph construction and the analyses built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at vertex `{0}`")]
    LoopEdge(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{what}: size {actual} exceeds the configured cap of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("inadmissible automorphism: {0}")]
    InadmissibleSpec(String),
    #[error("the graph is connected")]
    NotDisconnected,
    #[error("the graph is complete, so the group is abelian")]
    Abelian,
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("character has {actual} values but the graph has {expected} partial conjugations")]
    UnknownConjugation { expected: usize, actual: usize },
    #[error("no fibration witness applies to this graph")]
    NoWitnessApplicable,
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
