use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graphon: {0}")]
    InvalidGraphon(String),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("graph is not a member of class `{0}`")]
    NotInClass(String),

    #[error("search budget of {budget} nodes exhausted")]
    Exhausted { budget: u64 },

    #[error("class `{0}` has no forbidden family; a family is required here")]
    FamilyRequired(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
