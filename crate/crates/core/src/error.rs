use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {0} out of range 1..={1}")]
    GeneratorOutOfRange(usize, usize),
    #[error("vertex index {0} out of range 0..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("invalid path {0}")]
    InvalidPath(String),
    #[error("map is not a chain map: {0}")]
    NotChainMap(String),
    #[error("complexes have different specs")]
    SpecMismatch,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("unclassifiable {0}-string: {1}")]
    UnclassifiableString(usize, String),
    #[error("cannot parse braid word {input:?}: {reason}")]
    BadBraidWord { input: String, reason: String },
}
