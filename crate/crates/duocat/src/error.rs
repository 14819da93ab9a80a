use thiserror::Error;

/// Errors across the verifier. Structural *failures* of the mathematical
/// checks are not errors — they are report entries with witnesses; these
/// variants cover contract violations and malformed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("matrix is not idempotent (defect at basis index {basis_index})")]
    NotIdempotent { basis_index: usize },

    #[error("unknown atom '{0}'")]
    UnknownAtom(String),

    #[error("composition mismatch: {context}")]
    CompositionMismatch { context: String },

    #[error("expressions are not coherence-related: {src} vs {dst}")]
    LeafMismatch { src: String, dst: String },

    #[error("not a group: {law} fails at {witness}")]
    NotAGroup { law: String, witness: String },

    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),

    #[error("constructed morphism is not idempotent ({0}); upstream data is invalid")]
    IdempotentViolation(String),

    #[error("fork equality fails; module data is invalid or inconsistent")]
    ForkViolation,

    #[error("module action does not factor through the module tensor product")]
    NonFactoringAction,

    #[error("unsupported transform")]
    UnsupportedTransform,

    #[error("parse error at {location}")]
    ParseError { location: String },

    #[error("schema error in field '{field}': {message}")]
    SchemaError { field: String, message: String },

    #[error("dimension error in field '{field}': {message}")]
    DimensionError { field: String, message: String },

    #[error("bad scalar literal '{0}'")]
    BadScalar(String),

    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
