use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SoftError {
    /// A label or parameter subset does not belong to the context.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument error: {0}")]
    Argument(String),

    /// Two values that must share a context do not.
    #[error("context mismatch: expected `{expected}`, found `{found}`")]
    ContextMismatch { expected: String, found: String },

    #[error("bounds error: {0}")]
    Bounds(String),

    /// A name that does not resolve to a declaration of the needed kind.
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: String, name: String },

    /// A family that is not closed under the required operations.
    #[error("{0}")]
    NotClosed(String),

    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}

pub type Result<T> = std::result::Result<T, SoftError>;
