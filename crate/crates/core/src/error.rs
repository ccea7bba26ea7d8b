use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("path {path} does not address a context hole in {formula}")]
    BadPath { formula: String, path: String },
    #[error("the frame of a bare hole is undefined")]
    HoleFrame,
    #[error("ill-typed composition: source {source_of_left} does not match target {target_of_right}")]
    CompMismatch { source_of_left: String, target_of_right: String },
    #[error("{0}")]
    IllTyped(String),
    #[error("{0} is not {1}-nice")]
    NotNice(String, &'static str),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("rule {rule}: {msg}")]
    Rule { rule: &'static str, msg: String },
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("no match: {0}")]
    NoMatch(String),
    #[error("incomplete substitution: {0} unbound")]
    Unbound(String),
    #[error("occurrence {0} is not superficial")]
    NotSuperficial(String),
    #[error("cut is not topmost")]
    NotTopmost,
    #[error("elimination step {rule} failed: {msg}")]
    Elimination { rule: &'static str, msg: String },
}

impl Error {
    pub fn rule(rule: &'static str, msg: impl Into<String>) -> Error {
        Error::Rule { rule, msg: msg.into() }
    }

    /// True for errors a front end reports as syntax errors.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. })
    }
}
