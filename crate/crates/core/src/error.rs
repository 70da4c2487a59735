use thiserror::Error;

/// Failure to read one of the textual formats.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {reason}")]
    Syntax { position: usize, reason: String },
    #[error("arity error: `{symbol}` expects {expected} argument(s), found {found}")]
    Arity { symbol: String, expected: usize, found: usize },
}

impl ParseError {
    pub fn syntax(position: usize, reason: impl Into<String>) -> Self {
        ParseError::Syntax { position, reason: reason.into() }
    }
}

/// Substitution would capture a variable of the substituted term.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("substitution captures variable `{bound_var}`")]
pub struct CaptureError {
    pub bound_var: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MacroError {
    #[error("unknown macro `{0}`")]
    UnknownMacro(String),
    #[error("macro `{0}` is already defined")]
    Duplicate(String),
    #[error("macro `{name}` refers to `{refers_to}`, which is not defined before it")]
    Undefined { name: String, refers_to: String },
    #[error("macro `{name}` expects {expected} argument(s), found {found}")]
    Arity { name: String, expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("not a dwf formula: {0}")]
    NotDwf(String),
    #[error("free variable `{0}` is neither a tuple variable nor a parameter")]
    StrayFreeVariable(String),
    #[error("invalid duality map: {0}")]
    InvalidMap(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("symbol `{0}` has no interpretation in this model")]
    Uninterpreted(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("proof generation exhausted after {attempts} attempt(s)")]
    GenerationExhausted { attempts: usize },
    #[error("depth must be at least 1")]
    BadDepth,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("corpus entry `{file}`: {source}")]
pub struct CorpusParseError {
    pub file: String,
    #[source]
    pub source: ParseError,
}
