use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
///
/// `Precondition` carries the name of the violated precondition so that
/// callers (the CLI, the C ABI) can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition `{name}` violated: {detail}")]
    Precondition { name: &'static str, detail: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn pre(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            name,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with `name` unless `cond` holds.
pub(crate) fn ensure(cond: bool, name: &'static str, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::pre(name, detail()))
    }
}
