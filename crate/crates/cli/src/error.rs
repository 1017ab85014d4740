use symrank_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
    #[error("{module}: {source}")]
    Core {
        module: &'static str,
        #[source]
        source: CoreError,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Limit(_) => 4,
            CliError::Core { source, .. } => match source {
                CoreError::Parse(_) => 2,
                CoreError::LimitExceeded(_) => 4,
                _ => 3,
            },
        }
    }
}

/// Attach the module name to a core error.
pub trait Context<T> {
    fn ctx(self, module: &'static str) -> Result<T, CliError>;
}

impl<T> Context<T> for Result<T, CoreError> {
    fn ctx(self, module: &'static str) -> Result<T, CliError> {
        self.map_err(|source| CliError::Core { module, source })
    }
}
