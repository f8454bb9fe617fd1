use sublorentz_core::CoreError;
use sublorentz_expr::ExprError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    /// A zero test the kernel could not decide stopped the pipeline.
    #[error("{0}")]
    Indeterminate(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 3,
            CliError::Indeterminate(_) => 2,
        }
    }

    pub fn context(self, what: &str) -> CliError {
        match self {
            CliError::Input(m) => CliError::Input(format!("{what}: {m}")),
            CliError::Indeterminate(m) => CliError::Indeterminate(format!("{what}: {m}")),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        match e {
            CoreError::Indeterminate(_) | CoreError::IndeterminateDomain(_) => {
                CliError::Indeterminate(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> CliError {
        CliError::Input(e.to_string())
    }
}
