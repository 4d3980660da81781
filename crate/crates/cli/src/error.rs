use abcd_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Range(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Range(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Overflow { .. }
            | CoreError::OutsideWindow { .. }
            | CoreError::ImaginaryResidue { .. }
            | CoreError::NotLorentz { .. } => CliError::Range(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
