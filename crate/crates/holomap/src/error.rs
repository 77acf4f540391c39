use std::path::Path;

use holomap_core::Error as CoreError;

/// Malformed input: unreadable files, bad JSON, inconsistent documents.
#[derive(Debug, Clone, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}, at `{path}`: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("{file}: {inner}")]
    InFile { file: String, inner: Box<InputError> },
    #[error("{0}")]
    Argument(String),
}

impl InputError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Field { field: field.into(), message: message.into() }
    }

    pub fn in_file(self, path: &Path) -> Self {
        match self {
            e @ (InputError::Io { .. } | InputError::InFile { .. }) => e,
            e => InputError::InFile { file: path.display().to_string(), inner: Box::new(e) },
        }
    }
}

/// Failure of a command, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(#[from] InputError),
    #[error("{0}")]
    Math(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        if is_input_error(&e) {
            CliError::Input(InputError::Argument(e.to_string()))
        } else {
            CliError::Math(e)
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

/// Errors caused by ill-formed arguments rather than by the mathematics.
pub fn is_input_error(e: &CoreError) -> bool {
    use CoreError::*;
    matches!(
        e,
        DimensionMismatch { .. }
            | DomainMismatch { .. }
            | DenominatorNotNormalized { .. }
            | PointOutsideBall { .. }
            | PointNotOnSphere { .. }
            | NotUnitary { .. }
            | EmptySubspace
            | NotOrthonormal { .. }
            | InvalidArgument(_)
            | NotOneDimensional
            | InvalidGrid(_)
            | NotMonomial
    )
}
