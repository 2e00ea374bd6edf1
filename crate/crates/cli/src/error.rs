use std::fmt;

use turan_core::Error;

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad combination of arguments or parameters outside a formula's domain.
    Usage(String),
    /// Malformed graph6, expression or input file.
    Parse(String),
    /// A size cap was hit.
    Limit(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Limit(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Limit(m) => write!(f, "size limit: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Graph6Header(_)
            | Error::Graph6Truncated { .. }
            | Error::Graph6Trailing(_)
            | Error::Graph6InvalidByte { .. }
            | Error::Graph6Padding
            | Error::InvalidExpr(_)
            | Error::InvalidRecord(_) => CliError::Parse(msg),
            Error::SizeOverflow { .. } | Error::SizeLimit { .. } => CliError::Limit(msg),
            Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => CliError::Internal(msg),
            Error::NotApplicable { .. } | Error::InvalidParams(_) | Error::NotBipartite | Error::NoAdmissibleGraph(_) => {
                CliError::Usage(msg)
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}
