use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// The contents of an input file are malformed.
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        #[source]
        source: scramble_lab::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] scramble_lab::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for unreadable or malformed input and bad parameters, 1 for
    /// everything that fails after the inputs were accepted.
    pub fn exit_code(&self) -> u8 {
        use scramble_lab::Error as E;
        match self {
            CliError::Io { .. } | CliError::Input { .. } | CliError::Json { .. } | CliError::Usage(_) => 2,
            CliError::Core(E::Parse { .. } | E::BadParams(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let io = CliError::Io { path: "x".into(), source: std::io::Error::other("gone") };
        assert_eq!(io.exit_code(), 2);
        assert_eq!(CliError::Usage("bad".into()).exit_code(), 2);
        assert_eq!(CliError::Core(scramble_lab::Error::BadParams("k".into())).exit_code(), 2);
        assert_eq!(CliError::Core(scramble_lab::Error::Parse { line: 1, msg: "x".into() }).exit_code(), 2);
        assert_eq!(CliError::Core(scramble_lab::Error::PreconditionViolated("c".into())).exit_code(), 1);
    }
}
