use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A flag combination the core rejects; reported like a usage error.
    #[error("{0}")]
    Config(#[source] stokeslab_core::Error),

    #[error(transparent)]
    Core(#[from] stokeslab_core::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("could not encode JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("could not start the worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),

    #[error("{failed} of {total} runs stopped on a solver failure")]
    RunsFailed { failed: usize, total: usize },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Error {
        let path = path.into();
        move |source| Error::Io { path, source }
    }

    /// Process exit status: 2 for bad flags, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
