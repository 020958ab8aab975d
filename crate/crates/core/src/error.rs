use thiserror::Error;

/// Errors raised while validating or solving UJP instances.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("success probability {prob}{} is not strictly between 0 and 1", job_suffix(*.id))]
    ProbOutOfRange { id: Option<usize>, prob: f64 },

    #[error("job {id} has negative or non-finite reward {reward}")]
    NegativeReward { id: usize, reward: f64 },

    #[error("duplicate job id {0}")]
    DuplicateId(usize),

    #[error("job id {id} is outside 0..{n}; ids must be contiguous from 0")]
    IdOutOfRange { id: usize, n: usize },

    #[error("an instance needs at least one machine")]
    NoMachines,

    #[error("the instance has no jobs")]
    EmptyInstance,

    #[error("invalid LZF order: {0}")]
    BadOrder(String),

    #[error("schedule does not match instance: {0}")]
    CoverageMismatch(String),

    #[error("job {id} has Z-ratio {z}, expected 1")]
    NotUnitZ { id: usize, z: f64 },

    #[error("{n} jobs exceed the exact-solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("bad configuration: {0}")]
    BadConfig(String),
}

fn job_suffix(id: Option<usize>) -> String {
    id.map(|id| format!(" of job {id}")).unwrap_or_default()
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
