use thiserror::Error;

use crate::model::Instance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance has no jobs")]
    EmptyInstance,

    /// Carries the 1-based index of the offending job.
    #[error("job {0} has a non-positive processing time")]
    NonPositiveTime(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("job index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("scheduler {scheduler} cannot run on {machines} machines")]
    SchedulerMachineMismatch { scheduler: String, machines: usize },

    #[error("scheduler {scheduler} needs lookahead >= {required}, got {given}")]
    InsufficientLookahead {
        scheduler: String,
        required: usize,
        given: usize,
    },

    #[error("scheduler chose machine {machine} but only {machines} exist")]
    InvalidDecision { machine: usize, machines: usize },

    #[error("oracle capacity exceeded: {reason}")]
    CapacityExceeded {
        reason: String,
        instance: Option<Instance>,
    },

    #[error("inconsistent result on {instance}: {reason}")]
    Inconsistent { reason: String, instance: Instance },

    #[error("optimal makespan is zero")]
    ZeroOpt,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
