use thiserror::Error;

use crate::coloring::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid coloring: {}", format_violations(.0))]
    InvalidColoring(Vec<Violation>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An instance is larger than the configured limit of an exponential routine.
    #[error("{what}: size {actual} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A mathematical guarantee did not hold. Carries the offending instance.
    #[error("defect: {message}\n{instance}")]
    Defect { message: String, instance: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
