use thiserror::Error;

use crate::normalize::MethodId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed row at line {line}: key `{key}`: {reason}")]
    MalformedRow { line: usize, key: String, reason: String },

    #[error("duplicate record for paper `{paper_id}` under institution `{institution_id}`")]
    DuplicateRecord { paper_id: String, institution_id: String },

    #[error("field `{0}` has no citations to build a baseline from")]
    EmptyField(String),

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("{method} is undefined for field `{field_id}`: {flag}{}", paper_context(.paper_id))]
    DegenerateBaseline {
        field_id: String,
        method: MethodId,
        flag: crate::baselines::DegenerateFlag,
        paper_id: Option<String>,
    },

    #[error("no baseline for field `{field_id}` (paper `{paper_id}`)")]
    MissingBaseline { field_id: String, paper_id: String },

    #[error("cannot aggregate an institution with no papers")]
    EmptyInstitution,

    #[error("rows for more than one institution: `{expected}` and `{found}`")]
    HeterogeneousRows { expected: String, found: String },

    #[error("row for paper `{paper_id}` has no {method} score")]
    MissingScore { paper_id: String, method: MethodId },

    #[error("constant input in {label}: correlation is undefined")]
    ConstantInput { label: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {needed} observations, got {got}")]
    TooFewObservations { needed: usize, got: usize },

    #[error("correlation coefficient {0} outside [-1, 1]")]
    InvalidCoefficient(f64),

    #[error("rank tables cover different institutions (e.g. `{0}`)")]
    IdSetMismatch(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown method or metric `{0}`")]
    UnknownSelector(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn paper_context(paper_id: &Option<String>) -> String {
    match paper_id {
        Some(id) => format!(" (paper `{id}`)"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn malformed(line: usize, key: &str, reason: impl Into<String>) -> Self {
        Error::MalformedRow { line, key: key.to_string(), reason: reason.into() }
    }

    /// Whether the error was caused by the input data rather than the
    /// caller's configuration or the environment.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedRow { .. }
                | Error::DuplicateRecord { .. }
                | Error::EmptyField(_)
                | Error::EmptyCorpus
                | Error::DegenerateBaseline { .. }
                | Error::MissingBaseline { .. }
                | Error::EmptyInstitution
                | Error::HeterogeneousRows { .. }
                | Error::MissingScore { .. }
                | Error::ConstantInput { .. }
                | Error::TooFewObservations { .. }
                | Error::IdSetMismatch(_)
                | Error::Csv(_)
                | Error::Json(_)
        )
    }

    pub fn is_validation_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidConfig(_)
                | Error::UnknownSelector(_)
                | Error::InvalidCoefficient(_)
                | Error::LengthMismatch { .. }
        )
    }
}
