//! Errors and their exit codes: 1 for bad input, 2 for a violated
//! invariant, 3 for an exhausted budget.

use std::fmt;

use hypertoric::arrangement::ArrangementError;
use hypertoric::classify::ClassifyError;
use hypertoric::hypertoric::HypertoricError;
use hypertoric::linalg::LinalgError;
use hypertoric::matroid::MatroidError;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Input,
    Violation,
    Budget,
}

impl Severity {
    pub fn exit_code(self) -> u8 {
        match self {
            Severity::Input => 1,
            Severity::Violation => 2,
            Severity::Budget => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{}: {message}", Location(file, *at))]
    Parse {
        file: String,
        at: Option<(usize, usize)>,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{message}")]
    Usage { message: String },
    #[error("{message}")]
    Core { severity: Severity, message: String },
}

struct Location<'a>(&'a str, Option<(usize, usize)>);

impl fmt::Display for Location<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            Some((line, col)) => write!(f, "{}:{line}:{col}", self.0),
            None => f.write_str(self.0),
        }
    }
}

impl CliError {
    pub fn parse(source: &str, at: Option<(usize, usize)>, message: String) -> Self {
        CliError::Parse {
            file: source.to_owned(),
            at,
            message,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage {
            message: message.into(),
        }
    }

    pub fn violation(message: impl Into<String>) -> Self {
        CliError::Core {
            severity: Severity::Violation,
            message: message.into(),
        }
    }

    pub fn severity(&self) -> Severity {
        match self {
            CliError::Core { severity, .. } => *severity,
            _ => Severity::Input,
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.severity().exit_code()
    }

    /// Prefixes the message with the input it concerns.
    pub fn context(self, what: &str) -> Self {
        match self {
            CliError::Core { severity, message } => CliError::Core {
                severity,
                message: format!("{what}: {message}"),
            },
            e => e,
        }
    }
}

fn core(severity: Severity, e: impl ToString) -> CliError {
    CliError::Core {
        severity,
        message: e.to_string(),
    }
}

fn linalg_severity(e: &LinalgError) -> Severity {
    match e {
        LinalgError::TooLarge { .. } => Severity::Budget,
        _ => Severity::Input,
    }
}

fn matroid_severity(e: &MatroidError) -> Severity {
    match e {
        MatroidError::TooLarge { .. } => Severity::Budget,
        MatroidError::Invalid(_) => Severity::Violation,
        MatroidError::GroundSizeMismatch { .. } => Severity::Input,
    }
}

fn arrangement_severity(e: &ArrangementError) -> Severity {
    match e {
        ArrangementError::BudgetExceeded { .. }
        | ArrangementError::TooManyFlats { .. }
        | ArrangementError::TooManyHyperplanes { .. } => Severity::Budget,
        ArrangementError::NotDivisible { .. } | ArrangementError::Overflow => Severity::Violation,
        ArrangementError::Linalg(e) => linalg_severity(e),
        _ => Severity::Input,
    }
}

fn hypertoric_severity(e: &HypertoricError) -> Severity {
    match e {
        HypertoricError::VerificationFailed(_) => Severity::Violation,
        HypertoricError::BudgetExceeded { .. } => Severity::Budget,
        HypertoricError::Linalg(e) => linalg_severity(e),
        HypertoricError::Matroid(e) => matroid_severity(e),
        HypertoricError::Arrangement(e) => arrangement_severity(e),
        _ => Severity::Input,
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        core(linalg_severity(&e), e)
    }
}

impl From<MatroidError> for CliError {
    fn from(e: MatroidError) -> Self {
        core(matroid_severity(&e), e)
    }
}

impl From<ArrangementError> for CliError {
    fn from(e: ArrangementError) -> Self {
        core(arrangement_severity(&e), e)
    }
}

impl From<HypertoricError> for CliError {
    fn from(e: HypertoricError) -> Self {
        core(hypertoric_severity(&e), e)
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        let severity = match &e {
            ClassifyError::InvalidInput(h) => hypertoric_severity(h),
            ClassifyError::NotDimensionFour { .. } | ClassifyError::NotDimensionSix { .. } => {
                Severity::Input
            }
            ClassifyError::NoCatalogMatch | ClassifyError::CatalogCollision(..) => Severity::Violation,
            ClassifyError::BudgetExceeded { .. } => Severity::Budget,
            ClassifyError::Matroid(m) => matroid_severity(m),
        };
        core(severity, e)
    }
}
