use std::process::ExitCode;

use homalg::actions::ActionError;
use homalg::finalg::FinAlgError;
use homalg::uea_sl2::UeaError;
use homalg::{CheckError, CheckReport};

pub const AXIOM_FAILURE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const RANGE_ESCAPE: u8 = 3;

/// Why a command stopped before producing its normal output.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    /// A hypothesis was checked and failed; the report says where.
    Precondition(String, Box<CheckReport>),
    RangeEscape(String),
}

impl Failure {
    pub fn report(self) -> ExitCode {
        match self {
            Self::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(INPUT_ERROR)
            }
            Self::Precondition(msg, report) => {
                println!("{report}");
                for c in &report.counterexamples {
                    println!("    {c}");
                }
                eprintln!("error: {msg}");
                ExitCode::from(AXIOM_FAILURE)
            }
            Self::RangeEscape(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(RANGE_ESCAPE)
            }
        }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::RangeEscape { .. } => Self::RangeEscape(e.to_string()),
            CheckError::Precondition { ref report, .. } => {
                let report = report.clone();
                Self::Precondition(e.to_string(), report)
            }
        }
    }
}

impl From<UeaError> for Failure {
    fn from(e: UeaError) -> Self {
        match e {
            UeaError::NotLieEndomorphism(ref report) => {
                let report = report.clone();
                Self::Precondition(e.to_string(), report)
            }
            other => Self::Input(other.to_string()),
        }
    }
}

impl From<ActionError> for Failure {
    fn from(e: ActionError) -> Self {
        match e {
            ActionError::Check(c) => c.into(),
            ActionError::Uea(u) => u.into(),
            other => Self::Input(other.to_string()),
        }
    }
}

impl From<FinAlgError> for Failure {
    fn from(e: FinAlgError) -> Self {
        match e {
            FinAlgError::Check(c) => c.into(),
            FinAlgError::NotAutomorphism { ref report, .. } => {
                let report = report.clone();
                Self::Precondition(e.to_string(), report)
            }
            other => Self::Input(other.to_string()),
        }
    }
}
