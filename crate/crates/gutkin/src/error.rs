use serde::Serialize;
use thiserror::Error;

use crate::step::GutkinStep;

/// The check that failed. Every variant other than `Core` errors would
/// contradict a theorem, so reaching one means a bug somewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Stage {
    NotIrreducible,
    NotInvariant,
    NotWellDefined,
    NotBilinear,
    NotLinear,
    NoLineFound,
    NotAnIdeal,
    EmptyExtensionSet,
    MultipleOrbits,
    WrongStabilizer,
    Mackey,
    Induction,
    Degree,
    SearchExhausted,
}

#[derive(Debug, Error)]
pub enum GutkinError {
    #[error(transparent)]
    Core(#[from] nilrep_core::Error),
    #[error("verification failed ({stage:?}): {witness}")]
    VerificationFailed { stage: Stage, witness: String, transcript: Vec<GutkinStep> },
}

impl GutkinError {
    pub fn stage(&self) -> Option<Stage> {
        match self {
            GutkinError::VerificationFailed { stage, .. } => Some(*stage),
            GutkinError::Core(_) => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, GutkinError>;

pub(crate) fn fail<T>(stage: Stage, witness: impl Into<String>) -> Result<T> {
    Err(GutkinError::VerificationFailed { stage, witness: witness.into(), transcript: Vec::new() })
}
