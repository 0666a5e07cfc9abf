use sdiag_core::SyntaxError;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("no interpretation for generator {0}")]
    UnassignedGenerator(String),
    #[error("model {model} does not provide {structure}")]
    UnsupportedStructure { model: String, structure: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("no cup and cap on sort {0}")]
    MissingCompactStructure(String),
    #[error("traced word {traced} is not a prefix of both boundaries")]
    TraceBoundary { traced: String },
    #[error("unknown model {0}")]
    UnknownModel(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<(), SemanticsError> {
    if left == right {
        Ok(())
    } else {
        Err(SemanticsError::DimensionMismatch { left, right })
    }
}
