use thiserror::Error;

use crate::lattice::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("invalid dimension {0}: must be at least 1")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate index {index} out of range 1..={dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },

    #[error("invalid direction {0:?}: entries must lie in {{-1, 0, 1}} and not all be zero")]
    InvalidDirection(Vec<i64>),

    #[error("duplicate point {0}")]
    DuplicatePoint(LatticePoint),

    #[error("window holds {available} lattice points, cannot draw {requested}")]
    WindowTooSmall { available: u128, requested: usize },

    #[error("enumeration exceeded the cap of {cap} sets")]
    EnumerationOverflow { cap: usize },

    #[error("outside exhaustive limits: {0}")]
    OutsideLimits(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
