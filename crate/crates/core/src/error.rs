use core::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing at position {position}")]
    NotWeaklyDecreasing { position: usize },
    #[error("N = {n} is smaller than the height {height}")]
    NTooSmall { n: usize, height: usize },
    #[error("mu-vector is not strictly decreasing at position {position}")]
    NotStrictlyDecreasing { position: usize },
    #[error("mu-vector yields a negative part at position {position}")]
    NegativePart { position: usize },
    #[error("row {row} is out of range 1..={height}")]
    RowOutOfRange { row: usize, height: usize },
    #[error("box ({row},{offset}) is not a valid up-peeling start")]
    InvalidStartBox { row: usize, offset: u32 },
    #[error("invalid strip spec: {0}")]
    InvalidStripSpec(StripViolation),
    #[error("shift {dir} of corner {index} is undefined")]
    ShiftUndefined { index: usize, dir: &'static str },
    #[error("corner index {index} is out of range 1..={count}")]
    CornerOutOfRange { index: usize, count: usize },
    #[error("corner list does not describe a Young diagram")]
    MalformedCorners,
    #[error("operation needs a non-empty partition")]
    EmptyPartition,
    #[error("evaluation point has no coordinates")]
    EmptyPoint,
    #[error("evaluation point has repeated coordinates")]
    RepeatedCoordinates,
    #[error("partition height {height} exceeds the {vars} variables")]
    HeightExceedsVariables { height: usize, vars: usize },
    #[error("determinant size {size} is below the required {min}")]
    SizeTooSmall { size: usize, min: usize },
    #[error("tableau enumeration too large (weight {weight}, {vars} variables)")]
    TooLarge { weight: u32, vars: usize },
    #[error("{vars} variables cannot hold a partition of height {height}")]
    VariableCountTooSmall { vars: usize, height: usize },
    #[error("verification needs at least one trial")]
    NoTrials,
    #[error("matrices have mismatched sizes")]
    SizeMismatch,
    #[error("invalid exchange data: {0}")]
    InvalidExchangeData(&'static str),
    #[error("partition height {height} is below the required {min}")]
    HeightTooSmall { height: usize, min: usize },
    #[error("parameters out of range: {0}")]
    InvalidRange(&'static str),
    #[error("term has zero coefficient")]
    ZeroCoefficient,
    #[error("identity is not homogeneous: degree {found} where {expected} was expected")]
    NotHomogeneous { expected: u32, found: u32 },
}

/// The first strip-spec inequality a list of specs violates. Indices are
/// 1-based positions in the spec list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StripViolation {
    NoStrips,
    EndRowTooSmall { index: usize, r: usize },
    EndRowsNotIncreasing { index: usize },
    EndRowBeyondHeight { index: usize, r: usize, height: usize },
    NoStepAbove { index: usize, r: usize },
    TailOutOfRange { index: usize, t: u32, max: u32 },
    RowsOutOfRange { index: usize, m: usize, max: usize },
}

impl fmt::Display for StripViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StripViolation::NoStrips => write!(f, "at least one strip is required"),
            StripViolation::EndRowTooSmall { index, r } => {
                write!(f, "r_{index} = {r} violates r_{index} ≥ 2")
            }
            StripViolation::EndRowsNotIncreasing { index } => {
                write!(f, "violates r_{index} < r_{}", index + 1)
            }
            StripViolation::EndRowBeyondHeight { index, r, height } => {
                write!(f, "r_{index} = {r} violates r_{index} ≤ ℓ(λ) = {height}")
            }
            StripViolation::NoStepAbove { index, r } => write!(
                f,
                "r_{index} = {r} violates λ_{{r_{index}}} < λ_{{r_{index}-1}}"
            ),
            StripViolation::TailOutOfRange { index, t, max } => write!(
                f,
                "t_{index} = {t} violates 1 ≤ t_{index} ≤ λ_{{r_{index}-1}} - λ_{{r_{index}}} = {max}"
            ),
            StripViolation::RowsOutOfRange { index, m, max } => {
                write!(f, "m_{index} = {m} violates 1 ≤ m_{index} ≤ {max}")
            }
        }
    }
}
