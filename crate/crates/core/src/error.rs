use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared across the crate. Exact arithmetic never fails silently:
/// anything that would require guessing (bad digit, empty string, blown
/// search budget) comes back as a distinct variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base {0} is out of range (want 2..=65536)")]
    InvalidBase(u32),

    #[error("digit {digit} at position {position} is not a base-{base} digit")]
    DigitOutOfRange {
        position: usize,
        digit: u32,
        base: u32,
    },

    #[error("an empty digit string has no numeric value")]
    EmptyDigits,

    #[error("digit strings disagree on base: {0} vs {1}")]
    BaseMismatch(u32, u32),

    #[error("width {width} is below the {needed} digits of the value")]
    WidthTooSmall { width: usize, needed: usize },

    #[error("{0} is undefined for n = 0")]
    ZeroInput(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exceeded: {required} candidates, budget {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("factorization gave up: cofactor {remaining} exceeds cap {cap}")]
    FactorCapExceeded { remaining: BigUint, cap: u64 },

    #[error("pattern error: {0}")]
    Pattern(#[from] crate::pattern::PatternError),
}

impl Error {
    /// True for the two "ran out of budget, not out of mathematics" variants.
    pub fn is_bound_exceeded(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::FactorCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
