use std::time::Duration;

/// Errors for constructing ring values and running searches.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus {n} out of range (expected 2..={limit})")]
    ModulusOutOfRange { n: u64, limit: u64 },

    #[error("residue {value} out of range for modulus {n}")]
    ResidueOutOfRange { value: u64, n: u64 },

    #[error("{m} does not divide {n}")]
    NonDivisor { m: u64, n: u64 },

    #[error("empty weight set")]
    EmptyWeightSet,

    #[error("weight set is not a subgroup of the unit group")]
    NotUnitSubgroup,

    #[error("weight set must be the full unit group for this operation")]
    UnitWeightsRequired,

    #[error("subsequence length {len} out of range 1..={max}")]
    LengthOutOfRange { len: usize, max: usize },

    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("divisor {d} does not divide term {term}")]
    TermNotDivisible { d: u64, term: u64 },

    #[error("weight image set is not contained in the projected weight set")]
    WeightImageMismatch,

    #[error("modulus {n} is not of the required shape: {expected}")]
    ModulusShape { n: u64, expected: &'static str },

    #[error("search budget exhausted after {nodes} nodes ({elapsed:?})")]
    BudgetExhausted { nodes: u64, elapsed: Duration },

    #[error(
        "search reached depth cap {cap} with live branches at n={n}; \
         a sequence longer than every known bound may exist (raise the cap to investigate)"
    )]
    DepthCapExceeded { n: u64, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
