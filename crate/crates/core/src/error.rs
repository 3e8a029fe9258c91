use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which hypothesis of a closed-form count failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// The cyclic factor order must be odd.
    OddCyclicFactor,
    /// The cyclic factor order must be prime.
    PrimeCyclicFactor,
    /// The cyclic factor order must not divide `n`.
    CoprimeToN,
    /// `q` must be an odd prime.
    OddPrimeQ,
    /// `p < q` is required.
    PBelowQ,
    /// Exponent `r` must be at least 1.
    PositiveExponent,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Hypothesis::OddCyclicFactor => "p must be odd",
            Hypothesis::PrimeCyclicFactor => "p must be prime",
            Hypothesis::CoprimeToN => "p must not divide n",
            Hypothesis::OddPrimeQ => "q must be an odd prime",
            Hypothesis::PBelowQ => "p must be smaller than q",
            Hypothesis::PositiveExponent => "r must be at least 1",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid group parameters: n={n}, m={m}")]
    InvalidSpec { n: u64, m: u64 },
    #[error("operands belong to different groups")]
    MismatchedSpec,
    #[error("element {what} out of range")]
    OutOfRange { what: &'static str },
    #[error("hypothesis violated for n={n}, p={p}: {violated}")]
    HypothesisViolation {
        n: u64,
        p: u64,
        violated: Hypothesis,
    },
    #[error("group order {order} exceeds the oracle cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("family {family}(i={i}) closed to order {actual}, expected {expected}")]
    FamilyOrderMismatch {
        family: String,
        i: u64,
        expected: u64,
        actual: u64,
    },
    #[error("sweep grid is empty")]
    EmptyGrid,
    #[error("materialization needs {needed} bytes, budget is {budget}")]
    MemoryBudget { needed: u64, budget: u64 },
}

impl Error {
    /// True for errors caused by resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::MemoryBudget { .. })
    }
}
