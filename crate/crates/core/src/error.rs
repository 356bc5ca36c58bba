use thiserror::Error;

use crate::ring::{ClassVec, MAX_EXPONENT};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a and b must be positive (got a={a}, b={b})")]
    NonPositiveAB { a: i64, b: i64 },

    #[error("generator #{index} is (0,0)")]
    ZeroGenerator { index: usize },

    #[error("generator #{index} has a negative exponent ({p},{q})")]
    NegativeExponent { index: usize, p: i64, q: i64 },

    #[error("exponent {value} exceeds the supported maximum {}", MAX_EXPONENT)]
    ExponentTooLarge { value: i64 },

    #[error("integer overflow while computing {what}")]
    Overflow { what: &'static str },

    #[error("brute-force search needs {required} units of work, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("class {class} is not in the subgroup generated by the ring")]
    ClassNotInSubgroup { class: ClassVec },

    #[error("the subgroup generated by the given classes is trivial")]
    TrivialSubgroup,

    #[error(
        "no ring has Hilbert constant {constant} with stabilization index {stabilization}: \
         the index is 0 when the constant is 0 and at most constant-1 otherwise"
    )]
    UnattainableHilbertData { constant: u64, stabilization: u64 },

    #[error("the second middle generator is (0,0); use the three-generator criterion")]
    ZeroGeneratorPair,

    #[error("d and n must be positive (got d={d}, n={n})")]
    InvalidDN { d: u64, n: u64 },

    #[error("curve exponents must satisfy 0 < l < m < n (got n={n}, l={l}, m={m})")]
    InvalidCurve { n: u64, l: u64, m: u64 },

    #[error("ring has {count} middle generators, the basis algorithm needs exactly 2")]
    NotFourGen { count: usize },

    #[error("basis algorithm did not stop within {limit} iterations")]
    NonTermination { limit: usize },

    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("length bound violated: {length} > {bound}")]
    BoundViolated { length: u64, bound: u64 },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
