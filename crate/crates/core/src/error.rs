use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at t = 0; no power series expansion")]
    VanishingConstantTerm,
    #[error("series coefficient a_{index} = {value} is not an integer")]
    NonIntegerCoefficient { index: usize, value: String },
    #[error("cyclic order must be at least 2, got {0}")]
    InvalidOrder(u32),
    #[error("exponents must satisfy p, q >= 2, got ({p}, {q})")]
    InvalidParams { p: u32, q: u32 },
    #[error("({p}, {q}) is outside the {expected} parity case")]
    ParityViolation {
        p: u32,
        q: u32,
        expected: &'static str,
    },
    #[error("exponent {0} must be even")]
    OddExponent(u32),
    #[error("exponent list must be nonempty and contain only odd orders >= 3, got {0:?}")]
    InvalidOddList(Vec<u32>),
    #[error("amalgam combination has a zero denominator (1/B + 1/C - 1/D = 0)")]
    DegenerateCombination,
    #[error("polynomial has no positive-degree terms")]
    NoPositiveDegreeTerms,
    #[error("bisection needs g(0) < 0 < g(1); got g(0) = {at_zero}, g(1) = {at_one}")]
    RootNotBracketed { at_zero: f64, at_one: f64 },
    #[error("polynomial of degree {0} has no roots to find")]
    ConstantPolynomial(usize),
    #[error("root iteration did not certify all roots within {iterations} iterations (worst radius {worst_radius:e})")]
    RootsNotCertified {
        iterations: usize,
        worst_radius: f64,
    },
    #[error("central exponent overflowed during enumeration")]
    CentralOverflow,
    #[error("sphere enumeration exceeded the limit of {limit} elements")]
    ResourceLimit { limit: usize },
    #[error("malformed serialized value: {0}")]
    Parse(String),
}
