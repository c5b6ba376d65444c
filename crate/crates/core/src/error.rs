//! Error type shared by all library modules.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

/// Errors reported by the polynomial ring, the character transforms and the
/// class formulas.
///
/// Validation failures carry enough context to produce one-line diagnostics
/// naming the failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different rings (variable count, weights or domain).
    RingMismatch,
    /// An operation was asked to cross coefficient domains in an unsupported
    /// direction (for example a GF(2) polynomial into an integer ring).
    DomainMismatch(&'static str),
    /// A huge exponent was requested without a truncation cap; the full
    /// expansion would be infeasible.
    MissingCap,
    /// `substitute` was given the wrong number of images.
    ImageCount { expected: usize, got: usize },
    /// An exponent left the machine-integer range and no cap was set to
    /// discard the offending term.
    ExponentOverflow,
    /// Input to the symmetric reduction is not invariant under all variable
    /// permutations.
    NotSymmetric,
    /// Index out of range for the requested table or factor.
    IndexOutOfRange { what: &'static str },
    /// A graded component above the truncation cap was requested; the stored
    /// polynomial is not reliable there.
    CapExceeded { degree: u64, cap: u64 },
    /// A character vector has the wrong length for its rank.
    CharacterLength { expected: usize, got: usize },
    /// A character vector violates the involution bound |chi(g_i)| <= deg.
    CharacterBound { index: usize },
    /// Some multiplicity m_k is not an integer: the vector is not the
    /// character of a genuine restriction.
    NonIntegralMultiplicity { k: usize },
    /// Some multiplicity m_k is negative: not a true representation.
    NegativeMultiplicity { k: usize },
    /// m_k is not divisible by 4, so the input cannot be an orthogonal
    /// character of Sp(2n,q).
    DivisibilityViolation { k: usize, value: BigInt, rank: usize },
    /// chi(g_i) != chi(g_{n-i}): Gow symmetry fails at index i.
    GowSymmetryViolation { index: usize },
    /// m_k of the symplectic input is odd, so the /2 exponent is not integral.
    OddMultiplicity { k: usize },
    /// q is not an odd prime power >= 3, or the rank is zero.
    InvalidGroupParameter { q: u64 },
    /// An operation specific to Sp(4,q) was applied at a different rank.
    RankNotTwo { n: usize },
    /// The rank is too small for the requested formula.
    RankTooSmall { needed: usize, got: usize },
    /// A derived quantity failed an exact-divisibility check.
    NotDivisible { what: &'static str, by: u32, value: BigInt },
    /// A derived exponent came out negative.
    NegativeExponent { what: &'static str, value: BigInt },
    /// A class-vector slot holds a polynomial that is not homogeneous of the
    /// degree implied by its position.
    ComponentDegree { slot: usize },
    /// The class vectors disagree on the cohomological degree of their roots.
    DegreeUnitMismatch { left: u64, right: u64 },
    /// The tensor expansion would need more variables than the configured
    /// limit allows.
    TensorTooLarge { vars: usize, limit: usize },
    /// Free-form parse failure (used by front ends).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "polynomial ring mismatch"),
            Error::DomainMismatch(msg) => write!(f, "coefficient domain mismatch: {msg}"),
            Error::MissingCap => write!(
                f,
                "exponent exceeds the small-power threshold and no truncation cap is set"
            ),
            Error::ImageCount { expected, got } => {
                write!(f, "substitution needs {expected} images, got {got}")
            }
            Error::ExponentOverflow => write!(f, "monomial exponent overflow without a cap"),
            Error::NotSymmetric => {
                write!(f, "polynomial is not symmetric under variable permutations")
            }
            Error::IndexOutOfRange { what } => write!(f, "{what}: index out of range"),
            Error::CapExceeded { degree, cap } => {
                write!(f, "degree {degree} lies above the truncation cap {cap}")
            }
            Error::CharacterLength { expected, got } => {
                write!(f, "character vector needs {expected} entries, got {got}")
            }
            Error::CharacterBound { index } => {
                write!(f, "character value at g_{index} exceeds the degree in absolute value")
            }
            Error::NonIntegralMultiplicity { k } => {
                write!(f, "m_{k} is not an integer: not a character of a restriction")
            }
            Error::NegativeMultiplicity { k } => {
                write!(f, "m_{k} is negative: not a true representation")
            }
            Error::DivisibilityViolation { k, value, rank } => write!(
                f,
                "m_{k} = {value} not divisible by 4: input is not an orthogonal character of Sp({},q)",
                2 * rank
            ),
            Error::GowSymmetryViolation { index } => write!(
                f,
                "chi(g_{index}) != chi(g_(n-{index})): character is not Gow-symmetric"
            ),
            Error::OddMultiplicity { k } => {
                write!(f, "m_{k} is odd: symplectic input must have even multiplicities")
            }
            Error::InvalidGroupParameter { q } => {
                write!(f, "q = {q} is not an odd prime power >= 3")
            }
            Error::RankNotTwo { n } => write!(f, "operation requires rank n = 2, got n = {n}"),
            Error::RankTooSmall { needed, got } => {
                write!(f, "operation requires rank n >= {needed}, got n = {got}")
            }
            Error::NotDivisible { what, by, value } => {
                write!(f, "{what} = {value} not divisible by {by}: invalid input")
            }
            Error::NegativeExponent { what, value } => {
                write!(f, "{what} = {value} is negative: invalid input")
            }
            Error::ComponentDegree { slot } => write!(
                f,
                "class component w_{slot} is not homogeneous of the degree implied by its slot"
            ),
            Error::DegreeUnitMismatch { left, right } => {
                write!(f, "class vectors use different degree units ({left} vs {right})")
            }
            Error::TensorTooLarge { vars, limit } => write!(
                f,
                "tensor expansion needs {vars} variables, above the limit of {limit}"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
