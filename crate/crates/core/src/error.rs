use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    EvenCharacteristic,
    /// `p` does not fit the 32-bit coefficient representation.
    CharacteristicTooLarge(u64),
    ZeroDegree,
    DegreeTooLarge {
        degree: usize,
        max: usize,
    },
    /// `p^n` overflows 64 bits.
    FieldTooLarge,
    ModulusDegree {
        expected: usize,
        got: usize,
    },
    ModulusNotMonic,
    ReducibleModulus,
    NoPrimitiveElement,
    DivisionByZero,
    CapExceeded {
        size: u64,
        cap: u64,
    },
    ZeroCoefficient,
    /// `count_solvable_b` was asked about a map that is a permutation.
    PermutationMap,
    MismatchedCharacteristic {
        left: u32,
        right: u32,
    },
    CoefficientCount {
        expected: usize,
        got: usize,
    },
    CoefficientRange {
        value: u64,
        p: u32,
    },
    Parse(String),
    DegenerateSizes {
        sources: u64,
        messages: u64,
    },
    ZeroExponent,
    EmptyRange,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::EvenCharacteristic => f.write_str("characteristic 2 is not supported"),
            Error::CharacteristicTooLarge(p) => write!(f, "characteristic {p} exceeds 32 bits"),
            Error::ZeroDegree => f.write_str("extension degree must be at least 1"),
            Error::DegreeTooLarge { degree, max } => {
                write!(f, "extension degree {degree} exceeds the supported maximum {max}")
            }
            Error::FieldTooLarge => f.write_str("field order does not fit in 64 bits"),
            Error::ModulusDegree { expected, got } => {
                write!(f, "modulus must have {expected} coefficients, got {got}")
            }
            Error::ModulusNotMonic => f.write_str("modulus must be monic"),
            Error::ReducibleModulus => f.write_str("modulus is reducible"),
            Error::NoPrimitiveElement => f.write_str("no primitive element found"),
            Error::DivisionByZero => f.write_str("inversion of zero"),
            Error::CapExceeded { size, cap } => {
                write!(f, "enumeration of {size} elements exceeds the cap {cap}")
            }
            Error::ZeroCoefficient => f.write_str("coefficient `a` must be nonzero"),
            Error::PermutationMap => f.write_str("the linearized map is a permutation; every b is solvable"),
            Error::MismatchedCharacteristic { left, right } => {
                write!(f, "cyclotomic operands over zeta_{left} and zeta_{right}")
            }
            Error::CoefficientCount { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            Error::CoefficientRange { value, p } => {
                write!(f, "coefficient {value} is not a residue modulo {p}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::DegenerateSizes { sources, messages } => {
                write!(f, "degenerate code sizes |S| = {sources}, |M| = {messages}")
            }
            Error::ZeroExponent => f.write_str("exponent index must be positive"),
            Error::EmptyRange => f.write_str("empty parameter range"),
        }
    }
}

impl core::error::Error for Error {}
