//! Error type shared by the fallible entry points of the library.
//!
//! Internal arithmetic (mixing fields, mismatched matrix shapes inside a
//! formula) panics: reaching such a state is a bug in the caller, not a
//! property of the mathematical input. The variants below describe problems
//! with the input itself and are reported, never panicked.

use std::fmt;

/// Input-level failure of a library operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must live over the same field do not.
    FieldMismatch { context: &'static str },
    /// An object has the wrong dimension for the operation.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// A prime-field modulus is not prime.
    NotPrime(u64),
    /// A prime-field modulus is at or above the 2^16 cap.
    ModulusTooLarge(u64),
    /// The operation halves or classifies and the field has characteristic 2.
    CharacteristicTwo,
    /// A nonzero Rota-Baxter weight is required.
    ZeroWeight,
    /// The operation requires a dendriform algebra and the axioms fail.
    NotDendriform { context: &'static str },
    /// The operation requires an associative product and associativity fails.
    NotAssociative { context: &'static str },
    /// The operation requires a valid representation and the identities fail.
    InvalidRepresentation { context: &'static str },
    /// The operation requires a valid Rota-Baxter structure and it fails.
    NotRotaBaxter { context: &'static str },
    /// A two-tensor that must be factorizable is not.
    NotFactorizable { reason: &'static str },
    /// A two-tensor whose skew part must be invariant has a non-invariant
    /// skew part.
    SkewPartNotInvariant { context: &'static str },
    /// A bilinear form that must be invertible is degenerate.
    DegenerateForm { context: &'static str },
    /// A bilinear form that must be a cyclic cocycle is not one.
    NotConnesCocycle { context: &'static str },
    /// The input bundle fails the quadratic Rota-Baxter conditions.
    NotQuadraticRotaBaxter { context: &'static str },
    /// The pair fails the bialgebra conditions where a valid pair is required.
    NotBialgebra { context: &'static str },
    /// An exhaustive search space exceeds the enumeration cap.
    SearchSpaceTooLarge { size: u128, cap: u128 },
    /// A scalar literal could not be parsed in the declared field.
    BadScalar { literal: String, reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch { context } => {
                write!(f, "field mismatch in {context}")
            }
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch in {context}: expected {expected}, found {found}"
            ),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ModulusTooLarge(p) => {
                write!(f, "prime modulus {p} exceeds the 2^16 bound")
            }
            Error::CharacteristicTwo => {
                write!(f, "operation is not defined over fields of characteristic 2")
            }
            Error::ZeroWeight => write!(f, "a nonzero weight is required"),
            Error::NotDendriform { context } => {
                write!(f, "{context}: the dendriform axioms fail")
            }
            Error::NotAssociative { context } => {
                write!(f, "{context}: the product is not associative")
            }
            Error::InvalidRepresentation { context } => {
                write!(f, "{context}: the representation identities fail")
            }
            Error::NotRotaBaxter { context } => {
                write!(f, "{context}: the Rota-Baxter identity fails")
            }
            Error::NotFactorizable { reason } => {
                write!(f, "the two-tensor is not factorizable: {reason}")
            }
            Error::SkewPartNotInvariant { context } => {
                write!(f, "{context}: the skew part of the two-tensor is not invariant")
            }
            Error::DegenerateForm { context } => {
                write!(f, "{context}: the bilinear form is degenerate")
            }
            Error::NotConnesCocycle { context } => {
                write!(f, "{context}: the form is not a cyclic cocycle")
            }
            Error::NotQuadraticRotaBaxter { context } => {
                write!(f, "{context}: the quadratic Rota-Baxter conditions fail")
            }
            Error::NotBialgebra { context } => {
                write!(f, "{context}: the bialgebra conditions fail")
            }
            Error::SearchSpaceTooLarge { size, cap } => {
                write!(f, "search space of {size} candidates exceeds the cap of {cap}")
            }
            Error::BadScalar { literal, reason } => {
                write!(f, "cannot parse scalar '{literal}': {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
