//! Crate-wide error type.
//!
//! Every fallible operation in the library reports one of these variants;
//! there are no panics on user-reachable paths.

use thiserror::Error;

/// Errors raised by construction, arithmetic, and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Quadratic field constructor was given a non-squarefree radicand.
    #[error("radicand {0} is not squarefree")]
    NotSquarefree(i64),
    /// Quadratic field constructor was given 0 or 1, which do not define a
    /// quadratic extension.
    #[error("radicand {0} does not define a quadratic field")]
    DegenerateRadicand(i64),
    /// Two elements of distinct quadratic fields were combined.
    #[error("elements lie in different fields (sqrt({0}) vs sqrt({1}))")]
    FieldMismatch(i64, i64),
    /// Division by the zero element.
    #[error("division by zero")]
    DivisionByZero,
    /// Unit-group enumeration requested for a field with infinitely many
    /// units (real quadratic).
    #[error("unit group of a real quadratic field is infinite")]
    InfiniteUnitGroup,
    /// Operation needs a field for which it is not implemented (e.g. root
    /// extraction or class-group-sensitive data over a real quadratic field).
    #[error("operation unsupported over this field: {0}")]
    UnsupportedField(String),
    /// The zero element was passed where a nonzero one is required.
    #[error("zero element not allowed here")]
    ZeroElement,
    /// A rational prime given to the splitting routine was not prime.
    #[error("{0} is not a rational prime")]
    NotPrime(u64),
    /// An element required to be integral (all coordinates in the ring of
    /// integers) was not.
    #[error("element is not integral")]
    NotIntegral,
    /// Integer factorisation met a prime factor outside the supported range.
    #[error("prime factor exceeds supported range")]
    FactorTooLarge,
    /// A Weierstrass model with vanishing discriminant.
    #[error("model is singular (discriminant = 0)")]
    SingularModel,
    /// Transformation scale factor u = 0.
    #[error("transformation scale u must be nonzero")]
    ZeroScale,
    /// Quadratic twist by d = 0.
    #[error("twist parameter d must be nonzero")]
    ZeroTwist,
    /// Operation requires a short Weierstrass model (a1 = a2 = a3 = 0).
    #[error("model is not in short form")]
    NotShortForm,
    /// A parameter value at which a family specialisation degenerates; the
    /// payload names the vanishing factor.
    #[error("family specialisation is singular: factor {0} vanishes")]
    SingularParameter(String),
    /// Family parameter t = 0 (outside the parameter domain).
    #[error("family parameter t must be nonzero")]
    ZeroParameter,
    /// Family twist parameter d = 0.
    #[error("family twist parameter d must be nonzero")]
    ZeroFamilyTwist,
    /// Unknown isogeny-degree/index combination for a curve family.
    #[error("no curve family with p = {0}, index {1}")]
    BadFamilyKey(u64, u8),
    /// Special pair requested for a (p, j) combination with no rational
    /// p-isogeny at that j.
    #[error("no special pair for p = {0}, j = {1}")]
    BadPair(u64, i64),
    /// Valuation residue mod 12 that no reduction type realises.
    #[error("valuation residue {0} mod 12 does not occur for potentially good reduction")]
    InvalidResidue(i64),
    /// Minimal-discriminant value requested over a field with class number > 1.
    #[error("minimal discriminant value needs class number one")]
    ClassNumberNotOne,
    /// The scaling ideal between a model and its local minima is not
    /// principal, so no single minimal model exists.
    #[error("curve has no global minimal model over its field")]
    NoGlobalMinimalModel,
    /// Root searches in residue fields are exhaustive and refuse huge fields.
    #[error("residue field with {0} elements is too large for exhaustive search")]
    ResidueFieldTooLarge(u64),
    /// Twin criterion invoked for an isogeny degree it does not decide.
    #[error("criterion does not decide degree p = {0}")]
    UnsupportedDegree(u64),
    /// Local data for two curves compared at different primes.
    #[error("local data belong to different primes")]
    IncompatiblePrimes,
    /// Malformed serialised input.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
