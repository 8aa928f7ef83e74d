//! Exact combinatorial arithmetic for lens spaces and the surface germs
//! whose links they are.
//!
//! The crate mechanizes four interlocking computations:
//!
//! - [`lens`] — canonical names `L(n,q)` for lens spaces, Dehn filling of a
//!   torus curve, and homeomorphism classification via `q' = q` or
//!   `q·q' ≡ 1 (mod n)`.
//! - [`torus_cover`] — curves on the Heegaard torus, the upper-triangular
//!   matrix `[[an, aq], [0, b]]` of a ramified cover of the Hopf link, and
//!   the link computation for the hypersurface `z^n = x·y^(n-q)`.
//! - [`quotient`] — the cyclic quotient `C_{n,q}` of the plane by
//!   `(z1, z2) ↦ (σ^q·z1, σ·z2)`, its invariant-monomial semigroup with
//!   minimal generating set, and exact evaluation of the normalization
//!   morphisms on rational polar points.
//! - [`hj`] — Hirzebruch-Jung (negative-sign) continued fractions and the
//!   linear resolution graph they encode.
//!
//! Everything is integer or rational arithmetic; there are no floats and no
//! tolerances anywhere.

pub mod hj;
pub mod lens;
pub mod quotient;
pub mod torus_cover;

pub use hj::HJChain;
pub use lens::LensSpace;
pub use quotient::{ExactPoint, MonomialExponent, NormalModel, QuotientGerm, SemigroupBasis};
pub use torus_cover::{CoveringData, CoveringMatrix, TorusCurve};

use std::fmt;

/// Errors shared by all modules of the crate.
///
/// Each variant corresponds to one documented rejection path; the CLI maps
/// them to distinct exit codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A pair (n, q) with |n| >= 2 and gcd(n, q) != 1: the curve
    /// `n·l2 - q·m2` is not simple, so no manifold gluing exists.
    NonManifoldInput { n: i64, q: i64 },
    /// A precondition on plain integer inputs failed.
    InvalidInput(String),
    /// No inverse of `q` modulo `n` exists.
    NotInvertible { q: i64, n: i64 },
    /// A torus curve whose coefficients are not coprime cannot be a
    /// meridian image.
    NonPrimitiveCurve { coeff_m2: i64, coeff_l2: i64 },
    /// A matrix that is not of the form `[[an, aq], [0, b]]` for any valid
    /// covering data.
    MalformedMatrix(String),
    /// The requested operation is undefined in the degenerate range n <= 1.
    Degenerate(String),
    /// A covering degree outside the valid range n >= 1.
    InvalidDegree { n: i64 },
    /// The enumeration bound is below the completeness threshold 2n.
    BoundTooSmall { bound: i64, minimum: i64 },
    /// The input names a manifold outside the scope of the operation.
    NotApplicable(String),
    /// The census range exceeds the runtime guard.
    BoundTooLarge { max_n: i64, limit: i64 },
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonManifoldInput { .. } => "NonManifoldInput",
            Error::InvalidInput(_) => "InvalidInput",
            Error::NotInvertible { .. } => "NotInvertible",
            Error::NonPrimitiveCurve { .. } => "NonPrimitiveCurve",
            Error::MalformedMatrix(_) => "MalformedMatrix",
            Error::Degenerate(_) => "Degenerate",
            Error::InvalidDegree { .. } => "InvalidDegree",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::NotApplicable(_) => "NotApplicable",
            Error::BoundTooLarge { .. } => "BoundTooLarge",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonManifoldInput { n, q } => {
                write!(f, "gcd({n}, {q}) != 1: the slope does not define a manifold")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NotInvertible { q, n } => write!(f, "{q} is not invertible modulo {n}"),
            Error::NonPrimitiveCurve { coeff_m2, coeff_l2 } => write!(
                f,
                "curve {coeff_m2}*m2 + {coeff_l2}*l2 is not primitive: gcd != 1"
            ),
            Error::MalformedMatrix(msg) => write!(f, "malformed covering matrix: {msg}"),
            Error::Degenerate(msg) => write!(f, "degenerate case: {msg}"),
            Error::InvalidDegree { n } => write!(f, "invalid covering degree {n}: must be >= 1"),
            Error::BoundTooSmall { bound, minimum } => write!(
                f,
                "enumeration bound {bound} is below the completeness threshold {minimum}"
            ),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
            Error::BoundTooLarge { max_n, limit } => {
                write!(f, "census bound {max_n} exceeds the guard {limit}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Greatest common divisor of two integers, always nonnegative.
/// Computed on unsigned magnitudes so that `i64::MIN` cannot panic.
pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a as i64
}
