//! Canonical names for lens spaces and their classification.
//!
//! A lens space is glued from two solid tori; the gluing is determined by
//! the homotopy class `m1 = n·l2 - q·m2` of the meridian of the first torus
//! on the boundary of the second. This module normalizes such names,
//! recognizes the degenerate fillings (`S^3` and `S^1 x S^2`), and decides
//! orientation-preserving homeomorphism: `L(n,q) ~ L(n',q')` iff `n = n'`
//! and `q' = q` or `q·q' ≡ 1 (mod n)`.

use crate::torus_cover::TorusCurve;
use crate::{gcd, Error};
use std::fmt;

/// A normalized lens-space name.
///
/// Invariants (enforced by every constructor):
/// - `n = 0` forces `q = 1` (the canonical name for `S^1 x S^2`),
/// - `n = 1` forces `q = 0` (the canonical name for `S^3`),
/// - `n >= 2` forces `1 <= q < n` and `gcd(n, q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    n: i64,
    q: i64,
}

impl LensSpace {
    /// The 3-sphere, `L(1,0)`.
    pub fn s3() -> Self {
        LensSpace { n: 1, q: 0 }
    }

    /// `S^1 x S^2`, canonically named `L(0,1)`.
    pub fn s1_x_s2() -> Self {
        LensSpace { n: 0, q: 1 }
    }

    /// Order of the first homology group (0 encodes the infinite cyclic case).
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Filling slope residue, reduced into `[0, n)` for `n >= 2`.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_s3(&self) -> bool {
        self.n == 1
    }

    pub fn is_s1_x_s2(&self) -> bool {
        self.n == 0
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            0 => write!(f, "S1xS2"),
            1 => write!(f, "S3"),
            _ => write!(f, "L({},{})", self.n, self.q),
        }
    }
}

/// Reduce a raw pair `(n, q)` to the canonical lens-space name.
///
/// `n` is replaced by `|n|` (an orientation convention; callers that care
/// can detect `n < 0` themselves), `q` is reduced modulo `n` into `[0, n)`,
/// and the degenerate values `n = 0` and `n = 1` are forced to their unique
/// canonical names.
///
/// Errors with [`Error::InvalidInput`] on `(0, 0)` and with
/// [`Error::NonManifoldInput`] when `|n| >= 2` and `gcd(n, q) != 1`.
pub fn normalize_lens(n: i64, q: i64) -> Result<LensSpace, Error> {
    if n == 0 && q == 0 {
        return Err(Error::InvalidInput("(n, q) = (0, 0) names no filling".into()));
    }
    let n_abs = n
        .checked_abs()
        .ok_or_else(|| Error::InvalidInput(format!("n = {n} is out of range")))?;
    match n_abs {
        0 => Ok(LensSpace::s1_x_s2()),
        1 => Ok(LensSpace::s3()),
        _ => {
            if gcd(n_abs, q) != 1 {
                return Err(Error::NonManifoldInput { n, q });
            }
            Ok(LensSpace {
                n: n_abs,
                q: q.rem_euclid(n_abs),
            })
        }
    }
}

/// Inverse of `q` modulo `n`, in `[1, n)`, by the extended Euclidean
/// algorithm.
///
/// Requires `n >= 2`; fails with [`Error::NotInvertible`] when
/// `gcd(q, n) != 1`.
pub fn mod_inverse(q: i64, n: i64) -> Result<i64, Error> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "modulus {n} must be >= 2 for inversion"
        )));
    }
    let q_red = q.rem_euclid(n);
    if gcd(q_red, n) != 1 {
        return Err(Error::NotInvertible { q, n });
    }
    // Extended Euclid: maintain r = s*q_red + t*n; only s is needed.
    let (mut r0, mut r1) = (q_red, n);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
    }
    debug_assert_eq!(r0, 1);
    Ok(s0.rem_euclid(n))
}

/// Orientation-preserving homeomorphism of normalized lens spaces:
/// `n = n'` and `q' = q` or `q' = q^{-1} (mod n)`. The degenerate cases
/// compare canonical names directly.
pub fn is_homeomorphic(a: &LensSpace, b: &LensSpace) -> bool {
    if a.n != b.n {
        return false;
    }
    if a.n <= 1 {
        return true;
    }
    a.q == b.q || b.q == mod_inverse(a.q, a.n).expect("normalized q is invertible")
}

/// Dehn filling along a primitive curve `m1 = coeff_l2·l2 + coeff_m2·m2`
/// on the Heegaard torus.
///
/// Writing `m1 = n·l2 - q·m2` gives `n = coeff_l2` and `q = -coeff_m2`;
/// the result is the normalized name of that filling. `coeff_l2 = 0`
/// (so `m1 = ±m2`) yields `S^1 x S^2`; `coeff_l2 = ±1` yields `S^3`.
pub fn dehn_fill(m1: &TorusCurve) -> Result<LensSpace, Error> {
    if gcd(m1.coeff_m2, m1.coeff_l2) != 1 {
        return Err(Error::NonPrimitiveCurve {
            coeff_m2: m1.coeff_m2,
            coeff_l2: m1.coeff_l2,
        });
    }
    normalize_lens(m1.coeff_l2, -m1.coeff_m2)
}
