//! Ramified covers of the Hopf link, restricted to links.
//!
//! The fixed target is `L^3 = (S x D) ∪ (D x S)`, a 3-sphere split along
//! the torus `S x S`, with the Hopf link `K = (S x {0}) ∪ ({0} x S)` as
//! branching set. A finite cover whose total space is the lens space
//! `L(n,q)` acts on first homotopy of the Heegaard torus by the
//! upper-triangular matrix `[[a·n, a·q], [0, b]]`, where `a` and `b` are
//! the degrees of the cover on the two ramification cores. This module
//! builds such matrices, decomposes them back into `(n, q, a, b)`, decides
//! equivalence of covers, and reproduces the link computation for the
//! hypersurface `z^n = x·y^(n-q)`.

use crate::lens::{dehn_fill, mod_inverse, normalize_lens};
use crate::{gcd, Error, LensSpace};
use std::fmt;

/// An integer curve class `coeff_m2·m2 + coeff_l2·l2` on the Heegaard
/// torus, in the ordered basis `(m2, l2)`.
///
/// The torus is oriented as the boundary of the second solid torus, so
/// `m2 ∩ l2 = +1`. A curve used as a meridian or parallel must be
/// primitive (`gcd = 1`); this is checked where it matters, not stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusCurve {
    pub coeff_m2: i64,
    pub coeff_l2: i64,
}

impl TorusCurve {
    /// The meridian `m2` of the second solid torus.
    pub const M2: TorusCurve = TorusCurve { coeff_m2: 1, coeff_l2: 0 };
    /// The chosen parallel `l2` of the second solid torus.
    pub const L2: TorusCurve = TorusCurve { coeff_m2: 0, coeff_l2: 1 };

    pub fn new(coeff_m2: i64, coeff_l2: i64) -> Self {
        TorusCurve { coeff_m2, coeff_l2 }
    }

    pub fn is_primitive(&self) -> bool {
        gcd(self.coeff_m2, self.coeff_l2) == 1
    }
}

impl fmt::Display for TorusCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*m2 + {}*l2", self.coeff_m2, self.coeff_l2)
    }
}

/// The fixed combinatorial model of the target sphere.
///
/// `L^3 = (S x D) ∪ (D x S)` is the 3-sphere, `K = (S x {0}) ∪ ({0} x S)`
/// the Hopf link inside it, and `Δ = {uv = 0}` the plane curve whose link
/// `K` is. The ordered basis of the first homotopy group of the torus
/// `S x S` is `(e1, e2)`, where `e1` is the class of `{0} x S` and `e2`
/// the class of `S x {0}`; the Hopf components are ordered with the
/// `u`-axis component first. There is nothing to configure, so the type
/// carries no data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HopfModel;

impl HopfModel {
    /// Names of the basis classes of the target torus, in order.
    pub const BASIS: [&'static str; 2] = ["e1 = [{0} x S]", "e2 = [S x {0}]"];
    /// The discriminant curve downstairs.
    pub const DISCRIMINANT: &'static str = "{uv = 0}";
}

/// The decomposition data `(n, q, a, b)` of a cover of the Hopf link:
/// total space `L(n,q)`, degree `a` on the core of the first solid torus,
/// degree `b` on the core of the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoveringData {
    n: i64,
    q: i64,
    a: i64,
    b: i64,
}

impl CoveringData {
    /// Validates `n >= 1`, `0 <= q < n` with `gcd(n, q) = 1` (so `q = 0`
    /// only when `n = 1`), and `a, b >= 1`.
    pub fn new(n: i64, q: i64, a: i64, b: i64) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidInput(format!("covering requires n >= 1, got {n}")));
        }
        if q < 0 || q >= n {
            return Err(Error::InvalidInput(format!(
                "covering requires 0 <= q < n, got q = {q}, n = {n}"
            )));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NonManifoldInput { n, q });
        }
        if a < 1 || b < 1 {
            return Err(Error::InvalidInput(format!(
                "ramification degrees must be >= 1, got a = {a}, b = {b}"
            )));
        }
        Ok(CoveringData { n, q, a, b })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Degree on the core `K1` of the first solid torus.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Degree on the core `K2` of the second solid torus.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// The lens space the cover lives on.
    pub fn lens(&self) -> LensSpace {
        normalize_lens(self.n, self.q).expect("covering data is normalized")
    }
}

/// The matrix of the induced map on first homotopy of the Heegaard torus,
/// rows and columns in the ordered bases `(m2, l2) -> (e1, e2)`.
///
/// Always upper triangular with positive diagonal; a matrix coming from
/// valid [`CoveringData`] has entries `[[a·n, a·q], [0, b]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoveringMatrix {
    entries: [[i64; 2]; 2],
}

impl CoveringMatrix {
    /// Accepts only upper-triangular matrices with positive diagonal and a
    /// nonnegative corner entry. Full validity (that the entries decompose
    /// into covering data) is decided by [`decompose_matrix`].
    pub fn from_entries(entries: [[i64; 2]; 2]) -> Result<Self, Error> {
        if entries[1][0] != 0 {
            return Err(Error::MalformedMatrix(format!(
                "entry (2,1) must be 0, got {}",
                entries[1][0]
            )));
        }
        if entries[0][0] <= 0 || entries[1][1] <= 0 {
            return Err(Error::MalformedMatrix(format!(
                "diagonal must be positive, got {} and {}",
                entries[0][0], entries[1][1]
            )));
        }
        if entries[0][1] < 0 {
            return Err(Error::MalformedMatrix(format!(
                "entry (1,2) must be nonnegative, got {}",
                entries[0][1]
            )));
        }
        Ok(CoveringMatrix { entries })
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.entries
    }

    /// 1-indexed entry access matching the usual matrix notation.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row - 1][col - 1]
    }

    pub fn det(&self) -> i64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }
}

impl fmt::Display for CoveringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// Signed intersection number of two curve classes on the Heegaard torus:
/// the determinant pairing in the basis `(m2, l2)`, normalized so that
/// `m2 ∩ l2 = +1`.
pub fn intersection(c1: &TorusCurve, c2: &TorusCurve) -> i64 {
    c1.coeff_m2 * c2.coeff_l2 - c1.coeff_l2 * c2.coeff_m2
}

/// The matrix `[[a·n, a·q], [0, b]]` of the cover with data `d`.
pub fn covering_matrix(d: &CoveringData) -> CoveringMatrix {
    CoveringMatrix {
        entries: [[d.a * d.n, d.a * d.q], [0, d.b]],
    }
}

/// Recover `(n, q, a, b)` from a covering matrix: `a` is the gcd of the
/// first row, `b` the bottom-right entry.
///
/// A zero corner entry forces the `q = 0` reading, which only exists over
/// `n = 1`; the first-row gcd is then the whole entry (1,1).
pub fn decompose_matrix(m: &CoveringMatrix) -> Result<CoveringData, Error> {
    let e11 = m.entry(1, 1);
    let e12 = m.entry(1, 2);
    let b = m.entry(2, 2);
    let (n, q, a) = if e12 == 0 {
        (1, 0, e11)
    } else {
        let a = gcd(e11, e12);
        (e11 / a, e12 / a, a)
    };
    if q >= n {
        return Err(Error::MalformedMatrix(format!(
            "first row {e11}, {e12} yields q = {q} >= n = {n}"
        )));
    }
    if gcd(n, q) != 1 {
        return Err(Error::MalformedMatrix(format!(
            "recovered slope ({n}, {q}) is not coprime"
        )));
    }
    CoveringData::new(n, q, a, b)
}

/// Generic degree of the cover: `a·b·n`, the number of sheets away from
/// the branching set. Equals the determinant of the covering matrix.
pub fn generic_degree(d: &CoveringData) -> i64 {
    d.a * d.b * d.n
}

/// The covering data obtained by choosing the other ordering of the two
/// coordinates downstairs: `(n, q', b, a)` with `q·q' ≡ 1 (mod n)`.
/// Involutive. Undefined for `n <= 1`, where no second slope exists.
pub fn swap_coordinates(d: &CoveringData) -> Result<CoveringData, Error> {
    if d.n <= 1 {
        return Err(Error::Degenerate(format!(
            "coordinate swap needs n >= 2; for n = {} the swapped data is just ({}, {}, {}, {})",
            d.n, d.n, d.q, d.b, d.a
        )));
    }
    let q_inv = mod_inverse(d.q, d.n)?;
    CoveringData::new(d.n, q_inv, d.b, d.a)
}

/// Like [`swap_coordinates`] but total: in the degenerate range the slope
/// is unchanged and only the degrees trade places.
fn swapped(d: &CoveringData) -> CoveringData {
    if d.n <= 1 {
        CoveringData { n: d.n, q: d.q, a: d.b, b: d.a }
    } else {
        swap_coordinates(d).expect("valid data with n >= 2 swaps")
    }
}

/// Whether two covers are equivalent up to a homeomorphism of total
/// spaces commuting with the projections: equal data, or equal after
/// reordering the coordinates downstairs.
pub fn covering_equivalent(d1: &CoveringData, d2: &CoveringData) -> bool {
    d1 == d2 || *d1 == swapped(d2)
}

/// Step-by-step record of the link computation for `z^n = x·y^(n-q)`.
///
/// `m1` is solved from the two intersection numbers as
/// `alpha·l2 + beta·m2`, then the parallel is changed to
/// `l2' = l2 + m2` (`reparam`) so that `m1 = n·l2' - q·m2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkTrace {
    pub m2_cap_m1: i64,
    pub m1_cap_l2: i64,
    pub alpha: i64,
    pub beta: i64,
    pub reparam: TorusCurve,
    pub result: LensSpace,
}

/// Result of [`link_of_x`]: the link, the covering data of the projection
/// to the `(x, y)`-plane, and the auditable trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkComputation {
    pub lens: LensSpace,
    pub covering: CoveringData,
    /// The meridian image `m1` in the original basis `(m2, l2)`.
    pub m1: TorusCurve,
    pub trace: LinkTrace,
}

/// Link of the hypersurface germ `z^n = x·y^(n-q)` at the origin, for
/// coprime `0 < q < n`.
///
/// The projection to `(x, y)` restricts to a cover of the Hopf link with
/// `m2 ∩ m1 = n` and `m1 ∩ l2 = n - q`; solving `m1 = alpha·l2 + beta·m2`
/// against these pairings and rebasing to the parallel `l2' = l2 + m2`
/// exhibits `m1 = n·l2' - q·m2`, so the link is `L(n,q)` and the cover has
/// degree 1 on both ramification cores.
pub fn link_of_x(n: i64, q: i64) -> Result<LinkComputation, Error> {
    if n < 1 || q <= 0 || q >= n {
        return Err(Error::InvalidInput(format!(
            "hypersurface requires 0 < q < n, got n = {n}, q = {q}"
        )));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NonManifoldInput { n, q });
    }

    // The covering geometry pins the two pairings: the meridian discs over
    // generic points of the two axes meet in the n roots of z^n = a*b^(n-q),
    // giving m2 ∩ m1 = n, and the section {z = c} gives m1 ∩ l2 = n - q.
    let m2_cap_m1 = n;
    let m1_cap_l2 = n - q;

    // Solve m1 = alpha·l2 + beta·m2 against the pairings: pairing with m2
    // isolates alpha, pairing with l2 isolates beta.
    let alpha = m2_cap_m1;
    let beta = m1_cap_l2;
    let m1 = TorusCurve::new(beta, alpha);

    // Cross-check the solved class against the intersection form itself.
    assert_eq!(intersection(&TorusCurve::M2, &m1), m2_cap_m1);
    assert_eq!(intersection(&m1, &TorusCurve::L2), m1_cap_l2);

    // Rebase to l2' = l2 + m2: m1 = alpha·l2' + (beta - alpha)·m2.
    let reparam = TorusCurve::new(1, 1);
    let rebased = TorusCurve::new(beta - alpha, alpha);
    let lens = dehn_fill(&rebased)?;
    debug_assert_eq!(lens, normalize_lens(n, q).expect("coprimality already checked"));

    let covering = CoveringData::new(n, q, 1, 1)?;
    Ok(LinkComputation {
        lens,
        covering,
        m1,
        trace: LinkTrace {
            m2_cap_m1,
            m1_cap_l2,
            alpha,
            beta,
            reparam,
            result: lens,
        },
    })
}

/// Whether the hypersurface `z^n = x·y^(n-q)` is normal, i.e. has an
/// isolated singular point: exactly when `q = n - 1`.
pub fn is_normal_x(n: i64, q: i64) -> Result<bool, Error> {
    if n < 1 || q <= 0 || q >= n {
        return Err(Error::InvalidInput(format!(
            "hypersurface requires 0 < q < n, got n = {n}, q = {q}"
        )));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NonManifoldInput { n, q });
    }
    Ok(q == n - 1)
}

/// Covering data of the normal form of a degree-n cover branched over a
/// smooth curve: the map `(x, y) -> (x, y^n)` over the link `S^3`, with
/// one sheet over the branch axis. Encoded as `CoveringData(1, 0, 1, n)`.
pub fn smooth_discriminant_model(n: i64) -> Result<CoveringData, Error> {
    if n < 1 {
        return Err(Error::InvalidDegree { n });
    }
    CoveringData::new(1, 0, 1, n)
}
