//! The cyclic quotient surface germ and its invariant monomials.
//!
//! `C_{n,q}` is the quotient of the plane by the order-n cyclic action
//! `(z1, z2) ↦ (σ^q·z1, σ·z2)` over the n-th roots of unity σ. Its algebra
//! of invariant functions is spanned by the monomials `z1^e1·z2^e2` with
//! `n | q·e1 + e2`; this module enumerates the minimal generating set of
//! that exponent semigroup, evaluates the normalization morphism
//! `ν(z1, z2) = (z1^n, z2^n, z1·z2^(n-q))` exactly on rational polar
//! points, and checks the identity `(π ∘ ν ∘ γ)(z1, z2) = (z1^n, z2^n)`
//! at runtime rather than assuming it.
//!
//! All point arithmetic is exact: a coordinate is a positive rational
//! modulus together with a rational phase measured in full turns, so the
//! monomial identities hold with zero tolerance.

use crate::lens::LensSpace;
use crate::torus_cover::{covering_matrix, CoveringData, CoveringMatrix};
use crate::{gcd, Error};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// The cyclic quotient `C_{n,q}`: the plane modulo
/// `(z1, z2) ~ (σ^q·z1, σ·z2)`, `σ^n = 1`. Requires `n >= 2`,
/// `1 <= q < n`, `gcd(n, q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuotientGerm {
    n: i64,
    q: i64,
}

impl QuotientGerm {
    pub fn new(n: i64, q: i64) -> Result<Self, Error> {
        if n < 2 || q < 1 || q >= n {
            return Err(Error::InvalidInput(format!(
                "cyclic quotient requires n >= 2 and 1 <= q < n, got n = {n}, q = {q}"
            )));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NonManifoldInput { n, q });
        }
        Ok(QuotientGerm { n, q })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for QuotientGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.n, self.q)
    }
}

/// Exponent pair of a monomial `z1^e1·z2^e2`. Exponents are nonnegative;
/// invariance under a given group action is a predicate, not part of the
/// type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialExponent {
    pub e1: i64,
    pub e2: i64,
}

impl MonomialExponent {
    pub fn new(e1: i64, e2: i64) -> Self {
        assert!(e1 >= 0 && e2 >= 0, "exponents must be nonnegative");
        MonomialExponent { e1, e2 }
    }

    pub fn is_zero(&self) -> bool {
        self.e1 == 0 && self.e2 == 0
    }
}

impl fmt::Display for MonomialExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z1^{}*z2^{}", self.e1, self.e2)
    }
}

/// The minimal generating set of the invariant-exponent semigroup of a
/// quotient germ, sorted lexicographically by `(e1, e2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupBasis {
    pub germ: QuotientGerm,
    pub generators: Vec<MonomialExponent>,
}

/// One coordinate of a point of `(C \ {0})^2` in exact polar form:
/// a positive rational modulus and a rational phase in `[0, 1)`, measured
/// in full turns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarRational {
    modulus: BigRational,
    phase: BigRational,
}

/// Fractional part, normalizing a phase into `[0, 1)`.
fn frac(x: BigRational) -> BigRational {
    let f = x.floor();
    x - f
}

/// `x^e` for a nonnegative exponent, by powering numerator and denominator.
fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    assert!(e >= 0, "exponent must be nonnegative");
    let e = u32::try_from(e).expect("exponent fits in u32");
    BigRational::new(num::pow(x.numer().clone(), e as usize), num::pow(x.denom().clone(), e as usize))
}

impl PolarRational {
    /// Requires `modulus > 0`; the phase may be any rational and is
    /// reduced modulo 1.
    pub fn new(modulus: BigRational, phase: BigRational) -> Result<Self, Error> {
        if !modulus.is_positive() {
            return Err(Error::InvalidInput(format!(
                "polar modulus must be positive, got {modulus}"
            )));
        }
        Ok(PolarRational { modulus, phase: frac(phase) })
    }

    /// Convenience constructor from integer fractions: modulus
    /// `m_num/m_den`, phase `p_num/p_den` turns.
    pub fn from_ints(m_num: i64, m_den: i64, p_num: i64, p_den: i64) -> Result<Self, Error> {
        if m_den == 0 || p_den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Self::new(
            BigRational::new(BigInt::from(m_num), BigInt::from(m_den)),
            BigRational::new(BigInt::from(p_num), BigInt::from(p_den)),
        )
    }

    pub fn modulus(&self) -> &BigRational {
        &self.modulus
    }

    /// Phase in `[0, 1)`, in units of full turns.
    pub fn phase(&self) -> &BigRational {
        &self.phase
    }

    /// Complex multiplication: moduli multiply, phases add modulo 1.
    pub fn mul(&self, other: &PolarRational) -> PolarRational {
        PolarRational {
            modulus: &self.modulus * &other.modulus,
            phase: frac(&self.phase + &other.phase),
        }
    }

    /// `k`-th power for `k >= 0`: modulus to the `k`, phase times `k`
    /// modulo 1.
    pub fn pow(&self, k: i64) -> PolarRational {
        PolarRational {
            modulus: rat_pow(&self.modulus, k),
            phase: frac(&self.phase * BigRational::from(BigInt::from(k))),
        }
    }

    /// Rotate by a rational number of turns.
    pub fn rotate(&self, turns: &BigRational) -> PolarRational {
        PolarRational {
            modulus: self.modulus.clone(),
            phase: frac(&self.phase + turns),
        }
    }

    /// The multiplicative unit, `1 + 0i`.
    pub fn one() -> PolarRational {
        PolarRational {
            modulus: BigRational::one(),
            phase: BigRational::zero(),
        }
    }
}

impl fmt::Display for PolarRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∠{}", self.modulus, self.phase)
    }
}

/// A point of `(C \ {0})^2` with both coordinates in exact polar form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactPoint {
    pub z1: PolarRational,
    pub z2: PolarRational,
}

impl ExactPoint {
    pub fn new(z1: PolarRational, z2: PolarRational) -> Self {
        ExactPoint { z1, z2 }
    }
}

/// Whether `z1^e1·z2^e2` is invariant under the action of `g`:
/// `n | q·e1 + e2`.
pub fn is_invariant(g: &QuotientGerm, m: &MonomialExponent) -> bool {
    (g.q * m.e1 + m.e2).rem_euclid(g.n) == 0
}

/// The minimal generating set of the semigroup
/// `{(e1, e2) in N^2 : n | q·e1 + e2}`.
///
/// Enumerates invariant exponents of total degree at most `bound` and
/// removes every element that is the sum of two nonzero invariant
/// exponents. Any minimal generator has `e1 <= n` and `e2 <= n` (an
/// exponent with `e1 > n` splits off the invariant `(n, 0)`, and likewise
/// for `e2`), so any `bound >= 2n` yields the complete answer, and the
/// result does not depend on the bound beyond that threshold.
pub fn hilbert_basis(g: &QuotientGerm, bound: i64) -> Result<SemigroupBasis, Error> {
    let minimum = 2 * g.n;
    if bound < minimum {
        return Err(Error::BoundTooSmall { bound, minimum });
    }

    let mut invariant_set: HashSet<(i64, i64)> = HashSet::new();
    let mut invariants: Vec<MonomialExponent> = Vec::new();
    for e1 in 0..=bound {
        for e2 in 0..=(bound - e1) {
            let m = MonomialExponent { e1, e2 };
            if !m.is_zero() && is_invariant(g, &m) {
                invariant_set.insert((e1, e2));
                invariants.push(m);
            }
        }
    }

    // An element m splits as a sum of two nonzero invariants iff some
    // invariant g fits under m componentwise with m - g again invariant;
    // the set never contains (0, 0), so g = m is excluded for free.
    let mut generators: Vec<MonomialExponent> = invariants
        .iter()
        .filter(|m| {
            !invariants.iter().any(|g| {
                g.e1 <= m.e1
                    && g.e2 <= m.e2
                    && invariant_set.contains(&(m.e1 - g.e1, m.e2 - g.e2))
            })
        })
        .copied()
        .collect();
    generators.sort_unstable();
    Ok(SemigroupBasis { germ: *g, generators })
}

/// Exponents of the three components of the normalization morphism
/// `ν(z1, z2) = (z1^n, z2^n, z1·z2^(n-q))`. Each is invariant under the
/// action.
pub fn nu_components(g: &QuotientGerm) -> [MonomialExponent; 3] {
    [
        MonomialExponent { e1: g.n, e2: 0 },
        MonomialExponent { e1: 0, e2: g.n },
        MonomialExponent { e1: 1, e2: g.n - g.q },
    ]
}

/// The `k`-th power of the generator acting on a point: `z1` rotates by
/// `q·k/n` turns, `z2` by `k/n`; moduli are unchanged.
pub fn act(g: &QuotientGerm, k: i64, p: &ExactPoint) -> ExactPoint {
    let n = BigInt::from(g.n);
    let shift1 = BigRational::new(BigInt::from(g.q * k), n.clone());
    let shift2 = BigRational::new(BigInt::from(k), n);
    ExactPoint {
        z1: p.z1.rotate(&shift1),
        z2: p.z2.rotate(&shift2),
    }
}

/// Exact value of `z1^e1·z2^e2` at `p`, as one polar rational:
/// modulus `|z1|^e1·|z2|^e2`, phase `e1·ph1 + e2·ph2` modulo 1.
pub fn eval_monomial(m: &MonomialExponent, p: &ExactPoint) -> PolarRational {
    p.z1.pow(m.e1).mul(&p.z2.pow(m.e2))
}

/// Runnable check of the morphism-chain identity
/// `(π ∘ ν ∘ γ)(z1, z2) = (z1^n, z2^n)`.
///
/// The left side takes the orbit class of `p` (the quotient map γ),
/// evaluates ν through its first two monomial components, and drops the
/// third coordinate (the projection π). The right side powers the
/// coordinates directly. Exact comparison, no tolerance.
pub fn chain_identity_check(g: &QuotientGerm, p: &ExactPoint) -> bool {
    let [c1, c2, _] = nu_components(g);
    let via_chain = (eval_monomial(&c1, p), eval_monomial(&c2, p));
    let direct = (p.z1.pow(g.n), p.z2.pow(g.n));
    via_chain == direct
}

/// Whether every component of ν takes the same value on `p` and on the
/// whole orbit of `p` — ν is constant on orbits, so it descends to the
/// quotient.
pub fn nu_orbit_invariance(g: &QuotientGerm, p: &ExactPoint) -> bool {
    let components = nu_components(g);
    let reference: Vec<PolarRational> =
        components.iter().map(|m| eval_monomial(m, p)).collect();
    (0..g.n).all(|k| {
        let moved = act(g, k, p);
        components
            .iter()
            .zip(&reference)
            .all(|(m, r)| eval_monomial(m, &moved) == *r)
    })
}

/// Orbit sizes of the induced action `k·(i, j) = (i + q·k, j + k)` on the
/// phase classes `(Z/n)^2`, as a map from orbit size to the number of
/// orbits of that size.
///
/// The action on phase data is free (the second coordinate shifts by `k`),
/// so the census reports only orbits of size exactly `n`.
pub fn orbit_size_census(g: &QuotientGerm) -> BTreeMap<i64, i64> {
    let n = g.n;
    let mut seen = vec![false; (n * n) as usize];
    let mut census: BTreeMap<i64, i64> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if seen[(i * n + j) as usize] {
                continue;
            }
            let mut size = 0;
            let (mut ci, mut cj) = (i, j);
            loop {
                seen[(ci * n + cj) as usize] = true;
                size += 1;
                ci = (ci + g.q).rem_euclid(n);
                cj = (cj + 1).rem_euclid(n);
                if (ci, cj) == (i, j) {
                    break;
                }
            }
            *census.entry(size).or_insert(0) += 1;
        }
    }
    census
}

/// The normal model of a germ with the given link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalModel {
    /// Link `S^3`: the germ is smooth and carries no quotient structure.
    Smooth,
    /// Link `L(n,q)` with `n >= 2`: the cyclic quotient `C_{n,q}` together
    /// with the matrix `[[n, q], [0, 1]]` of its canonical degree-n
    /// morphism to the plane, which has degree 1 on both components of the
    /// ramification locus.
    CyclicQuotient {
        germ: QuotientGerm,
        matrix: CoveringMatrix,
    },
}

/// The unique normal model for a normal germ whose link is the given lens
/// space: smooth for `S^3`, the cyclic quotient `C_{n,q}` with morphism
/// matrix `[[n, q], [0, 1]]` for `n >= 2`. `S^1 x S^2` is not the link of
/// any such germ and is rejected.
pub fn normal_model(l: &LensSpace) -> Result<NormalModel, Error> {
    match l.n() {
        0 => Err(Error::NotApplicable(
            "S1xS2 is not the link of a normal surface germ covering the plane".into(),
        )),
        1 => Ok(NormalModel::Smooth),
        n => {
            let germ = QuotientGerm::new(n, l.q())?;
            let data = CoveringData::new(n, l.q(), 1, 1)?;
            Ok(NormalModel::CyclicQuotient {
                germ,
                matrix: covering_matrix(&data),
            })
        }
    }
}

/// Deterministic pseudo-random rational points for the runnable identity
/// checks. Same `(count, seed)` always yields the same points.
pub fn sample_points(count: usize, seed: u64) -> Vec<ExactPoint> {
    let mut rng = Lcg::new(seed);
    (0..count)
        .map(|_| {
            let z1 = PolarRational::from_ints(
                rng.next_in(1, 16),
                rng.next_in(1, 16),
                rng.next_in(0, 24),
                rng.next_in(1, 24),
            )
            .expect("generated coordinates are valid");
            let z2 = PolarRational::from_ints(
                rng.next_in(1, 16),
                rng.next_in(1, 16),
                rng.next_in(0, 24),
                rng.next_in(1, 24),
            )
            .expect("generated coordinates are valid");
            ExactPoint::new(z1, z2)
        })
        .collect()
}

/// Minimal linear-congruential generator; good enough for exercising
/// exact identities, stable across platforms and versions.
struct Lcg {
    state: u64,
}

impl Lcg {
    fn new(seed: u64) -> Self {
        Lcg {
            state: seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0xDEAD_BEEF),
        }
    }

    fn next(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        self.state >> 33
    }

    /// Uniform-ish in `[lo, hi]`.
    fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::normalize_lens;

    fn germ(n: i64, q: i64) -> QuotientGerm {
        QuotientGerm::new(n, q).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent oracle: enumerate invariant exponents up to `bound` and
    /// keep those not expressible as a sum of two nonzero invariants, with
    /// no shared code with the implementation.
    fn brute_generators(n: i64, q: i64, bound: i64) -> Vec<(i64, i64)> {
        let mut inv = Vec::new();
        for e1 in 0..=bound {
            for e2 in 0..=bound {
                if e1 + e2 > bound || (e1 == 0 && e2 == 0) {
                    continue;
                }
                if (q * e1 + e2) % n == 0 {
                    inv.push((e1, e2));
                }
            }
        }
        let mut gens = Vec::new();
        'outer: for &(a1, a2) in &inv {
            for &(b1, b2) in &inv {
                for &(c1, c2) in &inv {
                    if b1 + c1 == a1 && b2 + c2 == a2 {
                        continue 'outer;
                    }
                }
            }
            gens.push((a1, a2));
        }
        gens.sort_unstable();
        gens
    }

    #[test]
    fn germ_validation() {
        assert!(QuotientGerm::new(1, 0).is_err());
        assert!(QuotientGerm::new(3, 0).is_err());
        assert!(QuotientGerm::new(3, 3).is_err());
        assert!(matches!(
            QuotientGerm::new(4, 2),
            Err(Error::NonManifoldInput { .. })
        ));
        assert_eq!(germ(5, 2).n(), 5);
    }

    #[test]
    fn invariance_examples() {
        assert!(is_invariant(&germ(3, 2), &MonomialExponent::new(1, 1)));
        assert!(!is_invariant(&germ(3, 2), &MonomialExponent::new(1, 0)));
        for (n, q) in [(3, 2), (5, 2), (7, 4)] {
            let g = germ(n, q);
            assert!(is_invariant(&g, &MonomialExponent::new(n, 0)));
            assert!(is_invariant(&g, &MonomialExponent::new(0, n)));
        }
    }

    #[test]
    fn hilbert_basis_golden_cases() {
        // Frozen from the brute-force oracle below.
        let cases = [
            (2, 1, vec![(0, 2), (1, 1), (2, 0)]),
            (3, 2, vec![(0, 3), (1, 1), (3, 0)]),
            (4, 1, vec![(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]),
        ];
        for (n, q, expected) in cases {
            assert_eq!(brute_generators(n, q, 4 * n), expected, "oracle drift at ({n},{q})");
            let basis = hilbert_basis(&germ(n, q), 2 * n).unwrap();
            let got: Vec<(i64, i64)> =
                basis.generators.iter().map(|m| (m.e1, m.e2)).collect();
            assert_eq!(got, expected, "basis mismatch at ({n},{q})");
        }
    }

    #[test]
    fn hilbert_basis_matches_oracle_everywhere() {
        for n in 2..=12 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let basis = hilbert_basis(&germ(n, q), 2 * n).unwrap();
                let got: Vec<(i64, i64)> =
                    basis.generators.iter().map(|m| (m.e1, m.e2)).collect();
                assert_eq!(got, brute_generators(n, q, 4 * n), "mismatch at ({n},{q})");
            }
        }
    }

    #[test]
    fn hilbert_basis_bound_guard() {
        assert!(matches!(
            hilbert_basis(&germ(5, 2), 9),
            Err(Error::BoundTooSmall { bound: 9, minimum: 10 })
        ));
        assert!(hilbert_basis(&germ(5, 2), 10).is_ok());
    }

    #[test]
    fn hilbert_basis_stable_under_bound_increase() {
        for n in 2..=12 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let g = germ(n, q);
                assert_eq!(
                    hilbert_basis(&g, 2 * n).unwrap(),
                    hilbert_basis(&g, 4 * n).unwrap()
                );
            }
        }
    }

    #[test]
    fn hilbert_basis_minimality_post_hoc() {
        for n in 2..=12 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let g = germ(n, q);
                let basis = hilbert_basis(&g, 2 * n).unwrap();
                for m in &basis.generators {
                    assert!(is_invariant(&g, m));
                    // no generator splits as a sum of two nonzero invariants
                    for e1 in 0..=m.e1 {
                        for e2 in 0..=m.e2 {
                            let part = MonomialExponent::new(e1, e2);
                            let rest = MonomialExponent::new(m.e1 - e1, m.e2 - e2);
                            if part.is_zero() || rest.is_zero() {
                                continue;
                            }
                            assert!(
                                !(is_invariant(&g, &part) && is_invariant(&g, &rest)),
                                "generator {m} of C({n},{q}) is reducible"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn basis_symmetry_under_slope_inversion() {
        // Transposing exponents carries the basis of C(n,q) to C(n,q')
        // with q·q' ≡ 1 (mod n).
        for n in 2..=12 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let q_inv = crate::lens::mod_inverse(q, n).unwrap();
                let basis = hilbert_basis(&germ(n, q), 2 * n).unwrap();
                let mut transposed: Vec<(i64, i64)> =
                    basis.generators.iter().map(|m| (m.e2, m.e1)).collect();
                transposed.sort_unstable();
                let dual = hilbert_basis(&germ(n, q_inv), 2 * n).unwrap();
                let dual_gens: Vec<(i64, i64)> =
                    dual.generators.iter().map(|m| (m.e1, m.e2)).collect();
                assert_eq!(transposed, dual_gens, "symmetry fails at ({n},{q})");
            }
        }
    }

    #[test]
    fn nu_component_exponents() {
        let got: Vec<(i64, i64)> =
            nu_components(&germ(3, 2)).iter().map(|m| (m.e1, m.e2)).collect();
        assert_eq!(got, [(3, 0), (0, 3), (1, 1)]);

        let got: Vec<(i64, i64)> =
            nu_components(&germ(5, 2)).iter().map(|m| (m.e1, m.e2)).collect();
        assert_eq!(got, [(5, 0), (0, 5), (1, 3)]);

        for n in 2..=10 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let g = germ(n, q);
                for m in nu_components(&g) {
                    assert!(is_invariant(&g, &m));
                }
            }
        }
    }

    #[test]
    fn nu_components_lie_in_the_generated_semigroup() {
        // Bounded search: the reachable sums of generators inside the box
        // [0, t1] x [0, t2] must contain the target.
        fn generated(target: (i64, i64), gens: &[MonomialExponent]) -> bool {
            let mut reach = HashSet::new();
            reach.insert((0i64, 0i64));
            let mut frontier = vec![(0i64, 0i64)];
            while let Some((x, y)) = frontier.pop() {
                for g in gens {
                    let next = (x + g.e1, y + g.e2);
                    if next.0 <= target.0 && next.1 <= target.1 && reach.insert(next) {
                        frontier.push(next);
                    }
                }
            }
            reach.contains(&target)
        }

        for n in 2..=10 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let g = germ(n, q);
                let basis = hilbert_basis(&g, 2 * n).unwrap();
                for m in nu_components(&g) {
                    assert!(
                        generated((m.e1, m.e2), &basis.generators),
                        "{m} not generated for C({n},{q})"
                    );
                }
            }
        }
    }

    #[test]
    fn action_shifts_phases() {
        let g = germ(3, 2);
        let p = ExactPoint::new(
            PolarRational::from_ints(1, 1, 0, 1).unwrap(),
            PolarRational::from_ints(1, 1, 0, 1).unwrap(),
        );
        let moved = act(&g, 1, &p);
        assert_eq!(*moved.z1.phase(), rat(2, 3));
        assert_eq!(*moved.z2.phase(), rat(1, 3));
        // moduli preserved
        assert_eq!(moved.z1.modulus(), p.z1.modulus());
        assert_eq!(moved.z2.modulus(), p.z2.modulus());
    }

    #[test]
    fn action_is_periodic() {
        let g = germ(5, 3);
        for p in sample_points(5, 11) {
            assert_eq!(act(&g, 0, &p), p);
            assert_eq!(act(&g, g.n(), &p), p);
            for k in 0..g.n() {
                assert_eq!(act(&g, k + g.n(), &p), act(&g, k, &p));
            }
        }
    }

    #[test]
    fn eval_monomial_examples() {
        let p = ExactPoint::new(
            PolarRational::from_ints(2, 1, 1, 6).unwrap(),
            PolarRational::from_ints(1, 1, 0, 1).unwrap(),
        );
        let v = eval_monomial(&MonomialExponent::new(3, 0), &p);
        assert_eq!(*v.modulus(), rat(8, 1));
        assert_eq!(*v.phase(), rat(1, 2));

        let v = eval_monomial(&MonomialExponent::new(0, 0), &p);
        assert_eq!(v, PolarRational::one());

        let p = ExactPoint::new(
            PolarRational::from_ints(1, 1, 2, 3).unwrap(),
            PolarRational::from_ints(1, 1, 1, 3).unwrap(),
        );
        let v = eval_monomial(&MonomialExponent::new(1, 1), &p);
        assert_eq!(v, PolarRational::one());
    }

    #[test]
    fn polar_arithmetic() {
        let x = PolarRational::from_ints(3, 2, 5, 6).unwrap();
        let y = PolarRational::from_ints(2, 3, 1, 3).unwrap();
        let prod = x.mul(&y);
        assert_eq!(*prod.modulus(), rat(1, 1));
        assert_eq!(*prod.phase(), rat(1, 6)); // 5/6 + 1/3 = 7/6 ≡ 1/6

        let sq = x.pow(2);
        assert_eq!(*sq.modulus(), rat(9, 4));
        assert_eq!(*sq.phase(), rat(2, 3)); // 5/3 ≡ 2/3

        assert_eq!(x.pow(0), PolarRational::one());
        assert!(PolarRational::from_ints(0, 1, 0, 1).is_err());
        assert!(PolarRational::from_ints(-2, 1, 0, 1).is_err());
    }

    #[test]
    fn phase_normalization() {
        let x = PolarRational::from_ints(1, 1, -1, 4).unwrap();
        assert_eq!(*x.phase(), rat(3, 4));
        let y = PolarRational::from_ints(1, 1, 9, 4).unwrap();
        assert_eq!(*y.phase(), rat(1, 4));
    }

    #[test]
    fn chain_identity_examples() {
        let p = ExactPoint::new(
            PolarRational::from_ints(2, 1, 1, 10).unwrap(),
            PolarRational::from_ints(3, 1, 1, 5).unwrap(),
        );
        assert!(chain_identity_check(&germ(5, 2), &p));

        let unit = ExactPoint::new(
            PolarRational::from_ints(1, 1, 0, 1).unwrap(),
            PolarRational::from_ints(1, 1, 0, 1).unwrap(),
        );
        assert!(chain_identity_check(&germ(2, 1), &unit));

        for p in sample_points(20, 7) {
            assert!(chain_identity_check(&germ(7, 3), &p));
        }
    }

    #[test]
    fn nu_is_constant_on_orbits() {
        for n in 2..=10 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let g = germ(n, q);
                let seed = 23 ^ ((n as u64) << 8) ^ q as u64;
                for p in sample_points(100, seed) {
                    assert!(nu_orbit_invariance(&g, &p), "orbit invariance fails at ({n},{q})");
                }
            }
        }
    }

    #[test]
    fn orbit_census_examples() {
        assert_eq!(orbit_size_census(&germ(2, 1)), BTreeMap::from([(2, 2)]));
        assert_eq!(orbit_size_census(&germ(3, 2)), BTreeMap::from([(3, 3)]));
    }

    #[test]
    fn orbit_census_is_free() {
        for n in 2..=12 {
            for q in 1..n {
                if gcd(n, q) != 1 {
                    continue;
                }
                let census = orbit_size_census(&germ(n, q));
                assert_eq!(census, BTreeMap::from([(n, n)]), "non-free census at ({n},{q})");
            }
        }
    }

    #[test]
    fn normal_model_cases() {
        let model = normal_model(&normalize_lens(5, 2).unwrap()).unwrap();
        match model {
            NormalModel::CyclicQuotient { germ: g, matrix } => {
                assert_eq!((g.n(), g.q()), (5, 2));
                assert_eq!(matrix.entries(), [[5, 2], [0, 1]]);
            }
            NormalModel::Smooth => panic!("expected a quotient model"),
        }

        assert_eq!(normal_model(&LensSpace::s3()).unwrap(), NormalModel::Smooth);
        assert!(matches!(
            normal_model(&LensSpace::s1_x_s2()),
            Err(Error::NotApplicable(_))
        ));

        let model = normal_model(&normalize_lens(3, 2).unwrap()).unwrap();
        match model {
            NormalModel::CyclicQuotient { matrix, .. } => {
                assert_eq!(matrix.entries(), [[3, 2], [0, 1]]);
            }
            NormalModel::Smooth => panic!("expected a quotient model"),
        }
    }

    #[test]
    fn sample_points_are_deterministic() {
        assert_eq!(sample_points(10, 42), sample_points(10, 42));
        assert_ne!(sample_points(10, 42), sample_points(10, 43));
    }
}
