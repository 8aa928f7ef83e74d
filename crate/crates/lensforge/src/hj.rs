//! Hirzebruch-Jung continued fractions and resolution chains.
//!
//! `n/q` expands uniquely as the descending continued fraction
//! `a1 - 1/(a2 - 1/(... - 1/ak))` with every coefficient at least 2.
//! The coefficients label a linear chain of rational curves with
//! self-intersections `-ai` — the resolution graph of the cyclic quotient
//! singularity named by `(n, q)`. Reversing the chain evaluates to `n/q'`
//! with `q·q' ≡ 1 (mod n)`, tying the resolution combinatorics back to the
//! lens-space classification.

use crate::lens::mod_inverse;
use crate::{gcd, Error};
use num::{BigInt, BigRational, One, Signed};
use std::fmt;

/// A descending continued-fraction expansion of `n/q`.
///
/// Invariants: `n >= 2`, `1 <= q < n` with `gcd(n, q) = 1`, every
/// coefficient `>= 2`, and the chain back-evaluates to exactly `n/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HJChain {
    pub n: i64,
    pub q: i64,
    pub coefficients: Vec<i64>,
}

impl fmt::Display for HJChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} = [", self.n, self.q)?;
        for (i, a) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Expand `n/q` as a descending continued fraction with all coefficients
/// `>= 2`, by the negative-remainder Euclidean recursion
/// `a = ceil(n/q)`, then continue with `q / (a·q - n)`.
pub fn hj_expand(n: i64, q: i64) -> Result<HJChain, Error> {
    if n < 2 || q < 1 || q >= n {
        return Err(Error::InvalidInput(format!(
            "expansion requires n >= 2 and 1 <= q < n, got n = {n}, q = {q}"
        )));
    }
    if gcd(n, q) != 1 {
        return Err(Error::InvalidInput(format!(
            "expansion requires gcd(n, q) = 1, got gcd({n}, {q}) = {}",
            gcd(n, q)
        )));
    }

    let mut coefficients = Vec::new();
    let (mut num, mut den) = (n, q);
    while den > 0 {
        let a = num.div_euclid(den) + i64::from(num.rem_euclid(den) != 0); // ceil
        coefficients.push(a);
        assert!(a >= 2, "coefficient {a} below 2 while expanding {n}/{q}");
        assert!(
            coefficients.len() as i64 <= n,
            "expansion of {n}/{q} exceeded the termination bound"
        );
        let r = a * den - num;
        assert!(r < den, "remainder failed to decrease while expanding {n}/{q}");
        (num, den) = (den, r);
    }
    Ok(HJChain { n, q, coefficients })
}

/// Exact rational value of the descending continued fraction
/// `a1 - 1/(a2 - 1/(...))`, folded from the tail.
///
/// Requires a nonempty list with every entry `>= 2`; under that
/// precondition every partial tail value exceeds 1, so no division by
/// zero can occur (asserted).
pub fn hj_evaluate(coefficients: &[i64]) -> Result<BigRational, Error> {
    if coefficients.is_empty() {
        return Err(Error::InvalidInput("empty coefficient list".into()));
    }
    if let Some(&bad) = coefficients.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidInput(format!(
            "coefficient {bad} is below 2"
        )));
    }
    let mut value = BigRational::from(BigInt::from(*coefficients.last().unwrap()));
    for &a in coefficients.iter().rev().skip(1) {
        assert!(value > BigRational::one(), "tail value dropped to {value}");
        value = BigRational::from(BigInt::from(a)) - value.recip();
    }
    Ok(value)
}

/// The chain with reversed coefficients: it expands `n/q'` where
/// `q·q' ≡ 1 (mod n)`. Both facts are recomputed and checked here rather
/// than trusted.
pub fn hj_reverse_dual(chain: &HJChain) -> HJChain {
    let reversed: Vec<i64> = chain.coefficients.iter().rev().copied().collect();
    let value = hj_evaluate(&reversed).expect("reversed chain has valid coefficients");
    let n = value.numer().clone();
    let q_dual = value.denom().clone();
    assert!(n.is_positive() && q_dual.is_positive());
    let n = i64::try_from(&n).expect("chain arithmetic stays in range");
    let q_dual = i64::try_from(&q_dual).expect("chain arithmetic stays in range");
    assert_eq!(n, chain.n, "reversed chain changed the numerator");
    assert_eq!(
        q_dual,
        mod_inverse(chain.q, chain.n).expect("chain slope is invertible"),
        "reversed chain value is not the inverse slope"
    );
    HJChain {
        n,
        q: q_dual,
        coefficients: reversed,
    }
}

/// A linear chain of rational curves: vertex `i` carries self-intersection
/// `-coefficients[i]`, consecutive vertices are joined by one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionGraph {
    /// Self-intersection numbers, in chain order (all `<= -2`).
    pub self_intersections: Vec<i64>,
    /// Edges as index pairs `(i, i+1)`.
    pub edges: Vec<(usize, usize)>,
}

impl ResolutionGraph {
    /// DOT rendering with vertex order fixed left-to-right by chain order;
    /// byte-stable for golden-file comparison.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {");
        for (i, s) in self.self_intersections.iter().enumerate() {
            out.push_str(&format!(" v{i} [label=\"{s}\"];"));
        }
        for (i, j) in &self.edges {
            out.push_str(&format!(" v{i} -- v{j};"));
        }
        out.push_str(" }");
        out
    }
}

/// The resolution graph encoded by a chain: one vertex per coefficient,
/// labelled `-ai`, joined consecutively.
pub fn resolution_graph(chain: &HJChain) -> ResolutionGraph {
    let self_intersections: Vec<i64> = chain.coefficients.iter().map(|a| -a).collect();
    let edges: Vec<(usize, usize)> =
        (1..chain.coefficients.len()).map(|i| (i - 1, i)).collect();
    ResolutionGraph {
        self_intersections,
        edges,
    }
}
