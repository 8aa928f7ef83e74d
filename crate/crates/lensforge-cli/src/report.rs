//! Serializable views of library values and the response envelope.
//!
//! Key order is fixed by struct declaration order and every numeric value
//! is integral; rationals are rendered as `"p/q"` strings in lowest terms.
//! Identical requests therefore produce byte-identical JSON.

use lensforge::torus_cover::{CoveringData, LinkTrace, TorusCurve};
use lensforge::LensSpace;
use num::BigRational;
use serde::Serialize;

#[derive(Serialize)]
pub struct Envelope<I: Serialize, R: Serialize> {
    pub command: &'static str,
    pub inputs: I,
    pub result: R,
}

impl<I: Serialize, R: Serialize> Envelope<I, R> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Serialize)]
pub struct LensView {
    pub n: i64,
    pub q: i64,
    pub name: String,
}

pub fn lens_view(l: &LensSpace) -> LensView {
    LensView {
        n: l.n(),
        q: l.q(),
        name: l.to_string(),
    }
}

#[derive(Serialize)]
pub struct CurveView {
    pub coeff_m2: i64,
    pub coeff_l2: i64,
}

pub fn curve_view(c: &TorusCurve) -> CurveView {
    CurveView {
        coeff_m2: c.coeff_m2,
        coeff_l2: c.coeff_l2,
    }
}

#[derive(Serialize)]
pub struct CoveringView {
    pub n: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
}

pub fn covering_view(d: &CoveringData) -> CoveringView {
    CoveringView {
        n: d.n(),
        q: d.q(),
        a: d.a(),
        b: d.b(),
    }
}

#[derive(Serialize)]
pub struct TraceView {
    pub m2_cap_m1: i64,
    pub m1_cap_l2: i64,
    pub alpha: i64,
    pub beta: i64,
    pub reparam: CurveView,
    pub result: LensView,
}

pub fn trace_view(t: &LinkTrace) -> TraceView {
    TraceView {
        m2_cap_m1: t.m2_cap_m1,
        m1_cap_l2: t.m1_cap_l2,
        alpha: t.alpha,
        beta: t.beta,
        reparam: curve_view(&t.reparam),
        result: lens_view(&t.result),
    }
}

/// `"p/q"` in lowest terms, denominator always explicit.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
    pub exit_code: i32,
}

#[derive(Serialize)]
pub struct ErrorEnvelope {
    pub error: ErrorBody,
}
