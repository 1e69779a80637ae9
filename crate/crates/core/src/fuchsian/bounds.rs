//! Covolume conditions for completeness of orbit coherent states.

use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hyperbolic::HyperLevelSpec;

use super::signature::{fundamental_area, GroupSignature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The bound fails, so the orbit system cannot be complete.
    NecessarilyIncomplete,
    /// The necessary condition holds; completeness is not decided.
    ConditionMet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub m0: f64,
    pub threshold: f64,
    pub satisfied: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    fn new(m0: f64, threshold: f64, note: Option<String>) -> Self {
        let satisfied = m0 >= threshold;
        let verdict = if satisfied { Verdict::ConditionMet } else { Verdict::NecessarilyIncomplete };
        Self { m0, threshold, satisfied, verdict, note }
    }
}

/// `(B - n) / (2(1 + n))`.
pub fn weight_threshold(spec: HyperLevelSpec) -> f64 {
    (spec.b() - spec.n() as f64) / (2.0 * (1.0 + spec.n() as f64))
}

/// Compares the weight `m0` of a form vanishing at one point against `(B - n)/(2(1 + n))`.
pub fn check_theorem2(spec: HyperLevelSpec, m0: f64) -> Result<BoundReport> {
    if !(m0 > 0.0) || !m0.is_finite() {
        return Err(invalid("m0", format!("must be positive, got {m0}")));
    }
    Ok(BoundReport::new(m0, weight_threshold(spec), None))
}

/// Compares the covolume `S_G` against `4 pi (1 + n)/(B - n)`.
///
/// Reported in weight form: `m0 = 2 pi / S_G` against the same threshold as
/// [`check_theorem2`], which is the same inequality rearranged.
pub fn check_corollary1(spec: HyperLevelSpec, sig: &GroupSignature) -> Result<BoundReport> {
    let area = fundamental_area(sig)?;
    let limit = 4.0 * PI * (1.0 + spec.n() as f64) / (spec.b() - spec.n() as f64);
    let note = format!("S_G = {area} ({:.17}), limit 4*pi*(1+n)/(B-n) = {limit:.17}", area.value());
    let m0 = (Ratio::from_integer(2) / area.coefficient()).to_f64().unwrap_or(f64::NAN);
    Ok(BoundReport::new(m0, weight_threshold(spec), Some(note)))
}

/// Covolume condition for `PSL(2, Z)`: met iff `(B - n)/(1 + n) <= 12`.
///
/// The note also evaluates the reversed form `1/6 >= 2(1+n)/(B-n)`, which
/// disagrees with the covolume condition whenever `(B-n)/(1+n) != 12`.
pub fn check_modular_group(spec: HyperLevelSpec) -> Result<BoundReport> {
    let mut report = check_corollary1(spec, &GroupSignature::modular())?;
    let ratio = 2.0 * (1.0 + spec.n() as f64) / (spec.b() - spec.n() as f64);
    let reversed = 1.0 / 6.0 >= ratio;
    let mut note = format!(
        "{}; (B-n)/(1+n) = {:.17} vs 12; reversed display 1/6 >= 2(1+n)/(B-n) = {ratio:.17} evaluates to {reversed}",
        report.note.take().unwrap_or_default(),
        2.0 / ratio
    );
    if reversed != report.satisfied {
        note.push_str(" and disagrees with the covolume condition");
    }
    report.note = Some(note);
    Ok(report)
}
