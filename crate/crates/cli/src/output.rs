//! JSON report shapes. Field order is fixed by the struct definitions, so
//! identical runs serialize byte-identically (the timestamp is dropped under
//! `--deterministic`).

use lcdeg::lll::ConditionKind;
use lcdeg::locmindeg::Method;
use lcdeg::reduction::{Label, PreconditionReport, ReductionMethod};
use serde::Serialize;

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp_unix: Option<u64>,
    #[serde(flatten)]
    pub body: &'a T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Agree,
    Disagree,
    Truncated,
}

#[derive(Serialize)]
pub struct OrbitCheckOutput {
    pub value: usize,
    pub exact: bool,
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct DeltaLocOutput {
    pub file: String,
    pub n: usize,
    pub edges: usize,
    pub delta_loc: usize,
    pub witness: Vec<usize>,
    pub method: Method,
    pub sets_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_check: Option<OrbitCheckOutput>,
}

#[derive(Serialize)]
pub struct VerifyBatteryOutput {
    pub char_sum_identity_passed: bool,
    pub char_sum_checks: u64,
    pub weil_bound_passed: bool,
    pub weil_checks: u64,
}

#[derive(Serialize)]
pub struct PaleyOutput {
    pub p: u64,
    pub delta_loc: Option<usize>,
    pub bound: f64,
    pub witness_set: Option<Vec<usize>>,
    pub char_sum_checks_passed: u64,
    pub mode: &'static str,
    pub holds: bool,
    pub min_closed_odd_bound_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub battery: Option<VerifyBatteryOutput>,
}

#[derive(Serialize)]
pub struct ReduceOutput {
    pub k: usize,
    pub n: usize,
    pub singular: bool,
    /// The reduction's answer for the minimum codeword weight.
    pub answer: usize,
    pub d_min: usize,
    pub delta_loc_plus_1: Option<usize>,
    pub equal: Option<bool>,
    pub method: Option<ReductionMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preconditions: Option<PreconditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct Manifest<'a> {
    pub k: usize,
    pub n: usize,
    pub u: usize,
    pub v1l: Vec<usize>,
    pub v1r: Vec<usize>,
    pub v2: Vec<usize>,
    pub labels: &'a [Label],
}

#[derive(Serialize)]
pub struct LllOutput {
    pub kind: ConditionKind,
    pub c_max: f64,
    pub tolerance: f64,
    pub worst_d_curve: Vec<(f64, f64)>,
}
