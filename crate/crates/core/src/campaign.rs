//! Verification campaigns: run theorem batteries over many projection pairs
//! and aggregate the verdicts into a versioned report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::example26_algebra;
use crate::context::ProjectionPairContext;
use crate::error::{ContextError, SourceError};
use crate::matrix::MatrixRing;
use crate::ring::InverseEngine;
use crate::scalar::{Fp, GaussianRational, Modulus, Rational, Scalar};
use crate::sources::{all_projections_matrix, TrialSpec};
use crate::theorems::{run_theorem, TheoremId, TheoremVerdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Finite matrix rings with at most this many matrices are enumerated
/// exhaustively instead of sampled.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RingChoice {
    Rational,
    Gaussian,
    Prime(Modulus),
    Example26,
}

impl fmt::Display for RingChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingChoice::Rational => f.write_str("q"),
            RingChoice::Gaussian => f.write_str("qi"),
            RingChoice::Prime(m) => write!(f, "gf:{}", m.get()),
            RingChoice::Example26 => f.write_str("example26"),
        }
    }
}

impl FromStr for RingChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "q" => Ok(RingChoice::Rational),
            "qi" => Ok(RingChoice::Gaussian),
            "example26" => Ok(RingChoice::Example26),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .ok_or_else(|| format!("unknown ring `{s}` (expected q, qi, gf:<p> or example26)"))?;
                let p: u64 = p.parse().map_err(|_| format!("invalid modulus in `{s}`"))?;
                Modulus::new(p).map(RingChoice::Prime).map_err(|e| e.to_string())
            }
        }
    }
}

impl From<RingChoice> for String {
    fn from(r: RingChoice) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for RingChoice {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub ring: RingChoice,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub theorems: Vec<TheoremId>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig { ring: RingChoice::Rational, n: 3, trials: 100, seed: 0, theorems: TheoremId::ALL.to_vec() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Random,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    NotApplicable,
}

impl Status {
    pub fn of(v: &TheoremVerdict) -> Status {
        match (v.applicable, v.passed) {
            (false, _) => Status::NotApplicable,
            (true, true) => Status::Passed,
            (true, false) => Status::Failed,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Passed => "passed",
            Status::Failed => "failed",
            Status::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub theorem: TheoremId,
    pub trial: TrialSpec,
    pub p: String,
    pub q: String,
    pub failing_checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRow {
    pub theorem: TheoremId,
    pub trial: u64,
    pub status: Status,
    pub failing_checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema: u32,
    pub tool_version: String,
    pub config: CampaignConfig,
    pub mode: Mode,
    /// Number of projection pairs evaluated.
    pub pairs: u64,
    pub aggregates: BTreeMap<TheoremId, Aggregate>,
    /// Failed verdicts, ordered by trial index.
    pub failures: Vec<FailureRecord>,
    pub rows: Vec<TrialRow>,
    pub duration_ms: u64,
}

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Context(#[from] ContextError),
    #[error("--n must be at least 1")]
    EmptyMatrices,
    #[error("no theorems selected")]
    NoTheorems,
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CampaignReport {
    pub fn total_failed(&self) -> u64 {
        self.aggregates.values().map(|a| a.failed).sum()
    }

    /// 0 when no verdict failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.total_failed() > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One row per (theorem, trial); failing checks joined by `; `.
    pub fn to_csv(&self) -> Result<String, CampaignError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["theorem", "trial", "status", "failing_checks"])?;
        for row in &self.rows {
            w.write_record([
                row.theorem.as_str(),
                &row.trial.to_string(),
                row.status.as_str(),
                &row.failing_checks.join("; "),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

struct TrialOutcome {
    spec: TrialSpec,
    p: String,
    q: String,
    verdicts: Vec<TheoremVerdict>,
}

fn run_pairs<R, F>(ring: &R, count: u64, theorems: &[TheoremId], pair: F) -> Result<Vec<TrialOutcome>, CampaignError>
where
    R: InverseEngine,
    F: Fn(u64) -> Result<(TrialSpec, R::Elem, R::Elem), CampaignError> + Sync,
{
    (0..count)
        .into_par_iter()
        .map(|i| {
            let (spec, p, q) = pair(i)?;
            let (p_text, q_text) = (ring.render(&p), ring.render(&q));
            let ctx = ProjectionPairContext::new(ring, p, q)?;
            let verdicts = theorems.iter().map(|&id| run_theorem(id, &ctx)).collect();
            Ok(TrialOutcome { spec, p: p_text, q: q_text, verdicts })
        })
        .collect()
}

fn exhaustive<R: InverseEngine>(
    ring: &R,
    projections: Vec<R::Elem>,
    spec_of: impl Fn(u64) -> TrialSpec + Sync,
    theorems: &[TheoremId],
) -> Result<Vec<TrialOutcome>, CampaignError> {
    let m = projections.len() as u64;
    run_pairs(ring, m * m, theorems, |i| {
        Ok((spec_of(i), projections[(i / m) as usize].clone(), projections[(i % m) as usize].clone()))
    })
}

fn matrix_campaign<S: Scalar>(
    cfg: &CampaignConfig,
    field: S::Field,
) -> Result<(Mode, Vec<TrialOutcome>), CampaignError> {
    let ring = MatrixRing::<S>::new(field.clone(), cfg.n);
    let tag = S::ring_tag(&field);
    let small = S::enumerate(&field)
        .and_then(|els| (els.len() as u128).checked_pow((cfg.n * cfg.n) as u32))
        .is_some_and(|c| c <= EXHAUSTIVE_LIMIT);
    if small {
        let projections = all_projections_matrix::<S>(&field, cfg.n)?;
        let spec_of = |i| TrialSpec { ring: tag.clone(), n: cfg.n, ranks: None, seed: cfg.seed, trial: i };
        return Ok((Mode::Exhaustive, exhaustive(&ring, projections, spec_of, &cfg.theorems)?));
    }
    let outcomes = run_pairs(&ring, cfg.trials, &cfg.theorems, |i| {
        let spec = TrialSpec::random(tag.clone(), cfg.n, cfg.seed, i);
        let (p, q) = spec.generate::<S>(&field)?;
        Ok((spec, p, q))
    })?;
    Ok((Mode::Random, outcomes))
}

/// Runs the selected batteries. Finite rings small enough to enumerate are
/// checked on every ordered projection pair; `trials` applies otherwise.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport, CampaignError> {
    if cfg.theorems.is_empty() {
        return Err(CampaignError::NoTheorems);
    }
    if cfg.n == 0 && cfg.ring != RingChoice::Example26 {
        return Err(CampaignError::EmptyMatrices);
    }
    let start = Instant::now();
    let (mode, outcomes) = match &cfg.ring {
        RingChoice::Rational => matrix_campaign::<Rational>(cfg, ())?,
        RingChoice::Gaussian => matrix_campaign::<GaussianRational>(cfg, ())?,
        RingChoice::Prime(m) => matrix_campaign::<Fp>(cfg, *m)?,
        RingChoice::Example26 => {
            let alg = example26_algebra();
            let projections = alg.enumerate_projections();
            let spec_of =
                |i| TrialSpec { ring: "example26".into(), n: alg.dim(), ranks: None, seed: cfg.seed, trial: i };
            (Mode::Exhaustive, exhaustive(&alg, projections, spec_of, &cfg.theorems)?)
        }
    };

    let mut aggregates: BTreeMap<TheoremId, Aggregate> =
        cfg.theorems.iter().map(|&id| (id, Aggregate::default())).collect();
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for outcome in &outcomes {
        for v in &outcome.verdicts {
            let status = Status::of(v);
            let agg = aggregates.entry(v.theorem).or_default();
            agg.checked += 1;
            match status {
                Status::Passed => agg.passed += 1,
                Status::Failed => agg.failed += 1,
                Status::NotApplicable => agg.not_applicable += 1,
            }
            let failing: Vec<String> = v.failing_checks().into_iter().map(String::from).collect();
            if status == Status::Failed {
                failures.push(FailureRecord {
                    theorem: v.theorem,
                    trial: outcome.spec.clone(),
                    p: outcome.p.clone(),
                    q: outcome.q.clone(),
                    failing_checks: failing.clone(),
                });
            }
            rows.push(TrialRow { theorem: v.theorem, trial: outcome.spec.trial, status, failing_checks: failing });
        }
    }
    failures.sort_by_key(|f| (f.trial.trial, f.theorem));

    Ok(CampaignReport {
        schema: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: cfg.clone(),
        mode,
        pairs: outcomes.len() as u64,
        aggregates,
        failures,
        rows,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}
