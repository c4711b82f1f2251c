//! Verification engine: samples algebra elements, checks every registered
//! identity, searches for counterexamples, and produces JSON-serializable
//! reports.
//!
//! Sampling is position-addressable (see [`sample`]), so per-sample work runs
//! in parallel and is aggregated in stream order: the worst residuals and the
//! first counterexample (lowest position) do not depend on scheduling.
//! Reports from identical configurations are identical except `elapsed_ms`.

mod frame;
pub mod identities;
pub mod sample;
pub mod searches;
pub mod trial;

use std::time::Instant;

use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::scalar::{Backend, GaussianRational};
use crate::tolerance::WITNESS_REL;

pub use frame::decompose_vector_part;
pub use identities::{Identity, IDENTITIES};
pub use sample::{sample_le_right, sample_quat, Sampled};
pub use searches::{Search, SEARCHES};
use trial::{judge, FloatTolerance, Trial};

/// Seed used when neither a flag nor `RECSYM_SEED` provides one.
pub const DEFAULT_SEED: u64 = 0x5EED_2024;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown search property `{0}`")]
    UnknownProperty(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub backend: Backend,
    /// Components are drawn from `[-bound, bound]`.
    pub magnitude_bound: Rational64,
    pub complex_components: bool,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            count: 1000,
            backend: Backend::Exact,
            magnitude_bound: Rational64::from_integer(4),
            complex_components: true,
        }
    }
}

/// A sample at which a claimed equality failed (or, for searches, the
/// witness). Replaying `inputs` through the same evaluator at
/// `stream_position` reproduces `residual`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub stream_position: u64,
    pub inputs: Vec<Value>,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub backend: Backend,
    pub seed: u64,
    pub samples_run: usize,
    pub passed: bool,
    /// No samples were evaluated; `passed` holds vacuously.
    pub vacuous: bool,
    pub worst_abs_residual: f64,
    pub worst_rel_residual: f64,
    /// Samples whose Lorentz-Einstein right operand was not real timelike.
    pub outside_regime_samples: usize,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub property_id: String,
    pub backend: Backend,
    pub seed: u64,
    pub samples_run: usize,
    pub expect_witness: bool,
    pub witness_found: bool,
    pub matches_expectation: bool,
    pub witness: Option<Counterexample>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub identities_passed: usize,
    pub identities_failed: usize,
    pub searches_as_expected: usize,
    pub searches_unexpected: usize,
    pub all_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub identities: Vec<IdentityReport>,
    pub searches: Vec<SearchReport>,
    pub summary: SuiteSummary,
}

struct Outcome {
    abs: f64,
    rel: f64,
    holds: bool,
    outside_regime: bool,
    counterexample: Option<Counterexample>,
}

fn counterexample<T: crate::Scalar>(position: u64, trial: &Trial<T>, residual: f64) -> Counterexample {
    Counterexample {
        stream_position: position,
        inputs: trial.inputs.iter().map(|q| json!(q)).collect(),
        lhs: trial.lhs.to_json(),
        rhs: trial.rhs.to_json(),
        residual,
    }
}

fn evaluate<T: crate::Scalar>(
    eval: identities::Evaluator<T>,
    cfg: &SampleConfig,
    position: u64,
    tolerance: FloatTolerance,
) -> Outcome {
    match eval(cfg, position) {
        Ok(trial) => {
            let verdict = judge(&trial, tolerance);
            let residual = match tolerance {
                FloatTolerance::Absolute(_) => verdict.abs,
                FloatTolerance::Relative(_) => verdict.rel,
            };
            Outcome {
                abs: verdict.abs,
                rel: verdict.rel,
                holds: verdict.holds,
                outside_regime: trial.outside_regime,
                counterexample: (!verdict.holds).then(|| counterexample(position, &trial, residual)),
            }
        }
        Err(err) => Outcome {
            abs: f64::MAX,
            rel: f64::MAX,
            holds: false,
            outside_regime: false,
            counterexample: Some(Counterexample {
                stream_position: position,
                inputs: vec![],
                lhs: json!({ "error": err.to_string() }),
                rhs: Value::Null,
                residual: f64::MAX,
            }),
        },
    }
}

fn run_identity<T: crate::Scalar>(
    eval: identities::Evaluator<T>,
    cfg: &SampleConfig,
    samples: usize,
    tolerance: FloatTolerance,
) -> Vec<Outcome> {
    (0..samples as u64).into_par_iter().map(|pos| evaluate(eval, cfg, pos, tolerance)).collect()
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs one registered identity over `cfg.count` samples (or its fixed
/// instance set). Exact runs pass only with zero residual everywhere.
pub fn check_identity(identity_id: &str, cfg: &SampleConfig) -> Result<IdentityReport, CheckError> {
    let identity = identities::find(identity_id).ok_or_else(|| CheckError::UnknownIdentity(identity_id.into()))?;
    let start = Instant::now();
    let samples = if cfg.count == 0 { 0 } else { identity.fixed_instances.unwrap_or(cfg.count) };
    let outcomes = match cfg.backend {
        Backend::Exact => run_identity(identity.exact, cfg, samples, identity.tolerance),
        Backend::Float => run_identity(identity.float, cfg, samples, identity.tolerance),
    };

    let passed = outcomes.iter().all(|o| o.holds);
    Ok(IdentityReport {
        identity_id: identity.id.to_string(),
        backend: cfg.backend,
        seed: cfg.seed,
        samples_run: samples,
        passed,
        vacuous: samples == 0,
        worst_abs_residual: outcomes.iter().map(|o| o.abs).fold(0.0, f64::max),
        worst_rel_residual: outcomes.iter().map(|o| o.rel).fold(0.0, f64::max),
        outside_regime_samples: outcomes.iter().filter(|o| o.outside_regime).count(),
        counterexample: outcomes.into_iter().find_map(|o| o.counterexample),
        elapsed_ms: elapsed_ms(start),
    })
}

/// Scans stream positions `0..cfg.count` in order and stops at the first
/// witness.
pub fn run_search(property_id: &str, cfg: &SampleConfig) -> Result<SearchReport, CheckError> {
    let search = searches::find(property_id).ok_or_else(|| CheckError::UnknownProperty(property_id.into()))?;
    let start = Instant::now();
    let tolerance = FloatTolerance::Relative(WITNESS_REL);
    let mut witness = None;
    let mut samples_run = 0;
    for pos in 0..cfg.count as u64 {
        samples_run += 1;
        let outcome = match cfg.backend {
            Backend::Exact => evaluate::<GaussianRational>(search.exact, cfg, pos, tolerance),
            Backend::Float => evaluate::<Complex64>(search.float, cfg, pos, tolerance),
        };
        if let Some(found) = outcome.counterexample {
            witness = Some(found);
            break;
        }
    }
    let witness_found = witness.is_some();
    Ok(SearchReport {
        property_id: search.id.to_string(),
        backend: cfg.backend,
        seed: cfg.seed,
        samples_run,
        expect_witness: search.expect_witness,
        witness_found,
        matches_expectation: witness_found == search.expect_witness,
        witness,
        elapsed_ms: elapsed_ms(start),
    })
}

/// The first sampled witness violating the property, if any.
pub fn search_counterexample(property_id: &str, cfg: &SampleConfig) -> Result<Option<Counterexample>, CheckError> {
    run_search(property_id, cfg).map(|r| r.witness)
}

/// Every registered identity and search under one configuration.
pub fn run_suite(cfg: &SampleConfig) -> SuiteReport {
    let identities: Vec<IdentityReport> = IDENTITIES
        .iter()
        .map(|i| check_identity(i.id, cfg).expect("registered identity"))
        .collect();
    let searches: Vec<SearchReport> = SEARCHES
        .iter()
        .map(|s| run_search(s.id, cfg).expect("registered search"))
        .collect();
    let identities_passed = identities.iter().filter(|r| r.passed).count();
    let searches_as_expected = searches.iter().filter(|r| r.matches_expectation).count();
    // With zero samples an expected witness cannot be found; that is the
    // vacuous run, not a failure.
    let searches_ok = cfg.count == 0 || searches_as_expected == searches.len();
    let summary = SuiteSummary {
        identities_passed,
        identities_failed: identities.len() - identities_passed,
        searches_as_expected,
        searches_unexpected: searches.len() - searches_as_expected,
        all_ok: identities_passed == identities.len() && searches_ok,
    };
    SuiteReport { identities, searches, summary }
}

/// Replays one stream position of an identity and returns its residual as
/// recorded in a [`Counterexample`].
pub fn replay_residual(identity_id: &str, cfg: &SampleConfig, position: u64) -> Result<f64, CheckError> {
    let identity = identities::find(identity_id).ok_or_else(|| CheckError::UnknownIdentity(identity_id.into()))?;
    let outcome = match cfg.backend {
        Backend::Exact => evaluate(identity.exact, cfg, position, identity.tolerance),
        Backend::Float => evaluate(identity.float, cfg, position, identity.tolerance),
    };
    Ok(match identity.tolerance {
        FloatTolerance::Absolute(_) => outcome.abs,
        FloatTolerance::Relative(_) => outcome.rel,
    })
}
