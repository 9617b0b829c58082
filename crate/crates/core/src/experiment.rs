//! Seeded Monte Carlo estimates of generation and GRR probabilities for a
//! ppd element `x` and a random involution `y`.

use std::cmp::Ordering;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use log::{info, warn};
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::classical::{Family, GroupSpec};
use crate::error::{Error, Result};
use crate::grr::{aut_gs_trivial, grr_verdict};
use crate::numthy;
use crate::perm::{derive_seed, Caps, InvolutionMode, PermGroup, Permutation, RngState};

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959964;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Measure {
    /// `G = ⟨x, y⟩`.
    Generation,
    /// The Cayley graph is a GRR, decided on the graph itself.
    Grr,
    /// Generation together with `Aut(G, {x, x⁻¹, y}) = 1`.
    KAndL,
}

impl Measure {
    pub fn id(self) -> &'static str {
        match self {
            Measure::Generation => "generation",
            Measure::Grr => "grr",
            Measure::KAndL => "k_and_l",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generation" => Ok(Measure::Generation),
            "grr" => Ok(Measure::Grr),
            "k-and-l" | "k_and_l" => Ok(Measure::KAndL),
            _ => Err(Error::InvalidInput(format!("unknown measure '{s}'"))),
        }
    }
}

/// Uniform sampling when the group can be enumerated, powers otherwise.
pub fn default_involution_mode(group: &PermGroup) -> InvolutionMode {
    if group.is_enumerable() {
        InvolutionMode::Uniform
    } else {
        InvolutionMode::Power
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub spec: GroupSpec,
    /// The ppd prime giving the order of `x`; the largest one when `None`.
    pub r: Option<u128>,
    pub trials: usize,
    pub master_seed: u64,
    /// Chosen from the group size when `None`.
    pub involution_mode: Option<InvolutionMode>,
    pub measure: Measure,
    /// Keep one `x`, drawn from this seed, for every trial instead of
    /// resampling it.
    pub fix_x: Option<u64>,
}

impl TrialConfig {
    pub fn new(spec: GroupSpec, trials: usize, master_seed: u64, measure: Measure) -> Self {
        TrialConfig {
            spec,
            r: None,
            trials,
            master_seed,
            involution_mode: None,
            measure,
            fix_x: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub derived_seed: u64,
    pub x_descriptor: String,
    pub y_descriptor: String,
    pub k_holds: bool,
    pub l_holds: Option<bool>,
    pub is_grr: Option<bool>,
}

impl TrialRecord {
    pub fn success(&self, measure: Measure) -> bool {
        match measure {
            Measure::Generation => self.k_holds,
            Measure::Grr => self.is_grr == Some(true),
            Measure::KAndL => self.k_holds && self.l_holds == Some(true),
        }
    }
}

/// Order and a short SHA-256 fingerprint of the image list.
pub fn describe(g: &Permutation) -> String {
    let mut hasher = Sha256::new();
    for &i in g.images() {
        hasher.update(i.to_le_bytes());
    }
    let digest = hasher.finalize();
    let hex: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
    format!("o{}:{hex}", g.order())
}

/// Wilson score interval for `successes` out of `trials` at quantile `z`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / (1.0 + z2 / n);
    let lo = if successes == 0 {
        0.0
    } else {
        (centre - half).max(0.0)
    };
    let hi = if successes == trials {
        1.0
    } else {
        (centre + half).min(1.0)
    };
    (lo.min(p), hi.max(p))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateSummary {
    pub spec: GroupSpec,
    pub r: u128,
    pub measure: Measure,
    pub involution_mode: InvolutionMode,
    pub seed: u64,
    pub trials: usize,
    pub successes: usize,
    pub point_estimate: f64,
    pub wilson_ci_95: (f64, f64),
    #[serde(with = "crate::decimal")]
    pub q_to_the_n: BigUint,
}

impl EstimateSummary {
    pub fn contains(&self, p: f64) -> bool {
        self.wilson_ci_95.0 <= p && p <= self.wilson_ci_95.1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub config: TrialConfig,
    pub records: Vec<TrialRecord>,
    pub summary: EstimateSummary,
}

/// The order of `x`: the largest ppd prime by default. An explicit odd
/// prime dividing `|G|` outside the ppd set is accepted with a warning, so
/// that groups such as `PSL₂(7)` (where the set is empty) can still be run.
pub fn resolve_r(spec: &GroupSpec, r: Option<u128>) -> Result<u128> {
    let primes = spec.ppd_primes()?;
    let m = spec.ppd_exponent() * spec.f();
    match r {
        None => primes
            .last()
            .copied()
            .ok_or(Error::EmptyPpd { p: spec.p(), m }),
        Some(r) if primes.contains(&r) => Ok(r),
        Some(r)
            if r > 2
                && numthy::is_prime(r)
                && (spec.group_order() % BigUint::from(r)).is_zero() =>
        {
            warn!(
                "{r} is not in ppd({},{m}); x is an element of order {r}",
                spec.p()
            );
            Ok(r)
        }
        Some(r) => Err(Error::NotPpd { r, p: spec.p(), m }),
    }
}

fn run_trial(
    group: &PermGroup,
    config: &TrialConfig,
    r: u128,
    mode: InvolutionMode,
    fixed_x: Option<&Permutation>,
    index: usize,
) -> Result<TrialRecord> {
    let derived_seed = derive_seed(config.master_seed, index as u64);
    let mut rng = RngState::new(derived_seed);
    let x = match fixed_x {
        Some(x) => x.clone(),
        None => group.find_ppd_element(r, &mut rng)?,
    };
    let y = group.sample_involution(mode, &mut rng)?;
    let (k_holds, l_holds, is_grr) = match config.measure {
        Measure::Generation => (group.generation_test(&x, &y), None, None),
        Measure::KAndL => {
            let k = group.generation_test(&x, &y);
            let l = if k {
                Some(aut_gs_trivial(group, &x, &y)?)
            } else {
                None
            };
            (k, l, None)
        }
        Measure::Grr => {
            let v = grr_verdict(group, &x, &y)?;
            (v.k_holds, v.l_holds, v.is_grr)
        }
    };
    Ok(TrialRecord {
        trial_index: index,
        derived_seed,
        x_descriptor: describe(&x),
        y_descriptor: describe(&y),
        k_holds,
        l_holds,
        is_grr,
    })
}

/// Runs the trials (in parallel on the current rayon pool) and summarises
/// them in trial order, so the output does not depend on scheduling.
pub fn run_experiment_on(group: &PermGroup, config: &TrialConfig) -> Result<ExperimentResult> {
    if config.trials == 0 {
        return Err(Error::EmptyExperiment);
    }
    if config.spec != *group.spec() {
        return Err(Error::InvalidInput("config and group disagree".into()));
    }
    let r = resolve_r(&config.spec, config.r)?;
    let mode = config
        .involution_mode
        .unwrap_or_else(|| default_involution_mode(group));
    if config.measure == Measure::Grr && !group.is_enumerable() {
        return Err(Error::InvalidInput(format!(
            "measure grr needs an enumerable group; {} has order {}, use k-and-l",
            config.spec,
            group.order()
        )));
    }
    if mode == InvolutionMode::Uniform && !group.is_enumerable() {
        return Err(Error::InvalidInput(format!(
            "uniform involutions need an enumerable group; {} has order {}",
            config.spec,
            group.order()
        )));
    }
    let fixed_x = match config.fix_x {
        Some(seed) => Some(group.find_ppd_element(r, &mut RngState::new(seed))?),
        None => None,
    };
    let records: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(group, config, r, mode, fixed_x.as_ref(), i))
        .collect::<Result<_>>()?;
    let successes = records.iter().filter(|t| t.success(config.measure)).count();
    let summary = EstimateSummary {
        spec: config.spec,
        r,
        measure: config.measure,
        involution_mode: mode,
        seed: config.master_seed,
        trials: config.trials,
        successes,
        point_estimate: successes as f64 / config.trials as f64,
        wilson_ci_95: wilson_interval(successes, config.trials, Z_95),
        q_to_the_n: config.spec.q_pow_n(),
    };
    Ok(ExperimentResult {
        config: config.clone(),
        records,
        summary,
    })
}

pub fn run_experiment(config: &TrialConfig) -> Result<ExperimentResult> {
    run_experiment_with_caps(config, Caps::default())
}

pub fn run_experiment_with_caps(config: &TrialConfig, caps: Caps) -> Result<ExperimentResult> {
    if config.trials == 0 {
        return Err(Error::EmptyExperiment);
    }
    resolve_r(&config.spec, config.r)?;
    let group = PermGroup::with_caps(&config.spec, caps)?;
    run_experiment_on(&group, config)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub n_range: (u32, u32),
    pub q_values: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
    pub measure: Measure,
    pub involution_mode: Option<InvolutionMode>,
    pub caps: Caps,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedSpec {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub rows: Vec<EstimateSummary>,
    pub skipped: Vec<SkippedSpec>,
}

fn skip_reason(e: &Error) -> String {
    match e {
        Error::EmptyPpd { p, m } => format!("ppd({p},{m}) empty"),
        other => other.to_string(),
    }
}

/// One estimate per valid `(family, n, q)`, ordered by `q^n`. Specs that
/// are invalid, have no ppd prime, or fail are skipped with a reason.
/// `grr` falls back to `k_and_l` for groups too large to enumerate.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    if config.trials == 0 {
        return Err(Error::EmptyExperiment);
    }
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &family in &config.families {
        for n in config.n_range.0..=config.n_range.1 {
            for &q in &config.q_values {
                let mut skip = |reason: String| {
                    warn!("skipping {family} n={n} q={q}: {reason}");
                    skipped.push(SkippedSpec {
                        family,
                        n,
                        q,
                        reason,
                    });
                };
                let spec = match GroupSpec::new(family, n, q) {
                    Ok(s) => s,
                    Err(e) => {
                        skip(skip_reason(&e));
                        continue;
                    }
                };
                if let Err(e) = resolve_r(&spec, None) {
                    skip(skip_reason(&e));
                    continue;
                }
                let group = match PermGroup::with_caps(&spec, config.caps) {
                    Ok(g) => g,
                    Err(e) => {
                        skip(skip_reason(&e));
                        continue;
                    }
                };
                let measure = if config.measure == Measure::Grr && !group.is_enumerable() {
                    Measure::KAndL
                } else {
                    config.measure
                };
                let trial = TrialConfig {
                    spec,
                    r: None,
                    trials: config.trials,
                    master_seed: config.seed,
                    involution_mode: config.involution_mode,
                    measure,
                    fix_x: None,
                };
                match run_experiment_on(&group, &trial) {
                    Ok(res) => {
                        info!(
                            "{spec}: {}/{} ({})",
                            res.summary.successes, res.summary.trials, measure
                        );
                        rows.push(res.summary);
                    }
                    Err(e) => skip(skip_reason(&e)),
                }
            }
        }
    }
    rows.sort_by(|a, b| {
        a.q_to_the_n
            .cmp(&b.q_to_the_n)
            .then_with(|| a.spec.family().cmp(&b.spec.family()))
            .then_with(|| a.spec.n().cmp(&b.spec.n()))
            .then(Ordering::Equal)
    });
    Ok(SweepResult { rows, skipped })
}

pub const CSV_HEADER: [&str; 13] = [
    "family",
    "n",
    "q",
    "q_pow_n",
    "r",
    "trials",
    "successes",
    "estimate",
    "ci_lo",
    "ci_hi",
    "measure",
    "involution_mode",
    "seed",
];

pub fn write_csv<W: Write>(rows: &[EstimateSummary], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for s in rows {
        w.write_record([
            s.spec.family().id().to_string(),
            s.spec.n().to_string(),
            s.spec.q().to_string(),
            s.q_to_the_n.to_string(),
            s.r.to_string(),
            s.trials.to_string(),
            s.successes.to_string(),
            format!("{:.6}", s.point_estimate),
            format!("{:.6}", s.wilson_ci_95.0),
            format!("{:.6}", s.wilson_ci_95.1),
            s.measure.id().to_string(),
            s.involution_mode.id().to_string(),
            s.seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(rows: &[EstimateSummary]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}
