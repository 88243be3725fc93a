//! Simulated estimation experiments: sample projective-measurement outcomes,
//! invert them to an estimate of the spectral exponent, and check the
//! Cramér-Rao bound empirically.
//!
//! Randomness is fully reproducible: every trial runs its own ChaCha8 stream
//! whose 64-bit seed is `splitmix64(master_seed + (trial + 1) * GOLDEN)`,
//! with `GOLDEN = 0x9E3779B97F4A7C15`. Aggregation is in trial order, so the
//! result is bitwise identical regardless of scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;

use crate::dephasing::gamma_zero_t;
use crate::error::{Error, Result};
use crate::metrology::{
    fisher_info_projective, measurement_probabilities, qfi_ohmicity, MeasurementAxis,
};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 finalizer; the documented seed-derivation primitive.
fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial seed: `splitmix64(master + (trial + 1) * GOLDEN)`.
pub fn derive_trial_seed(master_seed: u64, trial: u64) -> u64 {
    splitmix64(master_seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(GOLDEN)))
}

/// Raw data of one simulated run: `m` shots, `n_plus` "+" outcomes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementRecord {
    pub m: u64,
    pub n_plus: u64,
    pub tau: f64,
    pub axis: MeasurementAxis,
    pub seed: u64,
}

/// Outcome of inverting one record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Estimate {
    Feasible {
        s_hat: f64,
        /// More than one root of the rate equation matched the data.
        multiple_roots: bool,
    },
    /// The observed frequency admits no estimate (log of a non-positive
    /// number, or no root in the search range).
    Infeasible,
}

/// Aggregate of a repeated estimation experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationResult {
    /// Mean of the per-trial estimates over the feasible trials.
    pub s_hat: f64,
    /// Requested number of trials (feasible trials = n_trials - failures).
    pub n_trials: u64,
    /// Unbiased sample variance of the feasible estimates.
    pub empirical_variance: f64,
    /// Classical bound `1 / (M F_s)` at the true parameter.
    pub cr_bound: f64,
    /// Quantum bound `1 / (M H_s)` at the true parameter.
    pub q_cr_bound: f64,
    /// `empirical_variance / cr_bound`.
    pub saturation_ratio: f64,
    pub failures: u64,
}

/// Draw the number of "+" outcomes in `m` projective measurements on the
/// dephased `|+>` probe. Deterministic given the seed (ChaCha8 stream seeded
/// with `seed` through the generator's 64-bit expansion).
pub fn sample_outcomes(
    s_true: f64,
    tau: f64,
    m: u64,
    axis: &MeasurementAxis,
    seed: u64,
) -> Result<MeasurementRecord> {
    if m < 1 {
        return Err(Error::domain("sample_outcomes", "need at least one shot"));
    }
    let rate = gamma_zero_t(s_true, tau)?;
    let (p_plus, _) = measurement_probabilities(rate.gamma, axis)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_plus = if p_plus >= 1.0 {
        m
    } else if p_plus <= 0.0 {
        0
    } else {
        Binomial::new(m, p_plus)
            .expect("probability validated")
            .sample(&mut rng)
    };
    Ok(MeasurementRecord {
        m,
        n_plus,
        tau,
        axis: *axis,
        seed,
    })
}

const ESTIMATOR_GRID: usize = 64;
const BISECTION_TOL: f64 = 1e-10;

/// Invert a record to an estimate of the spectral exponent.
///
/// The observed frequency fixes an empirical dephasing exponent
/// `gamma_hat = -ln((2 p_hat - 1) / b1)`; the estimate is the root of
/// `gamma_s(tau) = gamma_hat` on `[s_lo, s_hi]`, located by a sign scan over
/// a 64-point grid and refined by bisection. With several candidate roots
/// the one reproducing `gamma_hat` best wins and the multiplicity is flagged.
pub fn estimate_s(record: &MeasurementRecord, s_lo: f64, s_hi: f64) -> Result<Estimate> {
    if !(s_lo > 0.0 && s_hi > s_lo) {
        return Err(Error::domain(
            "estimate_s",
            format!("need 0 < s_lo < s_hi, got [{s_lo}, {s_hi}]"),
        ));
    }
    let b1 = record.axis.b1();
    if b1 == 0.0 {
        return Err(Error::domain(
            "estimate_s",
            "measurement axis carries no signal (b1 = 0)",
        ));
    }
    let p_hat = record.n_plus as f64 / record.m as f64;
    let signal = (2.0 * p_hat - 1.0) / b1;
    if signal <= 0.0 {
        return Ok(Estimate::Infeasible);
    }
    let gamma_hat = -signal.ln();
    if gamma_hat < 0.0 {
        // frequency overshoots the zero-dephasing limit; no gamma >= 0 fits
        return Ok(Estimate::Infeasible);
    }

    let objective = |s: f64| gamma_zero_t(s, record.tau).map(|r| r.gamma - gamma_hat);

    let mut roots: Vec<f64> = Vec::new();
    let step = (s_hi - s_lo) / (ESTIMATOR_GRID - 1) as f64;
    let mut prev_s = s_lo;
    let mut prev_f = objective(prev_s)?;
    if prev_f == 0.0 {
        roots.push(prev_s);
    }
    for i in 1..ESTIMATOR_GRID {
        let s = s_lo + step * i as f64;
        let f = objective(s)?;
        if f == 0.0 {
            roots.push(s);
        } else if prev_f != 0.0 && prev_f.signum() != f.signum() {
            let mut lo = prev_s;
            let mut hi = s;
            let mut flo = prev_f;
            while hi - lo > BISECTION_TOL {
                let mid = 0.5 * (lo + hi);
                let fmid = objective(mid)?;
                if fmid == 0.0 {
                    lo = mid;
                    hi = mid;
                } else if fmid.signum() == flo.signum() {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_s = s;
        prev_f = f;
    }

    if roots.is_empty() {
        return Ok(Estimate::Infeasible);
    }
    let multiple_roots = roots.len() > 1;
    let s_hat = roots
        .into_iter()
        .min_by(|&a, &b| {
            let fa = objective(a).map(f64::abs).unwrap_or(f64::INFINITY);
            let fb = objective(b).map(f64::abs).unwrap_or(f64::INFINITY);
            fa.partial_cmp(&fb)
                .unwrap()
                .then(a.partial_cmp(&b).unwrap())
        })
        .expect("non-empty roots");
    Ok(Estimate::Feasible {
        s_hat,
        multiple_roots,
    })
}

/// Run `n_trials` independent records and compare the empirical estimator
/// variance against the classical and quantum Cramér-Rao bounds.
pub fn cr_experiment(
    s_true: f64,
    tau: f64,
    m: u64,
    n_trials: u64,
    axis: &MeasurementAxis,
    seed: u64,
    s_range: (f64, f64),
) -> Result<EstimationResult> {
    if n_trials < 100 {
        return Err(Error::domain(
            "cr_experiment",
            format!("need at least 100 trials for a variance estimate, got {n_trials}"),
        ));
    }
    let fisher = fisher_info_projective(s_true, tau, axis)?;
    let qfi = qfi_ohmicity(s_true, tau)?.qfi;
    if fisher <= 0.0 {
        return Err(Error::Experiment(
            "Fisher information vanishes at the working point; the bound is vacuous".into(),
        ));
    }

    let estimates: Vec<Result<Estimate>> = (0..n_trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = derive_trial_seed(seed, trial);
            let record = sample_outcomes(s_true, tau, m, axis, trial_seed)?;
            estimate_s(&record, s_range.0, s_range.1)
        })
        .collect();

    let mut values = Vec::with_capacity(n_trials as usize);
    let mut failures = 0u64;
    for e in estimates {
        match e? {
            Estimate::Feasible { s_hat, .. } => values.push(s_hat),
            Estimate::Infeasible => failures += 1,
        }
    }
    if failures * 5 > n_trials {
        return Err(Error::Experiment(format!(
            "{failures} of {n_trials} trials infeasible; choose a different tau or larger M"
        )));
    }

    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let empirical_variance =
        values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    let cr_bound = 1.0 / (m as f64 * fisher);
    let q_cr_bound = 1.0 / (m as f64 * qfi);
    Ok(EstimationResult {
        s_hat: mean,
        n_trials,
        empirical_variance,
        cr_bound,
        q_cr_bound,
        saturation_ratio: empirical_variance / cr_bound,
        failures,
    })
}
