//! Subcommand implementations: each builds a [`Table`] from the library ops.

use dephaseprobe::metrology::{
    excess_qfi, fisher_info_projective, qfi_low_t, qfi_ohmicity, MeasurementAxis, QfiPoint,
};
use dephaseprobe::montecarlo::cr_experiment;
use dephaseprobe::optimal::{maximize_qfi_over_time, optimal_time_curve};
use dephaseprobe::rates::RateRegistry;
use rayon::prelude::*;

use crate::cli::{ExcessArgs, FisherArgs, OptArgs, QfiArgs, RateArgs, SimulateArgs, SweepArgs};
use crate::config::axis_values;
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Table};

fn grid(
    s: Option<f64>,
    s_range: Option<crate::config::Range>,
    tau: Option<f64>,
    tau_range: Option<crate::config::Range>,
    tau_default: Option<f64>,
) -> CliResult<(Vec<f64>, Vec<f64>)> {
    let s_values = axis_values("s", s, s_range, None).map_err(CliError::Config)?;
    let tau_values = axis_values("tau", tau, tau_range, tau_default).map_err(CliError::Config)?;
    Ok((s_values, tau_values))
}

fn eval_grid<F>(s_values: &[f64], tau_values: &[f64], f: F) -> CliResult<Vec<Vec<Cell>>>
where
    F: Fn(f64, f64) -> CliResult<Vec<Cell>> + Sync,
{
    let points: Vec<(f64, f64)> = s_values
        .iter()
        .flat_map(|&s| tau_values.iter().map(move |&tau| (s, tau)))
        .collect();
    points
        .par_iter()
        .map(|&(s, tau)| f(s, tau).map_err(|e| e.at_point(&format!("(s = {s}, tau = {tau})"))))
        .collect()
}

pub fn rate(args: &RateArgs) -> CliResult<Table> {
    let (s_values, tau_values) = grid(args.s, args.s_range, args.tau, args.tau_range, None)?;
    let registry = RateRegistry::builtin();
    let model = registry.resolve(&args.model, args.temperature)?;

    let mut table = Table::new("rate", vec!["s", "tau", "T", "gamma", "dgamma_ds"])
        .with_config("s", join(&s_values))
        .with_config("tau", join(&tau_values))
        .with_config("T", args.temperature)
        .with_config("model", model.name());
    let temperature = args.temperature;
    let rows = eval_grid(&s_values, &tau_values, |s, tau| {
        let out = model.evaluate(s, tau, temperature)?;
        Ok(vec![
            Cell::Float(s),
            Cell::Float(tau),
            Cell::Float(temperature),
            Cell::Float(out.gamma),
            Cell::Float(out.dgamma_ds),
        ])
    })?;
    table.rows = rows;
    Ok(table)
}

fn qfi_row(s: f64, tau: f64, temperature: f64) -> CliResult<Vec<Cell>> {
    let point: QfiPoint = if temperature == 0.0 {
        qfi_ohmicity(s, tau)?
    } else {
        qfi_low_t(s, tau, temperature)?
    };
    Ok(vec![
        Cell::Float(point.s),
        Cell::Float(point.tau),
        Cell::Float(point.temperature),
        Cell::Float(point.qfi),
        Cell::Float(point.qsnr),
        Cell::Float(point.gamma),
        Cell::Float(point.dgamma_ds),
    ])
}

const QFI_COLUMNS: [&str; 7] = ["s", "tau", "T", "qfi", "qsnr", "gamma", "dgamma_ds"];

pub fn qfi(args: &QfiArgs) -> CliResult<Table> {
    let (s_values, tau_values) = grid(args.s, args.s_range, args.tau, args.tau_range, None)?;
    let mut table = Table::new("qfi", QFI_COLUMNS.to_vec())
        .with_config("s", join(&s_values))
        .with_config("tau", join(&tau_values))
        .with_config("T", args.temperature);
    table.rows = eval_grid(&s_values, &tau_values, |s, tau| {
        qfi_row(s, tau, args.temperature)
    })?;
    Ok(table)
}

pub fn sweep(args: &SweepArgs) -> CliResult<Table> {
    let s_values = args.s_range.values();
    let tau_values = args.tau_range.values();
    let mut table = Table::new("sweep", QFI_COLUMNS.to_vec())
        .with_config("s-range", args.s_range)
        .with_config("tau-range", args.tau_range)
        .with_config("T", args.temperature);
    table.rows = eval_grid(&s_values, &tau_values, |s, tau| {
        qfi_row(s, tau, args.temperature)
    })?;
    Ok(table)
}

pub fn fisher(args: &FisherArgs) -> CliResult<Table> {
    let (s_values, tau_values) = grid(args.s, args.s_range, args.tau, args.tau_range, None)?;
    let axis = MeasurementAxis::from_b1(args.b1)?;
    let mut table = Table::new("fisher", vec!["s", "tau", "b1", "fisher", "qfi", "ratio"])
        .with_config("s", join(&s_values))
        .with_config("tau", join(&tau_values))
        .with_config("b1", args.b1);
    table.rows = eval_grid(&s_values, &tau_values, |s, tau| {
        let fisher = fisher_info_projective(s, tau, &axis)?;
        let qfi = qfi_ohmicity(s, tau)?.qfi;
        Ok(vec![
            Cell::Float(s),
            Cell::Float(tau),
            Cell::Float(args.b1),
            Cell::Float(fisher),
            Cell::Float(qfi),
            Cell::Float(fisher / qfi),
        ])
    })?;
    Ok(table)
}

pub fn opt(args: &OptArgs) -> CliResult<Table> {
    let s_values = axis_values("s", args.s, args.s_range, None).map_err(CliError::Config)?;
    let mut table = Table::new(
        "opt",
        vec![
            "s",
            "tau_star",
            "qfi_star",
            "qsnr_star",
            "saturating",
            "horizon",
        ],
    )
    .with_config("s", join(&s_values))
    .with_config("tau-max", args.tau_max);

    for (s, report) in s_values
        .iter()
        .zip(optimal_time_curve(&s_values, args.tau_max))
    {
        let report = report.map_err(|e| CliError::from(e).at_point(&format!("(s = {s})")))?;
        table.push(vec![
            Cell::Float(report.s),
            Cell::Float(report.tau_star),
            Cell::Float(report.qfi_star),
            Cell::Float(report.qsnr_star),
            Cell::Bool(report.saturating),
            Cell::Float(report.horizon),
        ]);
    }
    Ok(table)
}

pub fn excess(args: &ExcessArgs) -> CliResult<Table> {
    let (s_values, tau_values) = grid(args.s, args.s_range, args.tau, args.tau_range, None)?;
    let mut table = Table::new("excess", vec!["s", "tau", "T", "excess_qfi", "sign"])
        .with_config("s", join(&s_values))
        .with_config("tau", join(&tau_values))
        .with_config("T", args.temperature);
    table.rows = eval_grid(&s_values, &tau_values, |s, tau| {
        let dh = excess_qfi(s, tau, args.temperature)?;
        Ok(vec![
            Cell::Float(s),
            Cell::Float(tau),
            Cell::Float(args.temperature),
            Cell::Float(dh),
            Cell::Float(dh.signum() * f64::from(dh != 0.0)),
        ])
    })?;
    Ok(table)
}

pub fn simulate(args: &SimulateArgs) -> CliResult<Table> {
    let axis = MeasurementAxis::from_b1(args.b1)?;
    let tau = match args.tau {
        Some(tau) => tau,
        None => maximize_qfi_over_time(args.s, args.tau_max, 1e-8)?.tau_star,
    };
    let result = cr_experiment(
        args.s,
        tau,
        args.shots,
        args.trials,
        &axis,
        args.seed,
        (args.s_lo, args.s_hi),
    )
    .map_err(|e| CliError::from(e).at_point(&format!("(s = {}, tau = {tau})", args.s)))?;

    let mut table = Table::new(
        "simulate",
        vec![
            "s_true",
            "tau",
            "M",
            "n_trials",
            "s_hat",
            "empirical_variance",
            "cr_bound",
            "q_cr_bound",
            "saturation_ratio",
            "failures",
        ],
    )
    .with_config("s", args.s)
    .with_config("tau", tau)
    .with_config("M", args.shots)
    .with_config("trials", args.trials)
    .with_config("b1", args.b1)
    .with_config("seed", args.seed)
    .with_config("s-lo", args.s_lo)
    .with_config("s-hi", args.s_hi);
    table.push(vec![
        Cell::Float(args.s),
        Cell::Float(tau),
        Cell::Int(args.shots),
        Cell::Int(result.n_trials),
        Cell::Float(result.s_hat),
        Cell::Float(result.empirical_variance),
        Cell::Float(result.cr_bound),
        Cell::Float(result.q_cr_bound),
        Cell::Float(result.saturation_ratio),
        Cell::Int(result.failures),
    ]);
    Ok(table)
}

fn join(values: &[f64]) -> String {
    if values.len() == 1 {
        values[0].to_string()
    } else {
        format!(
            "{}..{} ({} points)",
            values[0],
            values[values.len() - 1],
            values.len()
        )
    }
}
