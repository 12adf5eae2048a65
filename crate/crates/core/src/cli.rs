//! Command-line surface: reproducible pipelines over CSV inputs and JSON or
//! CSV outputs.
//!
//! Exit codes: 0 on success, 1 on validation errors (bad flags, schema or
//! parse failures, violated preconditions), 2 on numeric failures
//! (ill-conditioned designs, overflow, degenerate capital). Diagnostics go
//! to stderr; data goes to `--output` or stdout.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::analyze::{contribution_shares, fitted_table, forecast};
use crate::capital::{build_series, steady_state_seed, CapitalConfig};
use crate::error::{Error, Result};
use crate::estimate::{
    estimate_gdp_params_with_cap, Detrend, EconRecord, Panel, CONDITION_CAP,
};
use crate::io::csv::{
    read_capital_csv, read_gdp_labor_csv, read_investment_csv, read_panel_csv, read_scenario_csv,
    write_capital_csv, write_forecast_csv, write_panel_csv, PanelRow,
};
use crate::io::report::{write_json, FitDocument, RunConfig, TOOL_VERSION};
use crate::model::{eval_production, isoquant_points, CobbDouglasParams, FactorPoint};
use crate::progress::{
    check_group_axioms, check_holothetic, AxiomReport, ExpProgressFamily, HolotheticityReport,
    DEFAULT_CHECK_TOLERANCE,
};

#[derive(Parser)]
#[command(
    name = "liegrowth",
    version,
    about = "Growth accounting with Cobb-Douglas GDP functions and one-parameter technical progress"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a capital-stock series from investment data.
    Capital(CapitalArgs),
    /// Estimate GDP function parameters from a panel and emit a JSON report.
    Fit(FitArgs),
    /// Contribution shares of technology, capital, and labor.
    Shares(SharesArgs),
    /// Evaluate a GDP function over scenarios.
    Simulate(SimulateArgs),
    /// Verify group axioms and holotheticity of an exponential progress family.
    CheckProgress(CheckProgressArgs),
    /// Generate a synthetic panel from known parameters.
    Synth(SynthArgs),
}

#[derive(Args)]
struct CapitalArgs {
    /// Investment CSV; needs `year` and `investment` columns (a full panel
    /// CSV works).
    #[arg(long)]
    input: PathBuf,
    /// Fixed-asset depreciation rate.
    #[arg(long, default_value_t = 0.05)]
    sigma: f64,
    /// Capital stock in the year before the first investment year.
    #[arg(long, conflicts_with = "steady_state")]
    k0: Option<f64>,
    /// Derive the seed as I_first / (g + sigma) from this growth rate g.
    #[arg(long)]
    steady_state: Option<f64>,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FitArgs {
    /// Panel CSV with header `year,gdp,investment,labor`; with --capital
    /// the investment column is optional (year,gdp,labor suffices).
    #[arg(long)]
    input: PathBuf,
    /// Prebuilt capital CSV (header `year,capital`) joined by year instead
    /// of constructing capital from investments.
    #[arg(long)]
    capital: Option<PathBuf>,
    /// Fixed-asset depreciation rate for capital construction.
    #[arg(long, default_value_t = 0.05)]
    sigma: f64,
    /// Capital stock in the year before the first panel year.
    #[arg(long, conflicts_with = "steady_state")]
    k0: Option<f64>,
    /// Derive the capital seed as I_first / (g + sigma) from this growth rate.
    #[arg(long)]
    steady_state: Option<f64>,
    /// Year mapped to t = 0 (defaults to the first panel year).
    #[arg(long)]
    origin: Option<i32>,
    /// Detrending mode: none or linear.
    #[arg(long, default_value_t = Detrend::None)]
    detrend: Detrend,
    /// Named tolerance override, e.g. --tol condition=1e10 (repeatable).
    #[arg(long = "tol", value_parser = parse_tolerance)]
    tolerances: Vec<(String, f64)>,
    /// Free-text units declaration, echoed into the report uninterpreted.
    #[arg(long)]
    units: Option<String>,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SharesArgs {
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Shares JSON path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    a: f64,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Scenario CSV with header `t,capital,labor`; row order is preserved.
    #[arg(long)]
    scenarios: PathBuf,
    /// Forecast CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckProgressArgs {
    /// Progress intensity of the exponential family.
    #[arg(long)]
    lambda: f64,
    /// Comma-separated t grid, strictly increasing and containing 0.
    #[arg(long, default_value = "0,0.5,1,1.5,2")]
    t_grid: String,
    /// Comma-separated K:L probe points for the axiom check.
    #[arg(long, default_value = "1:1,2:3,0.5:5")]
    points: String,
    /// Output scale of the probe Cobb-Douglas function.
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Capital elasticity of the probe function.
    #[arg(long, default_value_t = 0.3)]
    alpha: f64,
    /// Labor elasticity of the probe function.
    #[arg(long, default_value_t = 0.6)]
    beta: f64,
    /// Isoquant level probed by the holotheticity check.
    #[arg(long, default_value_t = 1.0)]
    level: f64,
    /// Number of isoquant sample points.
    #[arg(long, default_value_t = 9)]
    isoquant_n: usize,
    /// Labor range lo:hi for isoquant sampling.
    #[arg(long, default_value = "0.5:2")]
    labor_range: String,
    /// Named tolerance override: axioms=... or holotheticity=... (repeatable).
    #[arg(long = "tol", value_parser = parse_tolerance)]
    tolerances: Vec<(String, f64)>,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    a: f64,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// First panel year (also the time origin of the generated data).
    #[arg(long, default_value_t = 1995)]
    base_year: i32,
    /// Number of years to generate.
    #[arg(long, default_value_t = 24)]
    years: usize,
    /// Depreciation rate used to turn the investment path into capital.
    #[arg(long, default_value_t = 0.05)]
    sigma: f64,
    /// Capital stock in the year before `base_year`.
    #[arg(long, default_value_t = 100.0)]
    k0: f64,
    /// First-year investment level.
    #[arg(long, default_value_t = 20.0)]
    i0: f64,
    /// Yearly investment growth rate.
    #[arg(long, default_value_t = 0.06)]
    i_growth: f64,
    /// Relative wiggle amplitude on investment (keeps ln K identifiable
    /// from the time trend; 0 makes the design rank deficient).
    #[arg(long, default_value_t = 0.15)]
    i_wiggle: f64,
    /// First-year labor level.
    #[arg(long, default_value_t = 50.0)]
    l0: f64,
    /// Yearly labor growth rate.
    #[arg(long, default_value_t = 0.02)]
    l_growth: f64,
    /// Relative wiggle amplitude on labor.
    #[arg(long, default_value_t = 0.05)]
    l_wiggle: f64,
    /// Standard deviation of multiplicative log noise on GDP.
    #[arg(long, default_value_t = 0.0)]
    noise_sd: f64,
    /// Seed of the deterministic noise generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Panel CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses a `name=value` tolerance override.
fn parse_tolerance(raw: &str) -> std::result::Result<(String, f64), String> {
    let (name, value) = raw
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{raw}`"))?;
    let value: f64 = value
        .parse()
        .map_err(|e| format!("cannot parse tolerance value `{value}`: {e}"))?;
    if !(value.is_finite() && value > 0.0) {
        return Err(format!("tolerance must be positive and finite, got {value}"));
    }
    Ok((name.to_string(), value))
}

fn tolerance_map(pairs: &[(String, f64)], known: &[&str]) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for (name, value) in pairs {
        if !known.contains(&name.as_str()) {
            return Err(Error::InvalidInput(format!(
                "unknown tolerance `{name}` (expected one of: {})",
                known.join(", ")
            )));
        }
        map.insert(name.clone(), *value);
    }
    Ok(map)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => Ok(Box::new(File::create(p).map_err(|e| Error::Io {
            path: p.display().to_string(),
            source: e,
        })?)),
        None => Ok(Box::new(std::io::stdout())),
    }
}

fn write_output_io(path: Option<&Path>, result: std::io::Result<()>) -> Result<()> {
    result.map_err(|e| Error::Io {
        path: path
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "<stdout>".to_string()),
        source: e,
    })
}

/// Parses and runs `argv`, returning the process exit code.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Capital(args) => run_capital(args),
        Command::Fit(args) => run_fit(args),
        Command::Shares(args) => run_shares(args),
        Command::Simulate(args) => run_simulate(args),
        Command::CheckProgress(args) => run_check_progress(args),
        Command::Synth(args) => run_synth(args),
    }
}

/// The recursion consumes one investment per consecutive year.
fn require_consecutive_years(years: impl Iterator<Item = i32>) -> Result<()> {
    let years: Vec<i32> = years.collect();
    if let Some(w) = years.windows(2).find(|w| w[1] != w[0] + 1) {
        return Err(Error::InvalidInput(format!(
            "investment years must be consecutive to build capital, found gap between {} and {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

fn capital_seed(
    first_investment: f64,
    k0: Option<f64>,
    steady_state: Option<f64>,
    sigma: f64,
) -> Result<f64> {
    match (k0, steady_state) {
        (Some(seed), _) => Ok(seed),
        (None, Some(growth)) => steady_state_seed(first_investment, growth, sigma),
        (None, None) => Err(Error::InvalidInput(
            "capital construction needs --k0 or --steady-state (or supply --capital)".to_string(),
        )),
    }
}

fn run_capital(args: CapitalArgs) -> Result<()> {
    let rows = read_investment_csv(&args.input)?;
    let (years, investments): (Vec<i32>, Vec<f64>) = rows.into_iter().unzip();
    if years.is_empty() {
        return Err(Error::Precondition(
            "investment series is empty; need at least one year".to_string(),
        ));
    }
    require_consecutive_years(years.iter().copied())?;
    let seed = capital_seed(investments[0], args.k0, args.steady_state, args.sigma)?;
    let config = CapitalConfig::new(seed, args.sigma)?;
    let series = build_series(&config, years[0], &investments)?;
    let writer = open_output(args.output.as_deref())?;
    write_output_io(args.output.as_deref(), write_capital_csv(writer, &series))
}

fn run_fit(args: FitArgs) -> Result<()> {
    let tolerances = tolerance_map(&args.tolerances, &["condition"])?;
    let condition_cap = tolerances.get("condition").copied().unwrap_or(CONDITION_CAP);

    // With prebuilt capital the investment column is not needed; otherwise
    // the full panel schema applies and capital is constructed from it.
    let records: Vec<EconRecord> = match &args.capital {
        Some(path) => {
            let rows = read_gdp_labor_csv(&args.input)?;
            let table: BTreeMap<i32, f64> = read_capital_csv(path)?.into_iter().collect();
            rows.iter()
                .map(|&(year, gdp, labor)| {
                    let capital = *table.get(&year).ok_or_else(|| Error::Integrity {
                        path: path.display().to_string(),
                        message: format!("no capital value for panel year {year}"),
                    })?;
                    Ok(EconRecord {
                        year,
                        gdp,
                        capital,
                        labor,
                    })
                })
                .collect::<Result<_>>()?
        }
        None => {
            let rows = read_panel_csv(&args.input)?;
            require_consecutive_years(rows.iter().map(|r| r.year))?;
            let first_year = rows
                .first()
                .map(|r| r.year)
                .ok_or_else(|| Error::Precondition("panel is empty".to_string()))?;
            let investments: Vec<f64> = rows.iter().map(|r| r.investment).collect();
            let seed = capital_seed(investments[0], args.k0, args.steady_state, args.sigma)?;
            let config = CapitalConfig::new(seed, args.sigma)?;
            let series = build_series(&config, first_year, &investments)?;
            rows.iter()
                .zip(series.values())
                .map(|(row, &capital)| EconRecord {
                    year: row.year,
                    gdp: row.gdp,
                    capital,
                    labor: row.labor,
                })
                .collect()
        }
    };
    let panel = match args.origin {
        Some(origin) => Panel::new(records, origin),
        None => Panel::from_records(records),
    }?;

    let report = estimate_gdp_params_with_cap(&panel, args.detrend, condition_cap)?;
    let shares = if report.params.gamma() >= 0.0 {
        Some(contribution_shares(&report.params)?)
    } else {
        eprintln!(
            "note: fitted gamma = {:.6} is negative; contribution shares are undefined and \
             reported as null",
            report.params.gamma()
        );
        None
    };
    let fitted = fitted_table(&panel, &report.params)?;

    let config = RunConfig {
        input_path: Some(args.input.display().to_string()),
        capital_path: args.capital.as_ref().map(|p| p.display().to_string()),
        sigma: Some(args.sigma),
        initial_capital: args.k0,
        steady_state_growth: args.steady_state,
        time_origin: Some(panel.time_origin()),
        detrend: Some(args.detrend),
        tolerances,
        seed: None,
        units: args.units.clone(),
        output_path: args.output.as_ref().map(|p| p.display().to_string()),
    };
    let document = FitDocument::new(&report, shares, fitted, config);
    let writer = open_output(args.output.as_deref())?;
    write_json(writer, &document)
}

fn run_shares(args: SharesArgs) -> Result<()> {
    let params = CobbDouglasParams::new(1.0, args.alpha, args.beta, args.gamma)?;
    let shares = contribution_shares(&params)?;
    let writer = open_output(args.output.as_deref())?;
    write_json(writer, &shares)
}

fn run_simulate(args: SimulateArgs) -> Result<()> {
    let params = CobbDouglasParams::new(args.a, args.alpha, args.beta, args.gamma)?;
    let rows = read_scenario_csv(&args.scenarios)?;
    let scenarios: Vec<(f64, FactorPoint)> = rows
        .iter()
        .map(|row| Ok((row.t, FactorPoint::new(row.capital, row.labor)?)))
        .collect::<Result<_>>()?;
    let extrapolated = scenarios.iter().filter(|(t, _)| *t < 0.0).count();
    if extrapolated > 0 {
        eprintln!(
            "warning: {extrapolated} scenario row(s) have t < 0, outside the fitted domain \
             (t >= 0); values are extrapolations"
        );
    }
    let forecasts = forecast(&params, &scenarios)?;
    let writer = open_output(args.output.as_deref())?;
    write_output_io(
        args.output.as_deref(),
        write_forecast_csv(writer, &scenarios, &forecasts),
    )
}

#[derive(Serialize)]
struct ProgressCheckDocument {
    lambda: f64,
    t_grid: Vec<f64>,
    points: Vec<FactorPoint>,
    production: CobbDouglasParams,
    isoquant_level: f64,
    tolerance_axioms: f64,
    tolerance_holotheticity: f64,
    axioms: AxiomReport,
    holotheticity: HolotheticityReport,
    tool_version: String,
}

fn parse_comma_reals(raw: &str, what: &str) -> Result<Vec<f64>> {
    raw.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidInput(format!("cannot parse {what} entry `{part}`: {e}")))
        })
        .collect()
}

fn parse_points(raw: &str) -> Result<Vec<FactorPoint>> {
    raw.split(',')
        .map(|pair| {
            let (k, l) = pair.split_once(':').ok_or_else(|| {
                Error::InvalidInput(format!("expected K:L point, got `{pair}`"))
            })?;
            let parse = |s: &str| {
                s.trim().parse::<f64>().map_err(|e| {
                    Error::InvalidInput(format!("cannot parse point coordinate `{s}`: {e}"))
                })
            };
            FactorPoint::new(parse(k)?, parse(l)?)
        })
        .collect()
}

fn parse_range(raw: &str) -> Result<(f64, f64)> {
    let (lo, hi) = raw
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("expected lo:hi range, got `{raw}`")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| Error::InvalidInput(format!("cannot parse range bound `{s}`: {e}")))
    };
    Ok((parse(lo)?, parse(hi)?))
}

fn run_check_progress(args: CheckProgressArgs) -> Result<()> {
    let tolerances = tolerance_map(&args.tolerances, &["axioms", "holotheticity"])?;
    let tol_axioms = tolerances
        .get("axioms")
        .copied()
        .unwrap_or(DEFAULT_CHECK_TOLERANCE);
    let tol_holothetic = tolerances
        .get("holotheticity")
        .copied()
        .unwrap_or(DEFAULT_CHECK_TOLERANCE);

    let t_grid = parse_comma_reals(&args.t_grid, "t grid")?;
    let points = parse_points(&args.points)?;
    let labor_range = parse_range(&args.labor_range)?;

    let family = ExpProgressFamily::new(args.lambda)?;
    let axioms = check_group_axioms(&family, &t_grid, &points, tol_axioms)?;

    let production = CobbDouglasParams::new(args.a, args.alpha, args.beta, 0.0)?;
    let isoquant = isoquant_points(&production, args.level, args.isoquant_n, labor_range)?;
    let holotheticity = check_holothetic(
        |p| eval_production(&production, p),
        &family,
        &t_grid,
        &isoquant,
        tol_holothetic,
    )?;

    let document = ProgressCheckDocument {
        lambda: args.lambda,
        t_grid,
        points,
        production,
        isoquant_level: args.level,
        tolerance_axioms: tol_axioms,
        tolerance_holotheticity: tol_holothetic,
        axioms,
        holotheticity,
        tool_version: TOOL_VERSION.to_string(),
    };
    let writer = open_output(args.output.as_deref())?;
    write_json(writer, &document)
}

fn run_synth(args: SynthArgs) -> Result<()> {
    let params = CobbDouglasParams::new(args.a, args.alpha, args.beta, args.gamma)?;
    if args.years == 0 {
        return Err(Error::Precondition("need at least one year".to_string()));
    }
    let investments: Vec<f64> = (0..args.years)
        .map(|i| {
            let x = i as f64;
            args.i0 * (1.0 + args.i_growth).powi(i as i32) * (1.0 + args.i_wiggle * (0.9 * x).sin())
        })
        .collect();
    let labor: Vec<f64> = (0..args.years)
        .map(|i| {
            let x = i as f64;
            args.l0 * (1.0 + args.l_growth).powi(i as i32) * (1.0 + args.l_wiggle * (1.3 * x).cos())
        })
        .collect();

    let config = CapitalConfig::new(args.k0, args.sigma)?;
    let series = build_series(&config, args.base_year, &investments)?;
    let panel = crate::estimate::generate_synthetic(
        &params,
        args.base_year,
        series.values(),
        &labor,
        args.noise_sd,
        args.seed,
    )?;

    let rows: Vec<PanelRow> = panel
        .records()
        .iter()
        .zip(&investments)
        .map(|(record, &investment)| PanelRow {
            year: record.year,
            gdp: record.gdp,
            investment,
            labor: record.labor,
        })
        .collect();
    let writer = open_output(args.output.as_deref())?;
    write_output_io(args.output.as_deref(), write_panel_csv(writer, &rows))
}
