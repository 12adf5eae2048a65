//! Python bindings for the growth-accounting toolkit.
//!
//! Exposes the main types and operations: Cobb-Douglas evaluation, the
//! exponential technical-progress family with group-axiom and holotheticity
//! checks, perpetual-inventory capital construction, log-linear estimation,
//! the synthetic-panel generator, and contribution shares.
//!
//! Validation failures raise `ValueError`; numeric failures (overflow,
//! ill-conditioned designs, degenerate capital) raise `ArithmeticError`.

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use liegrowth::analyze;
use liegrowth::capital;
use liegrowth::estimate;
use liegrowth::model;
use liegrowth::progress;

fn to_py(err: liegrowth::Error) -> PyErr {
    match err.exit_code() {
        2 => PyArithmeticError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn point(capital: f64, labor: f64) -> PyResult<model::FactorPoint> {
    model::FactorPoint::new(capital, labor).map_err(to_py)
}

/// Parameters of `GDP(t) = a * e^(gamma t) * K^alpha * L^beta`.
#[pyclass(name = "CobbDouglasParams", frozen)]
struct PyCobbDouglasParams {
    inner: model::CobbDouglasParams,
}

#[pymethods]
impl PyCobbDouglasParams {
    #[new]
    fn new(a: f64, alpha: f64, beta: f64, gamma: f64) -> PyResult<Self> {
        Ok(Self {
            inner: model::CobbDouglasParams::new(a, alpha, beta, gamma).map_err(to_py)?,
        })
    }

    #[getter]
    fn a(&self) -> f64 {
        self.inner.a()
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha()
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.inner.beta()
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.inner.gamma()
    }

    fn __repr__(&self) -> String {
        format!(
            "CobbDouglasParams(a={}, alpha={}, beta={}, gamma={})",
            self.inner.a(),
            self.inner.alpha(),
            self.inner.beta(),
            self.inner.gamma()
        )
    }
}

/// Outcome of the group-axiom verification.
#[pyclass(name = "AxiomReport", frozen)]
struct PyAxiomReport {
    #[pyo3(get)]
    composition_max_err: f64,
    #[pyo3(get)]
    identity_max_err: f64,
    #[pyo3(get)]
    inverse_max_err: f64,
    #[pyo3(get)]
    independence_min_absdet: f64,
    #[pyo3(get)]
    passed: bool,
}

/// Outcome of the holotheticity check.
#[pyclass(name = "HolotheticityReport", frozen)]
struct PyHolotheticityReport {
    #[pyo3(get)]
    max_isoquant_spread: f64,
    #[pyo3(get)]
    monotone_in_t: bool,
    #[pyo3(get)]
    holothetic: bool,
}

/// Contribution shares of technology, capital, and labor.
#[pyclass(name = "ContributionShares", frozen)]
struct PyContributionShares {
    #[pyo3(get)]
    tech: f64,
    #[pyo3(get)]
    capital: f64,
    #[pyo3(get)]
    labor: f64,
}

#[pymethods]
impl PyContributionShares {
    fn __repr__(&self) -> String {
        format!(
            "ContributionShares(tech={}, capital={}, labor={})",
            self.tech, self.capital, self.labor
        )
    }
}

/// Estimation result: parameters plus diagnostics.
#[pyclass(name = "FitReport", frozen)]
struct PyFitReport {
    params: model::CobbDouglasParams,
    #[pyo3(get)]
    std_errors: (f64, f64, f64, f64),
    #[pyo3(get)]
    r_squared: f64,
    #[pyo3(get)]
    residuals: Vec<f64>,
    #[pyo3(get)]
    condition_number: f64,
    #[pyo3(get)]
    n_obs: usize,
    #[pyo3(get)]
    detrend: String,
}

#[pymethods]
impl PyFitReport {
    #[getter]
    fn params(&self) -> PyCobbDouglasParams {
        PyCobbDouglasParams { inner: self.params }
    }
}

/// `Y = a K^alpha L^beta`.
#[pyfunction]
fn eval_production(params: &PyCobbDouglasParams, capital: f64, labor: f64) -> PyResult<f64> {
    model::eval_production(&params.inner, point(capital, labor)?).map_err(to_py)
}

/// `GDP(t) = a e^(gamma t) K^alpha L^beta`.
#[pyfunction]
fn eval_gdp(params: &PyCobbDouglasParams, t: f64, capital: f64, labor: f64) -> PyResult<f64> {
    model::eval_gdp(&params.inner, t, point(capital, labor)?).map_err(to_py)
}

/// Samples `(capital, labor)` points on the isoquant at `level`, with labor
/// spread geometrically across `[labor_lo, labor_hi]`.
#[pyfunction]
fn isoquant_points(
    params: &PyCobbDouglasParams,
    level: f64,
    n: usize,
    labor_lo: f64,
    labor_hi: f64,
) -> PyResult<Vec<(f64, f64)>> {
    let points =
        model::isoquant_points(&params.inner, level, n, (labor_lo, labor_hi)).map_err(to_py)?;
    Ok(points.iter().map(|p| (p.capital(), p.labor())).collect())
}

/// Applies the exponential progress family: `(e^(lambda t) K, e^(lambda t) L)`.
#[pyfunction]
fn apply_progress(lambda_: f64, t: f64, capital: f64, labor: f64) -> PyResult<(f64, f64)> {
    use progress::ProgressFamily;
    let family = progress::ExpProgressFamily::new(lambda_).map_err(to_py)?;
    let image = family.apply(t, point(capital, labor)?).map_err(to_py)?;
    Ok((image.capital(), image.labor()))
}

/// The relabeling factor `e^(lambda (alpha + beta) t)` of a Cobb-Douglas
/// function under the exponential family.
#[pyfunction]
fn scale_factor(params: &PyCobbDouglasParams, lambda_: f64, t: f64) -> PyResult<f64> {
    let family = progress::ExpProgressFamily::new(lambda_).map_err(to_py)?;
    progress::scale_factor(&params.inner, &family, t).map_err(to_py)
}

/// Verifies the group axioms of the exponential family over `t_samples` and
/// `(capital, labor)` probe points.
#[pyfunction]
#[pyo3(signature = (lambda_, t_samples, points, tol = progress::DEFAULT_CHECK_TOLERANCE))]
fn check_group_axioms(
    lambda_: f64,
    t_samples: Vec<f64>,
    points: Vec<(f64, f64)>,
    tol: f64,
) -> PyResult<PyAxiomReport> {
    let family = progress::ExpProgressFamily::new(lambda_).map_err(to_py)?;
    let points: Vec<model::FactorPoint> = points
        .into_iter()
        .map(|(k, l)| point(k, l))
        .collect::<PyResult<_>>()?;
    let report =
        progress::check_group_axioms(&family, &t_samples, &points, tol).map_err(to_py)?;
    Ok(PyAxiomReport {
        composition_max_err: report.composition_max_err,
        identity_max_err: report.identity_max_err,
        inverse_max_err: report.inverse_max_err,
        independence_min_absdet: report.independence_min_absdet,
        passed: report.passed,
    })
}

/// Holotheticity of an arbitrary production function (a Python callable
/// `f(capital, labor) -> float`) under the exponential family, probed on the
/// given isoquant points.
#[pyfunction]
#[pyo3(signature = (production, lambda_, t_samples, isoquant, tol = progress::DEFAULT_CHECK_TOLERANCE))]
fn check_holothetic(
    production: Bound<'_, PyAny>,
    lambda_: f64,
    t_samples: Vec<f64>,
    isoquant: Vec<(f64, f64)>,
    tol: f64,
) -> PyResult<PyHolotheticityReport> {
    let family = progress::ExpProgressFamily::new(lambda_).map_err(to_py)?;
    let isoquant: Vec<model::FactorPoint> = isoquant
        .into_iter()
        .map(|(k, l)| point(k, l))
        .collect::<PyResult<_>>()?;
    let eval = |p: model::FactorPoint| -> liegrowth::Result<f64> {
        production
            .call1((p.capital(), p.labor()))
            .and_then(|v| v.extract::<f64>())
            .map_err(|e| liegrowth::Error::Domain(format!("production callable failed: {e}")))
    };
    let report =
        progress::check_holothetic(eval, &family, &t_samples, &isoquant, tol).map_err(to_py)?;
    Ok(PyHolotheticityReport {
        max_isoquant_spread: report.max_isoquant_spread,
        monotone_in_t: report.monotone_in_t,
        holothetic: report.holothetic,
    })
}

/// One year of the perpetual-inventory recursion.
#[pyfunction]
fn capital_step(k_prev: f64, investment: f64, sigma: f64) -> f64 {
    capital::step(k_prev, investment, sigma)
}

/// Builds the capital series from investments; returns `(year, value)` pairs.
#[pyfunction]
fn build_capital_series(
    initial_capital: f64,
    sigma: f64,
    base_year: i32,
    investments: Vec<f64>,
) -> PyResult<Vec<(i32, f64)>> {
    let config = capital::CapitalConfig::new(initial_capital, sigma).map_err(to_py)?;
    let series = capital::build_series(&config, base_year, &investments).map_err(to_py)?;
    Ok(series.year_values().collect())
}

/// Heuristic steady-state capital seed `I_first / (g + sigma)`.
#[pyfunction]
fn steady_state_seed(first_investment: f64, growth: f64, sigma: f64) -> PyResult<f64> {
    capital::steady_state_seed(first_investment, growth, sigma).map_err(to_py)
}

fn panel_from_columns(
    years: Vec<i32>,
    gdp: Vec<f64>,
    capital_path: Vec<f64>,
    labor: Vec<f64>,
    time_origin: Option<i32>,
) -> PyResult<estimate::Panel> {
    let n = years.len();
    if gdp.len() != n || capital_path.len() != n || labor.len() != n {
        return Err(PyValueError::new_err(format!(
            "column lengths differ: years {n}, gdp {}, capital {}, labor {}",
            gdp.len(),
            capital_path.len(),
            labor.len()
        )));
    }
    let records: Vec<estimate::EconRecord> = (0..n)
        .map(|i| estimate::EconRecord {
            year: years[i],
            gdp: gdp[i],
            capital: capital_path[i],
            labor: labor[i],
        })
        .collect();
    match time_origin {
        Some(origin) => estimate::Panel::new(records, origin),
        None => estimate::Panel::from_records(records),
    }
    .map_err(to_py)
}

/// Least-squares fit of `(a, alpha, beta, gamma)` from panel columns.
///
/// `std_errors` follow the order `(gamma, alpha, beta, ln a)`.
#[pyfunction]
#[pyo3(signature = (years, gdp, capital, labor, time_origin = None, detrend = "none"))]
fn fit_gdp(
    years: Vec<i32>,
    gdp: Vec<f64>,
    capital: Vec<f64>,
    labor: Vec<f64>,
    time_origin: Option<i32>,
    detrend: &str,
) -> PyResult<PyFitReport> {
    let mode: estimate::Detrend = detrend.parse().map_err(to_py)?;
    let panel = panel_from_columns(years, gdp, capital, labor, time_origin)?;
    let report = estimate::estimate_gdp_params(&panel, mode).map_err(to_py)?;
    Ok(PyFitReport {
        params: report.params,
        std_errors: (
            report.std_errors[0],
            report.std_errors[1],
            report.std_errors[2],
            report.std_errors[3],
        ),
        r_squared: report.r_squared,
        residuals: report.residuals,
        condition_number: report.condition_number,
        n_obs: report.n_obs,
        detrend: mode.to_string(),
    })
}

/// Generates a synthetic panel; returns `(year, gdp, capital, labor)` rows.
/// `noise_sd = 0` reproduces the model exactly; identical seeds give
/// identical panels.
#[pyfunction]
#[pyo3(signature = (params, base_year, capital_path, labor_path, noise_sd = 0.0, seed = 0))]
fn generate_synthetic(
    params: &PyCobbDouglasParams,
    base_year: i32,
    capital_path: Vec<f64>,
    labor_path: Vec<f64>,
    noise_sd: f64,
    seed: u64,
) -> PyResult<Vec<(i32, f64, f64, f64)>> {
    let panel = estimate::generate_synthetic(
        &params.inner,
        base_year,
        &capital_path,
        &labor_path,
        noise_sd,
        seed,
    )
    .map_err(to_py)?;
    Ok(panel
        .records()
        .iter()
        .map(|r| (r.year, r.gdp, r.capital, r.labor))
        .collect())
}

/// Elasticity-ratio contribution shares of technology, capital, and labor.
#[pyfunction]
fn contribution_shares(params: &PyCobbDouglasParams) -> PyResult<PyContributionShares> {
    let shares = analyze::contribution_shares(&params.inner).map_err(to_py)?;
    Ok(PyContributionShares {
        tech: shares.tech(),
        capital: shares.capital(),
        labor: shares.labor(),
    })
}

/// Actual-versus-fitted table; returns `(year, actual, fitted, log_residual)`.
#[pyfunction]
#[pyo3(signature = (params, years, gdp, capital, labor, time_origin = None))]
fn fitted_table(
    params: &PyCobbDouglasParams,
    years: Vec<i32>,
    gdp: Vec<f64>,
    capital: Vec<f64>,
    labor: Vec<f64>,
    time_origin: Option<i32>,
) -> PyResult<Vec<(i32, f64, f64, f64)>> {
    let panel = panel_from_columns(years, gdp, capital, labor, time_origin)?;
    let rows = analyze::fitted_table(&panel, &params.inner).map_err(to_py)?;
    Ok(rows
        .iter()
        .map(|r| (r.year, r.actual, r.fitted, r.log_residual))
        .collect())
}

/// Evaluates the GDP function over `(t, capital, labor)` scenarios.
#[pyfunction]
fn forecast(
    params: &PyCobbDouglasParams,
    scenarios: Vec<(f64, f64, f64)>,
) -> PyResult<Vec<f64>> {
    let scenarios: Vec<(f64, model::FactorPoint)> = scenarios
        .into_iter()
        .map(|(t, k, l)| Ok((t, point(k, l)?)))
        .collect::<PyResult<_>>()?;
    analyze::forecast(&params.inner, &scenarios).map_err(to_py)
}

#[pymodule]
fn liegrowth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCobbDouglasParams>()?;
    m.add_class::<PyAxiomReport>()?;
    m.add_class::<PyHolotheticityReport>()?;
    m.add_class::<PyContributionShares>()?;
    m.add_class::<PyFitReport>()?;
    m.add_function(wrap_pyfunction!(eval_production, m)?)?;
    m.add_function(wrap_pyfunction!(eval_gdp, m)?)?;
    m.add_function(wrap_pyfunction!(isoquant_points, m)?)?;
    m.add_function(wrap_pyfunction!(apply_progress, m)?)?;
    m.add_function(wrap_pyfunction!(scale_factor, m)?)?;
    m.add_function(wrap_pyfunction!(check_group_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(check_holothetic, m)?)?;
    m.add_function(wrap_pyfunction!(capital_step, m)?)?;
    m.add_function(wrap_pyfunction!(build_capital_series, m)?)?;
    m.add_function(wrap_pyfunction!(steady_state_seed, m)?)?;
    m.add_function(wrap_pyfunction!(fit_gdp, m)?)?;
    m.add_function(wrap_pyfunction!(generate_synthetic, m)?)?;
    m.add_function(wrap_pyfunction!(contribution_shares, m)?)?;
    m.add_function(wrap_pyfunction!(fitted_table, m)?)?;
    m.add_function(wrap_pyfunction!(forecast, m)?)?;
    Ok(())
}
