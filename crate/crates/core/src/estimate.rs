//! Log-linear least-squares estimation of the GDP function parameters.
//!
//! The model `GDP(t) = a e^{gamma t} K^alpha L^beta` becomes linear after
//! taking logs: `ln GDP = gamma t + alpha ln K + beta ln L + ln a`. The
//! design columns are fixed in the order `(t, ln K, ln L, intercept)` and the
//! solve goes through an orthogonal factorization (SVD), never the normal
//! equations: the trend and `ln K` columns are often nearly collinear and
//! squaring the condition number is avoidable. The SVD also yields the
//! condition number and the `(X'X)^-1` diagonal for standard errors directly.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{eval_gdp, CobbDouglasParams, FactorPoint};

/// Minimum panel length: strictly more observations than parameters.
pub const MIN_OBSERVATIONS: usize = 5;

/// Condition-number cap beyond which a fit is refused.
pub const CONDITION_CAP: f64 = 1e12;

/// One yearly observation. Positivity of the magnitudes is required wherever
/// logs are taken and surfaces there with the offending year.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EconRecord {
    pub year: i32,
    pub gdp: f64,
    pub capital: f64,
    pub labor: f64,
}

/// An ordered panel of observations with the year that maps to `t = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    records: Vec<EconRecord>,
    time_origin: i32,
}

impl Panel {
    pub fn new(records: Vec<EconRecord>, time_origin: i32) -> Result<Self> {
        if records.len() < MIN_OBSERVATIONS {
            return Err(Error::Precondition(format!(
                "need at least {MIN_OBSERVATIONS} observations, got {}",
                records.len()
            )));
        }
        if records.windows(2).any(|w| w[1].year <= w[0].year) {
            return Err(Error::InvalidInput(
                "panel years must be strictly increasing".to_string(),
            ));
        }
        Ok(Self {
            records,
            time_origin,
        })
    }

    /// Panel whose time origin is its first year, so `t >= 0` throughout.
    pub fn from_records(records: Vec<EconRecord>) -> Result<Self> {
        let origin = records
            .first()
            .map(|r| r.year)
            .ok_or_else(|| Error::Precondition("panel is empty".to_string()))?;
        Self::new(records, origin)
    }

    pub fn records(&self) -> &[EconRecord] {
        &self.records
    }

    pub fn time_origin(&self) -> i32 {
        self.time_origin
    }

    /// `t` value for a calendar year.
    pub fn time_offset(&self, year: i32) -> f64 {
        f64::from(year - self.time_origin)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Detrending mode for the log regressors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Detrend {
    /// Use the raw design.
    #[default]
    None,
    /// Replace each of `ln K`, `ln L` by its residual from a least-squares
    /// fit on `(1, t)` before the main regression.
    Linear,
}

impl fmt::Display for Detrend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Detrend::None => write!(f, "none"),
            Detrend::Linear => write!(f, "linear"),
        }
    }
}

impl FromStr for Detrend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Detrend::None),
            "linear" => Ok(Detrend::Linear),
            other => Err(Error::InvalidInput(format!(
                "unknown detrend mode `{other}` (expected none or linear)"
            ))),
        }
    }
}

/// Estimated parameters with diagnostics.
///
/// `std_errors` follow the design column order: `gamma`, `alpha`, `beta`,
/// `ln a`. Residuals are in log units.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub params: CobbDouglasParams,
    pub std_errors: [f64; 4],
    pub r_squared: f64,
    pub residuals: Vec<f64>,
    pub condition_number: f64,
    pub n_obs: usize,
    pub detrend: Detrend,
}

/// Builds the log-linear design. Row `i` is `[t_i, ln K_i, ln L_i, 1]` and
/// the response is `ln GDP_i`.
pub fn log_design(panel: &Panel) -> Result<(DMatrix<f64>, DVector<f64>)> {
    let n = panel.len();
    let mut design = DMatrix::zeros(n, 4);
    let mut response = DVector::zeros(n);
    for (i, record) in panel.records().iter().enumerate() {
        for (name, value) in [
            ("gdp", record.gdp),
            ("capital", record.capital),
            ("labor", record.labor),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Domain(format!(
                    "{name} must be positive to take logs, got {value} in year {}",
                    record.year
                )));
            }
        }
        design[(i, 0)] = panel.time_offset(record.year);
        design[(i, 1)] = record.capital.ln();
        design[(i, 2)] = record.labor.ln();
        design[(i, 3)] = 1.0;
        response[i] = record.gdp.ln();
    }
    Ok((design, response))
}

/// Least-squares fit of the four coefficients via SVD, with the given
/// condition-number cap.
pub fn fit_ols_with_cap(
    design: &DMatrix<f64>,
    response: &DVector<f64>,
    condition_cap: f64,
) -> Result<FitReport> {
    let n = design.nrows();
    if design.ncols() != 4 {
        return Err(Error::InvalidInput(format!(
            "design matrix must have 4 columns (t, ln K, ln L, intercept), got {}",
            design.ncols()
        )));
    }
    if n < MIN_OBSERVATIONS || response.len() != n {
        return Err(Error::Precondition(format!(
            "need at least {MIN_OBSERVATIONS} observations and matching response length, \
             got {n} rows and {} responses",
            response.len()
        )));
    }

    let svd = design.clone().svd(true, true);
    let sigma_max = svd.singular_values.max();
    let sigma_min = svd.singular_values.min();
    let condition_number = sigma_max / sigma_min;
    if condition_number.is_nan() || condition_number > condition_cap {
        return Err(Error::IllConditioned {
            condition: condition_number,
            cap: condition_cap,
        });
    }

    let coefficients = svd
        .solve(response, 0.0)
        .map_err(|message| Error::InvalidInput(format!("SVD solve failed: {message}")))?;
    let residuals_vec = response - design * &coefficients;
    let rss = residuals_vec.norm_squared();
    let mean_y = response.mean();
    let tss = response.iter().map(|y| (y - mean_y).powi(2)).sum::<f64>();
    let r_squared = if tss > 0.0 {
        1.0 - rss / tss
    } else if rss == 0.0 {
        1.0
    } else {
        0.0
    };

    // (X'X)^-1 = V S^-2 V'; only the diagonal is needed.
    let v_t = svd.v_t.as_ref().expect("SVD computed with V");
    let s2 = rss / (n - 4) as f64;
    let mut std_errors = [0.0f64; 4];
    for (j, err) in std_errors.iter_mut().enumerate() {
        let inv_diag: f64 = (0..4)
            .map(|k| (v_t[(k, j)] / svd.singular_values[k]).powi(2))
            .sum();
        *err = (s2 * inv_diag).sqrt();
    }

    let params = CobbDouglasParams::new(
        coefficients[3].exp(),
        coefficients[1],
        coefficients[2],
        coefficients[0],
    )
    .map_err(|e| Error::InvalidInput(format!("estimated parameters are inadmissible: {e}")))?;

    Ok(FitReport {
        params,
        std_errors,
        r_squared,
        residuals: residuals_vec.iter().copied().collect(),
        condition_number,
        n_obs: n,
        detrend: Detrend::None,
    })
}

/// [`fit_ols_with_cap`] at the default cap of `1e12`.
pub fn fit_ols(design: &DMatrix<f64>, response: &DVector<f64>) -> Result<FitReport> {
    fit_ols_with_cap(design, response, CONDITION_CAP)
}

/// Replaces `column` of the design by its residual from a least-squares fit
/// on `(1, t)`, where `t` is column 0.
fn residualize_against_trend(design: &mut DMatrix<f64>, column: usize) {
    let n = design.nrows();
    let t_mean = design.column(0).mean();
    let c_mean = design.column(column).mean();
    let mut stt = 0.0;
    let mut stc = 0.0;
    for i in 0..n {
        let dt = design[(i, 0)] - t_mean;
        stt += dt * dt;
        stc += dt * (design[(i, column)] - c_mean);
    }
    // stt > 0: panel years are strictly increasing.
    let slope = stc / stt;
    for i in 0..n {
        let fitted = c_mean + slope * (design[(i, 0)] - t_mean);
        design[(i, column)] -= fitted;
    }
}

/// Composes [`log_design`] and [`fit_ols_with_cap`], optionally detrending
/// the `ln K` and `ln L` columns first.
pub fn estimate_gdp_params_with_cap(
    panel: &Panel,
    detrend: Detrend,
    condition_cap: f64,
) -> Result<FitReport> {
    let (mut design, response) = log_design(panel)?;
    if detrend == Detrend::Linear {
        residualize_against_trend(&mut design, 1);
        residualize_against_trend(&mut design, 2);
    }
    let mut report = fit_ols_with_cap(&design, &response, condition_cap)?;
    report.detrend = detrend;
    Ok(report)
}

/// [`estimate_gdp_params_with_cap`] at the default condition cap.
pub fn estimate_gdp_params(panel: &Panel, detrend: Detrend) -> Result<FitReport> {
    estimate_gdp_params_with_cap(panel, detrend, CONDITION_CAP)
}

/// Generates a panel from known parameters over given factor paths, with
/// multiplicative log-normal noise from a seeded generator.
///
/// `gdp_i = GDP(t_i) * e^{eps_i}` with `eps_i ~ Normal(0, noise_sd^2)`;
/// `noise_sd = 0` reproduces the model exactly and identical seeds give
/// identical panels. Years run from `base_year`, which is also the panel's
/// time origin.
pub fn generate_synthetic(
    params: &CobbDouglasParams,
    base_year: i32,
    capital_path: &[f64],
    labor_path: &[f64],
    noise_sd: f64,
    seed: u64,
) -> Result<Panel> {
    if capital_path.len() != labor_path.len() {
        return Err(Error::Precondition(format!(
            "capital and labor paths differ in length: {} vs {}",
            capital_path.len(),
            labor_path.len()
        )));
    }
    if capital_path.len() < MIN_OBSERVATIONS {
        return Err(Error::Precondition(format!(
            "paths need at least {MIN_OBSERVATIONS} entries, got {}",
            capital_path.len()
        )));
    }
    if !(noise_sd.is_finite() && noise_sd >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "noise standard deviation must be nonnegative and finite, got {noise_sd}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(capital_path.len());
    for (i, (&capital, &labor)) in capital_path.iter().zip(labor_path).enumerate() {
        let point = FactorPoint::new(capital, labor)?;
        let noise: f64 = StandardNormal.sample(&mut rng);
        let gdp = eval_gdp(params, i as f64, point)? * (noise_sd * noise).exp();
        records.push(EconRecord {
            year: base_year + i as i32,
            gdp,
            capital,
            labor,
        });
    }
    Panel::new(records, base_year)
}
