//! Contribution-share decomposition and fitted or forecast GDP evaluation.
//!
//! The decomposition attributes growth to technology, capital, and labor by
//! the elasticity ratios `gamma / (gamma + alpha + beta)`,
//! `alpha / (gamma + alpha + beta)`, and `beta / (gamma + alpha + beta)`.
//! This is a ratio of elasticities, not a Solow-residual growth-accounting
//! split: the two coincide only under special factor paths, and the choice
//! here is deliberate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimate::Panel;
use crate::model::{eval_gdp, CobbDouglasParams, FactorPoint};

/// Fractions attributing growth to technology, capital, and labor.
/// Nonnegative; sums to 1 within 1e-12.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContributionShares {
    tech: f64,
    capital: f64,
    labor: f64,
}

impl ContributionShares {
    pub fn tech(&self) -> f64 {
        self.tech
    }

    pub fn capital(&self) -> f64 {
        self.capital
    }

    pub fn labor(&self) -> f64 {
        self.labor
    }
}

/// Elasticity-ratio contribution shares.
///
/// Rejects `gamma < 0`: the decomposition is defined as fractions of a
/// positive total, and a signed variant would be a different statistic.
pub fn contribution_shares(params: &CobbDouglasParams) -> Result<ContributionShares> {
    let gamma = params.gamma();
    if gamma < 0.0 {
        return Err(Error::InvalidInput(format!(
            "contribution shares need gamma >= 0 (fractions of a positive total), got {gamma}"
        )));
    }
    let total = gamma + params.alpha() + params.beta();
    if !(total.is_finite() && total > 0.0) {
        return Err(Error::InvalidInput(format!(
            "contribution shares need gamma + alpha + beta > 0, got {total}"
        )));
    }
    Ok(ContributionShares {
        tech: gamma / total,
        capital: params.alpha() / total,
        labor: params.beta() / total,
    })
}

/// One row of an actual-versus-fitted comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FittedRow {
    pub year: i32,
    pub actual: f64,
    pub fitted: f64,
    pub log_residual: f64,
}

/// Evaluates the fitted GDP path over a panel and reports log residuals
/// `ln(actual) - ln(fitted)` per year.
pub fn fitted_table(panel: &Panel, params: &CobbDouglasParams) -> Result<Vec<FittedRow>> {
    panel
        .records()
        .iter()
        .map(|record| {
            if !(record.gdp.is_finite() && record.gdp > 0.0) {
                return Err(Error::Domain(format!(
                    "gdp must be positive to take logs, got {} in year {}",
                    record.gdp, record.year
                )));
            }
            let point = FactorPoint::new(record.capital, record.labor)?;
            let fitted = eval_gdp(params, panel.time_offset(record.year), point)?;
            Ok(FittedRow {
                year: record.year,
                actual: record.gdp,
                fitted,
                log_residual: record.gdp.ln() - fitted.ln(),
            })
        })
        .collect()
}

/// Evaluates the GDP function over `(t, point)` scenarios.
///
/// Negative `t` is permitted but lies outside the usual fitted domain
/// (`t >= 0`); callers presenting results should flag such rows as
/// extrapolation.
pub fn forecast(
    params: &CobbDouglasParams,
    scenarios: &[(f64, FactorPoint)],
) -> Result<Vec<f64>> {
    scenarios
        .iter()
        .map(|&(t, point)| eval_gdp(params, t, point))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimate::generate_synthetic;
    use approx::assert_relative_eq;

    fn params(a: f64, alpha: f64, beta: f64, gamma: f64) -> CobbDouglasParams {
        CobbDouglasParams::new(a, alpha, beta, gamma).unwrap()
    }

    #[test]
    fn shares_of_fitted_vietnam_parameters() {
        // 0.053/2.491, 0.103/2.491, 2.335/2.491.
        let shares = contribution_shares(&params(0.000005, 0.103, 2.335, 0.053)).unwrap();
        assert_relative_eq!(shares.tech(), 0.02127659574468085, max_relative = 1e-12);
        assert_relative_eq!(shares.capital(), 0.041348855881172215, max_relative = 1e-12);
        assert_relative_eq!(shares.labor(), 0.9373745483741469, max_relative = 1e-12);
        assert!((shares.tech() + shares.capital() + shares.labor() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn shares_symmetric_case() {
        let shares = contribution_shares(&params(1.0, 1.0, 1.0, 1.0)).unwrap();
        assert_relative_eq!(shares.tech(), 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(shares.capital(), 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(shares.labor(), 1.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn shares_zero_technology() {
        let shares = contribution_shares(&params(1.0, 0.5, 0.5, 0.0)).unwrap();
        assert_eq!(shares.tech(), 0.0);
        assert_relative_eq!(shares.capital(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(shares.labor(), 0.5, max_relative = 1e-15);
    }

    #[test]
    fn shares_reject_negative_gamma() {
        let err = contribution_shares(&params(1.0, 0.5, 0.5, -0.01)).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)), "got {err:?}");
    }

    #[test]
    fn fitted_table_zero_residuals_on_model_data() {
        let truth = params(0.021, 0.3564, 0.7783, 0.0105);
        let (k, l): (Vec<f64>, Vec<f64>) = (0..8)
            .map(|i| {
                let x = i as f64;
                (100.0 + 7.0 * x + x.sin(), 50.0 + 2.0 * x + x.cos())
            })
            .unzip();
        let panel = generate_synthetic(&truth, 1990, &k, &l, 0.0, 0).unwrap();
        let rows = fitted_table(&panel, &truth).unwrap();
        assert_eq!(rows.len(), 8);
        for row in &rows {
            assert!(row.log_residual.abs() <= 1e-12, "residual {}", row.log_residual);
            assert_relative_eq!(row.actual, row.fitted, max_relative = 1e-12);
        }
    }

    #[test]
    fn doubling_actual_shifts_residual_by_ln_two() {
        let truth = params(1.0, 0.4, 0.8, 0.01);
        let (k, l): (Vec<f64>, Vec<f64>) =
            (0..6).map(|i| (10.0 + i as f64, 20.0 + i as f64)).unzip();
        let panel = generate_synthetic(&truth, 2000, &k, &l, 0.0, 0).unwrap();
        let base_rows = fitted_table(&panel, &truth).unwrap();

        let mut records = panel.records().to_vec();
        records[2].gdp *= 2.0;
        let doubled = Panel::new(records, panel.time_origin()).unwrap();
        let rows = fitted_table(&doubled, &truth).unwrap();
        assert_relative_eq!(
            rows[2].log_residual - base_rows[2].log_residual,
            std::f64::consts::LN_2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn forecast_examples() {
        // Vietnam fit at the origin point.
        let vietnam = params(0.000005, 0.103, 2.335, 0.053);
        let unit = FactorPoint::new(1.0, 1.0).unwrap();
        let out = forecast(&vietnam, &[(0.0, unit)]).unwrap();
        assert_relative_eq!(out[0], 0.000005, max_relative = 1e-12);

        // Romania fit one year in: 0.021 * e^{0.0105} = 0.021221661687345558.
        let romania = params(0.021, 0.3564, 0.7783, 0.0105);
        let out = forecast(&romania, &[(1.0, unit)]).unwrap();
        assert_relative_eq!(out[0], 0.021221661687345558, max_relative = 1e-12);

        // Empty scenario list is fine.
        assert!(forecast(&romania, &[]).unwrap().is_empty());
    }

    #[test]
    fn shares_scale_invariance() {
        let base = contribution_shares(&params(1.0, 0.2, 1.4, 0.05)).unwrap();
        for c in [0.5, 2.0, 17.0] {
            let scaled =
                contribution_shares(&params(1.0, 0.2 * c, 1.4 * c, 0.05 * c)).unwrap();
            assert_relative_eq!(scaled.tech(), base.tech(), max_relative = 1e-12);
            assert_relative_eq!(scaled.capital(), base.capital(), max_relative = 1e-12);
            assert_relative_eq!(scaled.labor(), base.labor(), max_relative = 1e-12);
        }
    }
}
