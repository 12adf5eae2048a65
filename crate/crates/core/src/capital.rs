//! Perpetual-inventory construction of the capital stock from investment.
//!
//! The recursion is `K(t) = K(t-1) + I(t) - sigma (I(t)/2 + K(t-1))`, i.e.
//! last year's stock depreciates at rate `sigma` and the year's gross
//! investment arrives mid-year on average, so half of it depreciates too.

use serde::Serialize;

use crate::error::{Error, Result};

/// Seed and depreciation rate for the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CapitalConfig {
    initial_capital: f64,
    sigma: f64,
}

impl CapitalConfig {
    pub fn new(initial_capital: f64, sigma: f64) -> Result<Self> {
        if !(initial_capital.is_finite() && initial_capital > 0.0) {
            return Err(Error::InvalidInput(format!(
                "initial capital must be positive and finite, got {initial_capital}"
            )));
        }
        if !(sigma.is_finite() && (0.0..=1.0).contains(&sigma)) {
            return Err(Error::InvalidInput(format!(
                "depreciation rate sigma must lie in [0, 1], got {sigma}"
            )));
        }
        Ok(Self {
            initial_capital,
            sigma,
        })
    }

    pub fn initial_capital(&self) -> f64 {
        self.initial_capital
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// A constructed capital path, one value per year starting at `base_year`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CapitalSeries {
    base_year: i32,
    values: Vec<f64>,
}

impl CapitalSeries {
    pub fn base_year(&self) -> i32 {
        self.base_year
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Iterates `(year, capital)` pairs.
    pub fn year_values(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.base_year + i as i32, v))
    }
}

/// One year of the recursion, evaluated in its literal operation order so a
/// series fold is reproducible bit for bit against a naive loop.
///
/// Algebraically this is `(1 - sigma) K(t-1) + (1 - sigma/2) I(t)`.
pub fn step(k_prev: f64, investment: f64, sigma: f64) -> f64 {
    k_prev + investment - sigma * (investment / 2.0 + k_prev)
}

/// Folds [`step`] over the investment series.
///
/// `values[0]` corresponds to `base_year` and is one step past the seed
/// stock. Fails with the offending year if the stock ever leaves the
/// positive range (only possible at `sigma = 1` with zero investment).
pub fn build_series(
    config: &CapitalConfig,
    base_year: i32,
    investments: &[f64],
) -> Result<CapitalSeries> {
    if investments.is_empty() {
        return Err(Error::Precondition(
            "investment series is empty; need at least one year".to_string(),
        ));
    }
    let mut values = Vec::with_capacity(investments.len());
    let mut k = config.initial_capital;
    for (i, &investment) in investments.iter().enumerate() {
        let year = base_year + i as i32;
        if !(investment.is_finite() && investment >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "investment must be nonnegative and finite, got {investment} in year {year}"
            )));
        }
        k = step(k, investment, config.sigma);
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::DegenerateCapital { year, value: k });
        }
        values.push(k);
    }
    Ok(CapitalSeries { base_year, values })
}

/// Heuristic steady-state seed `K0 = I_first / (g + sigma)` for a supplied
/// long-run investment growth rate `g`. Useful when no base-year stock is
/// observed; the choice should be reported alongside any estimates built
/// on it.
pub fn steady_state_seed(first_investment: f64, growth: f64, sigma: f64) -> Result<f64> {
    if !(first_investment.is_finite() && first_investment > 0.0) {
        return Err(Error::InvalidInput(format!(
            "first investment must be positive and finite, got {first_investment}"
        )));
    }
    if !growth.is_finite() || growth + sigma <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "steady-state seed needs g + sigma > 0, got g = {growth}, sigma = {sigma}"
        )));
    }
    Ok(first_investment / (growth + sigma))
}
