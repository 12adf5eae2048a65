//! JSON report assembly and deterministic serialization.
//!
//! Reports are serialized with a custom formatter that renders every float
//! with 17 significant digits, so identical inputs always produce
//! byte-identical documents and every value survives a JSON round trip
//! exactly.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::analyze::{ContributionShares, FittedRow};
use crate::error::{Error, Result};
use crate::estimate::{Detrend, FitReport};
use crate::model::CobbDouglasParams;

/// Version string stamped into every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Echo of a run's configuration, embedded verbatim in the report. Units are
/// declared, never interpreted: the `units` note is free text.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub input_path: Option<String>,
    pub capital_path: Option<String>,
    pub sigma: Option<f64>,
    pub initial_capital: Option<f64>,
    pub steady_state_growth: Option<f64>,
    pub time_origin: Option<i32>,
    pub detrend: Option<Detrend>,
    pub tolerances: BTreeMap<String, f64>,
    pub seed: Option<u64>,
    pub units: Option<String>,
    pub output_path: Option<String>,
}

/// Standard errors keyed by coefficient, in design-column order.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct StdErrors {
    pub gamma: f64,
    pub alpha: f64,
    pub beta: f64,
    pub ln_a: f64,
}

/// The single JSON document emitted by a fit run.
///
/// `shares` is `null` when the fitted `gamma` is negative: the
/// contribution-share decomposition is only defined for nonnegative rates.
#[derive(Debug, Clone, Serialize)]
pub struct FitDocument {
    pub params: CobbDouglasParams,
    pub std_errors: StdErrors,
    pub r_squared: f64,
    pub condition_number: f64,
    pub shares: Option<ContributionShares>,
    pub fitted: Vec<FittedRow>,
    pub config: RunConfig,
    pub tool_version: String,
}

impl FitDocument {
    pub fn new(
        report: &FitReport,
        shares: Option<ContributionShares>,
        fitted: Vec<FittedRow>,
        config: RunConfig,
    ) -> Self {
        Self {
            params: report.params,
            std_errors: StdErrors {
                gamma: report.std_errors[0],
                alpha: report.std_errors[1],
                beta: report.std_errors[2],
                ln_a: report.std_errors[3],
            },
            r_squared: report.r_squared,
            condition_number: report.condition_number,
            shares,
            fitted,
            config,
            tool_version: TOOL_VERSION.to_string(),
        }
    }
}

/// Formatter rendering every `f64` with 17 significant digits.
struct SignificantDigitsFormatter;

impl serde_json::ser::Formatter for SignificantDigitsFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any document as a single JSON object with deterministic float
/// formatting, terminated by a newline.
pub fn write_json<W: Write, T: Serialize>(mut writer: W, document: &T) -> Result<()> {
    let to_error = |e: std::io::Error| Error::Io {
        path: "<report stream>".to_string(),
        source: e,
    };
    let mut serializer =
        serde_json::Serializer::with_formatter(&mut writer, SignificantDigitsFormatter);
    document
        .serialize(&mut serializer)
        .map_err(|e| to_error(std::io::Error::other(e)))?;
    writer.write_all(b"\n").map_err(to_error)
}

/// Renders a document to a JSON string (the exact bytes [`write_json`]
/// would emit).
pub fn to_json_string<T: Serialize>(document: &T) -> Result<String> {
    let mut buffer = Vec::new();
    write_json(&mut buffer, document)?;
    String::from_utf8(buffer).map_err(|e| Error::InvalidInput(format!("non-UTF8 JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::contribution_shares;
    use crate::estimate::{estimate_gdp_params, generate_synthetic};

    fn sample_document() -> FitDocument {
        let truth = CobbDouglasParams::new(0.021, 0.3564, 0.7783, 0.0105).unwrap();
        let (k, l): (Vec<f64>, Vec<f64>) = (0..10)
            .map(|i| {
                let x = i as f64;
                (100.0 + 9.0 * x + 3.0 * x.sin(), 50.0 + 2.0 * x + x.cos())
            })
            .unzip();
        let panel = generate_synthetic(&truth, 1990, &k, &l, 0.0, 0).unwrap();
        let report = estimate_gdp_params(&panel, Detrend::None).unwrap();
        let shares = contribution_shares(&report.params).ok();
        let fitted = crate::analyze::fitted_table(&panel, &report.params).unwrap();
        FitDocument::new(&report, shares, fitted, RunConfig::default())
    }

    #[test]
    fn identical_inputs_serialize_byte_identically() {
        let a = to_json_string(&sample_document()).unwrap();
        let b = to_json_string(&sample_document()).unwrap();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn floats_round_trip_through_json() {
        let doc = sample_document();
        let text = to_json_string(&doc).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let r2 = value["r_squared"].as_f64().unwrap();
        assert_eq!(r2.to_bits(), doc.r_squared.to_bits());
        assert!((r2 - 1.0).abs() <= 1e-12);
        let a = value["params"]["a"].as_f64().unwrap();
        assert_eq!(a.to_bits(), doc.params.a().to_bits());
    }

    #[test]
    fn empty_fitted_table_serializes_as_empty_array() {
        let mut doc = sample_document();
        doc.fitted.clear();
        let text = to_json_string(&doc).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(value["fitted"].as_array().unwrap().is_empty());
    }

    #[test]
    fn missing_shares_serialize_as_null() {
        let mut doc = sample_document();
        doc.shares = None;
        let text = to_json_string(&doc).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(value["shares"].is_null());
    }

    #[test]
    fn report_carries_tool_version_and_config_echo() {
        let mut doc = sample_document();
        doc.config.units = Some("billions of 2010 VND".to_string());
        doc.config.sigma = Some(0.05);
        let text = to_json_string(&doc).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["tool_version"].as_str().unwrap(), TOOL_VERSION);
        assert_eq!(
            value["config"]["units"].as_str().unwrap(),
            "billions of 2010 VND"
        );
    }
}
