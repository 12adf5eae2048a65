//! File formats: CSV ingestion and deterministic JSON report emission.
//!
//! All floating-point output uses 17 significant digits (`{:.16e}`), enough
//! to reproduce any `f64` exactly on re-parse, so write-then-read round
//! trips are lossless and identical inputs produce byte-identical files.
//! Decimal separators are dots; comma-decimal inputs are rejected as parse
//! errors rather than silently converted.

pub mod csv;
pub mod report;

/// A real number rendered with 17 significant digits.
pub(crate) fn fmt_real(value: f64) -> String {
    format!("{value:.16e}")
}
