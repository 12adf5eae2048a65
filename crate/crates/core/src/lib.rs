//! Growth-accounting toolkit.
//!
//! Four pieces fit together:
//!
//! - [`model`]: Cobb-Douglas production and GDP functions plus isoquant
//!   sampling, evaluated in log space.
//! - [`progress`]: one-parameter technical-progress families with numerical
//!   verification of the group axioms (composition, inverse, identity,
//!   factor independence) and a holotheticity check based on isoquant
//!   preservation.
//! - [`capital`]: perpetual-inventory construction of capital stock from
//!   investment.
//! - [`estimate`] / [`analyze`]: log-linear least-squares estimation of
//!   `GDP(t) = a e^{gamma t} K^alpha L^beta` with diagnostics, a seeded
//!   synthetic-data generator, contribution-share decomposition, and
//!   fitted or forecast GDP paths.
//!
//! [`io`] and [`cli`] wrap everything into reproducible CSV-in, JSON-out
//! pipelines; see the `liegrowth` binary.

pub mod analyze;
pub mod capital;
pub mod cli;
pub mod error;
pub mod estimate;
pub mod io;
pub mod model;
pub mod progress;

pub use error::{Error, Result};
