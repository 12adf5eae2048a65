//! CSV readers and writers for panel, capital, scenario, and forecast data.
//!
//! Readers look columns up by header name, so column order is free and extra
//! columns are ignored; LF and CRLF both parse. Year-keyed tables are sorted
//! ascending by year after load and duplicate years are rejected.

use std::fs::File;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::capital::CapitalSeries;
use crate::error::{Error, Result};
use crate::io::fmt_real;
use crate::model::FactorPoint;

/// One raw panel row as read from disk: capital is not yet constructed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PanelRow {
    pub year: i32,
    pub gdp: f64,
    pub investment: f64,
    pub labor: f64,
}

/// One scenario row for forecasting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScenarioRow {
    pub t: f64,
    pub capital: f64,
    pub labor: f64,
}

fn display_path(path: &Path) -> String {
    path.display().to_string()
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: display_path(path),
        source,
    }
}

/// Opens a CSV file and resolves the given required column names to indices.
fn open_columns(path: &Path, required: &[&str]) -> Result<(csv::Reader<File>, Vec<usize>)> {
    let file = File::open(path).map_err(|e| io_error(path, e))?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);
    let headers = reader
        .headers()
        .map_err(|e| Error::Integrity {
            path: display_path(path),
            message: format!("cannot read header: {e}"),
        })?
        .clone();
    let mut indices = Vec::with_capacity(required.len());
    for &name in required {
        let index = headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::MissingColumn {
                path: display_path(path),
                column: name.to_string(),
            })?;
        indices.push(index);
    }
    Ok((reader, indices))
}

fn parse_cell<T>(path: &Path, row: usize, column: &str, raw: &str) -> Result<T>
where
    T: FromStr,
    T::Err: std::fmt::Display,
{
    raw.trim().parse::<T>().map_err(|e| Error::Parse {
        path: display_path(path),
        row,
        column: column.to_string(),
        message: format!("cannot parse `{raw}`: {e}"),
    })
}

fn parse_real(path: &Path, row: usize, column: &str, raw: &str) -> Result<f64> {
    let value: f64 = parse_cell(path, row, column, raw)?;
    if !value.is_finite() {
        return Err(Error::Parse {
            path: display_path(path),
            row,
            column: column.to_string(),
            message: format!("`{raw}` is not a finite real"),
        });
    }
    Ok(value)
}

/// Reads rows of named columns, the first of which must be an integer year;
/// the rest parse as finite reals. Returns `(year, values)` pairs sorted
/// ascending by year, rejecting duplicates.
fn read_year_table(path: &Path, columns: &[&str]) -> Result<Vec<(i32, Vec<f64>)>> {
    let (mut reader, indices) = open_columns(path, columns)?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| Error::Integrity {
            path: display_path(path),
            message: format!("malformed record at row {row}: {e}"),
        })?;
        let cell = |index: usize| record.get(index).unwrap_or("");
        let year: i32 = parse_cell(path, row, columns[0], cell(indices[0]))?;
        let values = indices[1..]
            .iter()
            .zip(&columns[1..])
            .map(|(&index, &name)| parse_real(path, row, name, cell(index)))
            .collect::<Result<Vec<f64>>>()?;
        rows.push((year, values));
    }
    rows.sort_by_key(|(year, _)| *year);
    if let Some(w) = rows.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Integrity {
            path: display_path(path),
            message: format!("duplicate year {}", w[0].0),
        });
    }
    Ok(rows)
}

/// Reads a panel CSV with header `year,gdp,investment,labor`.
pub fn read_panel_csv(path: &Path) -> Result<Vec<PanelRow>> {
    let rows = read_year_table(path, &["year", "gdp", "investment", "labor"])?;
    Ok(rows
        .into_iter()
        .map(|(year, v)| PanelRow {
            year,
            gdp: v[0],
            investment: v[1],
            labor: v[2],
        })
        .collect())
}

/// Reads `(year, investment)` pairs; a full panel CSV works as input.
pub fn read_investment_csv(path: &Path) -> Result<Vec<(i32, f64)>> {
    let rows = read_year_table(path, &["year", "investment"])?;
    Ok(rows.into_iter().map(|(year, v)| (year, v[0])).collect())
}

/// Reads `(year, gdp, labor)` triples for fits against prebuilt capital;
/// the investment column is not required, so both a full panel CSV and a
/// three-column file work.
pub fn read_gdp_labor_csv(path: &Path) -> Result<Vec<(i32, f64, f64)>> {
    let rows = read_year_table(path, &["year", "gdp", "labor"])?;
    Ok(rows
        .into_iter()
        .map(|(year, v)| (year, v[0], v[1]))
        .collect())
}

/// Reads a capital CSV with header `year,capital`.
pub fn read_capital_csv(path: &Path) -> Result<Vec<(i32, f64)>> {
    let rows = read_year_table(path, &["year", "capital"])?;
    Ok(rows.into_iter().map(|(year, v)| (year, v[0])).collect())
}

/// Reads a scenario CSV with header `t,capital,labor`, preserving row order.
pub fn read_scenario_csv(path: &Path) -> Result<Vec<ScenarioRow>> {
    let (mut reader, indices) = open_columns(path, &["t", "capital", "labor"])?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| Error::Integrity {
            path: display_path(path),
            message: format!("malformed record at row {row}: {e}"),
        })?;
        let cell = |index: usize| record.get(index).unwrap_or("");
        rows.push(ScenarioRow {
            t: parse_real(path, row, "t", cell(indices[0]))?,
            capital: parse_real(path, row, "capital", cell(indices[1]))?,
            labor: parse_real(path, row, "labor", cell(indices[2]))?,
        });
    }
    Ok(rows)
}

/// Writes a panel CSV with header `year,gdp,investment,labor`.
pub fn write_panel_csv<W: Write>(mut writer: W, rows: &[PanelRow]) -> std::io::Result<()> {
    writeln!(writer, "year,gdp,investment,labor")?;
    for row in rows {
        writeln!(
            writer,
            "{},{},{},{}",
            row.year,
            fmt_real(row.gdp),
            fmt_real(row.investment),
            fmt_real(row.labor)
        )?;
    }
    Ok(())
}

/// Writes a capital CSV with header `year,capital`.
pub fn write_capital_csv<W: Write>(mut writer: W, series: &CapitalSeries) -> std::io::Result<()> {
    writeln!(writer, "year,capital")?;
    for (year, value) in series.year_values() {
        writeln!(writer, "{},{}", year, fmt_real(value))?;
    }
    Ok(())
}

/// Writes a forecast CSV with header `t,capital,labor,gdp`, echoing each
/// scenario next to its forecast value.
pub fn write_forecast_csv<W: Write>(
    mut writer: W,
    scenarios: &[(f64, FactorPoint)],
    forecasts: &[f64],
) -> std::io::Result<()> {
    writeln!(writer, "t,capital,labor,gdp")?;
    for ((t, point), gdp) in scenarios.iter().zip(forecasts) {
        writeln!(
            writer,
            "{},{},{},{}",
            fmt_real(*t),
            fmt_real(point.capital()),
            fmt_real(point.labor()),
            fmt_real(*gdp)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(content.as_bytes()).unwrap();
        file.flush().unwrap();
        file
    }

    #[test]
    fn header_only_panel_is_empty() {
        let file = write_temp("year,gdp,investment,labor\n");
        assert!(read_panel_csv(file.path()).unwrap().is_empty());
    }

    #[test]
    fn panel_row_parses_directly() {
        let file = write_temp("year,gdp,investment,labor\n1995,100.5,20.1,35.2\n");
        let rows = read_panel_csv(file.path()).unwrap();
        assert_eq!(
            rows,
            vec![PanelRow {
                year: 1995,
                gdp: 100.5,
                investment: 20.1,
                labor: 35.2
            }]
        );
    }

    #[test]
    fn rows_are_sorted_by_year() {
        let file = write_temp(
            "year,gdp,investment,labor\n1997,3,3,3\n1995,1,1,1\n1996,2,2,2\n",
        );
        let years: Vec<i32> = read_panel_csv(file.path())
            .unwrap()
            .iter()
            .map(|r| r.year)
            .collect();
        assert_eq!(years, vec![1995, 1996, 1997]);
    }

    #[test]
    fn parse_error_names_row_and_column() {
        let file = write_temp("year,gdp,investment,labor\n1995,abc,20,35\n");
        let err = read_panel_csv(file.path()).unwrap_err();
        match err {
            Error::Parse { row, column, .. } => {
                assert_eq!(row, 1);
                assert_eq!(column, "gdp");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_column_is_named() {
        let file = write_temp("year,gdp,labor\n1995,1,1\n");
        let err = read_panel_csv(file.path()).unwrap_err();
        match err {
            Error::MissingColumn { column, .. } => assert_eq!(column, "investment"),
            other => panic!("expected missing column, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_year_rejected() {
        let file = write_temp("year,gdp,investment,labor\n1995,1,1,1\n1995,2,2,2\n");
        let err = read_panel_csv(file.path()).unwrap_err();
        match err {
            Error::Integrity { message, .. } => assert!(message.contains("1995"), "got {message}"),
            other => panic!("expected integrity error, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_cells_rejected() {
        let file = write_temp("year,gdp,investment,labor\n1995,NaN,1,1\n");
        assert!(read_panel_csv(file.path()).is_err());
        let file = write_temp("year,gdp,investment,labor\n1995,inf,1,1\n");
        assert!(read_panel_csv(file.path()).is_err());
    }

    #[test]
    fn comma_decimals_rejected() {
        let file = write_temp("year,gdp,investment,labor\n1995,\"2,1\",1,1\n");
        assert!(matches!(
            read_panel_csv(file.path()).unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn crlf_line_endings_accepted() {
        let file = write_temp("year,gdp,investment,labor\r\n1995,1.5,2.5,3.5\r\n");
        let rows = read_panel_csv(file.path()).unwrap();
        assert_eq!(rows[0].gdp, 1.5);
    }

    #[test]
    fn columns_resolve_by_name_not_position() {
        let file = write_temp("labor,year,gdp,investment\n35.2,1995,100.5,20.1\n");
        let rows = read_panel_csv(file.path()).unwrap();
        assert_eq!(rows[0].labor, 35.2);
        assert_eq!(rows[0].gdp, 100.5);
    }

    #[test]
    fn panel_round_trip_is_exact() {
        let rows = vec![
            PanelRow {
                year: 1995,
                gdp: 0.1 + 0.2, // deliberately not representable "nicely"
                investment: 1.0 / 3.0,
                labor: 35.2,
            },
            PanelRow {
                year: 1996,
                gdp: 5e-324, // smallest subnormal still round-trips
                investment: 1.7976931348623157e308,
                labor: 1.0,
            },
        ];
        let mut buffer = Vec::new();
        write_panel_csv(&mut buffer, &rows).unwrap();
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(&buffer).unwrap();
        file.flush().unwrap();
        let back = read_panel_csv(file.path()).unwrap();
        assert_eq!(rows.len(), back.len());
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(a.year, b.year);
            assert_eq!(a.gdp.to_bits(), b.gdp.to_bits());
            assert_eq!(a.investment.to_bits(), b.investment.to_bits());
            assert_eq!(a.labor.to_bits(), b.labor.to_bits());
        }
    }

    #[test]
    fn scenario_rows_keep_file_order() {
        let file = write_temp("t,capital,labor\n2,20,2\n0,10,1\n-1,5,0.5\n");
        let rows = read_scenario_csv(file.path()).unwrap();
        let ts: Vec<f64> = rows.iter().map(|r| r.t).collect();
        assert_eq!(ts, vec![2.0, 0.0, -1.0]);
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = read_panel_csv(Path::new("/nonexistent/panel.csv")).unwrap_err();
        assert!(matches!(err, Error::Io { .. }), "got {err:?}");
    }
}
