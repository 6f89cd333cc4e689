//! Text formats: scalar rendering, CSV matrices, and whitespace-separated vector files.

use std::fmt::Write as _;

use crate::CliError;

/// Renders `x` with `precision` digits after the decimal point, trailing zeros trimmed.
///
/// Magnitudes of 1e15 and above, and nonzero values that would round to zero, fall back to
/// scientific notation with `precision` significant digits.
pub fn scalar(x: f64, precision: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let tiny = 0.5 * 10f64.powi(-(precision as i32));
    if x.abs() >= 1e15 || x.abs() < tiny {
        let s = format!("{:.*e}", precision.saturating_sub(1), x);
        let (mantissa, exp) = s.split_once('e').unwrap();
        return format!("{}e{}", trim_fraction(mantissa), exp);
    }
    let s = trim_fraction(&format!("{x:.precision$}"));
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// One CSV row with `, ` separators.
pub fn csv_row(values: &[f64], precision: usize) -> String {
    values
        .iter()
        .map(|&v| scalar(v, precision))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn csv_matrix<'a>(rows: impl IntoIterator<Item = &'a [f64]>, precision: usize) -> String {
    let mut out = String::new();
    for row in rows {
        writeln!(out, "{}", csv_row(row, precision)).unwrap();
    }
    out
}

/// Parses a right-hand-side file: one line per unknown, one whitespace-separated column per
/// right-hand side. Blank lines are ignored. Returns the columns.
pub fn parse_columns(text: &str) -> Result<Vec<Vec<f64>>, CliError> {
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if columns.is_empty() {
            columns = vec![Vec::new(); fields.len()];
        } else if fields.len() != columns.len() {
            return Err(CliError::parse(format!(
                "line {} has {} columns, expected {}",
                lineno + 1,
                fields.len(),
                columns.len()
            )));
        }
        for (col, field) in columns.iter_mut().zip(fields) {
            let v: f64 = field.parse().map_err(|_| {
                CliError::parse(format!("line {}: '{field}' is not a number", lineno + 1))
            })?;
            col.push(v);
        }
    }
    if columns.is_empty() {
        return Err(CliError::parse("right-hand side file is empty".into()));
    }
    Ok(columns)
}

/// Writes columns back in the same line-per-unknown layout, separated by single spaces.
pub fn write_columns(columns: &[Vec<f64>], precision: usize) -> String {
    let rows = columns.first().map_or(0, Vec::len);
    let mut out = String::new();
    for i in 0..rows {
        let line: Vec<String> = columns.iter().map(|c| scalar(c[i], precision)).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// Parses a dense CSV matrix (comma and/or whitespace separated).
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<f64>>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(lineno, line)| {
            line.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|f| !f.is_empty())
                .map(|f| {
                    f.parse::<f64>().map_err(|_| {
                        CliError::parse(format!("line {}: '{f}' is not a number", lineno + 1))
                    })
                })
                .collect()
        })
        .collect()
}
