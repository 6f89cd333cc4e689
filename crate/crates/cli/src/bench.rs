//! Timing harness for the O(n) solve path.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use circkr::{decompose, solve, SystemSpec64};
use clap::Args;

use crate::{CliError, Outcome};

/// Unknowns processed per timed repetition; small orders repeat the solve to reach it.
const WORK_PER_REP: usize = 1 << 20;

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated matrix orders
    #[arg(long, value_delimiter = ',', default_values_t = [4096usize, 8192, 16384, 32768, 65536])]
    pub sizes: Vec<usize>,
    /// Normalized diagonal c / a (a = 1)
    #[arg(long, default_value_t = 2.0001, allow_negative_numbers = true)]
    pub d: f64,
    /// Timed repetitions per order; the median is reported
    #[arg(long, default_value_t = 10)]
    pub reps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub factor_seconds: f64,
    pub solve_seconds: f64,
}

impl BenchRow {
    pub fn ns_per_unknown(&self) -> f64 {
        self.solve_seconds * 1e9 / self.n as f64
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        0.5 * (xs[m - 1] + xs[m])
    }
}

/// Least-squares slope of `ln t` against `ln n`.
pub fn loglog_slope(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.solve_seconds.ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        None
    } else {
        Some(sxy / sxx)
    }
}

pub fn measure(n: usize, d: f64, reps: usize) -> Result<BenchRow, CliError> {
    let spec = SystemSpec64::new(n, d, 1.0)?;
    let start = Instant::now();
    let fct = decompose(&spec).map_err(|e| {
        let mut err = CliError::from(e.clone());
        if let circkr::Error::Overflow { max_safe_order, .. } = e {
            err.detail = format!(
                "{}; use sizes up to {max_safe_order} or a d closer to 2",
                err.detail
            );
        }
        err
    })?;
    let factor_seconds = start.elapsed().as_secs_f64();

    let b: Vec<f64> = (0..n).map(|i| ((i % 7) as f64) - 3.0).collect();
    let inner = (WORK_PER_REP / n).max(1);
    // one untimed solve to fault in pages and surface numeric errors
    solve(&fct, &b)?;
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let mut total = Duration::ZERO;
        for _ in 0..inner {
            let rhs = black_box(&b);
            let t = Instant::now();
            let x = solve(&fct, rhs);
            total += t.elapsed();
            black_box(x)?;
        }
        samples.push(total.as_secs_f64() / inner as f64);
    }
    Ok(BenchRow {
        n,
        factor_seconds,
        solve_seconds: median(samples),
    })
}

pub fn run(args: &BenchArgs) -> Result<Outcome, CliError> {
    if args.reps == 0 {
        return Err(CliError::new("InvalidSpec", "--reps must be at least 1".into(), crate::EXIT_INVALID));
    }
    if args.sizes.is_empty() {
        return Err(CliError::new("InvalidSpec", "--sizes is empty".into(), crate::EXIT_INVALID));
    }
    let mut rows = Vec::with_capacity(args.sizes.len());
    for &n in &args.sizes {
        rows.push(measure(n, args.d, args.reps)?);
    }

    let mut out = String::new();
    writeln!(out, "# d = {}, reps = {}, median per solve", args.d, args.reps).unwrap();
    writeln!(out, "n, median solve seconds, ns per unknown, factor seconds").unwrap();
    for r in &rows {
        writeln!(
            out,
            "{}, {:.6e}, {:.3}, {:.6e}",
            r.n,
            r.solve_seconds,
            r.ns_per_unknown(),
            r.factor_seconds
        )
        .unwrap();
    }
    match loglog_slope(&rows) {
        Some(s) => writeln!(out, "log-log slope = {s:.4}").unwrap(),
        None => writeln!(out, "log-log slope = n/a").unwrap(),
    }
    Ok(Outcome { stdout: out, code: 0 })
}
