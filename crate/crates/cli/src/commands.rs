use std::fmt::Write as _;

use circkr::oracle::{build_dense, dense_inverse, dense_solve, spectral_first_row};
use circkr::{
    decompose_variant, guard_size, inverse_dense, inverse_first_row, reconstruct, solve_many, DenseMatrix,
    FactorKind, Factorization64, Variant,
};

use crate::format::{csv_matrix, csv_row, parse_columns, parse_matrix, scalar, write_columns};
use crate::{
    read_file, CheckArgs, CliError, DecomposeArgs, InvertArgs, InvertMode, Outcome, SolveArgs,
    SystemArgs, EXIT_CHECK_FAILED,
};

/// Residual threshold for `check`.
pub const CHECK_TOLERANCE: f64 = 1e-8;

fn factor(system: &SystemArgs) -> Result<Factorization64, CliError> {
    let spec = system.spec()?;
    Ok(decompose_variant(&spec, system.variant())?)
}

pub fn decompose(args: &DecomposeArgs) -> Result<Outcome, CliError> {
    if args.dense {
        guard_size(args.system.n)?;
    }
    let fct = factor(&args.system)?;
    let p = args.output.precision;
    let spec = fct.spec();
    let mut out = String::new();
    writeln!(
        out,
        "# {} system: n = {}, c = {}, a = {}, d = {}",
        fct.variant(),
        spec.n(),
        scalar(spec.c(), p),
        scalar(spec.a(), p),
        scalar(spec.d(), p)
    )
    .unwrap();
    writeln!(out, "f = {}", csv_row(fct.f().as_slice(), p)).unwrap();
    match fct.g() {
        Some(g) => {
            writeln!(out, "r = {}", csv_row(fct.r().as_slice(), p)).unwrap();
            writeln!(out, "g = {}", scalar(g.value(), p)).unwrap();
            writeln!(out, "scaled g (×a) = {}", scalar(g.value() * spec.a(), p)).unwrap();
        }
        None => {
            writeln!(out, "last pivot = {}", scalar(fct.last_pivot(), p)).unwrap();
            writeln!(out, "scaled last pivot (×a) = {}", scalar(fct.last_pivot() * spec.a(), p))
                .unwrap();
        }
    }
    if args.dense {
        for kind in FactorKind::ALL {
            if fct.variant() == Variant::Tridiagonal
                && matches!(kind, FactorKind::R | FactorKind::RInverse)
            {
                continue;
            }
            let m = fct.materialize(kind)?;
            write!(out, "\n[{}]\n{}", kind.name(), csv_matrix(m.rows(), p)).unwrap();
        }
    }
    args.output.emit(out)
}

pub fn solve(args: &SolveArgs) -> Result<Outcome, CliError> {
    let columns = parse_columns(&read_file(&args.rhs)?)?;
    let n = args.system.n;
    if columns[0].len() != n {
        return Err(circkr::Error::DimensionMismatch {
            expected: n,
            found: columns[0].len(),
        }
        .into());
    }
    let fct = factor(&args.system)?;
    let solutions = solve_many(&fct, &columns)?;
    args.output.emit(write_columns(&solutions, args.output.precision))
}

pub fn invert(args: &InvertArgs) -> Result<Outcome, CliError> {
    if args.mode == InvertMode::Dense {
        guard_size(args.system.n)?;
    }
    let fct = factor(&args.system)?;
    let p = args.output.precision;
    let text = match args.mode {
        InvertMode::FirstRow => format!("{}\n", csv_row(&inverse_first_row(&fct)?, p)),
        InvertMode::Dense => csv_matrix(inverse_dense(&fct)?.rows(), p),
    };
    args.output.emit(text)
}

fn identity_error(m: &DenseMatrix<f64>) -> f64 {
    m.max_abs_diff(&DenseMatrix::identity(m.n()))
}

fn vec_error(u: &[f64], v: &[f64]) -> f64 {
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
    u.iter().zip(v).fold(0.0f64, |m, (a, b)| m.max((a - b).abs())) / scale
}

pub fn check(args: &CheckArgs) -> Result<Outcome, CliError> {
    let spec = args.system.spec()?;
    guard_size(spec.n())?;
    let variant = args.system.variant();
    let fct = decompose_variant(&spec, variant)?;
    let dense = build_dense(&spec, variant)?;
    let n = spec.n();
    let mut rows: Vec<(&str, f64)> = Vec::new();

    if let Some(path) = &args.matrix {
        let given = parse_matrix(&read_file(path)?)?;
        let given = DenseMatrix::from_rows(&given)?;
        if given.n() != n {
            return Err(circkr::Error::DimensionMismatch {
                expected: n,
                found: given.n(),
            }
            .into());
        }
        rows.push(("input matrix vs (n, c, a)", given.max_abs_diff(&dense) / dense.max_abs()));
    }

    let rebuilt = reconstruct(&fct)?;
    rows.push(("reconstruction", rebuilt.max_abs_diff(&dense) / dense.max_abs()));

    // deterministic test vector with mixed signs and magnitudes
    let x_true: Vec<f64> = (0..n).map(|i| ((i * 37 + 11) % 17) as f64 / 8.0 - 1.0).collect();
    let b = dense.mul_vec(&x_true)?;
    let x = solve_many(&fct, std::slice::from_ref(&b))?.remove(0);
    rows.push(("solve vs known solution", vec_error(&x, &x_true)));
    rows.push(("solve vs elimination", vec_error(&x, &dense_solve(&dense, &b)?)));

    let inv = inverse_dense(&fct)?;
    rows.push(("inverse times A minus I", identity_error(&inv.matmul(&dense)?)));
    match variant {
        Variant::Circulant => {
            let spectral = spectral_first_row(&spec)?;
            rows.push(("first row vs spectral", vec_error(&inverse_first_row(&fct)?, &spectral)));
        }
        Variant::Tridiagonal => {
            let reference = dense_inverse(&dense)?;
            rows.push(("inverse vs elimination", inv.max_abs_diff(&reference) / reference.max_abs()));
        }
    }

    let mut out = String::new();
    let mut all_ok = true;
    for (name, residual) in &rows {
        let ok = *residual <= CHECK_TOLERANCE;
        all_ok &= ok;
        writeln!(out, "{name:<28} {residual:.3e}  {}", if ok { "ok" } else { "FAIL" }).unwrap();
    }
    Ok(Outcome {
        stdout: out,
        code: if all_ok { 0 } else { EXIT_CHECK_FAILED },
    })
}
