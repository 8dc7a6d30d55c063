//! Command-line interface for evaluating the sophomore's dream function
//! f(t,a) = t ∫₀¹ (ax)^(-tx) dx, comparing its approximations, sampling
//! profiles and complex-plane grids, and tabulating its zeros.

mod complex_arg;
mod methods;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use complex_arg::parse_complex;
use methods::{parse_method_list, run_method, CliMethod};
use num_complex::Complex64;
use output::{Cell, Format, Table};
use rayon::prelude::*;
use sophomore::eval::{f_quadrature, EvalPoint, QuadratureConfig};
use sophomore::zeros::zero_table;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 2;
const EXIT_ALL_FAILED: u8 = 3;
/// Memory guard for grid scans.
const MAX_GRID_NODES: u64 = 4_000_000;

#[derive(Parser)]
#[command(
    name = "sophomore",
    about = "Evaluate the sophomore's dream function f(t,a) = t∫₀¹(ax)^(-tx)dx, \
             its asymptotic approximations, and its complex zeros",
    version
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Scale parameter a (nonzero).
    #[arg(long = "a", global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    a: f64,
    /// Relative quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    rtol: f64,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-14)]
    atol: f64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Comma-separated method list.
    #[arg(long, global = true)]
    methods: Option<String>,
    /// Print per-computation wall times to stderr (kept out of data files).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate f(t,a) by one or more methods at a single point.
    Eval {
        /// Argument t as a complex literal `x+yi`.
        #[arg(short = 't', long = "t", allow_hyphen_values = true)]
        t: String,
    },
    /// Sweep real t and tabulate each method's value and relative error
    /// against the quadrature oracle.
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, default_value_t = 100)]
        count: u32,
    },
    /// Sample f and selected approximations along a complex segment.
    Profile {
        /// Segment start, complex literal.
        #[arg(long, allow_hyphen_values = true)]
        start: String,
        /// Segment end, complex literal.
        #[arg(long, allow_hyphen_values = true)]
        end: String,
        #[arg(long, default_value_t = 200)]
        count: u32,
    },
    /// Rectangular complex-plane scan of f with per-node Re/Im/|f|.
    Grid {
        #[arg(long, allow_negative_numbers = true)]
        x_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        x_max: f64,
        #[arg(long, allow_negative_numbers = true)]
        y_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        y_max: f64,
        #[arg(long)]
        nx: u32,
        #[arg(long)]
        ny: u32,
    },
    /// Locate and refine zeros 1..n_max, with spacing statistics.
    Zeros {
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let c = &cli.common;
    if c.a == 0.0 {
        return Err("a must be nonzero".into());
    }
    let cfg = QuadratureConfig::new(c.rtol, c.atol, 60).map_err(|e| e.to_string())?;
    let mut table = Table::default();
    table.push_config("a", c.a);
    table.push_config("rtol", format!("{:e}", c.rtol));
    table.push_config("atol", format!("{:e}", c.atol));

    let code = match &cli.cmd {
        Cmd::Eval { t } => cmd_eval(t, c, &cfg, &mut table)?,
        Cmd::Compare { t_min, t_max, count } => {
            cmd_compare(*t_min, *t_max, *count, c, &cfg, &mut table)?
        }
        Cmd::Profile { start, end, count } => cmd_profile(start, end, *count, c, &cfg, &mut table)?,
        Cmd::Grid { x_min, x_max, y_min, y_max, nx, ny } => {
            cmd_grid(*x_min, *x_max, *y_min, *y_max, *nx, *ny, c, &cfg, &mut table)?
        }
        Cmd::Zeros { n_max, tol } => cmd_zeros(*n_max, *tol, c, &mut table)?,
    };

    table
        .write_to(cli.common.format.into(), cli.common.out.as_deref())
        .map_err(|e| format!("cannot write output: {e}"))?;
    Ok(code)
}

fn methods_or(c: &Common, default: &[CliMethod]) -> Result<Vec<CliMethod>, String> {
    match &c.methods {
        Some(list) => parse_method_list(list),
        None => Ok(default.to_vec()),
    }
}

fn num(x: f64) -> Cell {
    Cell::Num(x)
}

fn cmd_eval(t: &str, c: &Common, cfg: &QuadratureConfig, table: &mut Table) -> Result<u8, String> {
    let t = parse_complex(t)?;
    let methods = methods_or(c, &[CliMethod::Quadrature, CliMethod::Auto])?;
    table.push_config("command", "eval");
    table.push_config("t", format!("{}{:+}i", t.re, t.im));
    table.columns = ["method", "t_re", "t_im", "value_re", "value_im", "err_estimate", "regime", "status"]
        .iter()
        .map(|s| s.to_string())
        .collect();

    let mut failures = 0;
    for m in &methods {
        let started = Instant::now();
        let res = run_method(*m, t, c.a, cfg);
        if c.timings {
            eprintln!("{}: {:?}", m.name(), started.elapsed());
        }
        match res {
            Ok(out) => table.rows.push(vec![
                Cell::Text(m.name().into()),
                num(t.re),
                num(t.im),
                num(out.value.re),
                num(out.value.im),
                num(out.err_estimate),
                Cell::Text(out.regime.into()),
                Cell::Text("ok".into()),
            ]),
            Err(status) => {
                failures += 1;
                table.rows.push(vec![
                    Cell::Text(m.name().into()),
                    num(t.re),
                    num(t.im),
                    num(f64::NAN),
                    num(f64::NAN),
                    num(f64::NAN),
                    Cell::Text(String::new()),
                    Cell::Text(status),
                ]);
            }
        }
    }
    Ok(if failures == methods.len() { EXIT_ALL_FAILED } else { EXIT_OK })
}

fn cmd_compare(
    t_min: f64,
    t_max: f64,
    count: u32,
    c: &Common,
    cfg: &QuadratureConfig,
    table: &mut Table,
) -> Result<u8, String> {
    if count < 2 || !(t_max > t_min) {
        return Err("compare needs t_max > t_min and count >= 2".into());
    }
    let methods = methods_or(c, &[CliMethod::Auto])?;
    table.push_config("command", "compare");
    table.push_config("t_min", t_min);
    table.push_config("t_max", t_max);
    table.push_config("count", count);
    table.push_config("methods", methods.iter().map(|m| m.name()).collect::<Vec<_>>().join(","));

    table.columns = vec!["t_re".into(), "t_im".into(), "oracle_re".into(), "oracle_im".into()];
    for m in &methods {
        table.columns.push(format!("{}_re", m.name()));
        table.columns.push(format!("{}_im", m.name()));
        table.columns.push(format!("{}_rel_err", m.name()));
    }

    let a = c.a;
    let rows: Vec<Vec<Cell>> = (0..count)
        .into_par_iter()
        .map(|k| {
            let t = t_min + (t_max - t_min) * k as f64 / (count - 1) as f64;
            let tc = Complex64::new(t, 0.0);
            let oracle = f_quadrature(EvalPoint::new(tc, a), cfg).map(|r| r.value);
            let mut row = vec![num(t), num(0.0)];
            match &oracle {
                Ok(v) => {
                    row.push(num(v.re));
                    row.push(num(v.im));
                }
                Err(_) => {
                    row.push(num(f64::NAN));
                    row.push(num(f64::NAN));
                }
            }
            for m in &methods {
                match (run_method(*m, tc, a, cfg), &oracle) {
                    (Ok(out), Ok(v)) => {
                        row.push(num(out.value.re));
                        row.push(num(out.value.im));
                        row.push(num((out.value - v).norm() / v.norm().max(f64::MIN_POSITIVE)));
                    }
                    (Ok(out), Err(_)) => {
                        row.push(num(out.value.re));
                        row.push(num(out.value.im));
                        row.push(num(f64::NAN));
                    }
                    (Err(_), _) => {
                        row.push(num(f64::NAN));
                        row.push(num(f64::NAN));
                        row.push(num(f64::NAN));
                    }
                }
            }
            row
        })
        .collect();
    table.rows = rows;
    Ok(EXIT_OK)
}

fn cmd_profile(
    start: &str,
    end: &str,
    count: u32,
    c: &Common,
    cfg: &QuadratureConfig,
    table: &mut Table,
) -> Result<u8, String> {
    let start = parse_complex(start)?;
    let end = parse_complex(end)?;
    let degenerate = start == end;
    if count < 2 && !degenerate {
        return Err("profile needs count >= 2".into());
    }
    let methods = methods_or(c, &[CliMethod::Quadrature])?;
    table.push_config("command", "profile");
    table.push_config("start", format!("{}{:+}i", start.re, start.im));
    table.push_config("end", format!("{}{:+}i", end.re, end.im));
    let n = if degenerate { 1 } else { count };
    table.push_config("count", n);

    table.columns = vec!["param".into(), "t_re".into(), "t_im".into()];
    for m in &methods {
        table.columns.push(format!("{}_re", m.name()));
        table.columns.push(format!("{}_im", m.name()));
    }

    let a = c.a;
    let rows: Vec<Vec<Cell>> = (0..n)
        .into_par_iter()
        .map(|k| {
            let s = if n == 1 { 0.0 } else { k as f64 / (n - 1) as f64 };
            let t = start + (end - start) * s;
            let mut row = vec![num(s), num(t.re), num(t.im)];
            for m in &methods {
                match run_method(*m, t, a, cfg) {
                    Ok(out) => {
                        row.push(num(out.value.re));
                        row.push(num(out.value.im));
                    }
                    Err(_) => {
                        row.push(num(f64::NAN));
                        row.push(num(f64::NAN));
                    }
                }
            }
            row
        })
        .collect();
    table.rows = rows;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_grid(
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
    nx: u32,
    ny: u32,
    c: &Common,
    cfg: &QuadratureConfig,
    table: &mut Table,
) -> Result<u8, String> {
    if nx < 2 || ny < 2 {
        return Err("grid needs nx >= 2 and ny >= 2".into());
    }
    if nx as u64 * ny as u64 > MAX_GRID_NODES {
        return Err(format!("grid of {}x{} exceeds the {MAX_GRID_NODES}-node guard", nx, ny));
    }
    if !(x_max > x_min) || !(y_max > y_min) {
        return Err("grid needs x_max > x_min and y_max > y_min".into());
    }
    table.push_config("command", "grid");
    table.push_config("x_min", x_min);
    table.push_config("x_max", x_max);
    table.push_config("y_min", y_min);
    table.push_config("y_max", y_max);
    table.push_config("nx", nx);
    table.push_config("ny", ny);
    table.columns = ["x", "y", "re_f", "im_f", "abs_f"].iter().map(|s| s.to_string()).collect();

    let a = c.a;
    // row-major by y then x
    let rows: Vec<Vec<Cell>> = (0..ny as u64 * nx as u64)
        .into_par_iter()
        .map(|idx| {
            let j = (idx / nx as u64) as u32;
            let i = (idx % nx as u64) as u32;
            let x = x_min + (x_max - x_min) * i as f64 / (nx - 1) as f64;
            let y = y_min + (y_max - y_min) * j as f64 / (ny - 1) as f64;
            let t = Complex64::new(x, y);
            match f_quadrature(EvalPoint::new(t, a), cfg) {
                Ok(r) => vec![num(x), num(y), num(r.value.re), num(r.value.im), num(r.value.norm())],
                Err(_) => vec![num(x), num(y), num(f64::NAN), num(f64::NAN), num(f64::NAN)],
            }
        })
        .collect();
    table.rows = rows;
    Ok(EXIT_OK)
}

fn cmd_zeros(n_max: u32, tol: f64, c: &Common, table: &mut Table) -> Result<u8, String> {
    if n_max < 1 {
        return Err("zeros needs n_max >= 1".into());
    }
    if !(tol > 0.0) {
        return Err("zeros needs tol > 0".into());
    }
    table.push_config("command", "zeros");
    table.push_config("n_max", n_max);
    table.push_config("tol", tol);

    let t = zero_table(n_max, c.a, tol);
    if let Some(s) = t.mean_im_spacing {
        table.push_config("mean_im_spacing", output::format_num(s));
    }
    if let Some(s) = t.im_slope {
        table.push_config("im_slope", output::format_num(s));
    }
    table.columns = [
        "n", "guess_re", "guess_im", "refined_re", "refined_im", "residual", "iterations", "status",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();

    let mut failures = 0;
    for (n, res) in &t.entries {
        match res {
            Ok(rec) => table.rows.push(vec![
                Cell::Int(*n as i64),
                num(rec.guess.re),
                num(rec.guess.im),
                num(rec.refined.re),
                num(rec.refined.im),
                num(rec.residual),
                Cell::Int(rec.iterations as i64),
                Cell::Text("ok".into()),
            ]),
            Err(e) => {
                failures += 1;
                table.rows.push(vec![
                    Cell::Int(*n as i64),
                    num(f64::NAN),
                    num(f64::NAN),
                    num(f64::NAN),
                    num(f64::NAN),
                    num(f64::NAN),
                    Cell::Int(0),
                    Cell::Text(e.to_string()),
                ]);
            }
        }
    }
    Ok(if failures == t.entries.len() { EXIT_ALL_FAILED } else { EXIT_OK })
}
