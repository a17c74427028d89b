use clap::{Args, Parser, Subcommand};
use lerch::error_model::LerchParams;
use lerch::oracle::{cross_validate, reference, STRICT_TOL};
use lerch::output::{format_real, write_csv, OutputRecord};
use lerch::tables::{run_table, TableId};
use lerch::{evaluate, gauss_laguerre_truncated, polar_pi, sweep, ComplexScalar, LerchError, Warning};
use num_complex::Complex64;
use std::io::{self, Write};
use std::process::ExitCode;

const EXIT_DISAGREE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "lerch", version, about = "Lerch transcendent by truncated generalized Gauss-Laguerre quadrature")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Φ(z, s, a) at a prescribed tolerance.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Print one JSON object instead of text.
        #[arg(long)]
        json: bool,
        /// Compare against the reference oracle.
        #[arg(long)]
        check: bool,
    },
    /// Reproduce a benchmark table as CSV.
    Table {
        /// table1, table2, table3 or table4
        name: String,
        tol: f64,
    },
    /// Error and estimate as the rule order grows, as CSV.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 100)]
        n_max: usize,
        /// Also report the error of the truncated rule.
        #[arg(long)]
        truncated: bool,
    },
    /// Nodes and weights of a generalized Gauss-Laguerre rule.
    #[command(allow_negative_numbers = true)]
    Rule {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        n: usize,
        /// Keep only the first k nodes.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run every applicable oracle and compare them.
    #[command(allow_negative_numbers = true)]
    Oracle {
        #[command(flatten)]
        point: Point,
    },
}

#[derive(Args)]
struct Point {
    #[arg(long, default_value_t = 0.0)]
    z_re: f64,
    #[arg(long, default_value_t = 0.0)]
    z_im: f64,
    /// z = R e^{iτπ}
    #[arg(long, num_args = 2, value_names = ["R", "TAU"], conflicts_with_all = ["z_re", "z_im"])]
    z_polar: Option<Vec<f64>>,
    #[arg(long)]
    s: f64,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
}

impl Point {
    fn z(&self) -> ComplexScalar {
        match &self.z_polar {
            Some(p) => polar_pi(p[0], p[1]),
            None => Complex64::new(self.z_re, self.z_im),
        }
    }

    fn params(&self) -> Result<LerchParams, LerchError> {
        LerchParams::new(self.z(), self.s, self.a)
    }
}

fn exit_code(e: &LerchError) -> u8 {
    match e {
        LerchError::Domain(_) => EXIT_DOMAIN,
        LerchError::SizingOverflow { .. } => EXIT_OVERFLOW,
        LerchError::InvalidParameter(_) => EXIT_USAGE,
        _ => EXIT_DISAGREE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn csv_error(e: csv::Error) -> LerchError {
    LerchError::InvalidParameter(format!("writing output: {e}"))
}

fn run(command: Command) -> Result<u8, LerchError> {
    let stdout = io::stdout();
    match command {
        Command::Eval { point, tol, json, check } => {
            let params = point.params()?;
            let eval = evaluate(&params, tol)?;
            for w in &eval.warnings {
                if let Warning::ToleranceClamped { requested, used } = w {
                    eprintln!("warning: tolerance {requested:e} clamped to {used:e}");
                }
            }
            let oracle = if check {
                Some(reference(params.z(), params.s(), params.a(), STRICT_TOL)?)
            } else {
                None
            };
            let record = OutputRecord::new(params.z(), params.s(), params.a(), tol, &eval, oracle.as_ref());
            let mut out = stdout.lock();
            if json {
                let _ = writeln!(out, "{}", record.to_json());
            } else {
                let _ = writeln!(out, "value_re   {:.17e}", record.value_re);
                let _ = writeln!(out, "value_im   {:.17e}", record.value_im);
                let _ = writeln!(out, "n          {}", record.n);
                let _ = writeln!(out, "kn         {}", record.kn);
                let _ = writeln!(out, "est_error  {}", format_real(record.est_error));
                if let Some(o) = &oracle {
                    let _ = writeln!(out, "oracle_re  {:.17e}", o.value.re);
                    let _ = writeln!(out, "oracle_im  {:.17e}", o.value.im);
                    let _ = writeln!(out, "oracle     {}", o.method);
                    let _ = writeln!(out, "deviation  {}", format_real(record.deviation.unwrap_or(0.0)));
                }
            }
            Ok(0)
        }
        Command::Table { name, tol } => {
            let table: TableId = name.parse()?;
            let rows = run_table(table, tol)?;
            write_csv(stdout.lock(), &lerch::tables::CSV_HEADER, rows.iter().map(|r| r.csv_fields()))
                .map_err(csv_error)?;
            Ok(0)
        }
        Command::Sweep { point, n_min, n_max, truncated } => {
            let params = point.params()?;
            let points = sweep::sweep(&params, n_min, n_max, truncated)?;
            write_csv(stdout.lock(), &sweep::CSV_HEADER, points.iter().map(|p| p.csv_fields()))
                .map_err(csv_error)?;
            Ok(0)
        }
        Command::Rule { alpha, n, k } => {
            let rule = gauss_laguerre_truncated(alpha, n, k.unwrap_or(n))?;
            let rows = rule.iter().map(|(x, w)| [format_real(x), format_real(w)]);
            write_csv(stdout.lock(), &["node", "weight"], rows).map_err(csv_error)?;
            Ok(0)
        }
        Command::Oracle { point } => {
            let report = cross_validate(point.z(), point.s, point.a)?;
            let mut out = stdout.lock();
            for r in &report.results {
                let _ = writeln!(
                    out,
                    "{:<20} {:.17e} {:+.17e}i  accuracy {}",
                    r.method.to_string(),
                    r.value.re,
                    r.value.im,
                    format_real(r.est_accuracy)
                );
            }
            for (method, msg) in &report.failures {
                let _ = writeln!(out, "{:<20} failed: {msg}", method.to_string());
            }
            if report.results.len() < 2 {
                let _ = writeln!(out, "only one oracle applies; nothing to compare");
            }
            let _ = writeln!(
                out,
                "max deviation {} (threshold {})",
                format_real(report.max_deviation),
                format_real(report.threshold)
            );
            if report.passed {
                let _ = writeln!(out, "agreement");
                Ok(0)
            } else {
                let _ = writeln!(out, "disagreement");
                Ok(EXIT_DISAGREE)
            }
        }
    }
}
