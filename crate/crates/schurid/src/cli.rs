//! Command-line front end. [`run`] takes its arguments and streams
//! explicitly so it can be driven from tests.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use schurid_core::identity::Notation;
use schurid_core::strip::enumerate_specs;
use schurid_core::verify::default_variable_count;
use schurid_core::{
    barred_identity, conjugate_identity, fulmek_kleber_identity, gps_identity, main_identity,
    plucker_selftest, square_identity, square_identity_via_nu, verify_identity, Axis, Error,
    Identity, Partition, StripSpec, VerificationReport,
};

use crate::format::{
    format_specs, identity_from_json, parse_partition, parse_specs, specs_to_json, CheckedDoc,
    IdentityDoc, ReportDoc, SelfTestDoc,
};

#[derive(Debug, Parser)]
#[command(name = "schurid", version, about = "Bilinear identities on Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The main strip-addition identity
    Gen {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[arg(long, value_parser = strips_arg, required = true)]
        strips: Vec<StripList>,
        #[command(flatten)]
        out: Output,
    },
    /// The main identity with the first row or column removed
    Bar {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[arg(long, value_parser = strips_arg, required = true)]
        strips: Vec<StripList>,
        #[arg(long, value_enum, default_value_t = AxisArg::Row)]
        axis: AxisArg,
        #[command(flatten)]
        out: Output,
    },
    /// s_λ² as a sum over the inner corners of λ
    Square {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// s_λ² obtained from the barred identity on an auxiliary diagram
    SquareNu {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// The Fulmek–Kleber identity
    Fk {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// Product of the rectangles [a|b] and [m|n]
    Gps {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Transpose every diagram of an identity read from standard input
    Conjugate {
        #[command(flatten)]
        out: Output,
    },
    /// Check an identity read from standard input
    Verify {
        #[command(flatten)]
        check: Check,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every valid strip list with at most `max-k` strips
    Enumerate {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[arg(long, default_value_t = 1)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Numeric check of the Plücker relation on random integer matrices
    PluckerSelftest {
        #[arg(long, default_value_t = 5)]
        size: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also check the identity by exact evaluation
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    check: Check,
}

#[derive(Debug, Args)]
struct Check {
    /// Number of variables (default: one more than the tallest label)
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    Row,
    Column,
}

fn lambda_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

// clap calls this once per occurrence, so a single `--strips 2:1:1,3:1:1`
// yields one element holding both strips; `run` flattens them.
fn strips_arg(s: &str) -> Result<StripList, String> {
    parse_specs(s).map(StripList).map_err(|e| e.to_string())
}

#[derive(Debug, Clone)]
struct StripList(Vec<StripSpec>);

/// Exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_UNVERIFIED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// A rejected input, tagged with the flag it came from when there is one.
struct Usage {
    flag: Option<&'static str>,
    message: String,
}

impl Usage {
    fn flag(flag: &'static str, err: impl ToString) -> Self {
        Usage { flag: Some(flag), message: err.to_string() }
    }

    fn input(err: impl ToString) -> Self {
        Usage { flag: None, message: err.to_string() }
    }
}

/// Parses `args` (including the program name) and executes one subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if err.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{err}");
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(usage) => {
            let _ = match usage.flag {
                Some(flag) => writeln!(stderr, "error: invalid value for '{flag}': {}", usage.message),
                None => writeln!(stderr, "error: {}", usage.message),
            };
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<u8, Usage> {
    match command {
        Command::Gen { lambda, strips, out } => {
            let specs = flatten(strips);
            let id = main_identity(&lambda, &specs).map_err(|e| strip_error(e, "--lambda"))?;
            emit(&id, &out, stdout)
        }
        Command::Bar { lambda, strips, axis, out } => {
            let specs = flatten(strips);
            let axis = match axis {
                AxisArg::Row => Axis::Row,
                AxisArg::Column => Axis::Column,
            };
            let id = barred_identity(&lambda, &specs, axis).map_err(|e| strip_error(e, "--lambda"))?;
            emit(&id, &out, stdout)
        }
        Command::Square { lambda, out } => emit(&square_identity(&lambda), &out, stdout),
        Command::SquareNu { lambda, out } => {
            let id = square_identity_via_nu(&lambda).map_err(|e| Usage::flag("--lambda", e))?;
            emit(&id, &out, stdout)
        }
        Command::Fk { lambda, out } => {
            let id = fulmek_kleber_identity(&lambda).map_err(|e| Usage::flag("--lambda", e))?;
            emit(&id, &out, stdout)
        }
        Command::Gps { a, b, m, n, out } => {
            let id = gps_identity(a, b, m, n).map_err(|e| Usage::flag("--a/--b/--m/--n", e))?;
            emit(&id, &out, stdout)
        }
        Command::Conjugate { out } => {
            let id = read_identity(stdin)?;
            emit(&conjugate_identity(&id), &out, stdout)
        }
        Command::Verify { check, format } => {
            let id = read_identity(stdin)?;
            let report = check_identity(&id, &check)?;
            let mut text = String::new();
            push_report(&mut text, &report, format);
            write_out(stdout, &text);
            Ok(report_code(&report))
        }
        Command::Enumerate { lambda, max_k, format } => {
            if max_k == 0 {
                return Err(Usage::flag("--max-k", "must be at least 1"));
            }
            let lists = enumerate_specs(&lambda, max_k);
            let text = match format {
                Format::Json => {
                    let doc: Vec<serde_json::Value> = lists.iter().map(|s| specs_to_json(s)).collect();
                    serde_json::to_string(&doc).expect("plain JSON values") + "\n"
                }
                _ => lists.iter().map(|s| format_specs(s) + "\n").collect(),
            };
            write_out(stdout, &text);
            Ok(EXIT_OK)
        }
        Command::PluckerSelftest { size, trials, seed, format } => {
            let report = plucker_selftest(size, trials, seed).map_err(|e| Usage::flag("--size", e))?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string(&SelfTestDoc::from(&report)).expect("plain JSON values") + "\n"
                }
                _ => format!(
                    "trials: {}\nchecks: {}\nfailures: {}\n",
                    report.trials, report.checks, report.failures
                ),
            };
            write_out(stdout, &text);
            Ok(if report.failures == 0 { EXIT_OK } else { EXIT_UNVERIFIED })
        }
    }
}

fn flatten(strips: Vec<StripList>) -> Vec<StripSpec> {
    strips.into_iter().flat_map(|s| s.0).collect()
}

// Strip lists are checked against the diagram, so a violation belongs to
// `--strips` while everything else is about the diagram itself.
fn strip_error(err: Error, otherwise: &'static str) -> Usage {
    match err {
        Error::InvalidStripSpec(v) => Usage::flag("--strips", v),
        other => Usage::flag(otherwise, other),
    }
}

fn read_identity(stdin: &mut dyn Read) -> Result<Identity, Usage> {
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| Usage::input(format!("cannot read standard input: {e}")))?;
    identity_from_json(&text).map_err(|e| Usage::input(format!("identity on standard input: {e}")))
}

fn check_identity(id: &Identity, check: &Check) -> Result<VerificationReport, Usage> {
    let vars = check.vars.unwrap_or_else(|| default_variable_count(id));
    match verify_identity(id, vars, check.trials, check.seed) {
        Ok(report) => Ok(report),
        Err(e @ Error::NoTrials) => Err(Usage::flag("--trials", e)),
        Err(e @ Error::VariableCountTooSmall { .. }) => Err(Usage::flag("--vars", e)),
        Err(e) => Err(Usage::input(e)),
    }
}

fn emit(id: &Identity, out: &Output, stdout: &mut dyn Write) -> Result<u8, Usage> {
    let report = if out.verify { Some(check_identity(id, &out.check)?) } else { None };
    let mut text = String::new();
    match out.format {
        Format::Json => {
            let identity = IdentityDoc::from(id);
            text = match &report {
                None => serde_json::to_string(&identity),
                Some(r) => serde_json::to_string(&CheckedDoc { identity, report: ReportDoc::from(r) }),
            }
            .expect("plain JSON values");
            text.push('\n');
        }
        Format::Text | Format::Latex => {
            let notation = if out.format == Format::Latex { Notation::Latex } else { Notation::Text };
            text.push_str(&id.render(notation));
            text.push('\n');
            if let Some(r) = &report {
                push_report(&mut text, r, out.format);
            }
        }
    }
    write_out(stdout, &text);
    Ok(report.as_ref().map_or(EXIT_OK, report_code))
}

fn push_report(text: &mut String, report: &VerificationReport, format: Format) {
    if format == Format::Json {
        text.push_str(&serde_json::to_string(&ReportDoc::from(report)).expect("plain JSON values"));
        text.push('\n');
        return;
    }
    match &report.counterexample {
        None => text.push_str(&format!("verified at {}\n", points(report.points_checked))),
        Some(pt) => {
            let coords: Vec<String> = pt.coords().iter().map(ToString::to_string).collect();
            text.push_str(&format!(
                "not verified: sides differ at ({}), point {} checked\n",
                coords.join(","),
                report.points_checked
            ));
        }
    }
}

fn points(n: usize) -> String {
    if n == 1 {
        "1 point".to_string()
    } else {
        format!("{n} points")
    }
}

fn report_code(report: &VerificationReport) -> u8 {
    if report.verified {
        EXIT_OK
    } else {
        EXIT_UNVERIFIED
    }
}

fn write_out(stdout: &mut dyn Write, text: &str) {
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}
