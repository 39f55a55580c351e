//! The `sl2free` command line.
//!
//! Every command prints either a short text report (the default) or one JSON
//! document `{command, input, result, certificate}` with `--json`. Exit codes:
//! 0 success, 1 malformed input, 2 violated precondition, 3 failed internal
//! check.

mod commands;
pub mod parse;

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::scalar::{Gaussian, Rational};

pub use commands::Report;

#[derive(Debug, Parser)]
#[command(name = "sl2free", version, about = "Exact computations with rank-2 U(h)-free sl(2)-modules")]
pub struct Cli {
    /// Emit one JSON document per command.
    #[arg(long, global = true)]
    pub json: bool,

    /// Scalar field.
    #[arg(long, global = true, value_enum, default_value_t = FieldChoice::Rational)]
    pub field: FieldChoice,

    /// Largest power of h used by the relation and Casimir checks.
    #[arg(long, global = true, default_value_t = 6)]
    pub degree_bound: usize,

    /// Read one command per line from standard input.
    #[arg(long)]
    pub batch: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    Rational,
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExprKind {
    Auto,
    Poly,
    Matrix,
    Word,
    Tuple,
    Group,
    Triple,
}

/// `(alpha, a, K)`.
#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// `a_-,a_0,a_+`
    #[arg(long, allow_hyphen_values = true)]
    pub triple: String,
    /// A unit, as a matrix literal or a word.
    #[arg(long = "K", allow_hyphen_values = true)]
    pub k: String,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Parse an expression and print it canonically.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = ExprKind::Auto)]
        kind: ExprKind,
    },
    /// Multiply out a word.
    Expand {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Euclidean factorization along the first row.
    Lq {
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Standard form of a unit (matrix or word).
    Standard {
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Length of the standard form.
    Length {
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Decide whether K is twisted-conjugate to a constant diagonal matrix.
    Smember {
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Build a member of an explicit family of diagonalizable units.
    Family {
        /// D, G, K, Z, conj, sporadic0 .. sporadic4
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        eps: bool,
        #[arg(long)]
        delta: bool,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
        /// Polynomials separated by `;`.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        u: String,
    },
    /// Decide simplicity of a scalar-type module.
    Simple(ModuleArgs),
    /// Decide isomorphism of two scalar-type modules.
    Iso {
        #[command(flatten)]
        first: ModuleArgs,
        /// Defaults to --alpha.
        #[arg(long, allow_hyphen_values = true)]
        alpha2: Option<String>,
        /// Defaults to --triple.
        #[arg(long, allow_hyphen_values = true)]
        triple2: Option<String>,
        #[arg(long = "K2", allow_hyphen_values = true)]
        k2: String,
    },
    /// Orbit membership of parameter tuples, or the action of a group element.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: Option<String>,
        /// Apply `(eta=.., m=..)` to X instead of testing membership.
        #[arg(long = "act", allow_hyphen_values = true)]
        act: Option<String>,
    },
    /// Check the sl(2) relations on h^j e_i.
    VerifyRelations(ModuleArgs),
    /// Check that the Casimir element acts by (2 alpha - 1)^2.
    Casimir(ModuleArgs),
    /// Evaluate the cocycle c_K(m); with --n also check c(m+n) = c(m) c(n)(h+m).
    Cocycle {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Highest weight data of the quotient by (u_alpha F[h])^2.
    QuotientHw(ModuleArgs),
    /// The automorphisms T_gamma, theta, sigma and Psi(gamma, m).
    Aut {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        gamma: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        m: i64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Parse { .. } => "parse",
            Command::Expand { .. } => "expand",
            Command::Lq { .. } => "lq",
            Command::Standard { .. } => "standard",
            Command::Length { .. } => "length",
            Command::Smember { .. } => "smember",
            Command::Family { .. } => "family",
            Command::Simple(_) => "simple",
            Command::Iso { .. } => "iso",
            Command::Orbit { .. } => "orbit",
            Command::VerifyRelations(_) => "verify-relations",
            Command::Casimir(_) => "casimir",
            Command::Cocycle { .. } => "cocycle",
            Command::QuotientHw(_) => "quotient-hw",
            Command::Aut { .. } => "aut",
        }
    }
}

/// Exit code for an engine error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 1,
        Error::Internal(_) => 3,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::DivisionByZero => "division-by-zero",
        Error::NotInvertible(_) => "not-invertible",
        Error::Domain(_) => "domain",
        Error::OutOfScope(_) => "out-of-scope",
        Error::FieldExtensionRequired(_) => "field-extension-required",
        Error::Internal(_) => "internal",
    }
}

/// Settings shared by every command of one invocation.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub json: bool,
    pub field: FieldChoice,
    pub degree_bound: usize,
}

/// Runs one command and writes its report; returns the exit code.
pub fn execute(cmd: &Command, settings: Settings, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match settings.field {
        FieldChoice::Rational => commands::run::<Rational>(cmd, settings.degree_bound),
        FieldChoice::Gaussian => commands::run::<Gaussian>(cmd, settings.degree_bound),
    };
    let input = commands::input_echo(cmd);
    let (code, res) = match outcome {
        Ok(report) => {
            let r = if settings.json {
                let mut doc = Map::new();
                doc.insert("command".into(), json!(cmd.name()));
                doc.insert("field".into(), json!(field_name(settings.field)));
                doc.insert("input".into(), input);
                doc.insert("result".into(), Value::Object(report.result));
                doc.insert("certificate".into(), report.certificate.map_or(Value::Null, Value::Object));
                writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("json"))
            } else {
                report.text.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            (0, r)
        }
        Err(e) => {
            let code = exit_code(&e);
            let r = if settings.json {
                let doc = json!({
                    "command": cmd.name(),
                    "field": field_name(settings.field),
                    "input": input,
                    "error": {"kind": error_kind(&e), "message": e.to_string()},
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))
            } else {
                writeln!(err, "error: {e}")
            };
            (code, r)
        }
    };
    if res.is_err() {
        return 3;
    }
    code
}

fn field_name(f: FieldChoice) -> &'static str {
    match f {
        FieldChoice::Rational => "rational",
        FieldChoice::Gaussian => "gaussian",
    }
}

fn clap_failure(e: clap::Error, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let _ = write!(out, "{}", e.render());
            0
        }
        _ => {
            let _ = write!(err, "{}", e.render());
            1
        }
    }
}

/// Entry point shared by the binary and the tests.
pub fn run_args<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return clap_failure(e, out, err),
    };
    let settings = Settings {
        json: cli.json,
        field: cli.field,
        degree_bound: cli.degree_bound,
    };
    if cli.batch {
        return run_batch(settings, input, out, err);
    }
    match &cli.command {
        Some(cmd) => execute(cmd, settings, out, err),
        None => {
            let _ = writeln!(err, "error: no command given (try --help)");
            1
        }
    }
}

/// One command per line; blank lines and `#` comments are skipped. Flags on
/// a line add to the outer ones. The exit code is the largest one seen.
fn run_batch(outer: Settings, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut worst = 0;
    for line in input.lines() {
        let Ok(line) = line else {
            return worst.max(1);
        };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words = match shell_words::split(line) {
            Ok(w) => w,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                worst = worst.max(1);
                continue;
            }
        };
        let argv = std::iter::once("sl2free".to_string()).chain(words);
        let code = match Cli::try_parse_from(argv) {
            Ok(c) => match &c.command {
                Some(cmd) if !c.batch => {
                    let s = Settings {
                        json: outer.json || c.json,
                        field: if c.field == FieldChoice::Rational { outer.field } else { c.field },
                        degree_bound: if c.degree_bound == 6 { outer.degree_bound } else { c.degree_bound },
                    };
                    execute(cmd, s, out, err)
                }
                _ => {
                    let _ = writeln!(err, "error: each batch line needs one command");
                    1
                }
            },
            Err(e) => clap_failure(e, out, err),
        };
        worst = worst.max(code);
    }
    worst
}
