//! Command-line front end shared by the `hopf` binary and the tests.
//!
//! Exit codes: 0 success or pass, 1 a gate or check failed, 2 unreadable or
//! malformed input, 3 a domain error (non-integer exponent, order out of
//! range, degenerate data), 4 a degree above the safety cap (`HOPF_CAP`).

pub mod catalog;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::hopfstruct::{build_decomposition, hilbert_profile, primitives, structure_report};
use crate::nck::{DecorationSet, NckAlgebra, NckError};
use crate::pairing::{
    adapt_complement, build_pairing, check_lemma2, export_gram, verify_hopf_pairing, BaseForm,
    PairingError,
};
use crate::ratseries::{
    convert, gate_free_cofree, gate_nck, p_from_s, SeriesError, SeriesKind, SeriesProfile,
};
use catalog::{table_csv, TableKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CAP: i32 = 4;

pub const DEFAULT_NCK_CAP: usize = 7;
pub const DEFAULT_PAIRING_CAP: usize = 5;
pub const CAP_ENV: &str = "HOPF_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "hopf",
    version,
    about = "Series calculus and self-dual pairings for free and cofree Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    R,
    P,
    S,
    D,
}

impl From<KindArg> for SeriesKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::R => SeriesKind::R,
            KindArg::P => SeriesKind::P,
            KindArg::S => SeriesKind::S,
            KindArg::D => SeriesKind::D,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GateArg {
    FreeCofree,
    Nck,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableArg {
    S,
    D,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NckMode {
    Dims,
    Verify,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairingMode {
    Build,
    Verify,
    Adapt,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a series between the R, P, S and D forms.
    Convert {
        #[arg(long, value_enum)]
        from: KindArg,
        #[arg(long, value_enum)]
        to: KindArg,
        /// Series JSON file, or `-` for standard input.
        #[arg(long)]
        input: String,
        /// Truncate the output to this many coefficients.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Run a realizability gate on an R-series.
    Gate {
        #[arg(long, value_enum)]
        which: GateArg,
        #[arg(long)]
        input: String,
    },
    /// Print the s- or d-table of the bundled algebras as CSV.
    Tables {
        #[arg(long, value_enum)]
        which: TableArg,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Dimensions and structural checks for decorated planar forests.
    Nck {
        #[arg(long)]
        max_degree: usize,
        /// JSON list of `{"label": ..., "degree": ...}`; defaults to one
        /// label `a` of degree 1.
        #[arg(long)]
        decorations: Option<String>,
        #[arg(value_enum)]
        mode: NckMode,
    },
    /// Build, verify or adapt the self-dual pairing (one decoration of degree 1).
    Pairing {
        #[arg(long)]
        max_degree: usize,
        #[arg(value_enum)]
        mode: PairingMode,
    },
}

/// An error that maps to an exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        let code = match e {
            SeriesError::Parse(_) => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<NckError> for CliError {
    fn from(e: NckError) -> Self {
        let code = match e {
            NckError::Parse(_) | NckError::InvalidDecorations(_) | NckError::UnknownLabel(_) => {
                EXIT_PARSE
            }
            NckError::DegreeZeroInput => EXIT_DOMAIN,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<PairingError> for CliError {
    fn from(e: PairingError) -> Self {
        CliError::new(EXIT_DOMAIN, e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn read_profile(path: &str) -> Result<SeriesProfile, CliError> {
    Ok(SeriesProfile::from_json(&read_input(path)?)?)
}

/// `HOPF_CAP` when set, otherwise `default`.
fn cap(default: usize) -> Result<usize, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::new(EXIT_PARSE, format!("{CAP_ENV}={v} is not a degree"))),
        Err(_) => Ok(default),
    }
}

fn check_degree(n: usize, default_cap: usize) -> Result<(), CliError> {
    let limit = cap(default_cap)?;
    if n > limit {
        return Err(CliError::new(
            EXIT_CAP,
            format!("degree {n} exceeds the cap {limit} (set {CAP_ENV} to raise it)"),
        ));
    }
    if n == 0 {
        return Err(CliError::new(EXIT_DOMAIN, "max degree must be at least 1"));
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports are serializable")
}

fn cmd_convert(
    from: SeriesKind,
    to: SeriesKind,
    input: &str,
    order: Option<usize>,
) -> Result<(String, i32), CliError> {
    let p = read_profile(input)?;
    if p.kind() != from {
        return Err(CliError::new(
            EXIT_PARSE,
            format!("--from {from} but the input is a {}-series", p.kind()),
        ));
    }
    let p = match order {
        Some(n) => p.truncate(n)?,
        None => p,
    };
    // Leaving S means solving for the exponents of ∏ (1 − hⁿ)^{p_n}.
    if from == SeriesKind::S && to != SeriesKind::S {
        let exponents = p_from_s(&p)?;
        if let Some(index) = exponents.non_integer_at {
            let value = exponents.series.coeff(index).clone();
            return Err(SeriesError::NonIntegerExponent { index, value }.into());
        }
    }
    Ok((convert(&p, to)?.series.to_json(), EXIT_OK))
}

fn cmd_gate(which: GateArg, input: &str) -> Result<(String, i32), CliError> {
    let r = read_profile(input)?;
    let (verdict, values, name) = match which {
        GateArg::FreeCofree => {
            let (v, s) = gate_free_cofree(&r)?;
            (v, s, "free-cofree")
        }
        GateArg::Nck => {
            let (v, d) = gate_nck(&r)?;
            (v, d, "nck")
        }
    };
    let body = json!({
        "gate": name,
        "pass": verdict.pass,
        "first_failure": verdict.first_failure,
        "witness": verdict.witness.as_ref().map(ToString::to_string),
        "values": serde_json::from_str::<serde_json::Value>(&values.to_json()).expect("valid JSON"),
    });
    let code = if verdict.pass { EXIT_OK } else { EXIT_FAIL };
    Ok((to_json(&body), code))
}

fn cmd_nck(
    max_degree: usize,
    decorations: Option<&str>,
    mode: NckMode,
) -> Result<(String, i32), CliError> {
    check_degree(max_degree, DEFAULT_NCK_CAP)?;
    let decos = match decorations {
        Some(path) => DecorationSet::from_json(&read_input(path)?)?,
        None => DecorationSet::single(),
    };
    let h = NckAlgebra::new(decos.clone());
    let decos_json: serde_json::Value = serde_json::from_str(&decos.to_json()).expect("valid JSON");
    match mode {
        NckMode::Dims => {
            let r = hilbert_profile(&h, max_degree);
            let mut p = Vec::new();
            let mut s = Vec::new();
            for n in 1..=max_degree {
                p.push(primitives(&h, n).dim());
                s.push(build_decomposition(&h, n).h.dim());
            }
            let body = json!({
                "decorations": decos_json,
                "r": r.to_i128().expect("counts are integers"),
                "p": p,
                "s": s,
            });
            Ok((to_json(&body), EXIT_OK))
        }
        NckMode::Verify => {
            let report = structure_report(&h, max_degree, true);
            let pass = report.iter().all(|d| d.pass());
            let body = json!({ "decorations": decos_json, "pass": pass, "degrees": report });
            Ok((to_json(&body), if pass { EXIT_OK } else { EXIT_FAIL }))
        }
    }
}

fn cmd_pairing(max_degree: usize, mode: PairingMode) -> Result<(String, i32), CliError> {
    check_degree(max_degree, DEFAULT_PAIRING_CAP)?;
    let h = NckAlgebra::catalan();
    let st = build_pairing(&h, max_degree, &BaseForm::Identity)?;
    match mode {
        PairingMode::Build => Ok((to_json(&export_gram(&h, &st)), EXIT_OK)),
        PairingMode::Verify => {
            let report = verify_hopf_pairing(&h, &st);
            let lemma2 = (1..=max_degree)
                .map(|n| check_lemma2(&h, &st, n))
                .collect::<Result<Vec<_>, _>>()?;
            let pass = report.pass && lemma2.iter().all(|l| l.pass);
            let body = json!({ "pass": pass, "axioms": report, "orthogonality": lemma2 });
            Ok((to_json(&body), if pass { EXIT_OK } else { EXIT_FAIL }))
        }
        PairingMode::Adapt => {
            let adapted = (1..=max_degree)
                .map(|n| adapt_complement(&st, n).map(|a| a.summary))
                .collect::<Result<Vec<_>, _>>()?;
            let pass = adapted.iter().all(|a| a.block_form && a.complement);
            let body = json!({ "pass": pass, "degrees": adapted });
            Ok((to_json(&body), if pass { EXIT_OK } else { EXIT_FAIL }))
        }
    }
}

fn dispatch(cli: Cli) -> Result<(String, i32), CliError> {
    match cli.command {
        Command::Convert {
            from,
            to,
            input,
            order,
        } => cmd_convert(from.into(), to.into(), &input, order),
        Command::Gate { which, input } => cmd_gate(which, &input),
        Command::Tables { which, max } => {
            let kind = match which {
                TableArg::S => TableKind::S,
                TableArg::D => TableKind::D,
            };
            Ok((table_csv(kind, max)?, EXIT_OK))
        }
        Command::Nck {
            max_degree,
            decorations,
            mode,
        } => cmd_nck(max_degree, decorations.as_deref(), mode),
        Command::Pairing { max_degree, mode } => cmd_pairing(max_degree, mode),
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli) {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            if !text.ends_with('\n') {
                let _ = writeln!(out);
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
