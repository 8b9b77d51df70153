//! The `hyperfrac` command-line tool.
//!
//! Every subcommand reads one JSON document (`--input`, default stdin) and
//! writes one canonical JSON document (`--output`, default stdout). Exit
//! codes: 0 on success, 1 on a domain error, 2 on a usage or parse error.
//! Errors are reported on stderr as `{"detail": …, "error": <code>}`.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::alphafrac::{
    admissible_decompose, expand, expansion_to_triple, numeric_residual, pure_expand,
    verify_expansion, Branch,
};
use crate::datasets;
use crate::error::Error;
use crate::jacobi::{
    alpha_triple_from_jacobi, divisor_from_jacobi, jacobi_from_alpha_triple, jacobi_from_divisor,
    pure_beta_candidates,
};
use crate::json::{
    alpha_from_json, poly_from_json, poly_to_json, rational_from_json, rational_to_json,
    to_canonical_string, word_from_json, DecodeError, DivisorRecord, ExpansionRecord,
    JacobiRecord, OrbitRecord, ReportRecord, TripleRecord,
};
use crate::symmetry::{apply_word, orbit};

#[derive(Debug, Parser)]
#[command(name = "hyperfrac", version, about = "Periodic α-fraction expansions in exact arithmetic")]
struct Cli {
    /// Input JSON file, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Output file, or `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// {"triple", "alpha"} -> the two expansions (+S, -S); with --pure, the pure one
    Expand {
        #[arg(long)]
        pure: bool,
    },
    /// {"triple", "alpha"} -> the pure expansion
    PureExpand,
    /// Expansion -> {"triple", "alpha", "T"}
    Triple,
    /// {"R", "alpha"} -> {"S"} with R = S² + 𝔄
    Admissible,
    /// Expansion -> Expansion after applying --word left to right
    Act {
        /// JSON array such as ["sigma:1","epspi"]
        #[arg(long)]
        word: String,
    },
    /// Expansion -> orbit under the symmetry group
    Orbit {
        #[arg(long)]
        pure: bool,
    },
    /// {"jacobi", "beta"} -> alpha-triple
    JacobiToTriple,
    /// alpha-triple -> {"jacobi", "beta"}
    TripleToJacobi,
    /// Divisor -> Jacobi triple
    DivisorToJacobi,
    /// Jacobi triple -> Divisor
    JacobiToDivisor,
    /// {"jacobi", "alpha_n"} -> shifts beta with C(alpha_N) = 0
    PureBeta,
    /// {"expansion", "triple"} -> verification report
    Verify,
    /// alpha-triple -> floating-point residual of A φ² + 2B φ + C at --lambda
    Residual {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "+", value_parser = ["+", "-"])]
        branch: String,
    },
    /// Emit a canned dataset
    Example {
        #[arg(long)]
        name: String,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<DecodeError> for Failure {
    fn from(e: DecodeError) -> Self {
        match e {
            DecodeError::Malformed(m) => Failure::Usage(m),
            DecodeError::Domain(d) => Failure::Domain(d),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<Value, Failure>;

#[derive(Deserialize)]
struct TripleAlphaInput {
    triple: TripleRecord,
    alpha: Vec<String>,
}

#[derive(Deserialize)]
struct AdmissibleInput {
    #[serde(rename = "R")]
    r: Vec<String>,
    alpha: Vec<String>,
}

#[derive(Deserialize)]
struct JacobiBetaInput {
    jacobi: JacobiRecord,
    beta: String,
}

#[derive(Deserialize)]
struct PureBetaInput {
    jacobi: JacobiRecord,
    alpha_n: String,
}

#[derive(Deserialize)]
struct VerifyInput {
    expansion: ExpansionRecord,
    triple: TripleRecord,
}

fn parse<T: DeserializeOwned>(input: &str) -> std::result::Result<T, Failure> {
    serde_json::from_str(input).map_err(|e| Failure::Usage(e.to_string()))
}

fn to_value<T: serde::Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("records serialize")
}

fn dispatch(command: &Command, input: &str) -> CmdResult {
    match command {
        Command::Expand { pure: false } => {
            let inp: TripleAlphaInput = parse(input)?;
            let (t, a) = (inp.triple.decode()?, alpha_from_json(&inp.alpha)?);
            let (p, m) = expand(&t, &a)?;
            Ok(to_value([ExpansionRecord::from(&p), ExpansionRecord::from(&m)]))
        }
        Command::Expand { pure: true } => {
            let inp: TripleAlphaInput = parse(input)?;
            let e = pure_expand(&inp.triple.decode()?, &alpha_from_json(&inp.alpha)?)?;
            Ok(to_value([ExpansionRecord::from(&e)]))
        }
        Command::PureExpand => {
            let inp: TripleAlphaInput = parse(input)?;
            let e = pure_expand(&inp.triple.decode()?, &alpha_from_json(&inp.alpha)?)?;
            Ok(to_value(ExpansionRecord::from(&e)))
        }
        Command::Triple => {
            let e = parse::<ExpansionRecord>(input)?.decode()?;
            let (t, half_trace) = expansion_to_triple(&e)?;
            Ok(json!({
                "triple": TripleRecord::from(&t),
                "alpha": crate::json::alpha_to_json(e.alpha()),
                "T": poly_to_json(&half_trace),
            }))
        }
        Command::Admissible => {
            let inp: AdmissibleInput = parse(input)?;
            let s = admissible_decompose(&poly_from_json(&inp.r)?, &alpha_from_json(&inp.alpha)?)?;
            Ok(json!({ "S": poly_to_json(&s) }))
        }
        Command::Act { word } => {
            let letters: Vec<String> = parse(word)?;
            let w = word_from_json(&letters)?;
            let e = parse::<ExpansionRecord>(input)?.decode()?;
            Ok(to_value(ExpansionRecord::from(&apply_word(&e, &w)?)))
        }
        Command::Orbit { pure } => {
            let e = parse::<ExpansionRecord>(input)?.decode()?;
            Ok(to_value(OrbitRecord::from(&orbit(&e, *pure)?)))
        }
        Command::JacobiToTriple => {
            let inp: JacobiBetaInput = parse(input)?;
            let t = alpha_triple_from_jacobi(&inp.jacobi.decode()?, &rational_from_json(&inp.beta)?);
            Ok(to_value(TripleRecord::from(&t)))
        }
        Command::TripleToJacobi => {
            let t = parse::<TripleRecord>(input)?.decode()?;
            let (j, beta) = jacobi_from_alpha_triple(&t);
            Ok(json!({ "jacobi": JacobiRecord::from(&j), "beta": rational_to_json(&beta) }))
        }
        Command::DivisorToJacobi => {
            let d = parse::<DivisorRecord>(input)?.decode()?;
            Ok(to_value(JacobiRecord::from(&jacobi_from_divisor(&d)?)))
        }
        Command::JacobiToDivisor => {
            let j = parse::<JacobiRecord>(input)?.decode()?;
            Ok(to_value(DivisorRecord::from(&divisor_from_jacobi(&j)?)))
        }
        Command::PureBeta => {
            let inp: PureBetaInput = parse(input)?;
            let betas = pure_beta_candidates(&inp.jacobi.decode()?, &rational_from_json(&inp.alpha_n)?)?;
            Ok(to_value(betas.iter().map(rational_to_json).collect::<Vec<_>>()))
        }
        Command::Verify => {
            let inp: VerifyInput = parse(input)?;
            let report = verify_expansion(&inp.expansion.decode()?, &inp.triple.decode()?);
            Ok(to_value(ReportRecord::from(&report)))
        }
        Command::Residual { lambda, branch } => {
            let t = parse::<TripleRecord>(input)?.decode()?;
            let l = rational_from_json(lambda)?;
            let br = if branch == "-" { Branch::Minus } else { Branch::Plus };
            let residual = numeric_residual(&t, &l, br)?;
            Ok(json!({ "lambda": rational_to_json(&l), "branch": branch, "residual": residual }))
        }
        Command::Example { name } => Ok(datasets::example(name)?.to_json()),
    }
}

fn error_record(code: &str, detail: &str) -> String {
    let mut s = json!({ "error": code, "detail": detail }).to_string();
    s.push('\n');
    s
}

/// Runs the tool with explicit streams; returns the exit code.
pub fn run_with_io<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{}", error_record("Usage", rendered.trim()));
            }
            return code;
        }
    };

    let needs_input = !matches!(cli.command, Command::Example { .. });
    let mut input = String::new();
    if needs_input {
        let read = if cli.input == "-" {
            stdin.read_to_string(&mut input).map(|_| ())
        } else {
            std::fs::read_to_string(&cli.input).map(|s| input = s)
        };
        if let Err(e) = read {
            let _ = write!(stderr, "{}", error_record("Io", &format!("{}: {e}", cli.input)));
            return 2;
        }
    }

    match dispatch(&cli.command, &input) {
        Ok(value) => {
            let text = to_canonical_string(&value);
            let written = if cli.output == "-" {
                stdout.write_all(text.as_bytes())
            } else {
                std::fs::write(&cli.output, text)
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = write!(stderr, "{}", error_record("Io", &format!("{}: {e}", cli.output)));
                    2
                }
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = write!(stderr, "{}", error_record("MalformedInput", &m));
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = write!(stderr, "{}", error_record(e.code(), &e.to_string()));
            1
        }
    }
}

/// Runs the tool on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_io(
        args,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
