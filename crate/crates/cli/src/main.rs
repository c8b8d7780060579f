//! `instability-lab`: JSON front end to the instability computations.

mod commands;
mod envelope;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{binary_form, bounds, bundle, ep, kempf};
use envelope::{invalid, CliError, Envelope};
use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const THREADS_VAR: &str = "INSTABILITY_LAB_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "instability-lab",
    version,
    about = "Instability of vectors under reductive group actions in characteristic p"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Binary forms over F_p(s).
    #[command(name = "binary-form", subcommand)]
    BinaryForm(BinaryFormCommand),
    /// Optimal destabilizer for the diagonal torus of SL(n).
    Kempf(KempfArgs),
    /// Elementary polynomials of a vector.
    #[command(subcommand)]
    Ep(EpCommand),
    /// Frobenius thresholds for field-of-definition bounds.
    Bounds(BoundsArgs),
    /// Split bundles on the projective line.
    Bundle(BundleArgs),
    /// Run a JSON-lines file of requests, one response line each.
    Batch(BatchArgs),
}

#[derive(Subcommand, Debug)]
enum BinaryFormCommand {
    /// Multiplicity profile and instability data of a form.
    Analyze(AnalyzeArgs),
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Characteristic (default for corpus lines without a "p" field).
    #[arg(long)]
    p: Option<u64>,
    /// Coefficients a_N, …, a_0 as a comma list or JSON array, e.g. "1,0,0,0,0,-s".
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "file",
        required_unless_present = "file"
    )]
    coeffs: Option<String>,
    /// JSON-lines corpus, one form per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KempfArgs {
    #[arg(long)]
    n: usize,
    /// Weights as a JSON array of integer vectors.
    #[arg(long, allow_hyphen_values = true)]
    weights: String,
}

#[derive(Subcommand, Debug)]
enum EpCommand {
    /// Elementary polynomials of v in V^{⊗m}.
    Tensor(EpTensorArgs),
}

#[derive(Args, Debug)]
struct EpTensorArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Terms as a JSON array of [word, coefficient] pairs, words 1-based.
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, default_value_t = ep::DEFAULT_P)]
    p: u64,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    rep: bounds::Rep,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    /// Degree N of the symmetric power.
    #[arg(long = "N")]
    big_n: Option<u64>,
}

#[derive(Args, Debug)]
struct BundleArgs {
    /// Degrees of the line-bundle summands, e.g. "3,1,1,0".
    #[arg(long, allow_hyphen_values = true)]
    degrees: String,
    #[arg(long, value_enum)]
    op: bundle::Op,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    t: Option<u32>,
    /// Degrees of the second factor for --op tensor.
    #[arg(long, allow_hyphen_values = true)]
    with: Option<String>,
    /// Power for --op wedge / sym.
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Lines of {"subcommand": …, "payload": {…}}.
    #[arg(long)]
    file: PathBuf,
}

fn to_value<T: Serialize>(payload: &T) -> Value {
    serde_json::to_value(payload).expect("payloads serialize")
}

/// The request a single-shot command stands for.
fn request(command: &Command) -> Result<(&'static str, Value), (&'static str, CliError)> {
    let wrap = |name: &'static str| move |e: CliError| (name, e);
    Ok(match command {
        Command::BinaryForm(BinaryFormCommand::Analyze(a)) => {
            let name = "binary-form";
            let coeffs = binary_form::parse_coeffs(a.coeffs.as_deref().unwrap_or_default())
                .map_err(wrap(name))?;
            let p =
                a.p.ok_or_else(|| invalid("--p is required with --coeffs"))
                    .map_err(wrap(name))?;
            (name, to_value(&binary_form::Payload { p, coeffs }))
        }
        Command::Kempf(a) => {
            let weights = commands::parse_json("weights", &a.weights).map_err(wrap("kempf"))?;
            ("kempf", to_value(&kempf::Payload { n: a.n, weights }))
        }
        Command::Ep(EpCommand::Tensor(a)) => {
            let v = commands::parse_json("v", &a.v).map_err(wrap("ep"))?;
            (
                "ep",
                to_value(&ep::Payload {
                    kind: ep::Kind::Tensor,
                    n: a.n,
                    m: a.m,
                    p: a.p,
                    v,
                }),
            )
        }
        Command::Bounds(a) => (
            "bounds",
            to_value(&bounds::Payload {
                rep: a.rep,
                p: a.p,
                n: a.n,
                m: a.m,
                d: a.d,
                big_n: a.big_n,
            }),
        ),
        Command::Bundle(a) => {
            let degrees =
                commands::parse_int_list("degrees", &a.degrees).map_err(wrap("bundle"))?;
            let with = a
                .with
                .as_deref()
                .map(|w| commands::parse_int_list("with", w))
                .transpose()
                .map_err(wrap("bundle"))?;
            (
                "bundle",
                to_value(&bundle::Payload {
                    degrees,
                    op: a.op,
                    p: a.p,
                    t: a.t,
                    with,
                    r: a.r,
                }),
            )
        }
        Command::Batch(_) => unreachable!("batch is handled separately"),
    })
}

/// One line of a batch file, parsed and run.
fn batch_line(line: &str) -> Envelope {
    let parsed: Result<(String, Value), CliError> = serde_json::from_str::<Value>(line)
        .map_err(|e| invalid(format!("request: {e}")))
        .and_then(|v| {
            let sub = v
                .get("subcommand")
                .and_then(Value::as_str)
                .ok_or_else(|| invalid("missing \"subcommand\""))?;
            let payload = v
                .get("payload")
                .cloned()
                .ok_or_else(|| invalid("missing \"payload\""))?;
            Ok((sub.to_string(), payload))
        });
    match parsed {
        Ok((sub, payload)) => Envelope::new(&sub, &payload, &commands::dispatch(&sub, &payload)),
        Err(e) => Envelope::new("batch", &Value::String(line.to_string()), &Err(e)),
    }
}

/// Worst outcome of a batch: certificate failures over validation errors.
fn batch_exit(envelopes: &[Envelope]) -> i32 {
    let kinds: Vec<&str> = envelopes
        .iter()
        .filter_map(|e| e.error.as_ref().and_then(|err| err["kind"].as_str()))
        .collect();
    if kinds.contains(&"certificate") {
        1
    } else if kinds.is_empty() {
        0
    } else {
        2
    }
}

fn run_lines(lines: &[String], f: impl Fn(&str) -> Envelope + Sync + Send) -> Vec<Envelope> {
    instability_core::par::map(lines, instability_core::Strategy::Auto, |l| f(l))
}

fn read_lines(path: &PathBuf) -> Result<Vec<String>, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    Ok(text.lines().map(str::to_string).collect())
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        invalid(format!(
            "{THREADS_VAR} must be a positive integer, got '{raw}'"
        ))
    })?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| invalid(format!("{THREADS_VAR}: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn emit(out: &mut impl Write, format: Format, envelopes: &[Envelope]) {
    for e in envelopes {
        let text = match format {
            Format::Json => e.to_json_line() + "\n",
            Format::Text => e.to_text(),
        };
        // a closed pipe is not worth a panic
        let _ = out.write_all(text.as_bytes());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    let subcommand = match &cli.command {
        Command::BinaryForm(_) => "binary-form",
        Command::Kempf(_) => "kempf",
        Command::Ep(_) => "ep",
        Command::Bounds(_) => "bounds",
        Command::Bundle(_) => "bundle",
        Command::Batch(_) => "batch",
    };
    if let Err(e) = configure_threads() {
        emit(
            &mut out,
            cli.format,
            &[Envelope::new(subcommand, &Value::Null, &Err(e))],
        );
        return ExitCode::from(2);
    }

    let (envelopes, code) = match &cli.command {
        Command::Batch(a) => match read_lines(&a.file) {
            Ok(lines) => {
                let envs = run_lines(&lines, batch_line);
                let code = batch_exit(&envs);
                (envs, code)
            }
            Err(e) => {
                let payload = Value::String(a.file.display().to_string());
                (vec![Envelope::new("batch", &payload, &Err(e))], 2)
            }
        },
        Command::BinaryForm(BinaryFormCommand::Analyze(a)) if a.file.is_some() => {
            let path = a.file.as_ref().expect("checked");
            match read_lines(path) {
                Ok(lines) => {
                    let default_p = a.p;
                    let envs = run_lines(&lines, |line| {
                        match binary_form::corpus_line(line, default_p) {
                            Ok(payload) => {
                                let value = to_value(&payload);
                                Envelope::new("binary-form", &value, &binary_form::run(&payload))
                            }
                            Err(e) => Envelope::new(
                                "binary-form",
                                &Value::String(line.to_string()),
                                &Err(e),
                            ),
                        }
                    });
                    let code = batch_exit(&envs);
                    (envs, code)
                }
                Err(e) => {
                    let payload = Value::String(path.display().to_string());
                    (vec![Envelope::new("binary-form", &payload, &Err(e))], 2)
                }
            }
        }
        command => match request(command) {
            Ok((name, payload)) => {
                let outcome = commands::dispatch(name, &payload);
                let code = outcome.as_ref().err().map_or(0, CliError::exit_code);
                (vec![Envelope::new(name, &payload, &outcome)], code)
            }
            Err((name, e)) => {
                let code = e.exit_code();
                (vec![Envelope::new(name, &Value::Null, &Err(e))], code)
            }
        },
    };
    emit(&mut out, cli.format, &envelopes);
    ExitCode::from(code as u8)
}
