use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use peano_forge::formula::{parse, render, to_json};
use peano_forge::godel::{
    decode_formula, decode_seq, decode_set, encode_formula, encode_seq, encode_set, pair, symbol_text,
    symbols, unpair, SeqCode,
};
use peano_forge::ramsey::{
    decode_partition, decide, encode_partition, fast_growing, homog_report, min_witness,
    FastGrowingBudget, Partition, PartitionCode, Relation, SearchConfig, DEFAULT_MAX_CODE_BITS,
};
use peano_forge::recursive::{eval, parse_def, EvalOutcome};
use peano_forge::BigNat;

#[derive(Parser)]
#[command(name = "peano-forge", version, about = "Arithmetic, Gödel codes, recursive functions and finite Ramsey theory")]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its syntax tree
    Parse { formula: String },
    /// Print the Gödel code of a formula, sequence, set or partition
    #[command(subcommand)]
    Encode(Encode),
    /// Recover a formula, sequence, set or partition from its code
    #[command(subcommand)]
    Decode(Decode),
    /// Evaluate a recursive-function definition file at decimal arguments
    PrEval {
        file: PathBuf,
        #[arg(value_parser = nat)]
        args: Vec<BigNat>,
        /// Evaluation steps allowed
        #[arg(long, default_value_t = 1_000_000)]
        fuel: u64,
    },
    /// Decide m -> (k)^n_r, or find the least such m
    Ramsey(ArrowArgs),
    /// Decide m ->* (k)^n_r (relatively large homogeneous sets), or find the least such m
    Ph(ArrowArgs),
    /// Report whether a set is homogeneous and relatively large for a partition file
    CheckHomog {
        file: PathBuf,
        #[arg(required = true)]
        set: Vec<usize>,
    },
    /// Cantor pairing <x, y>
    Pair {
        #[arg(value_parser = nat)]
        x: BigNat,
        #[arg(value_parser = nat)]
        y: BigNat,
    },
    /// Inverse of the pairing function
    Unpair {
        #[arg(value_parser = nat)]
        z: BigNat,
    },
    /// Fast-growing hierarchy f_n(x)
    Fastgrow {
        n: u32,
        #[arg(value_parser = nat)]
        x: BigNat,
        #[arg(long, default_value_t = FastGrowingBudget::default().max_result_bits)]
        max_bits: u64,
        #[arg(long, default_value_t = FastGrowingBudget::default().max_iterations)]
        max_iterations: u64,
    },
}

#[derive(Subcommand)]
enum Encode {
    Formula {
        formula: String,
    },
    Seq {
        elements: Vec<u64>,
    },
    Set {
        elements: Vec<u64>,
    },
    /// Encode a partition file
    Partition {
        file: PathBuf,
        /// Refuse to materialize codes longer than this many bits
        #[arg(long, default_value_t = DEFAULT_MAX_CODE_BITS)]
        max_bits: u64,
    },
}

#[derive(Subcommand)]
enum Decode {
    Formula {
        #[arg(value_parser = nat)]
        code: BigNat,
    },
    Seq {
        #[arg(value_parser = nat)]
        code: BigNat,
    },
    Set {
        #[arg(value_parser = nat)]
        code: BigNat,
    },
    Partition {
        #[arg(value_parser = nat)]
        code: BigNat,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Args)]
struct ArrowArgs {
    #[arg(long, required_unless_present = "find_min", conflicts_with = "find_min")]
    m: Option<usize>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    n: usize,
    /// Scan m = k, k+1, .. up to --max-m for the least m that satisfies the relation
    #[arg(long, requires = "max_m")]
    find_min: bool,
    #[arg(long)]
    max_m: Option<usize>,
    /// Worker threads (defaults to the available parallelism); never changes the output
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Write the counterexample partition here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: impl Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn nat(s: &str) -> Result<BigNat, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a decimal natural number"));
    }
    s.parse().map_err(|_| format!("`{s}` is not a decimal natural number"))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("IoError: {}: {e}", path.display())))
}

fn read_partition(path: &Path) -> Result<Partition, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| Failure::Domain(format!("BadPartitionFile: {e}")))?;
        Partition::from_json(&v).map_err(domain)
    } else {
        text.parse().map_err(domain)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// What a successful command prints, and its exit code.
struct Output {
    text: String,
    code: u8,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let json = cli.json;
    let pick = |text: String, value: Value| if json { value.to_string() } else { text };
    Ok(match cli.command {
        Command::Parse { formula } => {
            let f = parse(&formula).map_err(domain)?;
            pick(format!("{f:?}"), to_json(&f)).into()
        }
        Command::Encode(what) => match what {
            Encode::Formula { formula } => {
                let f = parse(&formula).map_err(domain)?;
                let code = encode_formula(&f).to_string();
                let syms = symbol_text(&symbols(&f));
                pick(code.clone(), json!({"code": code, "symbols": syms})).into()
            }
            Encode::Seq { elements } => {
                let c = encode_seq(&elements);
                pick(c.value().to_string(), c.to_json()).into()
            }
            Encode::Set { elements } => {
                let c = encode_set(&elements).map_err(domain)?.to_string();
                pick(c.clone(), json!({"code": c, "elements": elements})).into()
            }
            Encode::Partition { file, max_bits } => {
                let code = encode_partition(&read_partition(&file)?);
                if json {
                    code.to_json(max_bits).to_string().into()
                } else {
                    code.to_bignat(max_bits).map_err(domain)?.to_string().into()
                }
            }
        },
        Command::Decode(what) => match what {
            Decode::Formula { code } => {
                let f = decode_formula(&code).map_err(domain)?;
                pick(render(&f), to_json(&f)).into()
            }
            Decode::Seq { code } => {
                let xs = decode_seq(&code).map_err(domain)?;
                pick(join(&xs), SeqCode::new(code).map_err(domain)?.to_json()).into()
            }
            Decode::Set { code } => {
                let xs = decode_set(&code).map_err(domain)?;
                pick(join(&xs), json!({"code": code.to_string(), "elements": xs})).into()
            }
            Decode::Partition { code, m, n, r } => {
                let factored = PartitionCode::from_bignat(&code).map_err(domain)?;
                let p = decode_partition(&factored, m, n, r).map_err(domain)?;
                pick(p.to_string().trim_end().to_string(), p.to_json()).into()
            }
        },
        Command::PrEval { file, args, fuel } => {
            let d = parse_def(&read(&file)?).map_err(domain)?;
            match eval(&d, &args, fuel).map_err(domain)? {
                EvalOutcome::Value(v) => {
                    let v = v.to_string();
                    pick(v.clone(), json!({"outcome": "value", "value": v})).into()
                }
                EvalOutcome::Undefined | EvalOutcome::BudgetExhausted => Output {
                    text: pick("budget-exhausted".into(), json!({"outcome": "budget-exhausted"})),
                    code: 1,
                },
            }
        }
        Command::Ramsey(a) => arrow_command(Relation::Ramsey, a, json)?.into(),
        Command::Ph(a) => arrow_command(Relation::ParisHarrington, a, json)?.into(),
        Command::CheckHomog { file, set } => {
            let p = read_partition(&file)?;
            let report = homog_report(&p, &set).map_err(domain)?;
            serde_json::to_string(&report).expect("plain data").into()
        }
        Command::Pair { x, y } => {
            let z = pair(&x, &y).to_string();
            pick(z.clone(), json!({"code": z})).into()
        }
        Command::Unpair { z } => {
            let (x, y) = unpair(&z);
            pick(format!("{x} {y}"), json!({"x": x.to_string(), "y": y.to_string()})).into()
        }
        Command::Fastgrow {
            n,
            x,
            max_bits,
            max_iterations,
        } => {
            let budget = FastGrowingBudget {
                max_result_bits: max_bits,
                max_iterations,
            };
            let v = fast_growing(n, &x, budget).map_err(domain)?.to_string();
            pick(v.clone(), json!({"value": v})).into()
        }
    })
}

fn arrow_command(relation: Relation, a: ArrowArgs, json: bool) -> Result<String, Failure> {
    let mut cfg = SearchConfig::from_env().map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(jobs) = a.jobs {
        cfg = cfg.with_jobs(usize::try_from(jobs).unwrap_or(usize::MAX));
    }
    if a.find_min {
        let max_m = a.max_m.expect("clap enforces --max-m");
        let found = min_witness(a.k, a.r, a.n, relation, max_m, &cfg).map_err(domain)?;
        return Ok(if json {
            json!({ "min_m": found }).to_string()
        } else {
            found.map_or("none".to_string(), |m| m.to_string())
        });
    }
    let m = a.m.expect("clap enforces --m");
    let outcome = decide(relation, m, a.k, a.r, a.n, &cfg).map_err(domain)?;
    let counter = outcome.counterexample;
    if let (Some(path), Some(p)) = (&a.out, &counter) {
        let body = if json { p.to_json().to_string() + "\n" } else { p.to_string() };
        std::fs::write(path, body)
            .map_err(|e| Failure::Domain(format!("IoError: {}: {e}", path.display())))?;
    }
    Ok(match (json, counter) {
        (true, c) => {
            let c = if a.out.is_some() { Value::Null } else { c.map_or(Value::Null, |p| p.to_json()) };
            json!({"holds": outcome.holds, "counterexample": c}).to_string()
        }
        (false, Some(p)) if a.out.is_none() => format!("false\n{}", p.to_string().trim_end()),
        (false, _) => outcome.holds.to_string(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(2));
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(out) => {
            let _ = writeln!(stdout, "{}", out.text);
            ExitCode::from(out.code)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
