use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use frobenius_cli::campaign::{verify_exhaustive, verify_random, Report};
use frobenius_cli::{compute, run_batch, Method, Status, NO_SOLUTION_MESSAGE};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "frob", version, about = "Frobenius numbers of two or three integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute g for 2 or 3 positive integers.
    Compute {
        #[arg(required = true, num_args = 2..=3, allow_negative_numbers = true)]
        values: Vec<String>,
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
        /// Print the JSON record instead of the bare value.
        #[arg(long)]
        json: bool,
        /// Print the intermediate values of the fast solver.
        #[arg(long)]
        trace: bool,
    },
    /// Compare the fast solver against an oracle over many triples.
    Verify(VerifyArgs),
    /// One JSON record per line of a file of pairs or triples.
    Batch {
        path: std::path::PathBuf,
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Mode {
    /// Every valid triple with a3 <= MAX, checked against the sieve.
    #[arg(long, value_name = "MAX")]
    exhaustive: Option<i64>,
    /// COUNT random triples, checked against the residue-graph oracle.
    #[arg(long, value_name = "COUNT", requires = "bound")]
    random: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    mode: Mode,
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// List every triple that reaches the FF33 closed forms.
    #[arg(long)]
    search_ff33: bool,
}

fn trace_from_env() -> bool {
    std::env::var("FROB_LOG").is_ok_and(|v| v.eq_ignore_ascii_case("trace"))
}

fn cmd_compute(values: &[String], method: Method, json: bool, trace: bool) -> u8 {
    let parsed: Result<Vec<BigInt>, _> = values.iter().map(|v| v.parse::<BigInt>()).collect();
    let Ok(parsed) = parsed else {
        eprintln!("error: arguments must be integers: {}", values.join(" "));
        return 2;
    };
    let c = compute(&parsed, method);
    if (trace || trace_from_env()) && !c.trace.is_empty() {
        eprint!("{}", c.trace);
    }
    if json {
        println!("{}", c.record.to_json());
    } else {
        match c.status {
            Status::Ok => println!("{}", c.record.g.as_ref().expect("g on success")),
            Status::NoSolution => eprintln!("{NO_SOLUTION_MESSAGE}"),
            Status::Invalid => eprintln!("error: {}", c.record.error.as_deref().unwrap_or("invalid input")),
        }
    }
    c.status.exit_code() as u8
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let report: Report = if let Some(max) = args.mode.exhaustive {
        verify_exhaustive(max)
    } else {
        let count = args.mode.random.expect("clap enforces one mode");
        match verify_random(count, args.bound.expect("clap requires --bound"), args.seed) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        }
    };
    for m in &report.mismatches {
        println!("MISMATCH {:?}: fast {:?}, oracle {:?}", m.triple, m.fast, m.oracle);
        print!("{}", m.trace);
    }
    if args.search_ff33 {
        for t in &report.ff33_hits {
            println!("FF33 hit {t:?}");
        }
    }
    print!("{}", report.summary());
    if report.passed() {
        0
    } else {
        3
    }
}

fn cmd_batch(path: &std::path::Path, method: Method) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    match run_batch(&text, method) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Compute { values, method, json, trace } => cmd_compute(values, *method, *json, *trace),
        Command::Verify(args) => cmd_verify(args),
        Command::Batch { path, method } => cmd_batch(path, *method),
    };
    ExitCode::from(code)
}
