//! Library side of the `frob` command: computing records, traces, batch files
//! and verification campaigns.

pub mod campaign;
pub mod record;
pub mod trace;

use frobenius_core::modarith::gcd;
use frobenius_core::oracles::{brauer_shockley_frobenius, sieve_frobenius, tripathi_frobenius};
use frobenius_core::reduce::{frobenius_general_by, GeneralResult, Outcome, PairOrder};
use frobenius_core::{solve_adaptive, BigSolution, Error};
use num_bigint::BigInt;

pub use record::{OutputRecord, StepRecord};

pub const NO_SOLUTION_MESSAGE: &str = "Frobenius number does not exist (gcd > 1)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Fast,
    Tripathi,
    Sieve,
    Bshockley,
}

impl Method {
    fn tag(self) -> &'static str {
        match self {
            Method::Fast => "FAST",
            Method::Tripathi => "TRIPATHI",
            Method::Sieve => "SIEVE",
            Method::Bshockley => "BSHOCKLEY",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    NoSolution,
    Invalid,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NoSolution => 1,
            Status::Invalid => 2,
        }
    }
}

pub struct Computation {
    pub status: Status,
    pub record: OutputRecord,
    /// Human-readable trace; empty when the input was rejected.
    pub trace: String,
}

/// Computes `g` of 2 or 3 positive integers with the chosen method.
pub fn compute(values: &[BigInt], method: Method) -> Computation {
    let input = values.to_vec();
    let invalid = |e: Error| Computation {
        status: Status::Invalid,
        record: OutputRecord::failure(input.clone(), "ERROR", e.to_string()),
        trace: String::new(),
    };

    if method == Method::Sieve {
        if !(2..=3).contains(&values.len()) || values.iter().any(|v| *v < BigInt::from(1)) {
            return invalid(Error::InvalidInput(format!("expected 2 or 3 positive integers, got {values:?}")));
        }
        let one = BigInt::from(1);
        if values.iter().fold(BigInt::from(0), |g, v| gcd(&g, v).unwrap_or_else(|_| one.clone())) != one {
            return no_solution(input, Vec::new());
        }
        return match sieve_frobenius(values) {
            Ok(g) => Computation {
                status: Status::Ok,
                record: OutputRecord { input, g: Some(g), case: method.tag().into(), nbar: None, steps: 0, reduction_chain: Vec::new(), error: None },
                trace: String::new(),
            },
            Err(e) => invalid(e),
        };
    }

    let mut core: Option<BigSolution> = None;
    let result = frobenius_general_by(values, PairOrder::First, |t| match method {
        Method::Fast => {
            let sol = solve_adaptive(t)?;
            let g = sol.g.clone();
            core = Some(sol);
            Ok(g)
        }
        Method::Tripathi => tripathi_frobenius(t),
        Method::Bshockley => brauer_shockley_frobenius(t),
        Method::Sieve => unreachable!("handled above"),
    });
    let GeneralResult { g, chain, .. } = match result {
        Ok(r) => r,
        Err(e) => return invalid(e),
    };
    let steps: Vec<StepRecord> = chain.iter().map(StepRecord::from).collect();
    let trace = trace::format_trace(values, &chain, core.as_ref());
    let g = match g {
        Outcome::Value(g) => g,
        Outcome::NoSolution => {
            let mut c = no_solution(input, steps);
            c.trace = trace;
            return c;
        }
    };
    let case = match (&core, method) {
        (Some(sol), _) => sol.case_tag.as_str().to_string(),
        (None, Method::Fast) => chain.last().map_or("CORE", |s| s.kind.name()).to_string(),
        (None, m) => m.tag().to_string(),
    };
    let record = OutputRecord {
        input,
        g: Some(g),
        case,
        nbar: core.as_ref().and_then(|s| s.nbar.clone()),
        steps: core.as_ref().map_or(0, |s| s.diffmod_steps),
        reduction_chain: steps,
        error: None,
    };
    Computation { status: Status::Ok, record, trace }
}

fn no_solution(input: Vec<BigInt>, chain: Vec<StepRecord>) -> Computation {
    let mut record = OutputRecord::failure(input, "NO_SOLUTION", NO_SOLUTION_MESSAGE.to_string());
    record.reduction_chain = chain;
    Computation { status: Status::NoSolution, record, trace: String::new() }
}

/// A batch file line that is neither blank nor a comment and holds something
/// other than integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedLine {
    pub line: usize,
    pub text: String,
}

impl std::fmt::Display for MalformedLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: not a list of integers: {:?}", self.line, self.text)
    }
}

/// Parses a batch file into one list of integers per data line.
pub fn parse_batch(text: &str) -> Result<Vec<Vec<BigInt>>, MalformedLine> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let values = line
            .split_whitespace()
            .map(|tok| tok.parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| MalformedLine { line: i + 1, text: raw.to_string() })?;
        out.push(values);
    }
    Ok(out)
}

/// One JSON line per data line of `text`, in input order.
pub fn run_batch(text: &str, method: Method) -> Result<Vec<String>, MalformedLine> {
    Ok(parse_batch(text)?.iter().map(|v| compute(v, method).record.to_json()).collect())
}
