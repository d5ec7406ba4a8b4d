//! Command surface behind the `parkstat` binary.
//!
//! Each command renders into a string; the binary only routes it to stdout
//! or a file and turns the outcome into an exit code.

pub mod suites;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::expectations::{stat_total, WordFamily};
use crate::forests::enumerate_forests;
use crate::parking::{enumerate_pf, enumerate_upf, hess_sequences};
use crate::qalgebra::{a_inv_asc, pf_q, upf_q};
use crate::report::Status;
use crate::symfunc::{pf_symfunc, upf_symfunc_graded};
use crate::words::{permutations, StatisticId, Words};

pub use suites::{run_suite, suite_names, Params, Run, ALL_OPS};

/// Largest `n` accepted without `--allow-large`.
pub const MAX_N: usize = 8;
/// Largest truncation order accepted without `--allow-large`.
pub const MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Bfile,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "text" => Format::Text,
            "csv" => Format::Csv,
            "json" => Format::Json,
            "bfile" => Format::Bfile,
            _ => return Err(usage(format!("unknown format `{s}`; expected text, csv, json or bfile"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Enumerate { family: String, n: usize },
    Poly { which: String, n: usize },
    Verify { suite: String, params: Params },
    Bfile { sequence: String, max_n: usize, compare: Option<PathBuf> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    pub allow_large: bool,
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Rendered output of a command and its exit code.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    /// One-line summary meant for stderr.
    pub note: Option<String>,
    pub code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, note: None, code: 0 }
    }
}

/// Runs a command on a pool sized by `threads`, or rayon's default.
pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    check_caps(cfg)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        if t == 0 {
            return Err(usage("thread count must be positive"));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| CliError::Io(e.to_string()))?;
    pool.install(|| match &cfg.command {
        Command::Enumerate { family, n } => cmd_enumerate(family, *n, cfg.format).map(Outcome::ok),
        Command::Poly { which, n } => cmd_poly(which, *n, cfg.format).map(Outcome::ok),
        Command::Verify { suite, params } => cmd_verify(suite, params),
        Command::Bfile { sequence, max_n, compare } => cmd_bfile(sequence, *max_n, compare.as_deref()),
    })
}

fn check_caps(cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.allow_large {
        return Ok(());
    }
    let (n, order) = match &cfg.command {
        Command::Enumerate { n, .. } | Command::Poly { n, .. } => (*n, 0),
        Command::Verify { params, .. } => (params.n.unwrap_or(params.max_n), params.order),
        Command::Bfile { max_n, .. } => (*max_n, 0),
    };
    if n > MAX_N {
        return Err(usage(format!("n = {n} exceeds the cap {MAX_N}; pass --allow-large to lift it")));
    }
    if order > MAX_ORDER {
        return Err(usage(format!("N = {order} exceeds the cap {MAX_ORDER}; pass --allow-large to lift it")));
    }
    Ok(())
}

pub const FAMILIES: [&str; 7] = ["pf", "upf", "cayley", "forests", "hess", "sn", "sn_plus"];

fn family_items(family: &str, n: usize) -> Result<(&'static str, Vec<Vec<u32>>), CliError> {
    let words = |it: &mut dyn Iterator<Item = crate::words::Word>| it.map(|w| w.into_vec()).collect::<Vec<_>>();
    let (column, mut items) = match family {
        "pf" => ("word", words(&mut enumerate_pf(n))),
        "upf" => ("word", words(&mut enumerate_upf(n))),
        "cayley" => ("word", words(&mut Words::cayley(n))),
        "sn" => ("word", permutations(n).map(|p| p.entries().to_vec()).collect()),
        "sn_plus" => ("word", permutations(n).filter(|p| p.is_even()).map(|p| p.entries().to_vec()).collect()),
        "forests" => ("parents", enumerate_forests(n).map(|f| f.parents().to_vec()).collect()),
        "hess" => (
            "content",
            hess_sequences(n).into_iter().map(|c| c.parts().iter().map(|&x| x as u32).collect()).collect(),
        ),
        _ => return Err(usage(format!("unknown family `{family}`; known: {}", FAMILIES.join(", ")))),
    };
    items.sort();
    Ok((column, items))
}

fn spaced(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Lists a family in lexicographic order, ending with its size.
pub fn cmd_enumerate(family: &str, n: usize, format: Format) -> Result<String, CliError> {
    let (column, items) = family_items(family, n)?;
    let mut out = String::new();
    match format {
        Format::Json => {
            let v = json!({"family": family, "n": n, column: items, "count": items.len()});
            out = v.to_string();
            out.push('\n');
        }
        Format::Csv => {
            writeln!(out, "{column}").unwrap();
            for it in &items {
                writeln!(out, "{}", spaced(it)).unwrap();
            }
            writeln!(out, "# count {}", items.len()).unwrap();
        }
        Format::Text => {
            for it in &items {
                writeln!(out, "{}", spaced(it)).unwrap();
            }
            writeln!(out, "count {}", items.len()).unwrap();
        }
        Format::Bfile => return Err(usage("enumerate supports text, csv and json")),
    }
    Ok(out)
}

pub const POLYS: [&str; 5] = ["pf_q", "upf_q", "a_inv_asc", "pf_sym", "upf_sym_t"];

/// Prints one of the generating polynomials at size `n`.
pub fn cmd_poly(which: &str, n: usize, format: Format) -> Result<String, CliError> {
    let (text, value): (String, Value) = match which {
        "pf_q" => {
            let p = pf_q(n);
            (p.to_string(), json!(p.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>()))
        }
        "upf_q" => {
            let p = upf_q(n);
            (p.to_string(), json!(p.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>()))
        }
        "a_inv_asc" => {
            let p = a_inv_asc(n);
            let terms: Vec<Value> =
                p.terms().map(|((i, j), c)| json!({"q": i, "t": j, "coeff": c.to_string()})).collect();
            (p.to_string(), json!(terms))
        }
        "pf_sym" => {
            let f = pf_symfunc(n);
            (f.to_string(), f.to_json())
        }
        "upf_sym_t" => {
            let f = upf_symfunc_graded(n);
            (f.to_string(), f.to_json())
        }
        _ => return Err(usage(format!("unknown polynomial `{which}`; known: {}", POLYS.join(", ")))),
    };
    Ok(match format {
        Format::Text => format!("{text}\n"),
        Format::Json => format!("{}\n", json!({"which": which, "n": n, "text": text, "value": value})),
        _ => return Err(usage("poly supports text and json")),
    })
}

/// Runs a suite; the body is always the JSON report.
pub fn cmd_verify(suite: &str, params: &Params) -> Result<Outcome, CliError> {
    if !suite_names().contains(&suite) {
        return Err(usage(format!("unknown suite `{suite}`; known: {}", suite_names().join(", "))));
    }
    let run = run_suite(suite, params)?;
    let s = &run.suite;
    let (pass, fail, pre) = (s.count(Status::Pass), s.count(Status::Fail), s.count(Status::Precondition));
    let body = json!({
        "suite": suite,
        "max_n": params.max_n,
        "n": params.n,
        "N": params.order,
        "corrupt": params.corrupt,
        "summary": {"pass": pass, "fail": fail, "precondition": pre},
        "covered": run.covered,
        "reports": s.reports,
    });
    let mut note = format!("{suite}: {pass} pass, {fail} fail, {pre} outside hypothesis");
    for r in s.failures() {
        write!(note, "\n{r}").unwrap();
    }
    Ok(Outcome { body: format!("{body:#}\n"), note: Some(note), code: if fail == 0 { 0 } else { 1 } })
}

pub const SEQUENCES: [&str; 10] = [
    "pf-inv-total",
    "pf-des-total",
    "pf-tie-total",
    "pf-tie1",
    "upf-count",
    "pf-count",
    "catalan",
    "fubini",
    "sdes-sn",
    "bdes-sn",
];

/// First index of a registered sequence.
pub fn sequence_offset(seq: &str) -> Option<usize> {
    Some(match seq {
        "pf-inv-total" | "pf-des-total" | "pf-tie-total" | "sdes-sn" | "bdes-sn" => 1,
        "pf-tie1" => 2,
        "upf-count" | "pf-count" | "catalan" | "fubini" => 0,
        _ => return None,
    })
}

fn total(fam: WordFamily, n: usize, id: StatisticId) -> Result<BigInt, CliError> {
    let r = stat_total(&fam, n, &id)?;
    Ok(r.to_integer())
}

/// The term of a registered sequence at `n`, computed by enumeration.
pub fn sequence_term(seq: &str, n: usize) -> Result<BigInt, CliError> {
    let count = |c: usize| Ok(BigInt::from(c));
    match seq {
        "pf-inv-total" => total(WordFamily::Pf, n, StatisticId::Inv),
        "pf-des-total" => total(WordFamily::Pf, n, StatisticId::Des),
        "pf-tie-total" => total(WordFamily::Pf, n, StatisticId::Tie),
        "sdes-sn" => total(WordFamily::Sn, n, StatisticId::Sdes),
        "bdes-sn" => total(WordFamily::Sn, n, StatisticId::Bdes),
        "pf-tie1" => count(enumerate_pf(n).filter(|w| w.entries()[0] == w.entries()[1]).count()),
        "upf-count" => count(enumerate_upf(n).count()),
        "pf-count" => count(enumerate_pf(n).count()),
        "catalan" => count(enumerate_forests(n).filter(|f| f.pinv() == 0).count()),
        "fubini" => count(Words::cayley(n).count()),
        _ => Err(usage(format!("unknown sequence `{seq}`; known: {}", SEQUENCES.join(", ")))),
    }
}

/// Parses `n a(n)` lines, skipping blanks and `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, BigInt)>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(usage(format!("malformed b-file line `{l}`")));
            };
            let n = a.parse().map_err(|_| usage(format!("bad index in `{l}`")))?;
            let v = b.parse().map_err(|_| usage(format!("bad value in `{l}`")))?;
            Ok((n, v))
        })
        .collect()
}

/// Emits a b-file from the sequence offset up to `max_n`, optionally diffed
/// against a fixture over the indices both cover.
pub fn cmd_bfile(seq: &str, max_n: usize, compare: Option<&std::path::Path>) -> Result<Outcome, CliError> {
    let offset = sequence_offset(seq)
        .ok_or_else(|| usage(format!("unknown sequence `{seq}`; known: {}", SEQUENCES.join(", "))))?;
    let terms: Vec<(usize, BigInt)> =
        (offset..=max_n).map(|n| sequence_term(seq, n).map(|v| (n, v))).collect::<Result<_, _>>()?;
    let body: String = terms.iter().map(|(n, v)| format!("{n} {v}\n")).collect();
    let Some(path) = compare else {
        return Ok(Outcome::ok(body));
    };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let fixture = parse_bfile(&text)?;
    let ours: std::collections::BTreeMap<usize, &BigInt> = terms.iter().map(|(n, v)| (*n, v)).collect();
    let mut compared = 0;
    for (n, want) in &fixture {
        if let Some(got) = ours.get(n) {
            compared += 1;
            if *got != want {
                let note = format!("{seq}: first divergence at n={n}: computed {got}, fixture {want}");
                return Ok(Outcome { body, note: Some(note), code: 1 });
            }
        }
    }
    Ok(Outcome { body, note: Some(format!("{seq}: {compared} terms agree with the fixture")), code: 0 })
}
