//! Subcommand dispatch. Exit codes: 0 success, 1 domain or validation
//! error, 2 usage or parse error.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use ordcalc_core::invariant::{arrangement_nat_sum, countable_nsum};
use ordcalc_core::mixed::{carruth_max, enumerate_pure_interleavings};
use ordcalc_core::ordinal::{compare, ord_mul};
use ordcalc_core::sum::{g_sum, g_sum_spectrum, iter_nat_sum, iter_ord_sum, tail_character};
use ordcalc_core::tree::{extension_order_type, rank, size};
use ordcalc_core::{Multiplicity, OrdMultiset, Ordinal, SeqDesc, Segment, StepSet};

use crate::check::{run_suite, SUITES};
use crate::formats::{multiset_from_str, sequence_from_str, steps_from_str, tree_from_str};
use crate::parser::parse_ordinal;
use crate::printer::print_ordinal;

#[derive(Parser)]
#[command(name = "ordcalc", version, about = "Exact transfinite ordinal arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression and print its normal form
    Eval { expr: String },
    /// Compare two expressions: prints `<`, `=`, or `>`
    Cmp { left: String, right: String },
    /// Iterated natural sum of a sequence file
    Itersum { file: PathBuf },
    /// Iterated ordinary sum of a sequence file
    Ordsum { file: PathBuf },
    /// Partial sum of a sequence file relative to a step set
    Gsum {
        file: PathBuf,
        /// Step file naming the natural-step positions
        #[arg(long, conflicts_with_all = ["all_natural", "all_ordinary"])]
        steps: Option<PathBuf>,
        /// Natural sum at every step
        #[arg(long, conflicts_with = "all_ordinary")]
        all_natural: bool,
        /// Ordinary sum at every step
        #[arg(long)]
        all_ordinary: bool,
    },
    /// All values a partial sum of the sequence can take, sorted
    Spectrum { file: PathBuf },
    /// Tail character (gamma-bar and xi) of a limit-length sequence
    Tail { file: PathBuf },
    /// Order types of all pure interleavings of two ordinals, and their maximum
    Carruth { left: String, right: String },
    /// Invariant natural sum of a multiset file
    Nsum {
        file: PathBuf,
        /// Exact value (countable multisets, plus the one known uncountable shape)
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        /// Least value over a generated family of arrangements
        #[arg(long)]
        bound: bool,
    },
    /// Size, rank, and extension order type of a tree file
    Treesize { file: PathBuf },
    /// Run property suites
    Check {
        /// Suite name; all suites when omitted
        #[arg(long)]
        suite: Option<String>,
        /// Generator seed; defaults to ORDCALC_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn exit(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<ordcalc_core::Error> for Failure {
    fn from(e: ordcalc_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<crate::parser::ParseError> for Failure {
    fn from(e: crate::parser::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 2;
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("ordcalc: {}", f.message());
            f.exit()
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Eval { expr } => {
            println!("{}", print_ordinal(&parse_ordinal(&expr)?));
        }
        Cmd::Cmp { left, right } => {
            let a = parse_ordinal(&left)?;
            let b = parse_ordinal(&right)?;
            let sign = match compare(&a, &b) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            println!("{sign}");
        }
        Cmd::Itersum { file } => {
            println!("{}", print_ordinal(&iter_nat_sum(&load_sequence(&file)?)));
        }
        Cmd::Ordsum { file } => {
            println!("{}", print_ordinal(&iter_ord_sum(&load_sequence(&file)?)));
        }
        Cmd::Gsum { file, steps, all_natural, all_ordinary } => {
            let s = load_sequence(&file)?;
            let g = match (steps, all_natural, all_ordinary) {
                (Some(path), false, false) => {
                    steps_from_str(&read(&path)?).map_err(Failure::Usage)?
                }
                (None, true, false) => StepSet::AllNatural,
                (None, false, true) => StepSet::AllOrdinary,
                _ => {
                    return Err(Failure::Usage(
                        "pick one of --steps FILE, --all-natural, --all-ordinary".into(),
                    ))
                }
            };
            println!("{}", print_ordinal(&g_sum(&s, &g)?));
        }
        Cmd::Spectrum { file } => {
            let values = g_sum_spectrum(&load_sequence(&file)?)?;
            for v in &values {
                println!("{}", print_ordinal(v));
            }
        }
        Cmd::Tail { file } => {
            let t = tail_character(&load_sequence(&file)?)?;
            println!("gamma_bar: {}", print_ordinal(&t.gamma_bar));
            println!("xi: {}", print_ordinal(&t.xi));
        }
        Cmd::Carruth { left, right } => {
            let a = parse_ordinal(&left)?;
            let b = parse_ordinal(&right)?;
            let mut values = enumerate_pure_interleavings(&a, &b)?;
            values.sort_by(compare);
            values.dedup();
            for v in &values {
                println!("{}", print_ordinal(v));
            }
            println!("max: {}", print_ordinal(&carruth_max(&a, &b)?));
        }
        Cmd::Nsum { file, exact, bound } => {
            let m = multiset_from_str(&read(&file)?).map_err(Failure::Usage)?;
            match (exact, bound) {
                (true, false) => println!("{}", print_ordinal(&nsum_exact(&m)?)),
                (false, true) => {
                    let (value, count) = nsum_bound(&m)?;
                    println!(
                        "invariant sum <= {} (least of {count} arrangements)",
                        print_ordinal(&value)
                    );
                }
                _ => return Err(Failure::Usage("pick one of --exact, --bound".into())),
            }
        }
        Cmd::Treesize { file } => {
            let t = tree_from_str(&read(&file)?).map_err(Failure::Usage)?;
            println!("size: {}", print_ordinal(&size(&t)?));
            println!("rank: {}", print_ordinal(&rank(&t)));
            println!("extension: {}", print_ordinal(&extension_order_type(&t)?));
        }
        Cmd::Check { suite, seed, cases } => {
            let seed = seed
                .or_else(|| std::env::var("ORDCALC_SEED").ok()?.parse().ok())
                .unwrap_or(0);
            let names: Vec<&str> = match &suite {
                Some(name) => {
                    if !SUITES.contains(&name.as_str()) {
                        return Err(Failure::Usage(format!(
                            "unknown suite {name:?}; available: {}",
                            SUITES.join(", ")
                        )));
                    }
                    vec![name.as_str()]
                }
                None => SUITES.to_vec(),
            };
            let mut violations = 0usize;
            for name in names {
                let report = run_suite(name, seed, cases).expect("known suite");
                if report.passed() {
                    println!("{name}: pass ({} cases)", report.cases);
                } else {
                    println!("{name}: FAIL ({} violations)", report.failures.len());
                    for f in &report.failures {
                        println!("  {f}");
                    }
                    violations += report.failures.len();
                }
            }
            if violations > 0 {
                return Err(Failure::Domain(format!("{violations} property violations")));
            }
        }
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load_sequence(path: &Path) -> Result<SeqDesc, Failure> {
    sequence_from_str(&read(path)?).map_err(Failure::Usage)
}

/// Exact invariant sum: the countable closed form, or, for the one
/// uncountable shape with a known value — copies of 1 indexed by an
/// uncountable cardinal plus countably many copies of that cardinal —
/// the product of the cardinal with `w`.
fn nsum_exact(m: &OrdMultiset) -> Result<Ordinal, Failure> {
    match countable_nsum(m) {
        Err(ordcalc_core::Error::UncountableMultiplicity) => {
            if let [(one, Multiplicity::Aleph(k)), (atom, Multiplicity::Aleph(0))] = m.entries() {
                if *k >= 1 && *one == Ordinal::one() && *atom == Ordinal::atom(*k) {
                    return Ok(ord_mul(atom, &Ordinal::omega()));
                }
            }
            Err(Failure::Domain(
                "no exact method for uncountable multiplicities; try --bound".into(),
            ))
        }
        other => Ok(other?),
    }
}

/// Least iterated natural sum over a deterministic family of arrangements:
/// each entry becomes one run (or explicit copies when finite), taken in
/// ascending, descending, and alternating value order.
fn nsum_bound(m: &OrdMultiset) -> Result<(Ordinal, usize), Failure> {
    let runs: Vec<Segment> = m
        .entries()
        .iter()
        .map(|(v, mult)| match mult {
            Multiplicity::Finite(n) => Segment::Explicit(vec![v.clone(); *n as usize]),
            Multiplicity::Aleph(0) => {
                Segment::Repeat { value: v.clone(), length: Ordinal::omega() }
            }
            Multiplicity::Aleph(k) => {
                Segment::Repeat { value: v.clone(), length: Ordinal::atom(*k) }
            }
        })
        .collect();
    // entries() is ascending by value already
    let ascending = runs.clone();
    let descending: Vec<Segment> = runs.iter().rev().cloned().collect();
    let mut alternating = Vec::new();
    let (mut lo, mut hi) = (0usize, runs.len());
    while lo < hi {
        alternating.push(runs[lo].clone());
        lo += 1;
        if lo < hi {
            hi -= 1;
            alternating.push(runs[hi].clone());
        }
    }
    let mut best: Option<Ordinal> = None;
    let mut count = 0usize;
    for segments in [ascending, descending, alternating] {
        let value = arrangement_nat_sum(m, &SeqDesc::new(segments))?;
        count += 1;
        best = Some(match best {
            Some(b) if compare(&b, &value) != std::cmp::Ordering::Greater => b,
            _ => value,
        });
    }
    Ok((best.unwrap_or(Ordinal::Zero), count))
}
