//! Command-line harness over the sclab library.
//!
//! Exit codes: 0 all checks passed, 1 a measured complexity missed its
//! formula, 2 usage or malformed input, 3 a resource budget was exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sclab::lab::{self, ReportFormat, VerifyOp, VerifyRequest};
use sclab::{atoms, dot, json, ops, witness, BoolOp, Dfa, Error};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "sclab", version, about = "State-complexity lab bench", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a witness dialect DFA.
    Witness {
        /// Number of states (at least 3).
        #[arg(long)]
        n: usize,
        /// Dialect of the master alphabet, e.g. "b,a,-,d"; "-" deletes a letter.
        #[arg(long, default_value = "a,b,c,d")]
        dialect: String,
        #[arg(long, value_enum, default_value_t = DfaFormat::Json)]
        format: DfaFormat,
    },
    /// Apply an operation to JSON DFA files and print the result with its
    /// complexity.
    Apply {
        /// union, symdiff, difference, intersection, concat (or product),
        /// star, reverse
        op: String,
        left: PathBuf,
        /// Required for binary operations.
        right: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DfaFormat::Json)]
        format: DfaFormat,
        /// Subset-construction budget (also settable via SCLAB_BUDGET).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Sweep witness grids and compare measured complexities against the
    /// formula table.
    Verify {
        /// Comma-separated operations, or "all".
        #[arg(long, default_value = "all")]
        ops: String,
        /// Left-witness size range, e.g. "3..6" or "4".
        #[arg(long)]
        m: Option<String>,
        /// Right-witness size range, e.g. "3..6" or "4".
        #[arg(long)]
        n: Option<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        #[arg(long)]
        budget: Option<usize>,
        /// Omit timing columns so identical runs produce identical bytes.
        #[arg(long)]
        no_timing: bool,
    },
    /// Atoms of the three-letter witness, with formula comparison.
    Atoms {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        /// Largest n accepted before the cost is considered a budget issue.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Syntactic semigroup size of the three-letter witness.
    Semigroup {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DfaFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Md,
    Csv,
    Json,
}

impl From<TableFormat> for ReportFormat {
    fn from(f: TableFormat) -> ReportFormat {
        match f {
            TableFormat::Md => ReportFormat::Md,
            TableFormat::Csv => ReportFormat::Csv,
            TableFormat::Json => ReportFormat::Json,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("sclab: {err}");
            ExitCode::from(if err.is_resource() { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Witness { n, dialect, format } => {
            let pi = witness::PartialPermutation::parse(&dialect)?;
            let dfa = witness::WitnessSpec { n, pi }.build()?;
            print_dfa(&dfa, format, None);
            Ok(0)
        }
        Command::Apply {
            op,
            left,
            right,
            format,
            budget,
        } => {
            let budget = budget.or_else(env_budget).unwrap_or(sclab::DEFAULT_SUBSET_BUDGET);
            let apply_op = parse_apply_op(&op)?;
            let left = read_dfa(&left)?;
            if matches!(apply_op, ApplyOp::Star | ApplyOp::Reverse) && right.is_some() {
                return Err(Error::InvalidInput(format!(
                    "operation '{op}' takes a single operand file"
                )));
            }
            let result = match apply_op {
                ApplyOp::Boolean(bool_op) => {
                    ops::boolean_op(&left, &read_dfa(&require_right(&op, right)?)?, bool_op)
                }
                ApplyOp::Concat => {
                    ops::concat_bounded(&left, &read_dfa(&require_right(&op, right)?)?, budget)?
                }
                ApplyOp::Star => ops::star_bounded(&left, budget)?,
                ApplyOp::Reverse => ops::reverse_bounded(&left, budget)?,
            };
            if result.alphabet().is_empty() {
                eprintln!(
                    "note: the result has an empty effective alphabet \
                     (the empty language or {{ε}}); kappa = 1 by convention"
                );
            }
            print_dfa(&result, format, Some(result.state_count()));
            Ok(0)
        }
        Command::Verify {
            ops,
            m,
            n,
            format,
            budget,
            no_timing,
        } => {
            let request = VerifyRequest {
                ops: parse_ops(&ops)?,
                m_range: parse_range(m.as_deref())?,
                n_range: parse_range(n.as_deref())?,
                budget: budget.or_else(env_budget),
            };
            let records = lab::run_verify(&request)?;
            print!("{}", lab::render_records(&records, format.into(), !no_timing));
            let mismatches: Vec<_> = records.iter().filter(|r| !r.matches()).collect();
            if mismatches.is_empty() {
                Ok(0)
            } else {
                for r in &mismatches {
                    eprintln!(
                        "mismatch: {} m={} n={} measured {} formula {}",
                        r.op.name(),
                        r.m.map_or("-".into(), |m| m.to_string()),
                        r.n,
                        r.measured,
                        r.formula
                    );
                }
                Ok(EXIT_MISMATCH)
            }
        }
        Command::Atoms {
            n,
            format,
            max_n,
            budget,
        } => {
            if n < 3 {
                return Err(Error::TooFewStates { n, min: 3 });
            }
            if n > max_n {
                return Err(Error::BudgetExceeded {
                    what: "atoms state-count",
                    budget: max_n,
                    reached: n,
                });
            }
            let d = witness_abc(n)?;
            let budget = budget
                .or_else(env_budget)
                .unwrap_or_else(|| sclab::transform::default_semigroup_budget(n));
            let report = atoms::atoms_bounded(&d, budget)?;
            let rows = lab::atom_rows(&report);
            print!("{}", lab::render_atom_report(report.n, &rows, format.into()));
            Ok(if rows.iter().all(|r| r.matches()) && rows.len() == 1 << n {
                0
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Semigroup { n, format, budget } => {
            if n < 3 {
                return Err(Error::TooFewStates { n, min: 3 });
            }
            let d = witness_abc(n)?;
            let budget = budget
                .or_else(env_budget)
                .unwrap_or_else(|| sclab::transform::default_semigroup_budget(n));
            let size = atoms::syntactic_semigroup_size_bounded(&d, budget)? as u64;
            print!("{}", lab::render_semigroup_report(n, size, format.into()));
            Ok(if size == lab::expected_complexity(VerifyOp::Semigroup, n, n) {
                0
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

enum ApplyOp {
    Boolean(BoolOp),
    Concat,
    Star,
    Reverse,
}

fn parse_apply_op(name: &str) -> Result<ApplyOp, Error> {
    Ok(match name {
        "union" => ApplyOp::Boolean(BoolOp::Union),
        "symdiff" => ApplyOp::Boolean(BoolOp::SymmetricDifference),
        "difference" => ApplyOp::Boolean(BoolOp::Difference),
        "intersection" => ApplyOp::Boolean(BoolOp::Intersection),
        "concat" | "product" => ApplyOp::Concat,
        "star" => ApplyOp::Star,
        "reverse" => ApplyOp::Reverse,
        _ => return Err(Error::InvalidInput(format!("unknown operation '{name}'"))),
    })
}

fn require_right(op: &str, right: Option<PathBuf>) -> Result<PathBuf, Error> {
    right.ok_or_else(|| Error::InvalidInput(format!("operation '{op}' needs a right operand file")))
}

fn read_dfa(path: &PathBuf) -> Result<Dfa, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    json::dfa_from_str(&text)
}

fn print_dfa(dfa: &Dfa, format: DfaFormat, kappa: Option<usize>) {
    match format {
        DfaFormat::Json => {
            let mut value = json::dfa_to_json(dfa);
            if let (Some(k), Some(obj)) = (kappa, value.as_object_mut()) {
                obj.insert("kappa".into(), k.into());
            }
            println!("{value}");
        }
        DfaFormat::Dot => {
            if let Some(k) = kappa {
                println!("// kappa = {k}");
            }
            print!("{}", dot::dfa_to_dot(dfa));
        }
    }
}

fn witness_abc(n: usize) -> Result<Dfa, Error> {
    witness::dialect(
        &witness::universal_witness(n)?,
        &witness::PartialPermutation::parse("a,b,c")?,
    )
}

fn parse_ops(text: &str) -> Result<Vec<VerifyOp>, Error> {
    if text == "all" {
        return Ok(VerifyOp::ALL.to_vec());
    }
    text.split(',')
        .map(|name| {
            VerifyOp::parse(name.trim())
                .ok_or_else(|| Error::InvalidInput(format!("unknown operation '{name}'")))
        })
        .collect()
}

/// "3..6" (inclusive) or a single "4".
fn parse_range(text: Option<&str>) -> Result<Option<(usize, usize)>, Error> {
    let Some(text) = text else { return Ok(None) };
    let bad = || Error::InvalidInput(format!("range '{text}' is not N or LO..HI"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v: usize = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(Some((lo, hi)))
}

fn env_budget() -> Option<usize> {
    std::env::var("SCLAB_BUDGET").ok()?.parse().ok()
}
