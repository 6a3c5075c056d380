//! The measurement bench: sweeps witness families over (m, n) grids, runs
//! each operation, and compares the measured complexity against the
//! closed-form expectation.
//!
//! Every closed form lives in [`expected_complexity`] and nowhere else.
//! Grid cells are independent pure computations and run in parallel; the
//! assembled report is always ordered by (operation, m, n), so identical
//! requests produce identical output.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::atoms::{atom_formula, atoms_bounded, syntactic_semigroup_size_bounded, AtomsReport};
use crate::dfa::Dfa;
use crate::error::Result;
use crate::nfa::DEFAULT_SUBSET_BUDGET;
use crate::ops::{boolean_op, concat_bounded, reverse_bounded, star_bounded, BoolOp};
use crate::transform::default_semigroup_budget;
use crate::witness::{boolean_witness_pair, dialect, universal_witness, PartialPermutation};

/// Operations the bench can sweep and check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyOp {
    Union,
    SymmetricDifference,
    Difference,
    Intersection,
    Product,
    SameAlphabetUnion,
    SameAlphabetProduct,
    Star,
    Reverse,
    Semigroup,
    Atoms,
}

impl VerifyOp {
    pub const ALL: [VerifyOp; 11] = [
        VerifyOp::Union,
        VerifyOp::SymmetricDifference,
        VerifyOp::Difference,
        VerifyOp::Intersection,
        VerifyOp::Product,
        VerifyOp::SameAlphabetUnion,
        VerifyOp::SameAlphabetProduct,
        VerifyOp::Star,
        VerifyOp::Reverse,
        VerifyOp::Semigroup,
        VerifyOp::Atoms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyOp::Union => "union",
            VerifyOp::SymmetricDifference => "symdiff",
            VerifyOp::Difference => "difference",
            VerifyOp::Intersection => "intersection",
            VerifyOp::Product => "product",
            VerifyOp::SameAlphabetUnion => "same-alphabet-union",
            VerifyOp::SameAlphabetProduct => "same-alphabet-product",
            VerifyOp::Star => "star",
            VerifyOp::Reverse => "reverse",
            VerifyOp::Semigroup => "semigroup",
            VerifyOp::Atoms => "atoms",
        }
    }

    pub fn parse(text: &str) -> Option<VerifyOp> {
        Self::ALL.into_iter().find(|op| op.name() == text)
    }

    /// Binary operations take two witnesses of sizes m and n; the rest
    /// ignore m.
    pub fn is_binary(self) -> bool {
        !matches!(
            self,
            VerifyOp::Star | VerifyOp::Reverse | VerifyOp::Semigroup | VerifyOp::Atoms
        )
    }

    /// Default sweep range, chosen so a full run over every operation
    /// finishes in well under two minutes.
    pub fn default_range(self) -> (usize, usize) {
        match self {
            VerifyOp::Union
            | VerifyOp::SymmetricDifference
            | VerifyOp::Difference
            | VerifyOp::Intersection
            | VerifyOp::SameAlphabetUnion => (3, 6),
            VerifyOp::Product | VerifyOp::SameAlphabetProduct => (3, 5),
            VerifyOp::Star | VerifyOp::Reverse => (3, 8),
            VerifyOp::Semigroup => (3, 6),
            VerifyOp::Atoms => (3, 4),
        }
    }
}

/// The closed-form complexity each operation is expected to reach on its
/// witnesses. `m` is ignored by the unary rows.
pub fn expected_complexity(op: VerifyOp, m: usize, n: usize) -> u64 {
    let (m, n) = (m as u64, n as u64);
    match op {
        VerifyOp::Union | VerifyOp::SymmetricDifference => m * n + m + n + 1,
        VerifyOp::Difference => m * n + m,
        VerifyOp::Intersection | VerifyOp::SameAlphabetUnion => m * n,
        VerifyOp::Product => m * (1 << n) + (1 << (n - 1)),
        VerifyOp::SameAlphabetProduct => (m - 1) * (1 << n) + (1 << (n - 1)),
        VerifyOp::Star => (1 << (n - 1)) + (1 << (n - 2)),
        VerifyOp::Reverse => 1 << n,
        VerifyOp::Semigroup => n.pow(n as u32),
        VerifyOp::Atoms => 1 << n,
    }
}

/// One measured grid cell.
#[derive(Clone, Debug)]
pub struct ComplexityRecord {
    pub op: VerifyOp,
    /// Left witness size; absent for unary operations.
    pub m: Option<usize>,
    pub n: usize,
    pub measured: u64,
    pub formula: u64,
    /// Dialect descriptions of the witnesses measured.
    pub witnesses: Vec<String>,
    pub elapsed: Duration,
}

impl ComplexityRecord {
    pub fn matches(&self) -> bool {
        self.measured == self.formula
    }
}

/// A sweep request; `None` ranges fall back to each operation's default.
#[derive(Clone, Debug)]
pub struct VerifyRequest {
    pub ops: Vec<VerifyOp>,
    pub m_range: Option<(usize, usize)>,
    pub n_range: Option<(usize, usize)>,
    /// Overrides every internal budget (subsets, semigroup and tuple
    /// closures) when set.
    pub budget: Option<usize>,
}

impl VerifyRequest {
    pub fn all() -> Self {
        VerifyRequest {
            ops: VerifyOp::ALL.to_vec(),
            m_range: None,
            n_range: None,
            budget: None,
        }
    }
}

/// Runs every cell of the requested grids and returns the records ordered
/// by (operation, m, n).
pub fn run_verify(request: &VerifyRequest) -> Result<Vec<ComplexityRecord>> {
    let mut ops: Vec<VerifyOp> = Vec::new();
    for &op in &request.ops {
        if !ops.contains(&op) {
            ops.push(op);
        }
    }

    let mut cells: Vec<(usize, VerifyOp, Option<usize>, usize)> = Vec::new();
    for (rank, &op) in ops.iter().enumerate() {
        let (n_lo, n_hi) = request.n_range.unwrap_or_else(|| op.default_range());
        if op.is_binary() {
            let (m_lo, m_hi) = request.m_range.unwrap_or_else(|| op.default_range());
            for m in m_lo..=m_hi {
                for n in n_lo..=n_hi {
                    cells.push((rank, op, Some(m), n));
                }
            }
        } else {
            for n in n_lo..=n_hi {
                cells.push((rank, op, None, n));
            }
        }
    }

    let mut records: Vec<(usize, ComplexityRecord)> = cells
        .into_par_iter()
        .map(|(rank, op, m, n)| Ok((rank, run_cell(op, m, n, request.budget)?)))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|(rank, r)| (*rank, r.m, r.n));
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

/// Builds the witnesses for one cell, runs the operation and measures the
/// resulting complexity.
pub fn run_cell(
    op: VerifyOp,
    m: Option<usize>,
    n: usize,
    budget: Option<usize>,
) -> Result<ComplexityRecord> {
    let start = Instant::now();
    let subset_budget = budget.unwrap_or(DEFAULT_SUBSET_BUDGET);
    // the closure default covers the full monoid up to n = 7; past that a
    // sweep fails fast as a resource error unless a budget is given
    let closure_budget =
        budget.unwrap_or_else(|| default_semigroup_budget(n).min(DEFAULT_SUBSET_BUDGET));
    let mu = m.unwrap_or(n);

    let measured: u64 = match op {
        VerifyOp::Union => run_boolean(BoolOp::Union, mu, n)?,
        VerifyOp::SymmetricDifference => run_boolean(BoolOp::SymmetricDifference, mu, n)?,
        VerifyOp::Difference => run_boolean(BoolOp::Difference, mu, n)?,
        VerifyOp::Intersection => run_boolean(BoolOp::Intersection, mu, n)?,
        VerifyOp::Product => {
            let (l, r) = crate::witness::product_witness_pair(mu, n)?;
            concat_bounded(&l, &r, subset_budget)?.state_count() as u64
        }
        VerifyOp::SameAlphabetUnion => {
            let (l, r) = restricted_pair(mu, n)?;
            boolean_op(&l, &r, BoolOp::Union).state_count() as u64
        }
        VerifyOp::SameAlphabetProduct => {
            // two letters are enough for the boolean rows but not for the
            // product row: separating the head states of the subsets needs
            // the third letter, so both operands keep {a,b,c}
            let (l, r) = (witness_dialect(mu, "a,b,c")?, witness_dialect(n, "a,b,c")?);
            concat_bounded(&l, &r, subset_budget)?.state_count() as u64
        }
        VerifyOp::Star => {
            let d = witness_dialect(n, "a,b")?;
            star_bounded(&d, subset_budget)?.state_count() as u64
        }
        VerifyOp::Reverse => {
            let d = witness_dialect(n, "a,b,c")?;
            reverse_bounded(&d, subset_budget)?.state_count() as u64
        }
        VerifyOp::Semigroup => {
            let d = witness_dialect(n, "a,b,c")?;
            syntactic_semigroup_size_bounded(&d, closure_budget)? as u64
        }
        VerifyOp::Atoms => {
            let d = witness_dialect(n, "a,b,c")?;
            matching_atoms(&atoms_bounded(&d, closure_budget)?)
        }
    };

    Ok(ComplexityRecord {
        op,
        m,
        n,
        measured,
        formula: expected_complexity(op, mu, n),
        witnesses: witness_descriptions(op, mu, n),
        elapsed: start.elapsed(),
    })
}

fn run_boolean(op: BoolOp, m: usize, n: usize) -> Result<u64> {
    let (l, r) = boolean_witness_pair(op, m, n)?;
    Ok(boolean_op(&l, &r, op).state_count() as u64)
}

/// The pair restricted to the shared alphabet {a,b}: the classical
/// same-alphabet setting.
fn restricted_pair(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    Ok((witness_dialect(m, "a,b")?, witness_dialect(n, "b,a")?))
}

fn witness_dialect(n: usize, pi: &str) -> Result<Dfa> {
    dialect(&universal_witness(n)?, &PartialPermutation::parse(pi)?)
}

/// Number of nonempty atoms whose measured complexity equals the closed
/// form. When the witness behaves as expected this equals 2^n, so the cell
/// matches exactly when every atom is present and correct.
fn matching_atoms(report: &AtomsReport) -> u64 {
    report
        .profiles
        .iter()
        .filter(|p| {
            p.nonempty
                && p.measured_kappa.map(|k| k as u64)
                    == Some(atom_formula(report.n, p.subset.len()))
        })
        .count() as u64
}

fn witness_descriptions(op: VerifyOp, m: usize, n: usize) -> Vec<String> {
    match op {
        VerifyOp::Union | VerifyOp::SymmetricDifference | VerifyOp::Product => vec![
            format!("L'_{m}(a,b,-,c)"),
            format!("L_{n}(b,a,-,d)"),
        ],
        VerifyOp::Difference => vec![format!("L'_{m}(a,b,-,c)"), format!("L_{n}(b,a)")],
        VerifyOp::Intersection | VerifyOp::SameAlphabetUnion => {
            vec![format!("L'_{m}(a,b)"), format!("L_{n}(b,a)")]
        }
        VerifyOp::SameAlphabetProduct => {
            vec![format!("L'_{m}(a,b,c)"), format!("L_{n}(a,b,c)")]
        }
        VerifyOp::Star => vec![format!("L_{n}(a,b)")],
        VerifyOp::Reverse | VerifyOp::Semigroup | VerifyOp::Atoms => {
            vec![format!("L_{n}(a,b,c)")]
        }
    }
}

/// Output formats for tabular reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Md,
    Csv,
    Json,
}

/// Renders verification records; timing columns are dropped when `timing`
/// is false so reports become byte-reproducible.
pub fn render_records(records: &[ComplexityRecord], format: ReportFormat, timing: bool) -> String {
    match format {
        ReportFormat::Md => {
            let mut out = String::new();
            out.push_str("| op | m | n | measured | formula | match | witnesses |");
            if timing {
                out.push_str(" elapsed_ms |");
            }
            out.push('\n');
            out.push_str("| --- | --- | --- | --- | --- | --- | --- |");
            if timing {
                out.push_str(" --- |");
            }
            out.push('\n');
            for r in records {
                let m = r.m.map_or("-".to_string(), |m| m.to_string());
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    r.op.name(),
                    m,
                    r.n,
                    r.measured,
                    r.formula,
                    if r.matches() { "yes" } else { "NO" },
                    r.witnesses.join(" vs ")
                ));
                if timing {
                    out.push_str(&format!(" {} |", r.elapsed.as_millis()));
                }
                out.push('\n');
            }
            out
        }
        ReportFormat::Csv => {
            let mut out = String::new();
            out.push_str("op,m,n,measured,formula,match,witnesses");
            if timing {
                out.push_str(",elapsed_ms");
            }
            out.push_str("\r\n");
            for r in records {
                let fields = [
                    r.op.name().to_string(),
                    r.m.map_or(String::new(), |m| m.to_string()),
                    r.n.to_string(),
                    r.measured.to_string(),
                    r.formula.to_string(),
                    r.matches().to_string(),
                    r.witnesses.join(" vs "),
                ];
                let mut row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                if timing {
                    row.push(r.elapsed.as_millis().to_string());
                }
                out.push_str(&row.join(","));
                out.push_str("\r\n");
            }
            out
        }
        ReportFormat::Json => {
            let records: Vec<serde_json::Value> = records
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("op".into(), r.op.name().into());
                    obj.insert("m".into(), r.m.into());
                    obj.insert("n".into(), r.n.into());
                    obj.insert("measured".into(), r.measured.into());
                    obj.insert("formula".into(), r.formula.into());
                    obj.insert("match".into(), r.matches().into());
                    obj.insert("witnesses".into(), r.witnesses.clone().into());
                    if timing {
                        obj.insert("elapsed_ms".into(), (r.elapsed.as_millis() as u64).into());
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            let doc = serde_json::json!({ "records": records });
            format!("{doc}\n")
        }
    }
}

/// Rows of an atom report, nonempty atoms only, ordered by index-set mask.
pub struct AtomRow {
    pub subset: Vec<usize>,
    pub kappa: u64,
    pub formula: u64,
}

impl AtomRow {
    pub fn matches(&self) -> bool {
        self.kappa == self.formula
    }
}

pub fn atom_rows(report: &AtomsReport) -> Vec<AtomRow> {
    report
        .profiles
        .iter()
        .filter(|p| p.nonempty)
        .map(|p| AtomRow {
            subset: p.subset.iter().collect(),
            kappa: p.measured_kappa.expect("nonempty atoms carry a measurement") as u64,
            formula: atom_formula(report.n, p.subset.len()),
        })
        .collect()
}

pub fn render_atom_report(n: usize, rows: &[AtomRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Md => {
            let mut out = String::new();
            out.push_str("| S | kappa | formula | match |\n");
            out.push_str("| --- | --- | --- | --- |\n");
            for row in rows {
                out.push_str(&format!(
                    "| {{{}}} | {} | {} | {} |\n",
                    join_usizes(&row.subset),
                    row.kappa,
                    row.formula,
                    if row.matches() { "yes" } else { "NO" }
                ));
            }
            out
        }
        ReportFormat::Csv => {
            let mut out = String::from("S,kappa,formula,match\r\n");
            for row in rows {
                out.push_str(&format!(
                    "{},{},{},{}\r\n",
                    csv_field(&join_usizes(&row.subset)),
                    row.kappa,
                    row.formula,
                    row.matches()
                ));
            }
            out
        }
        ReportFormat::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "S": r.subset,
                        "kappa": r.kappa,
                        "formula": r.formula,
                        "match": r.matches(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::json!({ "n": n, "atoms": rows }))
        }
    }
}

pub fn render_semigroup_report(n: usize, size: u64, format: ReportFormat) -> String {
    let formula = expected_complexity(VerifyOp::Semigroup, n, n);
    match format {
        ReportFormat::Md => format!(
            "| n | size | formula | match |\n| --- | --- | --- | --- |\n| {} | {} | {} | {} |\n",
            n,
            size,
            formula,
            if size == formula { "yes" } else { "NO" }
        ),
        ReportFormat::Csv => format!(
            "n,size,formula,match\r\n{},{},{},{}\r\n",
            n,
            size,
            formula,
            size == formula
        ),
        ReportFormat::Json => format!(
            "{}\n",
            serde_json::json!({
                "n": n,
                "size": size,
                "formula": formula,
                "match": size == formula,
            })
        ),
    }
}

fn join_usizes(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// RFC 4180 quoting: fields with commas, quotes or line breaks are wrapped
/// in quotes, with inner quotes doubled.
fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') || field.contains('\r') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
