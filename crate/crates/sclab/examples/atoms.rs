//! Atoms of the three-letter witness: all 2^n index sets are realized, and
//! each atom's complexity hits the closed form.
//!
//! Run with: cargo run --example atoms

use sclab::atoms::{atom_formula, atoms};
use sclab::lab::{atom_rows, render_atom_report, ReportFormat};
use sclab::witness::{dialect, universal_witness, PartialPermutation};

fn main() {
    let n = 4;
    let d = dialect(
        &universal_witness(n).unwrap(),
        &PartialPermutation::parse("a,b,c").unwrap(),
    )
    .unwrap();

    let report = atoms(&d).unwrap();
    println!(
        "L_{n}(a,b,c) has {} of {} possible atoms\n",
        report.atom_count(),
        1 << n
    );
    print!("{}", render_atom_report(report.n, &atom_rows(&report), ReportFormat::Md));

    println!("\nthe closed form by index-set size:");
    for s in 0..=n {
        println!("  |S| = {s}: kappa = {}", atom_formula(n, s));
    }
}
