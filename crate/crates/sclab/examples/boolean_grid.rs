//! Sweep the four boolean operations over an (m, n) grid and print the
//! measured complexities next to their closed forms.
//!
//! Run with: cargo run --example boolean_grid

use sclab::lab::{render_records, run_verify, ReportFormat, VerifyOp, VerifyRequest};

fn main() {
    let request = VerifyRequest {
        ops: vec![
            VerifyOp::Union,
            VerifyOp::SymmetricDifference,
            VerifyOp::Difference,
            VerifyOp::Intersection,
            VerifyOp::SameAlphabetUnion,
        ],
        m_range: Some((3, 5)),
        n_range: Some((3, 5)),
        budget: None,
    };
    let records = run_verify(&request).unwrap();
    print!("{}", render_records(&records, ReportFormat::Md, false));

    let mismatches = records.iter().filter(|r| !r.matches()).count();
    println!("\n{} cells, {} mismatches", records.len(), mismatches);
    println!("note the contrast: union needs mn+m+n+1, its same-alphabet row only mn");
}
