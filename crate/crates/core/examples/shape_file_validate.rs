//! Parses a shape file, designs it and checks the table with the validator.
//!
//! Run with `cargo run --example shape_file_validate -- tests/data/map_outline.shape`.

use std::fs;

use brickforge::cli::parse_shape_file;
use brickforge::cli::validate::validate_dnadata;
use brickforge::export::write_dnadata;
use brickforge::lattice::BrickDimensions;
use brickforge::seqdesign::{design, ConstraintParams};

const SAMPLE: &str = "5 6\n.##...\n####..\n######\n.####.\n..##..\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bytes = match std::env::args().nth(1) {
        Some(path) => fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    let (grid, selection) = parse_shape_file(&bytes)?;
    println!("{} canvas {}x{} with {} items", selection.canvas_type(), grid.rows, grid.cols, selection.len());

    let params = ConstraintParams::default();
    let d = design(grid, &selection, BrickDimensions::default(), 1, &params)?;
    let report = validate_dnadata(&write_dnadata(&d), &params)?;
    println!(
        "{} strands, {} protector domains, {} paired domains, {} violations",
        report.strands,
        report.protector_domains,
        report.pairs,
        report.violations.len()
    );
    for v in report.violations.iter().take(10) {
        println!("  {v}");
    }
    Ok(())
}
