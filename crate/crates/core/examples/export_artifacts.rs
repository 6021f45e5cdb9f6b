//! Writes every export format of a design into a directory.
//!
//! Run with `cargo run --example export_artifacts -- out_dir`.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use brickforge::export::{read_dnadata, render, write_dnadata, ExportFormat};
use brickforge::lattice::{BrickCoord, BrickDimensions, Grid, ShapeSelection};
use brickforge::seqdesign::{design, ConstraintParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "brickforge_export".into()));
    fs::create_dir_all(&out)?;
    let cells: BTreeSet<BrickCoord> = (0..4u32).flat_map(|r| (0..3u32).map(move |c| BrickCoord::new(r, c))).collect();
    let d = design(
        Grid::default(),
        &ShapeSelection::Free(cells),
        BrickDimensions::default(),
        1,
        &ConstraintParams::default(),
    )?;

    for format in ExportFormat::ALL {
        let path = out.join(format.file_name("block", d.canvas_type()));
        let bytes = render(&d, "block", format)?;
        fs::write(&path, &bytes)?;
        println!("{:>8} bytes  {}  ({})", bytes.len(), path.display(), format.media_type());
    }

    let table = read_dnadata(&write_dnadata(&d))?;
    println!("DNAData reads back {} rows, summary {:?}", table.rows.len(), table.summary);
    Ok(())
}
