//! Classifies tiles and lists the bond graph of a small free-hand shape.
//!
//! Run with `cargo run --example lattice_bonds`.

use std::collections::BTreeSet;

use brickforge::lattice::{bond_graph_free, classify_tiles, shape_hash, BrickCoord, BrickDimensions, ShapeSelection};

fn main() -> brickforge::Result<()> {
    // An L of five bricks on the staggered lattice.
    let cells: BTreeSet<BrickCoord> =
        [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1)].iter().map(|&(r, c)| BrickCoord::new(r, c)).collect();
    let dims = BrickDimensions::default();

    for (cell, class) in classify_tiles(&cells) {
        println!("{cell}: {class:?} keeps {:?}", class.kept_domains());
    }

    let layout = bond_graph_free(&cells, dims)?;
    println!("\n{} bonds:", layout.graph.bonds.len());
    for (bond, len) in layout.graph.bond_lengths() {
        println!("  {bond} ({len} nt)");
    }
    println!("{} exposed domains become poly-T protectors", layout.graph.exposed.len());
    println!("shape hash {}", shape_hash(dims, &ShapeSelection::Free(cells))?);
    Ok(())
}
