//! Designs sequences for a shape and checks every bond is complementary.
//!
//! Run with `cargo run --example design_sequences -- 7` to pick the seed.

use std::collections::BTreeSet;

use brickforge::lattice::{BrickCoord, BrickDimensions, Grid, ShapeSelection};
use brickforge::seqdesign::{design, revcomp, ConstraintParams};

fn main() -> brickforge::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    // A 6 x 6 block with a 2 x 2 hole.
    let cells: BTreeSet<BrickCoord> = (0..6u32)
        .flat_map(|r| (0..6u32).map(move |c| (r, c)))
        .filter(|&(r, c)| !(2..4).contains(&r) || !(2..4).contains(&c))
        .map(|(r, c)| BrickCoord::new(r, c))
        .collect();
    let params = ConstraintParams::default();
    let d = design(Grid::default(), &ShapeSelection::Free(cells), BrickDimensions::default(), seed, &params)?;

    println!("shape {} seed {seed}", d.shape_hash);
    println!("{:?}", d.counts);
    for s in d.strands.iter().take(6) {
        println!("{:<12} {:<10} {}", s.id.as_str(), s.kind.as_str(), s.full_seq);
    }
    println!("... {} strands, {} bases", d.strands.len(), d.total_bases());

    let complementary = d.bond_sequences.iter().all(|(bond, seq)| {
        let other =
            d.strands.iter().find(|s| s.id == bond.second().strand).and_then(|s| s.domain(bond.second().domain));
        other.is_some_and(|o| revcomp(seq).is_ok_and(|rc| rc == o.seq))
    });
    println!("all {} bonds complementary: {complementary}", d.bond_sequences.len());
    Ok(())
}
