//! Snaps requested brick dimensions onto the lattice quanta.
//!
//! Run with `cargo run --example quantize_dims -- 1.0 2.0`.

use brickforge::lattice::adjust_dimensions;

fn main() -> brickforge::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let requests = match args.as_slice() {
        [h, w] => vec![(*h, *w)],
        _ => vec![(3.0, 7.0), (1.0, 2.0), (4.4, 9.9), (0.1, 0.1)],
    };
    for (h, w) in requests {
        let (dims, adjusted) = adjust_dimensions(h, w)?;
        let note = if adjusted { "adjusted" } else { "exact" };
        println!(
            "{h} x {w} nm -> {dims} ({note}): {} x {} units, {} nt, domains {:?}",
            dims.height_units(),
            dims.width_units(),
            dims.total_nt(),
            dims.domain_lengths()
        );
    }
    Ok(())
}
