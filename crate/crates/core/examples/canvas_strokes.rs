//! Draws on both canvases with strokes, toggles and a clear.
//!
//! Run with `cargo run --example canvas_strokes`.

use brickforge::canvas::{CanvasState, StrokeMode};
use brickforge::cli::format_shape_file;
use brickforge::lattice::{BrickCoord, CanvasType, Grid, Node, Segment};

fn main() -> brickforge::Result<()> {
    let grid = Grid::new(6, 8)?;
    let mut free = CanvasState::new(CanvasType::FreeHand, grid);
    free.apply_stroke_free(BrickCoord::new(0, 0), BrickCoord::new(5, 7), StrokeMode::Select)?;
    free.apply_stroke_free(BrickCoord::new(2, 0), BrickCoord::new(2, 7), StrokeMode::Select)?;
    free.apply_stroke_free(BrickCoord::new(2, 3), BrickCoord::new(2, 4), StrokeMode::Deselect)?;
    free.toggle_brick(BrickCoord::new(5, 0))?;
    println!("free canvas, {} bricks, dirty {}:", free.selection().len(), free.is_dirty());
    print!("{}", format_shape_file(grid, free.selection()));

    let mut digitized = CanvasState::new(CanvasType::Digitized, grid);
    // A diagonal drag snaps to an axis-aligned staircase of unit segments.
    digitized.apply_stroke_digitized(Node::new(0, 0), Node::new(3, 2), StrokeMode::Select)?;
    digitized.toggle_segment(Segment::new(Node::new(5, 4), Node::new(5, 5))?)?;
    println!("\ndigitized canvas, {} segments:", digitized.selection().len());
    print!("{}", format_shape_file(grid, digitized.selection()));

    println!("\nclear changed the selection: {}", digitized.clear());
    Ok(())
}
