use std::collections::BTreeSet;

use brickforge::canvas::{bresenham, CanvasState, StrokeMode};
use brickforge::lattice::{
    shape_hash, BrickCoord, BrickDimensions, CanvasType, Grid, LatticeError, Node, ShapeSelection,
};
use proptest::prelude::*;

fn b(r: u32, c: u32) -> BrickCoord {
    BrickCoord::new(r, c)
}

fn free_cells(canvas: &CanvasState) -> Vec<(u32, u32)> {
    match canvas.selection() {
        ShapeSelection::Free(cells) => cells.iter().map(|c| (c.row, c.col)).collect(),
        ShapeSelection::Digitized(_) => panic!("expected the free canvas"),
    }
}

fn segments(canvas: &CanvasState) -> Vec<String> {
    match canvas.selection() {
        ShapeSelection::Digitized(segs) => segs.iter().map(|s| s.to_string()).collect(),
        ShapeSelection::Free(_) => panic!("expected the digitized canvas"),
    }
}

fn free() -> CanvasState {
    CanvasState::new(CanvasType::FreeHand, Grid::default())
}

fn digitized() -> CanvasState {
    CanvasState::new(CanvasType::Digitized, Grid::default())
}

#[test]
fn free_strokes() {
    let mut c = free();
    c.apply_stroke_free(b(2, 2), b(2, 2), StrokeMode::Select).unwrap();
    assert_eq!(free_cells(&c), [(2, 2)]);

    let mut c = free();
    c.apply_stroke_free(b(0, 0), b(0, 3), StrokeMode::Select).unwrap();
    assert_eq!(free_cells(&c), [(0, 0), (0, 1), (0, 2), (0, 3)]);

    let mut c = free();
    c.apply_stroke_free(b(0, 0), b(2, 2), StrokeMode::Select).unwrap();
    assert_eq!(free_cells(&c), [(0, 0), (1, 1), (2, 2)]);
    c.apply_stroke_free(b(1, 1), b(2, 2), StrokeMode::Deselect).unwrap();
    assert_eq!(free_cells(&c), [(0, 0)]);
}

#[test]
fn toggling() {
    let mut c = free();
    c.toggle_brick(b(0, 0)).unwrap();
    assert_eq!(free_cells(&c), [(0, 0)]);
    assert!(c.is_dirty());
    c.toggle_brick(b(1, 1)).unwrap();
    c.toggle_brick(b(0, 0)).unwrap();
    assert_eq!(free_cells(&c), [(1, 1)]);
    c.toggle_brick(b(1, 1)).unwrap();
    assert!(c.selection().is_empty());
}

#[test]
fn digitized_strokes_snap_to_grid_lines() {
    let mut c = digitized();
    c.apply_stroke_digitized(Node::new(0, 0), Node::new(3, 0), StrokeMode::Select).unwrap();
    assert_eq!(segments(&c), ["0,0,1,0", "1,0,2,0", "2,0,3,0"]);

    let mut c = digitized();
    assert!(!c.apply_stroke_digitized(Node::new(0, 0), Node::new(0, 0), StrokeMode::Select).unwrap());
    assert!(c.selection().is_empty() && !c.is_dirty());

    let mut c = digitized();
    c.apply_stroke_digitized(Node::new(0, 0), Node::new(1, 1), StrokeMode::Select).unwrap();
    assert_eq!(segments(&c), ["0,0,1,0", "1,0,1,1"]);
}

#[test]
fn clearing() {
    let mut c = free();
    assert!(!c.clear());
    assert!(!c.is_dirty());

    let mut c = CanvasState::with_selection(Grid::default(), ShapeSelection::Free([b(0, 0)].into())).unwrap();
    assert!(!c.is_dirty());
    assert!(c.clear());
    assert!(c.selection().is_empty() && c.is_dirty());
    assert_eq!(shape_hash(BrickDimensions::default(), c.selection()), Err(LatticeError::EmptySelection));
}

#[test]
fn wrong_canvas_and_bounds_are_errors() {
    let mut c = free();
    assert_eq!(c.toggle_brick(b(64, 0)).unwrap_err().code(), "OutOfBounds");
    let before = c.clone();
    assert_eq!(
        c.apply_stroke_digitized(Node::new(0, 0), Node::new(1, 0), StrokeMode::Select).unwrap_err().code(),
        "WrongCanvasType"
    );
    assert_eq!(c, before);
}

proptest! {
    #[test]
    fn bresenham_lines_are_connected(r0 in 0u32..64, c0 in 0u32..64, r1 in 0u32..64, c1 in 0u32..64) {
        let line = bresenham(b(r0, c0), b(r1, c1));
        prop_assert_eq!(line.first(), Some(&b(r0, c0)));
        prop_assert_eq!(line.last(), Some(&b(r1, c1)));
        for w in line.windows(2) {
            prop_assert!(w[0].row.abs_diff(w[1].row) <= 1 && w[0].col.abs_diff(w[1].col) <= 1);
        }
        let steps = r0.abs_diff(r1).max(c0.abs_diff(c1)) as usize;
        prop_assert_eq!(line.len(), steps + 1);
    }

    #[test]
    fn digitized_strokes_never_go_diagonal(x0 in 0u32..64, y0 in 0u32..64, x1 in 0u32..64, y1 in 0u32..64) {
        let mut c = digitized();
        c.apply_stroke_digitized(Node::new(x0, y0), Node::new(x1, y1), StrokeMode::Select).unwrap();
        let ShapeSelection::Digitized(segs) = c.selection() else { unreachable!() };
        prop_assert_eq!(segs.len() as u32, x0.abs_diff(x1) + y0.abs_diff(y1));
        for s in segs {
            let (p, q) = (s.start(), s.end());
            prop_assert_eq!(p.x.abs_diff(q.x) + p.y.abs_diff(q.y), 1);
        }
    }

    #[test]
    fn double_toggle_is_identity(start in proptest::collection::btree_set((0u32..64, 0u32..64), 0..30),
                                 r in 0u32..64, col in 0u32..64) {
        let sel: BTreeSet<BrickCoord> = start.into_iter().map(|(r, c)| b(r, c)).collect();
        let mut c = CanvasState::with_selection(Grid::default(), ShapeSelection::Free(sel)).unwrap();
        let before = c.selection().clone();
        c.toggle_brick(b(r, col)).unwrap();
        c.toggle_brick(b(r, col)).unwrap();
        prop_assert_eq!(c.selection(), &before);
    }
}
