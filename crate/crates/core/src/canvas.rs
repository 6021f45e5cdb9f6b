//! Editable selection state of one molecular canvas.
//!
//! Free-hand strokes are rasterized into brick cells with Bresenham's line
//! algorithm (one cell wide). Digitized strokes are snapped onto grid lines by
//! walking the horizontal leg first and then the vertical leg.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::lattice::{BrickCoord, CanvasType, Grid, LatticeError, Node, Segment, ShapeSelection};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CanvasError {
    #[error("operation requires the {expected} canvas, but this is the {actual} canvas")]
    WrongCanvasType { expected: CanvasType, actual: CanvasType },
    #[error("({a}, {b}) is outside the {rows}x{cols} canvas")]
    OutOfBounds { a: u32, b: u32, rows: u32, cols: u32 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl CanvasError {
    pub fn code(&self) -> &'static str {
        match self {
            CanvasError::WrongCanvasType { .. } => "WrongCanvasType",
            CanvasError::OutOfBounds { .. } => "OutOfBounds",
            CanvasError::Lattice(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StrokeMode {
    #[default]
    Select,
    Deselect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanvasState {
    grid: Grid,
    selection: ShapeSelection,
    dirty: bool,
}

impl CanvasState {
    pub fn new(canvas_type: CanvasType, grid: Grid) -> Self {
        CanvasState { grid, selection: ShapeSelection::empty(canvas_type), dirty: false }
    }

    /// Restores a canvas from persisted state; the result is clean.
    pub fn with_selection(grid: Grid, selection: ShapeSelection) -> Result<Self, CanvasError> {
        let state = CanvasState { grid, selection, dirty: false };
        match &state.selection {
            ShapeSelection::Free(cells) => {
                for c in cells {
                    state.check_cell(*c)?;
                }
            }
            ShapeSelection::Digitized(segments) => {
                for s in segments {
                    state.check_node(s.start())?;
                    state.check_node(s.end())?;
                }
            }
        }
        Ok(state)
    }

    pub fn canvas_type(&self) -> CanvasType {
        self.selection.canvas_type()
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn selection(&self) -> &ShapeSelection {
        &self.selection
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty
    }

    pub fn mark_saved(&mut self) {
        self.dirty = false;
    }

    /// Marks the canvas as holding unsaved draw data without touching the selection.
    pub(crate) fn mark_dirty(&mut self) {
        self.dirty = true;
    }

    fn check_cell(&self, c: BrickCoord) -> Result<(), CanvasError> {
        if self.grid.contains_cell(c) {
            Ok(())
        } else {
            Err(self.out_of_bounds(c.row, c.col))
        }
    }

    fn check_node(&self, n: Node) -> Result<(), CanvasError> {
        if self.grid.contains_node(n) {
            Ok(())
        } else {
            Err(self.out_of_bounds(n.x, n.y))
        }
    }

    fn out_of_bounds(&self, a: u32, b: u32) -> CanvasError {
        CanvasError::OutOfBounds { a, b, rows: self.grid.rows, cols: self.grid.cols }
    }

    fn cells_mut(&mut self) -> Result<&mut BTreeSet<BrickCoord>, CanvasError> {
        match &mut self.selection {
            ShapeSelection::Free(cells) => Ok(cells),
            ShapeSelection::Digitized(_) => {
                Err(CanvasError::WrongCanvasType { expected: CanvasType::FreeHand, actual: CanvasType::Digitized })
            }
        }
    }

    fn segments_mut(&mut self) -> Result<&mut BTreeSet<Segment>, CanvasError> {
        match &mut self.selection {
            ShapeSelection::Digitized(segments) => Ok(segments),
            ShapeSelection::Free(_) => {
                Err(CanvasError::WrongCanvasType { expected: CanvasType::Digitized, actual: CanvasType::FreeHand })
            }
        }
    }

    /// Paints (or erases) the Bresenham line of cells from `p0` to `p1`.
    /// Returns whether the selection changed.
    pub fn apply_stroke_free(&mut self, p0: BrickCoord, p1: BrickCoord, mode: StrokeMode) -> Result<bool, CanvasError> {
        self.cells_mut()?;
        self.check_cell(p0)?;
        self.check_cell(p1)?;
        let line = bresenham(p0, p1);
        let cells = self.cells_mut()?;
        let mut changed = false;
        for c in line {
            changed |= match mode {
                StrokeMode::Select => cells.insert(c),
                StrokeMode::Deselect => cells.remove(&c),
            };
        }
        self.dirty |= changed;
        Ok(changed)
    }

    /// Flips the membership of one brick.
    pub fn toggle_brick(&mut self, c: BrickCoord) -> Result<bool, CanvasError> {
        self.cells_mut()?;
        self.check_cell(c)?;
        let cells = self.cells_mut()?;
        if !cells.remove(&c) {
            cells.insert(c);
        }
        self.dirty = true;
        Ok(true)
    }

    /// Flips the membership of one unit segment on the digitized canvas.
    pub fn toggle_segment(&mut self, segment: Segment) -> Result<bool, CanvasError> {
        self.segments_mut()?;
        self.check_node(segment.start())?;
        self.check_node(segment.end())?;
        let segments = self.segments_mut()?;
        if !segments.remove(&segment) {
            segments.insert(segment);
        }
        self.dirty = true;
        Ok(true)
    }

    /// Adds (or removes) the unit segments along the L-path
    /// `p0 -> (p1.x, p0.y) -> p1`. Returns whether the selection changed.
    pub fn apply_stroke_digitized(&mut self, p0: Node, p1: Node, mode: StrokeMode) -> Result<bool, CanvasError> {
        self.segments_mut()?;
        self.check_node(p0)?;
        self.check_node(p1)?;
        let path = snap_to_grid(p0, p1);
        let segments = self.segments_mut()?;
        let mut changed = false;
        for s in path {
            changed |= match mode {
                StrokeMode::Select => segments.insert(s),
                StrokeMode::Deselect => segments.remove(&s),
            };
        }
        self.dirty |= changed;
        Ok(changed)
    }

    /// Empties the selection. Returns whether anything was removed.
    pub fn clear(&mut self) -> bool {
        if self.selection.is_empty() {
            return false;
        }
        self.selection = ShapeSelection::empty(self.canvas_type());
        self.dirty = true;
        true
    }
}

/// Cells on the Bresenham line from `p0` to `p1`, both ends included.
pub fn bresenham(p0: BrickCoord, p1: BrickCoord) -> Vec<BrickCoord> {
    let (mut x, mut y) = (i64::from(p0.col), i64::from(p0.row));
    let (x1, y1) = (i64::from(p1.col), i64::from(p1.row));
    let dx = (x1 - x).abs();
    let dy = -(y1 - y).abs();
    let sx = if x < x1 { 1 } else { -1 };
    let sy = if y < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    let mut out = Vec::with_capacity((dx.max(-dy) + 1) as usize);
    loop {
        out.push(BrickCoord::new(y as u32, x as u32));
        if x == x1 && y == y1 {
            break;
        }
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x += sx;
        }
        if e2 <= dx {
            err += dx;
            y += sy;
        }
    }
    out
}

/// Unit segments of the horizontal-first L-path from `p0` to `p1`.
pub fn snap_to_grid(p0: Node, p1: Node) -> Vec<Segment> {
    let mut out = Vec::new();
    let corner = Node::new(p1.x, p0.y);
    walk(p0, corner, &mut out);
    walk(corner, p1, &mut out);
    out
}

fn walk(from: Node, to: Node, out: &mut Vec<Segment>) {
    let mut cur = from;
    while cur != to {
        let next = if cur.x != to.x {
            Node::new(if to.x > cur.x { cur.x + 1 } else { cur.x - 1 }, cur.y)
        } else {
            Node::new(cur.x, if to.y > cur.y { cur.y + 1 } else { cur.y - 1 })
        };
        out.push(Segment::new(cur, next).expect("adjacent nodes"));
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free() -> CanvasState {
        CanvasState::new(CanvasType::FreeHand, Grid::new(8, 8).unwrap())
    }

    fn digitized() -> CanvasState {
        CanvasState::new(CanvasType::Digitized, Grid::new(8, 8).unwrap())
    }

    fn cells(state: &CanvasState) -> Vec<(u32, u32)> {
        match state.selection() {
            ShapeSelection::Free(c) => c.iter().map(|c| (c.row, c.col)).collect(),
            _ => panic!("not free"),
        }
    }

    fn segments(state: &CanvasState) -> Vec<String> {
        match state.selection() {
            ShapeSelection::Digitized(s) => s.iter().map(|s| s.to_string()).collect(),
            _ => panic!("not digitized"),
        }
    }

    #[test]
    fn degenerate_stroke_selects_one_cell() {
        let mut c = free();
        assert!(!c.is_dirty());
        c.apply_stroke_free(BrickCoord::new(2, 2), BrickCoord::new(2, 2), StrokeMode::Select).unwrap();
        assert_eq!(cells(&c), [(2, 2)]);
        assert!(c.is_dirty());
    }

    #[test]
    fn horizontal_and_diagonal_strokes() {
        let mut c = free();
        c.apply_stroke_free(BrickCoord::new(0, 0), BrickCoord::new(0, 3), StrokeMode::Select).unwrap();
        assert_eq!(cells(&c), [(0, 0), (0, 1), (0, 2), (0, 3)]);
        let mut c = free();
        c.apply_stroke_free(BrickCoord::new(0, 0), BrickCoord::new(2, 2), StrokeMode::Select).unwrap();
        assert_eq!(cells(&c), [(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn deselect_stroke_restores_prior_selection() {
        let mut c = free();
        c.toggle_brick(BrickCoord::new(5, 5)).unwrap();
        let before = c.selection().clone();
        c.apply_stroke_free(BrickCoord::new(0, 0), BrickCoord::new(3, 7), StrokeMode::Select).unwrap();
        c.apply_stroke_free(BrickCoord::new(0, 0), BrickCoord::new(3, 7), StrokeMode::Deselect).unwrap();
        assert_eq!(c.selection(), &before);
    }

    #[test]
    fn toggle_is_an_involution() {
        let mut c = free();
        c.toggle_brick(BrickCoord::new(0, 0)).unwrap();
        assert_eq!(cells(&c), [(0, 0)]);
        c.toggle_brick(BrickCoord::new(1, 1)).unwrap();
        c.toggle_brick(BrickCoord::new(0, 0)).unwrap();
        assert_eq!(cells(&c), [(1, 1)]);
    }

    #[test]
    fn wrong_canvas_and_bounds_are_rejected() {
        let mut c = digitized();
        assert!(matches!(c.toggle_brick(BrickCoord::new(0, 0)), Err(CanvasError::WrongCanvasType { .. })));
        let mut f = free();
        assert!(matches!(
            f.apply_stroke_free(BrickCoord::new(0, 0), BrickCoord::new(0, 8), StrokeMode::Select),
            Err(CanvasError::OutOfBounds { .. })
        ));
        assert!(matches!(
            f.apply_stroke_digitized(Node::new(0, 0), Node::new(1, 0), StrokeMode::Select),
            Err(CanvasError::WrongCanvasType { .. })
        ));
        assert!(!f.is_dirty());
    }

    #[test]
    fn digitized_strokes_snap_horizontal_first() {
        let mut c = digitized();
        c.apply_stroke_digitized(Node::new(0, 0), Node::new(3, 0), StrokeMode::Select).unwrap();
        assert_eq!(segments(&c), ["0,0,1,0", "1,0,2,0", "2,0,3,0"]);

        let mut c = digitized();
        c.apply_stroke_digitized(Node::new(0, 0), Node::new(1, 1), StrokeMode::Select).unwrap();
        assert_eq!(segments(&c), ["0,0,1,0", "1,0,1,1"]);

        let mut c = digitized();
        let changed = c.apply_stroke_digitized(Node::new(0, 0), Node::new(0, 0), StrokeMode::Select).unwrap();
        assert!(!changed);
        assert!(segments(&c).is_empty());
        assert!(!c.is_dirty());
    }

    #[test]
    fn reverse_strokes_store_canonical_segments() {
        let mut c = digitized();
        c.apply_stroke_digitized(Node::new(3, 2), Node::new(1, 0), StrokeMode::Select).unwrap();
        assert_eq!(segments(&c), ["1,0,1,1", "1,1,1,2", "1,2,2,2", "2,2,3,2"]);
        if let ShapeSelection::Digitized(s) = c.selection() {
            assert!(s.iter().all(|s| s.start() < s.end()));
        }
    }

    #[test]
    fn clear_marks_dirty_only_when_something_was_selected() {
        let mut c = free();
        assert!(!c.clear());
        assert!(!c.is_dirty());
        c.toggle_brick(BrickCoord::new(0, 0)).unwrap();
        c.mark_saved();
        assert!(c.clear());
        assert!(c.selection().is_empty());
        assert!(c.is_dirty());
    }
}
