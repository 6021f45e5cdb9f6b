use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// Which molecular canvas a selection belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CanvasType {
    #[serde(rename = "free")]
    FreeHand,
    Digitized,
}

impl CanvasType {
    /// One-letter tag used in the canonical shape serialization.
    pub fn tag(self) -> char {
        match self {
            CanvasType::FreeHand => 'F',
            CanvasType::Digitized => 'D',
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CanvasType::FreeHand => "free",
            CanvasType::Digitized => "digitized",
        }
    }
}

impl fmt::Display for CanvasType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Canvas extent: brick cells on the free-hand canvas, grid nodes on the
/// digitized canvas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grid {
    pub rows: u32,
    pub cols: u32,
}

impl Grid {
    pub const MAX_SIDE: u32 = 1024;

    pub fn new(rows: u32, cols: u32) -> Result<Self, LatticeError> {
        if rows == 0 || cols == 0 || rows > Self::MAX_SIDE || cols > Self::MAX_SIDE {
            return Err(LatticeError::InvalidCanvasSize { rows, cols });
        }
        Ok(Grid { rows, cols })
    }

    pub fn contains_cell(&self, c: BrickCoord) -> bool {
        c.row < self.rows && c.col < self.cols
    }

    pub fn contains_node(&self, n: Node) -> bool {
        n.y < self.rows && n.x < self.cols
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid { rows: 64, cols: 64 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrickCoord {
    pub row: u32,
    pub col: u32,
}

impl BrickCoord {
    pub const fn new(row: u32, col: u32) -> Self {
        BrickCoord { row, col }
    }
}

impl fmt::Display for BrickCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NeighborDirection {
    NW,
    NE,
    SW,
    SE,
}

impl NeighborDirection {
    pub const ALL: [NeighborDirection; 4] =
        [NeighborDirection::NW, NeighborDirection::NE, NeighborDirection::SW, NeighborDirection::SE];

    pub fn opposite(self) -> Self {
        match self {
            NeighborDirection::NW => NeighborDirection::SE,
            NeighborDirection::NE => NeighborDirection::SW,
            NeighborDirection::SW => NeighborDirection::NE,
            NeighborDirection::SE => NeighborDirection::NW,
        }
    }
}

/// Diagonal neighbor of `c` on the staggered lattice, ignoring the canvas
/// bottom and east edges. Returns `None` above row 0 or west of column 0.
pub(crate) fn neighbor_unbounded(c: BrickCoord, d: NeighborDirection) -> Option<BrickCoord> {
    let odd = c.row % 2 == 1;
    let row = match d {
        NeighborDirection::NW | NeighborDirection::NE => c.row.checked_sub(1)?,
        NeighborDirection::SW | NeighborDirection::SE => c.row + 1,
    };
    // Even rows reach one column west for their western neighbors; odd rows
    // (shifted east by half a brick) reach one column east for the eastern ones.
    let col = match (d, odd) {
        (NeighborDirection::NW | NeighborDirection::SW, false) => c.col.checked_sub(1)?,
        (NeighborDirection::NE | NeighborDirection::SE, true) => c.col + 1,
        _ => c.col,
    };
    Some(BrickCoord { row, col })
}

/// Diagonal neighbor of `c` inside `grid`, or `None` when it falls off the canvas.
pub fn neighbor(grid: Grid, c: BrickCoord, d: NeighborDirection) -> Option<BrickCoord> {
    neighbor_unbounded(c, d).filter(|n| grid.contains_cell(*n))
}

/// A grid node on the digitized canvas; `x` grows east, `y` grows south.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub x: u32,
    pub y: u32,
}

impl Node {
    pub const fn new(x: u32, y: u32) -> Self {
        Node { x, y }
    }
}

/// An axis-aligned unit segment between two adjacent grid nodes, stored with
/// the lexicographically smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    a: Node,
    b: Node,
}

impl Segment {
    pub fn new(p: Node, q: Node) -> Result<Self, LatticeError> {
        let (a, b) = if p <= q { (p, q) } else { (q, p) };
        let horizontal = a.y == b.y && b.x == a.x + 1;
        let vertical = a.x == b.x && b.y == a.y + 1;
        if !(horizontal || vertical) {
            return Err(LatticeError::InvalidSegment { x1: p.x, y1: p.y, x2: q.x, y2: q.y });
        }
        Ok(Segment { a, b })
    }

    pub fn start(&self) -> Node {
        self.a
    }

    pub fn end(&self) -> Node {
        self.b
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a.x, self.a.y, self.b.x, self.b.y)
    }
}

/// The selected part of a canvas.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ShapeSelection {
    Free(BTreeSet<BrickCoord>),
    Digitized(BTreeSet<Segment>),
}

impl ShapeSelection {
    pub fn empty(canvas_type: CanvasType) -> Self {
        match canvas_type {
            CanvasType::FreeHand => ShapeSelection::Free(BTreeSet::new()),
            CanvasType::Digitized => ShapeSelection::Digitized(BTreeSet::new()),
        }
    }

    pub fn canvas_type(&self) -> CanvasType {
        match self {
            ShapeSelection::Free(_) => CanvasType::FreeHand,
            ShapeSelection::Digitized(_) => CanvasType::Digitized,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ShapeSelection::Free(cells) => cells.len(),
            ShapeSelection::Digitized(segments) => segments.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::new(4, 4).unwrap()
    }

    #[test]
    fn top_row_has_no_northern_neighbors() {
        assert_eq!(neighbor(grid(), BrickCoord::new(0, 0), NeighborDirection::NW), None);
        assert_eq!(neighbor(grid(), BrickCoord::new(0, 2), NeighborDirection::NE), None);
    }

    #[test]
    fn stagger_rules() {
        assert_eq!(neighbor(grid(), BrickCoord::new(0, 1), NeighborDirection::SW), Some(BrickCoord::new(1, 0)));
        assert_eq!(neighbor(grid(), BrickCoord::new(1, 0), NeighborDirection::NE), Some(BrickCoord::new(0, 1)));
        let c = BrickCoord::new(2, 2);
        let expect_even = [(1, 1), (1, 2), (3, 1), (3, 2)];
        for (d, (r, col)) in NeighborDirection::ALL.iter().zip(expect_even) {
            assert_eq!(neighbor(grid(), c, *d), Some(BrickCoord::new(r, col)));
        }
        let c = BrickCoord::new(1, 1);
        let expect_odd = [(0, 1), (0, 2), (2, 1), (2, 2)];
        for (d, (r, col)) in NeighborDirection::ALL.iter().zip(expect_odd) {
            assert_eq!(neighbor(grid(), c, *d), Some(BrickCoord::new(r, col)));
        }
    }

    #[test]
    fn east_and_south_edges_are_bounded() {
        assert_eq!(neighbor(grid(), BrickCoord::new(1, 3), NeighborDirection::NE), None);
        assert_eq!(neighbor(grid(), BrickCoord::new(3, 0), NeighborDirection::SE), None);
    }

    #[test]
    fn neighbor_symmetry_everywhere() {
        let g = Grid::new(7, 5).unwrap();
        for row in 0..g.rows {
            for col in 0..g.cols {
                let c = BrickCoord::new(row, col);
                for d in NeighborDirection::ALL {
                    if let Some(n) = neighbor(g, c, d) {
                        assert_eq!(neighbor(g, n, d.opposite()), Some(c), "{c:?} {d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn segments_are_canonical_and_unit() {
        let s = Segment::new(Node::new(1, 0), Node::new(0, 0)).unwrap();
        assert_eq!(s.start(), Node::new(0, 0));
        assert!(s.is_horizontal());
        assert!(Segment::new(Node::new(0, 0), Node::new(1, 1)).is_err());
        assert!(Segment::new(Node::new(0, 0), Node::new(0, 2)).is_err());
        assert!(Segment::new(Node::new(0, 0), Node::new(0, 0)).is_err());
    }

    #[test]
    fn canvas_size_limits() {
        assert!(Grid::new(0, 3).is_err());
        assert!(Grid::new(3, Grid::MAX_SIDE + 1).is_err());
        assert_eq!(Grid::default(), Grid::new(64, 64).unwrap());
    }
}
