//! Geometry and topology of the staggered DNA brick lattice.
//!
//! Rows are numbered top to bottom and columns west to east. Odd rows are
//! shifted east by half a brick width, and the vertical pitch between rows is
//! half a brick height, so every brick touches up to four diagonal neighbors.

mod bonds;
mod digitized;
mod dims;
mod grid;
mod hash;

pub use bonds::{
    bond_graph_free, classify_tiles, Bond, BondGraph, Layout, Slot, StrandId, StrandKind, StrandPosition,
    StrandSkeleton, TileClass,
};
pub use digitized::bond_graph_digitized;
pub use dims::{adjust_dimensions, BrickDimensions, HEIGHT_QUANTUM_NM, WIDTH_QUANTUM_NM};
pub use grid::{neighbor, BrickCoord, CanvasType, Grid, NeighborDirection, Node, Segment, ShapeSelection};
pub use hash::{canonical_shape, shape_hash, ShapeHash};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error("brick dimensions must be positive (got height {height}, width {width})")]
    NonPositiveDimension { height: f64, width: f64 },
    #[error("selection is empty")]
    EmptySelection,
    #[error("segment ({x1},{y1})-({x2},{y2}) is not an axis-aligned unit segment")]
    InvalidSegment { x1: u32, y1: u32, x2: u32, y2: u32 },
    #[error("invalid canvas size {rows}x{cols}")]
    InvalidCanvasSize { rows: u32, cols: u32 },
}

impl LatticeError {
    pub fn code(&self) -> &'static str {
        match self {
            LatticeError::NonPositiveDimension { .. } => "NonPositiveDimension",
            LatticeError::EmptySelection => "EmptySelection",
            LatticeError::InvalidSegment { .. } => "InvalidSegment",
            LatticeError::InvalidCanvasSize { .. } => "InvalidCanvasSize",
        }
    }
}
