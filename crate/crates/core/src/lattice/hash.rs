use std::fmt;

use sha2::{Digest, Sha256};

use super::grid::ShapeSelection;
use super::{BrickDimensions, LatticeError};

/// First 12 lowercase hex digits of the SHA-256 of a shape's canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeHash(String);

impl ShapeHash {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ShapeHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical byte form `T;H;W;items` of a shape.
///
/// `T` is `F` or `D`, `H` and `W` are the brick height and width in nm with two
/// decimals, and `items` lists `r,c` cells or `x1,y1,x2,y2` segments in
/// ascending coordinate order, joined by `;`.
pub fn canonical_shape(dims: BrickDimensions, selection: &ShapeSelection) -> String {
    let items: Vec<String> = match selection {
        ShapeSelection::Free(cells) => cells.iter().map(ToString::to_string).collect(),
        ShapeSelection::Digitized(segments) => segments.iter().map(ToString::to_string).collect(),
    };
    format!("{};{:.2};{:.2};{}", selection.canvas_type().tag(), dims.height(), dims.width(), items.join(";"))
}

pub fn shape_hash(dims: BrickDimensions, selection: &ShapeSelection) -> Result<ShapeHash, LatticeError> {
    if selection.is_empty() {
        return Err(LatticeError::EmptySelection);
    }
    let digest = Sha256::digest(canonical_shape(dims, selection).as_bytes());
    let hex: String = digest.iter().take(6).map(|b| format!("{b:02x}")).collect();
    Ok(ShapeHash(hex))
}
