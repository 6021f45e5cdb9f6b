use std::fmt;

use super::LatticeError;

/// Brick heights are whole multiples of this length (nm).
pub const HEIGHT_QUANTUM_NM: f64 = 0.6;
/// Brick widths are whole multiples of this length (nm).
pub const WIDTH_QUANTUM_NM: f64 = 1.75;

/// Nucleotides per width quantum on one helix.
const NT_PER_WIDTH_UNIT: f64 = 5.25;
const TOLERANCE: f64 = 1e-9;

/// Validated brick size, stored as whole numbers of height and width quanta.
///
/// The physical lengths and the nucleotide counts are derived from the unit
/// counts, so two dimensions compare equal exactly when they quantize to the
/// same brick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BrickDimensions {
    height_units: u32,
    width_units: u32,
}

impl Default for BrickDimensions {
    /// The 3 nm x 7 nm brick: 42 nt split into domains of 10, 11, 11 and 10 nt.
    fn default() -> Self {
        BrickDimensions { height_units: 5, width_units: 4 }
    }
}

impl BrickDimensions {
    pub fn from_units(height_units: u32, width_units: u32) -> Result<Self, LatticeError> {
        if height_units == 0 || width_units == 0 {
            return Err(LatticeError::NonPositiveDimension {
                height: f64::from(height_units) * HEIGHT_QUANTUM_NM,
                width: f64::from(width_units) * WIDTH_QUANTUM_NM,
            });
        }
        Ok(BrickDimensions { height_units, width_units })
    }

    pub fn height_units(&self) -> u32 {
        self.height_units
    }

    pub fn width_units(&self) -> u32 {
        self.width_units
    }

    /// Height in nm.
    pub fn height(&self) -> f64 {
        f64::from(self.height_units) * HEIGHT_QUANTUM_NM
    }

    /// Width in nm.
    pub fn width(&self) -> f64 {
        f64::from(self.width_units) * WIDTH_QUANTUM_NM
    }

    /// Strand length in nucleotides, always even so that each of the two
    /// helices of a brick carries half of it.
    pub fn total_nt(&self) -> usize {
        2 * round_half_up(NT_PER_WIDTH_UNIT * f64::from(self.width_units)) as usize
    }

    /// Lengths of domains d1..d4 as `(a, b, b, a)`.
    ///
    /// d1 pairs with d4 and d2 with d3 on neighboring bricks, so the mirrored
    /// layout keeps every bonded pair length-consistent.
    pub fn domain_lengths(&self) -> [usize; 4] {
        let n = self.total_nt();
        let a = n / 4;
        let b = n / 2 - a;
        [a, b, b, a]
    }

    /// Uniform domain length used for digitized-canvas strands.
    pub fn digitized_domain_length(&self) -> usize {
        (self.total_nt() + 2) / 4
    }
}

impl fmt::Display for BrickDimensions {
    /// Formats as `"<height> x <width> nm"`, e.g. `3.0 x 7.0 nm`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {} nm", format_nm(self.height()), format_nm(self.width()))
    }
}

/// Formats a length with at least one decimal and no trailing zeros beyond it.
pub(crate) fn format_nm(value: f64) -> String {
    let mut s = format!("{value:.4}");
    while s.ends_with('0') && !s.ends_with(".0") {
        s.pop();
    }
    s
}

pub(crate) fn round_half_up(x: f64) -> f64 {
    (x + 0.5 + TOLERANCE).floor()
}

/// Snaps `(height, width)` in nm to the nearest brick quanta.
///
/// Each axis rounds half-up to a whole number of quanta, with a minimum of one.
/// The flag reports whether either input had to move by more than 1e-9 nm.
pub fn adjust_dimensions(height: f64, width: f64) -> Result<(BrickDimensions, bool), LatticeError> {
    if !(height > 0.0 && width > 0.0) || !height.is_finite() || !width.is_finite() {
        return Err(LatticeError::NonPositiveDimension { height, width });
    }
    let height_units = round_half_up(height / HEIGHT_QUANTUM_NM).max(1.0);
    let width_units = round_half_up(width / WIDTH_QUANTUM_NM).max(1.0);
    if height_units > f64::from(u32::MAX) || width_units > f64::from(u32::MAX) {
        return Err(LatticeError::NonPositiveDimension { height, width });
    }
    let dims = BrickDimensions { height_units: height_units as u32, width_units: width_units as u32 };
    let adjusted = (dims.height() - height).abs() > TOLERANCE || (dims.width() - width).abs() > TOLERANCE;
    Ok((dims, adjusted))
}
