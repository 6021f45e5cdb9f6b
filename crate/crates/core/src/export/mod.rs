//! The three output artifacts of a design plus the SVG shape image.
//!
//! * `DNAData_<name>.csv`: one row per strand with its domains, then summary counts.
//! * `DetailedDNAData_<name>.csv`: one row per base with its lattice coordinates in nm.
//! * `FreeGridData_<name>.pdf` or `DigitizedDNAData_<name>.pdf`: one-page report.
//!
//! Every writer is a pure function of its inputs; no clocks or locale are read.

mod code128;
mod detailed;
mod dnadata;
mod pdf;
mod svg;

pub use code128::{encode_code128, Code128};
pub use detailed::{base_coordinates, write_detailed, BaseCoordinate};
pub use dnadata::{read_dnadata, write_dnadata, DnaDataRow, DnaDataTable};
pub use pdf::write_pdf;
pub use svg::render_shape_svg;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lattice::{CanvasType, LatticeError};
use crate::seqdesign::DesignOutput;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExportError {
    #[error("strand {0} has no lattice position matching its kind")]
    UnplacedStrand(String),
    #[error("character {ch:?} at position {index} cannot be encoded in Code 128 subset B")]
    UnencodableCharacter { ch: char, index: usize },
    #[error("malformed sequence table: {0}")]
    MalformedTable(String),
    #[error("unknown export format {0:?}")]
    UnknownFormat(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl ExportError {
    pub fn code(&self) -> &'static str {
        match self {
            ExportError::UnplacedStrand(_) => "UnplacedStrand",
            ExportError::UnencodableCharacter { .. } => "UnencodableCharacter",
            ExportError::MalformedTable(_) => "MalformedTable",
            ExportError::UnknownFormat(_) => "UnknownFormat",
            ExportError::Lattice(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExportFormat {
    DnaData,
    Detailed,
    Pdf,
    Svg,
}

impl ExportFormat {
    pub const ALL: [ExportFormat; 4] =
        [ExportFormat::DnaData, ExportFormat::Detailed, ExportFormat::Pdf, ExportFormat::Svg];

    pub fn as_str(self) -> &'static str {
        match self {
            ExportFormat::DnaData => "dnadata",
            ExportFormat::Detailed => "detailed",
            ExportFormat::Pdf => "pdf",
            ExportFormat::Svg => "svg",
        }
    }

    pub fn media_type(self) -> &'static str {
        match self {
            ExportFormat::DnaData | ExportFormat::Detailed => "text/csv",
            ExportFormat::Pdf => "application/pdf",
            ExportFormat::Svg => "image/svg+xml",
        }
    }

    /// Output file name for a project called `name`.
    pub fn file_name(self, name: &str, canvas: CanvasType) -> String {
        match (self, canvas) {
            (ExportFormat::DnaData, _) => format!("DNAData_{name}.csv"),
            (ExportFormat::Detailed, _) => format!("DetailedDNAData_{name}.csv"),
            (ExportFormat::Pdf, CanvasType::FreeHand) => format!("FreeGridData_{name}.pdf"),
            (ExportFormat::Pdf, CanvasType::Digitized) => format!("DigitizedDNAData_{name}.pdf"),
            (ExportFormat::Svg, _) => format!("Shape_{name}.svg"),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExportFormat {
    type Err = ExportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExportFormat::ALL.into_iter().find(|f| f.as_str() == s).ok_or_else(|| ExportError::UnknownFormat(s.to_string()))
    }
}

/// Renders one artifact of `design` for a project called `name`.
pub fn render(design: &DesignOutput, name: &str, format: ExportFormat) -> Result<Vec<u8>, ExportError> {
    match format {
        ExportFormat::DnaData => Ok(write_dnadata(design)),
        ExportFormat::Detailed => write_detailed(design),
        ExportFormat::Pdf => write_pdf(design, name),
        ExportFormat::Svg => render_shape_svg(&design.selection, design.grid, design.dims),
    }
}

/// Trims a fixed-precision float to its shortest exact-looking form.
pub(crate) fn num(value: f64, decimals: usize) -> String {
    let mut s = format!("{value:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}
