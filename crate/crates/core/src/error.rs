use thiserror::Error;

use crate::canvas::CanvasError;
use crate::cli::ShapeFileError;
use crate::export::ExportError;
use crate::lattice::LatticeError;
use crate::project::ProjectError;
use crate::seqdesign::SeqError;

/// Any error the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Canvas(#[from] CanvasError),
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error(transparent)]
    Export(#[from] ExportError),
    #[error(transparent)]
    Project(#[from] ProjectError),
    #[error(transparent)]
    ShapeFile(#[from] ShapeFileError),
}

impl Error {
    /// Stable machine-readable name of the innermost error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Lattice(e) => e.code(),
            Error::Canvas(e) => e.code(),
            Error::Seq(e) => e.code(),
            Error::Export(e) => e.code(),
            Error::Project(e) => e.code(),
            Error::ShapeFile(e) => e.code(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
