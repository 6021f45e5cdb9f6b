//! A named project folder holding `project.json` and the exported artifacts.
//!
//! Two flags track unsaved work: draw data (the canvas selection) and brick
//! data (the brick dimensions). Only [`Project::save_all`] clears both;
//! [`Project::save_manifest`] persists state and clears the brick flag.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canvas::CanvasState;
use crate::export::{self, ExportFormat};
use crate::lattice::{
    adjust_dimensions, shape_hash, BrickCoord, BrickDimensions, CanvasType, Grid, Node, Segment, ShapeSelection,
};
use crate::seqdesign::{self, ConstraintParams, DesignOutput};
use crate::Result;

pub const MANIFEST: &str = "project.json";
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error)]
pub enum ProjectError {
    #[error("project {0} already exists")]
    AlreadyExists(PathBuf),
    #[error("invalid project name {0:?}: use 1-64 characters from A-Z, a-z, 0-9, '_' and '-'")]
    InvalidName(String),
    #[error("project not found at {0}")]
    NotFound(PathBuf),
    #[error("corrupt manifest {path}: {reason}")]
    CorruptManifest { path: PathBuf, reason: String },
    #[error("design does not match the current canvas; recompute it before saving")]
    StaleDesign,
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl ProjectError {
    pub fn code(&self) -> &'static str {
        match self {
            ProjectError::AlreadyExists(_) => "AlreadyExists",
            ProjectError::InvalidName(_) => "InvalidName",
            ProjectError::NotFound(_) => "NotFound",
            ProjectError::CorruptManifest { .. } => "CorruptManifest",
            ProjectError::StaleDesign => "StaleDesign",
            ProjectError::Io { .. } => "IoFailure",
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> ProjectError + '_ {
    move |source| ProjectError::Io { path: path.to_path_buf(), source }
}

pub fn validate_name(name: &str) -> Result<(), ProjectError> {
    let ok = !name.is_empty()
        && name.len() <= 64
        && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-');
    if ok {
        Ok(())
    } else {
        Err(ProjectError::InvalidName(name.to_string()))
    }
}

/// On-disk form of a project.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub name: String,
    pub canvas_type: CanvasType,
    pub rows: u32,
    pub cols: u32,
    pub height_nm: f64,
    pub width_nm: f64,
    pub seed: u64,
    pub params: ConstraintParams,
    /// `[row, col]` cells or `[x1, y1, x2, y2]` segments, sorted.
    pub selection: Vec<Vec<u32>>,
}

pub(crate) fn round_nm(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

/// Pretty JSON with one selection entry per line.
fn manifest_json(m: &Manifest) -> String {
    let head = Manifest { selection: Vec::new(), ..m.clone() };
    let pretty = serde_json::to_string_pretty(&head).expect("manifest serializes");
    let items: Vec<String> =
        m.selection.iter().map(|item| serde_json::to_string(item).expect("selection serializes")).collect();
    let selection = if items.is_empty() { "[]".to_string() } else { format!("[\n    {}\n  ]", items.join(",\n    ")) };
    let mut out = pretty.replacen("\"selection\": []", &format!("\"selection\": {selection}"), 1);
    out.push('\n');
    out
}

/// Unsaved-work flags behind the save prompts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Unsaved {
    pub draw_dirty: bool,
    pub brick_dirty: bool,
}

#[derive(Debug, Clone)]
pub struct Project {
    name: String,
    dir: PathBuf,
    canvas: CanvasState,
    dims: BrickDimensions,
    seed: u64,
    params: ConstraintParams,
    brick_dirty: bool,
}

impl Project {
    /// Creates `parent/name` with a fresh 64x64 free-hand canvas and default bricks.
    pub fn create(name: &str, parent: &Path) -> Result<Project> {
        validate_name(name)?;
        let dir = parent.join(name);
        match fs::create_dir(&dir) {
            Ok(()) => {}
            Err(e) if e.kind() == io::ErrorKind::AlreadyExists => {
                return Err(ProjectError::AlreadyExists(dir).into());
            }
            Err(e) => return Err(io_err(&dir)(e).into()),
        }
        let project = Project {
            name: name.to_string(),
            dir,
            canvas: CanvasState::new(CanvasType::FreeHand, Grid::default()),
            dims: BrickDimensions::default(),
            seed: DEFAULT_SEED,
            params: ConstraintParams::default(),
            brick_dirty: false,
        };
        project.write_manifest()?;
        Ok(project)
    }

    /// Opens the project stored in `dir`.
    pub fn load(dir: &Path) -> Result<Project> {
        let path = dir.join(MANIFEST);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                return Err(ProjectError::NotFound(dir.to_path_buf()).into());
            }
            Err(e) => return Err(io_err(&path)(e).into()),
        };
        let corrupt = |reason: String| ProjectError::CorruptManifest { path: path.clone(), reason };
        let m: Manifest = serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
        Project::from_manifest(dir, m).map_err(|e| corrupt(e.to_string()).into())
    }

    fn from_manifest(dir: &Path, m: Manifest) -> Result<Project> {
        validate_name(&m.name)?;
        let grid = Grid::new(m.rows, m.cols)?;
        let (dims, _) = adjust_dimensions(m.height_nm, m.width_nm)?;
        m.params.validate(None)?;
        let selection = match m.canvas_type {
            CanvasType::FreeHand => ShapeSelection::Free(
                m.selection
                    .iter()
                    .map(|item| match item.as_slice() {
                        &[row, col] => Ok(BrickCoord::new(row, col)),
                        _ => Err(ProjectError::CorruptManifest {
                            path: dir.join(MANIFEST),
                            reason: format!("cell {item:?} must be [row, col]"),
                        }),
                    })
                    .collect::<Result<_, _>>()?,
            ),
            CanvasType::Digitized => {
                let mut segments = std::collections::BTreeSet::new();
                for item in &m.selection {
                    let &[x1, y1, x2, y2] = item.as_slice() else {
                        return Err(ProjectError::CorruptManifest {
                            path: dir.join(MANIFEST),
                            reason: format!("segment {item:?} must be [x1, y1, x2, y2]"),
                        }
                        .into());
                    };
                    segments.insert(Segment::new(Node::new(x1, y1), Node::new(x2, y2))?);
                }
                ShapeSelection::Digitized(segments)
            }
        };
        if selection.len() != m.selection.len() {
            return Err(ProjectError::CorruptManifest {
                path: dir.join(MANIFEST),
                reason: "duplicate selection entries".into(),
            }
            .into());
        }
        Ok(Project {
            name: m.name,
            dir: dir.to_path_buf(),
            canvas: CanvasState::with_selection(grid, selection)?,
            dims,
            seed: m.seed,
            params: m.params,
            brick_dirty: false,
        })
    }

    pub fn manifest(&self) -> Manifest {
        let grid = self.canvas.grid();
        let selection = match self.canvas.selection() {
            ShapeSelection::Free(cells) => cells.iter().map(|c| vec![c.row, c.col]).collect(),
            ShapeSelection::Digitized(segs) => {
                segs.iter().map(|s| vec![s.start().x, s.start().y, s.end().x, s.end().y]).collect()
            }
        };
        Manifest {
            name: self.name.clone(),
            canvas_type: self.canvas.canvas_type(),
            rows: grid.rows,
            cols: grid.cols,
            height_nm: round_nm(self.dims.height()),
            width_nm: round_nm(self.dims.width()),
            seed: self.seed,
            params: self.params.clone(),
            selection,
        }
    }

    fn write_manifest(&self) -> Result<()> {
        let path = self.dir.join(MANIFEST);
        let json = manifest_json(&self.manifest());
        fs::write(&path, json).map_err(io_err(&path))?;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn canvas(&self) -> &CanvasState {
        &self.canvas
    }

    /// Mutable canvas access; selection changes set the draw flag.
    pub fn canvas_mut(&mut self) -> &mut CanvasState {
        &mut self.canvas
    }

    /// Replaces the canvas, e.g. when switching canvas type or importing a shape.
    /// Unsaved draw data stays flagged, as does replacing a non-empty selection
    /// or installing one.
    pub fn replace_canvas(&mut self, mut canvas: CanvasState) {
        if self.canvas.is_dirty() || !self.canvas.selection().is_empty() || !canvas.selection().is_empty() {
            canvas.mark_dirty();
        }
        self.canvas = canvas;
    }

    pub fn dims(&self) -> BrickDimensions {
        self.dims
    }

    /// Quantizes and applies new brick dimensions; sets the brick flag.
    pub fn set_dims(&mut self, height: f64, width: f64) -> Result<(BrickDimensions, bool)> {
        let (dims, adjusted) = adjust_dimensions(height, width)?;
        self.dims = dims;
        self.brick_dirty = true;
        Ok((dims, adjusted))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn set_seed(&mut self, seed: u64) {
        self.seed = seed;
    }

    pub fn params(&self) -> &ConstraintParams {
        &self.params
    }

    pub fn set_params(&mut self, params: ConstraintParams) -> Result<()> {
        params.validate(None)?;
        self.params = params;
        Ok(())
    }

    pub fn pending_unsaved(&self) -> Unsaved {
        Unsaved { draw_dirty: self.canvas.is_dirty(), brick_dirty: self.brick_dirty }
    }

    /// Designs the current shape with `seed`, or the project seed.
    pub fn design(&self, seed: Option<u64>) -> Result<DesignOutput> {
        Ok(seqdesign::design(
            self.canvas.grid(),
            self.canvas.selection(),
            self.dims,
            seed.unwrap_or(self.seed),
            &self.params,
        )?)
    }

    /// Renders one artifact of the current design; returns its file name and bytes.
    pub fn export(&self, format: ExportFormat) -> Result<(String, Vec<u8>)> {
        let design = self.design(None)?;
        let bytes = export::render(&design, &self.name, format)?;
        Ok((format.file_name(&self.name, design.canvas_type()), bytes))
    }

    pub fn save_manifest(&mut self) -> Result<()> {
        self.write_manifest()?;
        self.brick_dirty = false;
        Ok(())
    }

    /// Writes `DNAData_<name>.csv`, `DetailedDNAData_<name>.csv` and the
    /// canvas-specific PDF, updates `project.json`, and clears both flags.
    pub fn save_all(&mut self, design: &DesignOutput) -> Result<Vec<PathBuf>> {
        let current = shape_hash(self.dims, self.canvas.selection())?;
        if design.shape_hash != current || design.selection != *self.canvas.selection() {
            return Err(ProjectError::StaleDesign.into());
        }
        let mut written = Vec::with_capacity(3);
        for format in [ExportFormat::DnaData, ExportFormat::Detailed, ExportFormat::Pdf] {
            let bytes = export::render(design, &self.name, format)?;
            let path = self.dir.join(format.file_name(&self.name, design.canvas_type()));
            fs::write(&path, bytes).map_err(io_err(&path))?;
            written.push(path);
        }
        self.write_manifest()?;
        self.canvas.mark_saved();
        self.brick_dirty = false;
        Ok(written)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn names_are_filesystem_safe() {
        assert!(validate_name("demo_1-x").is_ok());
        for bad in ["", "a b", "../x", "a/b", "é"] {
            assert!(validate_name(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn create_writes_manifest_and_refuses_duplicates() {
        let tmp = tempfile::tempdir().unwrap();
        let p = Project::create("demo", tmp.path()).unwrap();
        assert!(tmp.path().join("demo").join(MANIFEST).is_file());
        assert_eq!(p.pending_unsaved(), Unsaved { draw_dirty: false, brick_dirty: false });
        let again = Project::create("demo", tmp.path()).unwrap_err();
        assert_eq!(again.code(), "AlreadyExists");
        assert!(matches!(Project::create("a b", tmp.path()), Err(Error::Project(ProjectError::InvalidName(_)))));
    }

    #[test]
    fn flags_follow_edits() {
        let tmp = tempfile::tempdir().unwrap();
        let mut p = Project::create("flags", tmp.path()).unwrap();
        p.canvas_mut().toggle_brick(BrickCoord::new(0, 0)).unwrap();
        assert_eq!(p.pending_unsaved(), Unsaved { draw_dirty: true, brick_dirty: false });
        p.set_dims(1.0, 2.0).unwrap();
        assert_eq!(p.pending_unsaved(), Unsaved { draw_dirty: true, brick_dirty: true });
        p.save_manifest().unwrap();
        assert_eq!(p.pending_unsaved(), Unsaved { draw_dirty: true, brick_dirty: false });
    }

    #[test]
    fn missing_and_corrupt_manifests() {
        let tmp = tempfile::tempdir().unwrap();
        assert_eq!(Project::load(&tmp.path().join("nope")).unwrap_err().code(), "NotFound");
        let p = Project::create("c", tmp.path()).unwrap();
        let path = p.dir().join(MANIFEST);
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, &text[..text.len() / 2]).unwrap();
        assert_eq!(Project::load(p.dir()).unwrap_err().code(), "CorruptManifest");
    }

    #[test]
    fn stale_design_is_refused() {
        let tmp = tempfile::tempdir().unwrap();
        let mut p = Project::create("stale", tmp.path()).unwrap();
        p.canvas_mut().toggle_brick(BrickCoord::new(0, 0)).unwrap();
        let d = p.design(None).unwrap();
        p.canvas_mut().toggle_brick(BrickCoord::new(3, 3)).unwrap();
        assert_eq!(p.save_all(&d).unwrap_err().code(), "StaleDesign");
    }

    #[test]
    fn switching_canvas_keeps_unsaved_flag() {
        let tmp = tempfile::tempdir().unwrap();
        let mut p = Project::create("switch", tmp.path()).unwrap();
        p.replace_canvas(CanvasState::new(CanvasType::Digitized, Grid::default()));
        assert!(!p.pending_unsaved().draw_dirty);
        p.canvas_mut().apply_stroke_digitized(Node::new(0, 0), Node::new(2, 0), Default::default()).unwrap();
        p.replace_canvas(CanvasState::new(CanvasType::FreeHand, Grid::default()));
        assert!(p.pending_unsaved().draw_dirty);
    }
}
