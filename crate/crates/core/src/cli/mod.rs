//! Headless command-line driver.
//!
//! Exit status is 0 on success, 1 when the library reports an error (or
//! `validate` finds a violation), and 2 on a usage error.

mod shape_file;
pub mod validate;

pub use shape_file::{format_shape_file, parse_shape_file, ShapeFileError};

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::canvas::CanvasState;
use crate::export::ExportFormat;
use crate::project::Project;
use crate::seqdesign::ConstraintParams;
use crate::service::ServiceConfig;

pub const DEFAULT_PORT: u16 = 8080;

#[derive(Debug, Parser)]
#[command(name = "brickforge", version, about = "Design DNA brick shapes and export their sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Create a project folder `<path>/<name>`.
    New {
        name: String,
        #[arg(long, default_value = ".")]
        path: PathBuf,
    },
    /// Replace the project's canvas with the shape in a shape file.
    Draw {
        project: PathBuf,
        #[arg(long)]
        shape: PathBuf,
    },
    /// Set brick dimensions in nm; values snap to whole lattice units.
    Dims {
        project: PathBuf,
        #[arg(long)]
        height: f64,
        #[arg(long)]
        width: f64,
    },
    /// Design sequences and save all three artifacts into the project folder.
    Design {
        project: PathBuf,
        /// Stored in the project and reused by later exports.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Write one artifact of the current design.
    Export {
        project: PathBuf,
        #[arg(long, value_parser = parse_format)]
        format: ExportFormat,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Re-check the sequences in a DNAData table against the design constraints.
    Validate {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        constraints: ConstraintArgs,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, env = "BRICKFORGE_PORT", default_value_t = DEFAULT_PORT)]
        port: u16,
        /// Directory holding the project folders.
        #[arg(long, default_value = ".")]
        root: PathBuf,
        /// Directory of static UI assets served at `/`.
        #[arg(long)]
        ui: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ConstraintArgs {
    #[arg(long, default_value_t = ConstraintParams::default().d_min)]
    d_min: usize,
    #[arg(long, default_value_t = ConstraintParams::default().gc_min)]
    gc_min: f64,
    #[arg(long, default_value_t = ConstraintParams::default().gc_max)]
    gc_max: f64,
    #[arg(long, default_value_t = ConstraintParams::default().max_run)]
    max_run: usize,
    #[arg(long, default_value_t = ConstraintParams::default().kmer_ban.unwrap_or(0))]
    /// Banned shared k-mer length; 0 disables the check.
    kmer_ban: usize,
}

impl ConstraintArgs {
    fn params(&self) -> ConstraintParams {
        ConstraintParams {
            d_min: self.d_min,
            gc_min: self.gc_min,
            gc_max: self.gc_max,
            max_run: self.max_run,
            kmer_ban: (self.kmer_ban > 0).then_some(self.kmer_ban),
            ..ConstraintParams::default()
        }
    }
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse().map_err(|e: crate::export::ExportError| e.to_string())
}

/// Parses `argv` (program name first), runs the command and returns the exit status.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error [{}]: {e}", e.code());
            1
        }
    }
}

fn read(path: &Path) -> crate::Result<Vec<u8>> {
    fs::read(path).map_err(|source| crate::project::ProjectError::Io { path: path.to_path_buf(), source }.into())
}

fn run(command: Command) -> crate::Result<i32> {
    match command {
        Command::New { name, path } => {
            let p = Project::create(&name, &path)?;
            println!("created {}", p.dir().display());
        }
        Command::Draw { project, shape } => {
            let mut p = Project::load(&project)?;
            let (grid, selection) = parse_shape_file(&read(&shape)?)?;
            let count = selection.len();
            let kind = selection.canvas_type();
            p.replace_canvas(CanvasState::with_selection(grid, selection)?);
            p.save_manifest()?;
            let unit = if kind == crate::lattice::CanvasType::FreeHand { "bricks" } else { "segments" };
            println!("{kind} canvas {}x{}: {count} {unit}", grid.rows, grid.cols);
        }
        Command::Dims { project, height, width } => {
            let mut p = Project::load(&project)?;
            let (dims, adjusted) = p.set_dims(height, width)?;
            p.save_manifest()?;
            if adjusted {
                println!("{height} x {width} nm adjusted to {dims}");
            } else {
                println!("{dims} (unchanged)");
            }
        }
        Command::Design { project, seed } => {
            let mut p = Project::load(&project)?;
            if let Some(seed) = seed {
                p.set_seed(seed);
            }
            let design = p.design(None)?;
            let files = p.save_all(&design)?;
            let c = design.counts;
            println!(
                "shape {}: {} strands, {} bases (seed {})",
                design.shape_hash,
                design.strands.len(),
                design.total_bases(),
                design.seed
            );
            println!(
                "full tiles {}, half tiles {}, sticky ends {}, bond sequences {}",
                c.full_tiles, c.half_tiles, c.sticky_ends, c.bond_sequences
            );
            for f in files {
                println!("wrote {}", f.display());
            }
        }
        Command::Export { project, format, out } => {
            let p = Project::load(&project)?;
            let (name, bytes) = p.export(format)?;
            let io = |source| crate::project::ProjectError::Io { path: out.clone(), source };
            fs::create_dir_all(&out).map_err(io)?;
            let path = out.join(name);
            fs::write(&path, bytes)
                .map_err(|source| crate::project::ProjectError::Io { path: path.clone(), source })?;
            println!("wrote {}", path.display());
        }
        Command::Validate { file, constraints } => {
            let params = constraints.params();
            let report = validate::validate_dnadata(&read(&file)?, &params)?;
            for v in &report.violations {
                println!("violation: {v}");
            }
            println!(
                "{} strands, {} bonded pairs, {} protector domains: {}",
                report.strands,
                report.pairs,
                report.protector_domains,
                if report.is_valid() { "ok".to_string() } else { format!("{} violations", report.violations.len()) }
            );
            return Ok(if report.is_valid() { 0 } else { 1 });
        }
        Command::Serve { port, root, ui } => {
            let config = ServiceConfig { root, ui_dir: ui };
            let runtime = tokio::runtime::Runtime::new()
                .map_err(|source| crate::project::ProjectError::Io { path: config.root.clone(), source })?;
            runtime.block_on(crate::service::serve(port, config))?;
        }
    }
    Ok(0)
}
