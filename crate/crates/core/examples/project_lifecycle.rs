//! Creates a project, edits it, saves it and reloads it.
//!
//! Run with `cargo run --example project_lifecycle -- parent_dir`.

use std::path::PathBuf;

use brickforge::lattice::BrickCoord;
use brickforge::project::Project;

fn main() -> brickforge::Result<()> {
    let parent = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().display().to_string()));
    let name = format!("lifecycle-{}", std::process::id());
    let mut p = Project::create(&name, &parent)?;
    println!("created {}", p.dir().display());

    for c in 0..5 {
        p.canvas_mut().toggle_brick(BrickCoord::new(2, c))?;
    }
    let (dims, adjusted) = p.set_dims(2.5, 6.0)?;
    println!("dims {dims} adjusted {adjusted}, unsaved {:?}", p.pending_unsaved());

    let design = p.design(None)?;
    for file in p.save_all(&design)? {
        println!("saved {}", file.display());
    }
    println!("unsaved after save {:?}", p.pending_unsaved());

    let reloaded = Project::load(p.dir())?;
    println!("reloaded selection of {} bricks, seed {}", reloaded.canvas().selection().len(), reloaded.seed());
    Ok(())
}
