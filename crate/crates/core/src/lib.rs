//! Brickforge turns shapes drawn on a molecular canvas into DNA brick
//! (single-stranded tile) sequences.
//!
//! Two canvases are supported. On the free-hand canvas every selected cell is
//! one brick of a staggered brick-wall lattice. On the digitized canvas every
//! selected unit grid segment is one four-domain strand, and strands meeting at
//! a grid node bind each other.
//!
//! The pipeline is:
//!
//! 1. [`canvas`] collects a [`lattice::ShapeSelection`] from strokes and clicks.
//! 2. [`lattice`] quantizes brick dimensions, classifies tiles and builds the
//!    bond graph between domain slots.
//! 3. [`seqdesign`] draws domain sequences by seeded rejection sampling and
//!    assembles strand records with complementary bonded domains.
//! 4. [`export`] writes the sequence table, the per-base coordinate table and
//!    a one-page PDF report with a Code 128 barcode of the shape hash.
//!
//! [`project`] persists all of this in a project folder, [`service`] exposes
//! it over HTTP and [`cli`] drives it from the command line.

pub mod canvas;
pub mod cli;
mod error;
pub mod export;
pub mod lattice;
pub mod project;
pub mod seqdesign;
pub mod service;

pub use error::{Error, Result};
