//! Constrained sequence generation and strand assembly.
//!
//! Bond sequences are drawn from a seeded SplitMix64 stream and rejected until
//! they satisfy GC, homopolymer, Hamming, reverse-complement and shared k-mer
//! constraints. Assembly then writes each bond sequence onto one slot and its
//! reverse complement onto the partner slot, and fills exposed slots with
//! poly-T protectors.

mod assemble;
mod constraints;
mod generate;
mod rng;
mod seq;

pub use assemble::{assemble, Assembly, Counts, DomainSeq, StrandRecord};
pub use constraints::{check_candidate, AcceptedSet, ConstraintParams, Rejection};
pub use generate::design_bonds;
pub use rng::SplitMix64;
pub use seq::{gc_fraction, hamming, longest_run, revcomp};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lattice::{
    bond_graph_digitized, bond_graph_free, shape_hash, Bond, BrickDimensions, CanvasType, Grid, LatticeError, Layout,
    ShapeHash, ShapeSelection,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeqError {
    #[error("invalid base {0:?}")]
    InvalidBase(char),
    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence is empty")]
    EmptySequence,
    #[error("no sequence for bond {bond} after {attempts} attempts ({accepted} sequences accepted)")]
    SequenceSpaceExhausted { bond: String, attempts: u32, accepted: usize },
    #[error("no sequence for {0}")]
    MissingBondSequence(String),
    #[error("invalid constraint parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl SeqError {
    pub fn code(&self) -> &'static str {
        match self {
            SeqError::InvalidBase(_) => "InvalidBase",
            SeqError::LengthMismatch { .. } => "LengthMismatch",
            SeqError::EmptySequence => "EmptySequence",
            SeqError::SequenceSpaceExhausted { .. } => "SequenceSpaceExhausted",
            SeqError::MissingBondSequence(_) => "MissingBondSequence",
            SeqError::InvalidParams(_) => "InvalidParams",
            SeqError::Lattice(e) => e.code(),
        }
    }
}

/// A complete design: every strand with its sequence plus the inputs that
/// reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignOutput {
    pub grid: Grid,
    pub selection: ShapeSelection,
    pub dims: BrickDimensions,
    pub seed: u64,
    pub params: ConstraintParams,
    pub shape_hash: ShapeHash,
    pub strands: Vec<StrandRecord>,
    pub bond_sequences: BTreeMap<Bond, String>,
    pub counts: Counts,
}

impl DesignOutput {
    pub fn canvas_type(&self) -> CanvasType {
        self.selection.canvas_type()
    }

    pub fn total_bases(&self) -> usize {
        self.strands.iter().map(|s| s.full_seq.len()).sum()
    }
}

/// Bond graph and strand skeletons for either canvas.
pub fn layout(selection: &ShapeSelection, dims: BrickDimensions) -> Result<Layout, LatticeError> {
    match selection {
        ShapeSelection::Free(cells) => bond_graph_free(cells, dims),
        ShapeSelection::Digitized(segments) => bond_graph_digitized(segments, dims),
    }
}

/// Runs the whole pipeline for one shape.
pub fn design(
    grid: Grid,
    selection: &ShapeSelection,
    dims: BrickDimensions,
    seed: u64,
    params: &ConstraintParams,
) -> Result<DesignOutput, SeqError> {
    let hash = shape_hash(dims, selection)?;
    let layout = layout(selection, dims)?;
    let bond_sequences = design_bonds(&layout.graph.bond_lengths(), seed, params)?;
    let Assembly { strands, counts } = assemble(&layout, &bond_sequences)?;
    Ok(DesignOutput {
        grid,
        selection: selection.clone(),
        dims,
        seed,
        params: params.clone(),
        shape_hash: hash,
        strands,
        bond_sequences,
        counts,
    })
}
