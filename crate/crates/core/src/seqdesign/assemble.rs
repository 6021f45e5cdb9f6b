use std::collections::BTreeMap;

use super::seq::revcomp;
use super::SeqError;
use crate::lattice::{Bond, Layout, Slot, StrandId, StrandKind, StrandPosition, TileClass};

/// One domain of an assembled strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSeq {
    /// 1..=4
    pub index: u8,
    pub seq: String,
    /// Poly-T passivating an exposed slot.
    pub protector: bool,
}

/// One physical strand with its sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandRecord {
    pub id: StrandId,
    pub kind: StrandKind,
    pub position: StrandPosition,
    /// Kept domains in 5'->3' order.
    pub domains: Vec<DomainSeq>,
    pub full_seq: String,
}

impl StrandRecord {
    pub fn domain(&self, index: u8) -> Option<&DomainSeq> {
        self.domains.iter().find(|d| d.index == index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counts {
    pub full_tiles: usize,
    pub half_tiles: usize,
    pub sticky_ends: usize,
    pub bond_sequences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly {
    pub strands: Vec<StrandRecord>,
    pub counts: Counts,
}

/// Places bond sequences onto strands.
///
/// The smaller slot of each bond receives the designed sequence and the larger
/// one its reverse complement. Exposed slots become poly-T protectors and are
/// counted as sticky ends.
pub fn assemble(layout: &Layout, bond_seqs: &BTreeMap<Bond, String>) -> Result<Assembly, SeqError> {
    let mut by_slot: BTreeMap<&Slot, (String, bool)> = BTreeMap::new();
    for bond in &layout.graph.bonds {
        let seq = bond_seqs.get(bond).ok_or_else(|| SeqError::MissingBondSequence(bond.to_string()))?;
        by_slot.insert(bond.first(), (seq.clone(), false));
        by_slot.insert(bond.second(), (revcomp(seq)?, false));
    }
    for slot in &layout.graph.exposed {
        let len = layout.graph.slot_length[slot];
        by_slot.insert(slot, ("T".repeat(len), true));
    }

    let mut counts = Counts {
        sticky_ends: layout.graph.exposed.len(),
        bond_sequences: layout.graph.bonds.len(),
        ..Counts::default()
    };
    let mut strands = Vec::with_capacity(layout.strands.len());
    for skel in &layout.strands {
        match skel.kind {
            StrandKind::Tile(TileClass::Full) => counts.full_tiles += 1,
            StrandKind::Tile(_) => counts.half_tiles += 1,
            StrandKind::Digitized => {}
        }
        let mut domains = Vec::with_capacity(skel.domains.len());
        for &(index, len) in &skel.domains {
            let slot = Slot::new(skel.id.clone(), index);
            let (seq, protector) =
                by_slot.get(&slot).cloned().ok_or_else(|| SeqError::MissingBondSequence(slot.to_string()))?;
            debug_assert_eq!(seq.len(), len);
            domains.push(DomainSeq { index, seq, protector });
        }
        let full_seq = domains.iter().map(|d| d.seq.as_str()).collect();
        strands.push(StrandRecord { id: skel.id.clone(), kind: skel.kind, position: skel.position, domains, full_seq });
    }
    Ok(Assembly { strands, counts })
}
