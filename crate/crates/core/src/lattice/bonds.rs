use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::grid::{neighbor_unbounded, BrickCoord, NeighborDirection, Segment};
use super::{BrickDimensions, LatticeError};

/// Stable identifier of one physical strand.
///
/// Free-hand bricks are `bRRRR-CCCC`; digitized strands are `sXXXX-YYYY-h` or
/// `sXXXX-YYYY-v` after their smaller endpoint and orientation. The zero
/// padding makes string order agree with coordinate order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrandId(String);

impl StrandId {
    pub fn brick(c: BrickCoord) -> Self {
        StrandId(format!("b{:04}-{:04}", c.row, c.col))
    }

    pub fn segment(s: Segment) -> Self {
        let start = s.start();
        let orientation = if s.is_horizontal() { 'h' } else { 'v' };
        StrandId(format!("s{:04}-{:04}-{orientation}", start.x, start.y))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StrandId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One binding domain of one strand; `domain` is 1..=4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub strand: StrandId,
    pub domain: u8,
}

impl Slot {
    pub fn new(strand: StrandId, domain: u8) -> Self {
        Slot { strand, domain }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.d{}", self.strand, self.domain)
    }
}

/// Unordered pair of hybridizing slots, normalized so that `first() < second()`.
///
/// Bonds order by their slots, which is the order sequences are designed in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bond {
    a: Slot,
    b: Slot,
}

impl Bond {
    pub fn new(x: Slot, y: Slot) -> Self {
        if x <= y {
            Bond { a: x, b: y }
        } else {
            Bond { a: y, b: x }
        }
    }

    /// The slot that carries the designed sequence.
    pub fn first(&self) -> &Slot {
        &self.a
    }

    /// The slot that carries the reverse complement.
    pub fn second(&self) -> &Slot {
        &self.b
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}", self.a, self.b)
    }
}

/// Pairing of all domain slots of a shape. Every slot is either in exactly one
/// bond or exposed (a sticky end).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BondGraph {
    pub bonds: Vec<Bond>,
    pub exposed: Vec<Slot>,
    pub slot_length: BTreeMap<Slot, usize>,
}

impl BondGraph {
    fn from_parts(bonds: BTreeSet<Bond>, exposed: BTreeSet<Slot>, slot_length: BTreeMap<Slot, usize>) -> Self {
        BondGraph { bonds: bonds.into_iter().collect(), exposed: exposed.into_iter().collect(), slot_length }
    }

    /// Length in nt of each bond, keyed in design order.
    pub fn bond_lengths(&self) -> BTreeMap<Bond, usize> {
        self.bonds.iter().map(|b| (b.clone(), self.slot_length[b.first()])).collect()
    }
}

/// Tile class of a free-hand brick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileClass {
    Full,
    /// Nothing above: only the lower domains d3 and d4 remain.
    HalfTop,
    /// Nothing below: only the upper domains d1 and d2 remain.
    HalfBottom,
}

impl TileClass {
    pub fn kept_domains(self) -> &'static [u8] {
        match self {
            TileClass::Full => &[1, 2, 3, 4],
            TileClass::HalfTop => &[3, 4],
            TileClass::HalfBottom => &[1, 2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrandKind {
    Tile(TileClass),
    Digitized,
}

impl StrandKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StrandKind::Tile(TileClass::Full) => "full",
            StrandKind::Tile(TileClass::HalfTop) => "half_top",
            StrandKind::Tile(TileClass::HalfBottom) => "half_bottom",
            StrandKind::Digitized => "digitized",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "full" => StrandKind::Tile(TileClass::Full),
            "half_top" => StrandKind::Tile(TileClass::HalfTop),
            "half_bottom" => StrandKind::Tile(TileClass::HalfBottom),
            "digitized" => StrandKind::Digitized,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrandPosition {
    Brick(BrickCoord),
    Segment(Segment),
}

/// A strand before sequences are assigned: its kept domains and their lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandSkeleton {
    pub id: StrandId,
    pub kind: StrandKind,
    pub position: StrandPosition,
    /// `(domain index, length in nt)` in 5'->3' order.
    pub domains: Vec<(u8, usize)>,
}

/// Bond graph plus the strands whose slots it pairs, sorted by strand id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub graph: BondGraph,
    pub strands: Vec<StrandSkeleton>,
}

fn is_selected(sel: &BTreeSet<BrickCoord>, c: BrickCoord, d: NeighborDirection) -> bool {
    neighbor_unbounded(c, d).is_some_and(|n| sel.contains(&n))
}

fn classify(sel: &BTreeSet<BrickCoord>, c: BrickCoord) -> TileClass {
    let up = is_selected(sel, c, NeighborDirection::NW) || is_selected(sel, c, NeighborDirection::NE);
    let down = is_selected(sel, c, NeighborDirection::SW) || is_selected(sel, c, NeighborDirection::SE);
    match (up, down) {
        (false, true) => TileClass::HalfTop,
        (true, false) => TileClass::HalfBottom,
        // An isolated brick stays whole; dropping both halves would leave nothing.
        _ => TileClass::Full,
    }
}

/// Tile class of every selected brick.
pub fn classify_tiles(sel: &BTreeSet<BrickCoord>) -> BTreeMap<BrickCoord, TileClass> {
    sel.iter().map(|&c| (c, classify(sel, c))).collect()
}

/// Neighbor direction and partner domain for each of the four domains.
const PARTNERS: [(u8, NeighborDirection, u8); 4] = [
    (1, NeighborDirection::NW, 4),
    (2, NeighborDirection::NE, 3),
    (3, NeighborDirection::SW, 2),
    (4, NeighborDirection::SE, 1),
];

/// Builds the bond graph of a free-hand shape.
///
/// d1 binds d4 of the NW neighbor, d2 binds d3 of the NE neighbor, d3 binds d2
/// of the SW neighbor and d4 binds d1 of the SE neighbor. A kept slot without a
/// kept partner is exposed.
pub fn bond_graph_free(sel: &BTreeSet<BrickCoord>, dims: BrickDimensions) -> Result<Layout, LatticeError> {
    if sel.is_empty() {
        return Err(LatticeError::EmptySelection);
    }
    let classes = classify_tiles(sel);
    let lengths = dims.domain_lengths();

    let mut bonds = BTreeSet::new();
    let mut exposed = BTreeSet::new();
    let mut slot_length = BTreeMap::new();
    let mut strands = Vec::with_capacity(sel.len());

    for (&c, &class) in &classes {
        let id = StrandId::brick(c);
        let kept = class.kept_domains();
        for &(domain, dir, partner_domain) in &PARTNERS {
            if !kept.contains(&domain) {
                continue;
            }
            let slot = Slot::new(id.clone(), domain);
            slot_length.insert(slot.clone(), lengths[usize::from(domain - 1)]);
            let partner = neighbor_unbounded(c, dir)
                .and_then(|n| classes.get(&n).map(|pc| (n, *pc)))
                .filter(|(_, pc)| pc.kept_domains().contains(&partner_domain));
            match partner {
                Some((n, _)) => {
                    bonds.insert(Bond::new(slot, Slot::new(StrandId::brick(n), partner_domain)));
                }
                None => {
                    exposed.insert(slot);
                }
            }
        }
        strands.push(StrandSkeleton {
            id,
            kind: StrandKind::Tile(class),
            position: StrandPosition::Brick(c),
            domains: kept.iter().map(|&d| (d, lengths[usize::from(d - 1)])).collect(),
        });
    }
    // Strand ids sort like coordinates, so `strands` is already in id order.
    Ok(Layout { graph: BondGraph::from_parts(bonds, exposed, slot_length), strands })
}

pub(super) fn layout_from_parts(
    bonds: BTreeSet<Bond>,
    exposed: BTreeSet<Slot>,
    slot_length: BTreeMap<Slot, usize>,
    mut strands: Vec<StrandSkeleton>,
) -> Layout {
    strands.sort_by(|x, y| x.id.cmp(&y.id));
    Layout { graph: BondGraph::from_parts(bonds, exposed, slot_length), strands }
}
