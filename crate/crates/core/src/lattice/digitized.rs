use std::collections::{BTreeMap, BTreeSet};

use super::bonds::{layout_from_parts, Bond, Layout, Slot, StrandId, StrandKind, StrandPosition, StrandSkeleton};
use super::grid::{Node, Segment};
use super::{BrickDimensions, LatticeError};

/// One strand end meeting a grid node.
struct End {
    /// Clockwise rank of the ray from the node along the strand:
    /// east 0, south 1, west 2, north 3 (y grows south).
    heading: u8,
    /// Slot on the counter-clockwise side of the ray.
    first: Slot,
    /// Slot on the clockwise side of the ray.
    second: Slot,
}

fn heading(from: Node, to: Node) -> u8 {
    match (to.x.cmp(&from.x), to.y.cmp(&from.y)) {
        (std::cmp::Ordering::Greater, _) => 0,
        (_, std::cmp::Ordering::Greater) => 1,
        (std::cmp::Ordering::Less, _) => 2,
        _ => 3,
    }
}

/// Builds the bond graph of a digitized shape.
///
/// Each segment is a strand of four equal domains. d1 and d2 run from the
/// smaller endpoint to the larger one on the left of the direction of travel,
/// d3 and d4 run back on the right, so the start end owns (d1, d4) and the far
/// end owns (d3, d2), each listed counter-clockwise side first. At every node
/// the incident ends are taken in clockwise order and the clockwise slot of
/// each end binds the counter-clockwise slot of the next one, cyclically.
pub fn bond_graph_digitized(segments: &BTreeSet<Segment>, dims: BrickDimensions) -> Result<Layout, LatticeError> {
    if segments.is_empty() {
        return Err(LatticeError::EmptySelection);
    }
    let len = dims.digitized_domain_length();
    let mut ends: BTreeMap<Node, Vec<End>> = BTreeMap::new();
    let mut slot_length = BTreeMap::new();
    let mut strands = Vec::with_capacity(segments.len());

    for &seg in segments {
        let id = StrandId::segment(seg);
        let slot = |d: u8| Slot::new(id.clone(), d);
        for d in 1..=4 {
            slot_length.insert(slot(d), len);
        }
        let (p, q) = (seg.start(), seg.end());
        ends.entry(p).or_default().push(End { heading: heading(p, q), first: slot(1), second: slot(4) });
        ends.entry(q).or_default().push(End { heading: heading(q, p), first: slot(3), second: slot(2) });
        strands.push(StrandSkeleton {
            id: id.clone(),
            kind: StrandKind::Digitized,
            position: StrandPosition::Segment(seg),
            domains: (1..=4).map(|d| (d, len)).collect(),
        });
    }

    let mut bonds = BTreeSet::new();
    let mut exposed = BTreeSet::new();
    for mut incident in ends.into_values() {
        if incident.len() == 1 {
            let end = incident.pop().expect("one end");
            exposed.insert(end.first);
            exposed.insert(end.second);
            continue;
        }
        incident.sort_by_key(|e| e.heading);
        let k = incident.len();
        for i in 0..k {
            let next = &incident[(i + 1) % k];
            bonds.insert(Bond::new(incident[i].second.clone(), next.first.clone()));
        }
    }
    Ok(layout_from_parts(bonds, exposed, slot_length, strands))
}
