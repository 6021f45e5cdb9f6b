use std::fmt::Write;

use super::ExportError;
use crate::lattice::{BrickDimensions, StrandKind, StrandPosition};
use crate::seqdesign::{DesignOutput, StrandRecord};

#[derive(Debug, Clone, PartialEq)]
pub struct BaseCoordinate {
    pub strand_id: String,
    /// 0-based along the strand, 5'->3'.
    pub base_index: usize,
    pub base: char,
    pub domain_index: u8,
    pub x_nm: f64,
    pub y_nm: f64,
}

/// Position of every base of `strand`, in nm.
///
/// A brick's west edge is `col * W`, plus `W / 2` on odd rows, and its north
/// edge is `row * H / 2`. The top helix at `north + H / 4` carries d1 and d2
/// west to east; the bottom helix at `north + 3H / 4` carries d3 and d4 east to
/// west. Bases sit at the centers of `N / 2` equal steps across the brick.
///
/// A digitized strand runs d1 and d2 from its start node to its end node and
/// d3 and d4 back, with nodes scaled by `(W, H / 2)`.
pub fn base_coordinates(strand: &StrandRecord, dims: BrickDimensions) -> Result<Vec<BaseCoordinate>, ExportError> {
    let (w, h) = (dims.width(), dims.height());
    let mut out = Vec::with_capacity(strand.full_seq.len());
    let mut push = |domain: u8, base: char, x: f64, y: f64| {
        let base_index = out.len();
        out.push(BaseCoordinate {
            strand_id: strand.id.to_string(),
            base_index,
            base,
            domain_index: domain,
            x_nm: x,
            y_nm: y,
        });
    };

    match (strand.kind, strand.position) {
        (StrandKind::Tile(_), StrandPosition::Brick(c)) => {
            let west = f64::from(c.col) * w + if c.row % 2 == 1 { w / 2.0 } else { 0.0 };
            let north = f64::from(c.row) * h / 2.0;
            let lengths = dims.domain_lengths();
            let step = w / (dims.total_nt() / 2) as f64;
            for d in &strand.domains {
                let i0 = usize::from(d.index - 1);
                // Offset of this domain along its helix.
                let offset = if i0 % 2 == 0 { 0 } else { lengths[i0 - 1] };
                for (k, base) in d.seq.chars().enumerate() {
                    let along = (offset + k) as f64 + 0.5;
                    let (x, y) = if d.index <= 2 {
                        (west + along * step, north + h / 4.0)
                    } else {
                        (west + w - along * step, north + 3.0 * h / 4.0)
                    };
                    push(d.index, base, x, y);
                }
            }
        }
        (StrandKind::Digitized, StrandPosition::Segment(seg)) => {
            let scale = |n: crate::lattice::Node| (f64::from(n.x) * w, f64::from(n.y) * h / 2.0);
            let (p, q) = (scale(seg.start()), scale(seg.end()));
            let lane_len: usize = strand.domains.iter().filter(|d| d.index <= 2).map(|d| d.seq.len()).sum();
            let other_len: usize = strand.domains.iter().filter(|d| d.index > 2).map(|d| d.seq.len()).sum();
            let mut along = [0usize; 2];
            for d in &strand.domains {
                let (lane, from, to, n) = if d.index <= 2 { (0, p, q, lane_len) } else { (1, q, p, other_len) };
                for base in d.seq.chars() {
                    let t = (along[lane] as f64 + 0.5) / n as f64;
                    along[lane] += 1;
                    push(d.index, base, from.0 + t * (to.0 - from.0), from.1 + t * (to.1 - from.1));
                }
            }
        }
        _ => return Err(ExportError::UnplacedStrand(strand.id.to_string())),
    }
    Ok(out)
}

/// The per-base coordinate table, coordinates with four decimals.
pub fn write_detailed(d: &DesignOutput) -> Result<Vec<u8>, ExportError> {
    let mut out = String::from("strand_id,base_index,base,domain_index,x_nm,y_nm\n");
    for strand in &d.strands {
        for b in base_coordinates(strand, d.dims)? {
            let _ = writeln!(
                out,
                "{},{},{},{},{:.4},{:.4}",
                b.strand_id, b.base_index, b.base, b.domain_index, b.x_nm, b.y_nm
            );
        }
    }
    Ok(out.into_bytes())
}
