use std::collections::BTreeMap;
use std::fmt::Write;

use super::ExportError;
use crate::lattice::StrandPosition;
use crate::seqdesign::DesignOutput;

pub const DNADATA_HEADER: &str = "strand_id,tile_type,row,col,d1,d2,d3,d4,full_sequence";

/// The per-strand sequence table.
///
/// Rows are sorted by strand id. Digitized strands put their endpoints `x:y`
/// in the row and col columns. A blank line separates the summary rows.
pub fn write_dnadata(d: &DesignOutput) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(DNADATA_HEADER);
    out.push('\n');
    for s in &d.strands {
        let (row, col) = match s.position {
            StrandPosition::Brick(c) => (c.row.to_string(), c.col.to_string()),
            StrandPosition::Segment(seg) => {
                (format!("{}:{}", seg.start().x, seg.start().y), format!("{}:{}", seg.end().x, seg.end().y))
            }
        };
        let domain = |i: u8| s.domain(i).map(|x| x.seq.as_str()).unwrap_or("");
        let _ = writeln!(
            out,
            "{},{},{row},{col},{},{},{},{},{}",
            s.id,
            s.kind.as_str(),
            domain(1),
            domain(2),
            domain(3),
            domain(4),
            s.full_seq
        );
    }
    let c = d.counts;
    let _ = write!(
        out,
        "\nfull_tiles,{}\nhalf_tiles,{}\nsticky_ends,{}\nbond_sequences,{}\n",
        c.full_tiles, c.half_tiles, c.sticky_ends, c.bond_sequences
    );
    out.into_bytes()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnaDataRow {
    pub strand_id: String,
    pub tile_type: String,
    pub row: String,
    pub col: String,
    /// d1..d4; `None` for domains a half tile dropped.
    pub domains: [Option<String>; 4],
    pub full_sequence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DnaDataTable {
    pub rows: Vec<DnaDataRow>,
    pub summary: BTreeMap<String, usize>,
}

/// Parses a table written by [`write_dnadata`].
pub fn read_dnadata(bytes: &[u8]) -> Result<DnaDataTable, ExportError> {
    let malformed = |m: String| ExportError::MalformedTable(m);
    let mut reader = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(bytes);
    let mut table = DnaDataTable::default();
    let mut records = reader.records();
    match records.next() {
        Some(Ok(h)) if h.iter().collect::<Vec<_>>().join(",") == DNADATA_HEADER => {}
        _ => return Err(malformed("missing header".into())),
    }
    for (line, rec) in records.enumerate() {
        let rec = rec.map_err(|e| malformed(e.to_string()))?;
        match rec.len() {
            9 => {
                let dom = |i: usize| Some(rec[4 + i].to_string()).filter(|s| !s.is_empty());
                table.rows.push(DnaDataRow {
                    strand_id: rec[0].to_string(),
                    tile_type: rec[1].to_string(),
                    row: rec[2].to_string(),
                    col: rec[3].to_string(),
                    domains: [dom(0), dom(1), dom(2), dom(3)],
                    full_sequence: rec[8].to_string(),
                });
            }
            2 => {
                let n = rec[1].parse().map_err(|_| malformed(format!("bad count on record {}", line + 2)))?;
                table.summary.insert(rec[0].to_string(), n);
            }
            n => return Err(malformed(format!("record {} has {n} fields", line + 2))),
        }
    }
    Ok(table)
}
