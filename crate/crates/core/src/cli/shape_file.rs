//! Plain-text shape files.
//!
//! The first line is `rows cols`. A free-hand shape follows with `rows` lines
//! of `cols` characters, `#` for a selected brick and `.` for an empty one. A
//! digitized shape instead lists one `SEG x1 y1 x2 y2` line per unit segment,
//! with nodes in a `cols` by `rows` node grid.

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use crate::lattice::{BrickCoord, Grid, Node, Segment, ShapeSelection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeFileError {
    #[error("line 1: expected a `rows cols` header, got {0:?}")]
    MalformedHeader(String),
    #[error("{0}")]
    DimensionMismatch(String),
    #[error("line {line}: duplicate entry {entry}")]
    DuplicateEntry { line: usize, entry: String },
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
}

impl ShapeFileError {
    pub fn code(&self) -> &'static str {
        match self {
            ShapeFileError::MalformedHeader(_) => "MalformedHeader",
            ShapeFileError::DimensionMismatch(_) => "DimensionMismatch",
            ShapeFileError::DuplicateEntry { .. } => "DuplicateEntry",
            ShapeFileError::MalformedLine { .. } => "MalformedLine",
        }
    }
}

/// Parses a shape file into its grid and selection.
pub fn parse_shape_file(bytes: &[u8]) -> Result<(Grid, ShapeSelection), ShapeFileError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| ShapeFileError::MalformedLine { line: 1, reason: format!("not UTF-8: {e}") })?;
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().unwrap_or("");
    let grid = parse_header(header)?;
    let mut body: Vec<(usize, &str)> = lines.enumerate().map(|(i, l)| (i + 2, l)).collect();
    while body.last().is_some_and(|(_, l)| l.trim().is_empty()) {
        body.pop();
    }
    let digitized = body.iter().any(|(_, l)| l.trim_start().starts_with("SEG"));
    if digitized {
        parse_segments(grid, &body).map(|s| (grid, ShapeSelection::Digitized(s)))
    } else {
        parse_cells(grid, &body).map(|c| (grid, ShapeSelection::Free(c)))
    }
}

fn parse_header(header: &str) -> Result<Grid, ShapeFileError> {
    let malformed = || ShapeFileError::MalformedHeader(header.to_string());
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols] = fields.as_slice() else {
        return Err(malformed());
    };
    let rows: u32 = rows.parse().map_err(|_| malformed())?;
    let cols: u32 = cols.parse().map_err(|_| malformed())?;
    Grid::new(rows, cols).map_err(|_| malformed())
}

fn parse_cells(grid: Grid, body: &[(usize, &str)]) -> Result<BTreeSet<BrickCoord>, ShapeFileError> {
    if body.len() != grid.rows as usize {
        return Err(ShapeFileError::DimensionMismatch(format!(
            "header declares {} rows but the grid has {}",
            grid.rows,
            body.len()
        )));
    }
    let mut cells = BTreeSet::new();
    for (row, &(line, text)) in body.iter().enumerate() {
        let width = text.chars().count();
        if width != grid.cols as usize {
            return Err(ShapeFileError::DimensionMismatch(format!(
                "line {line}: header declares {} columns but the row has {width}",
                grid.cols
            )));
        }
        for (col, ch) in text.chars().enumerate() {
            match ch {
                '#' => {
                    cells.insert(BrickCoord::new(row as u32, col as u32));
                }
                '.' => {}
                other => {
                    return Err(ShapeFileError::MalformedLine {
                        line,
                        reason: format!("unexpected character {other:?}; use '#' or '.'"),
                    });
                }
            }
        }
    }
    Ok(cells)
}

fn parse_segments(grid: Grid, body: &[(usize, &str)]) -> Result<BTreeSet<Segment>, ShapeFileError> {
    let mut segments = BTreeSet::new();
    for &(line, text) in body {
        if text.trim().is_empty() {
            continue;
        }
        let malformed = |reason: String| ShapeFileError::MalformedLine { line, reason };
        let fields: Vec<&str> = text.split_whitespace().collect();
        let ["SEG", rest @ ..] = fields.as_slice() else {
            return Err(malformed(format!("expected `SEG x1 y1 x2 y2`, got {text:?}")));
        };
        let coords = rest
            .iter()
            .map(|f| f.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| malformed(format!("bad coordinate: {e}")))?;
        let &[x1, y1, x2, y2] = coords.as_slice() else {
            return Err(malformed(format!("expected 4 coordinates, got {}", coords.len())));
        };
        let (p, q) = (Node::new(x1, y1), Node::new(x2, y2));
        for n in [p, q] {
            if !grid.contains_node(n) {
                return Err(ShapeFileError::DimensionMismatch(format!(
                    "line {line}: node ({}, {}) is outside the {}x{} grid",
                    n.x, n.y, grid.rows, grid.cols
                )));
            }
        }
        let segment = Segment::new(p, q).map_err(|e| malformed(e.to_string()))?;
        if !segments.insert(segment) {
            return Err(ShapeFileError::DuplicateEntry { line, entry: segment.to_string() });
        }
    }
    Ok(segments)
}

/// Writes `selection` in the shape file format; [`parse_shape_file`] reads it back.
pub fn format_shape_file(grid: Grid, selection: &ShapeSelection) -> String {
    let mut out = format!("{} {}\n", grid.rows, grid.cols);
    match selection {
        ShapeSelection::Free(cells) => {
            for row in 0..grid.rows {
                for col in 0..grid.cols {
                    out.push(if cells.contains(&BrickCoord::new(row, col)) { '#' } else { '.' });
                }
                out.push('\n');
            }
        }
        ShapeSelection::Digitized(segments) => {
            for s in segments {
                let (a, b) = (s.start(), s.end());
                let _ = writeln!(out, "SEG {} {} {} {}", a.x, a.y, b.x, b.y);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(sel: &ShapeSelection) -> Vec<(u32, u32)> {
        match sel {
            ShapeSelection::Free(c) => c.iter().map(|c| (c.row, c.col)).collect(),
            ShapeSelection::Digitized(_) => panic!("expected a free-hand shape"),
        }
    }

    #[test]
    fn single_brick() {
        let (grid, sel) = parse_shape_file(b"1 1\n#").unwrap();
        assert_eq!((grid.rows, grid.cols), (1, 1));
        assert_eq!(cells(&sel), [(0, 0)]);
    }

    #[test]
    fn diagonal_pair() {
        let (_, sel) = parse_shape_file(b"2 2\n#.\n.#\n").unwrap();
        assert_eq!(cells(&sel), [(0, 0), (1, 1)]);
    }

    #[test]
    fn row_count_must_match_header() {
        let err = parse_shape_file(b"2 2\n#.\n.#\n##\n").unwrap_err();
        assert_eq!(err.code(), "DimensionMismatch");
        assert_eq!(parse_shape_file(b"2 2\n#.\n").unwrap_err().code(), "DimensionMismatch");
        assert_eq!(parse_shape_file(b"2 2\n#..\n.#\n").unwrap_err().code(), "DimensionMismatch");
    }

    #[test]
    fn bad_headers() {
        for bad in ["", "2", "2 x", "0 3", "1 2 3"] {
            let err = parse_shape_file(format!("{bad}\n#").as_bytes()).unwrap_err();
            assert_eq!(err.code(), "MalformedHeader", "{bad:?}");
        }
    }

    #[test]
    fn unknown_cell_character() {
        assert_eq!(parse_shape_file(b"1 2\n#x").unwrap_err().code(), "MalformedLine");
    }

    #[test]
    fn segments_are_canonical_and_unique() {
        let (_, sel) = parse_shape_file(b"3 3\nSEG 1 0 0 0\nSEG 1 0 1 1\n").unwrap();
        let ShapeSelection::Digitized(segs) = &sel else { panic!() };
        let shown: Vec<String> = segs.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["0,0,1,0", "1,0,1,1"]);
        let dup = parse_shape_file(b"3 3\nSEG 0 0 1 0\nSEG 1 0 0 0\n").unwrap_err();
        assert_eq!(dup, ShapeFileError::DuplicateEntry { line: 3, entry: "0,0,1,0".into() });
    }

    #[test]
    fn segment_errors() {
        assert_eq!(parse_shape_file(b"3 3\nSEG 0 0 1 1\n").unwrap_err().code(), "MalformedLine");
        assert_eq!(parse_shape_file(b"3 3\nSEG 0 0 1\n").unwrap_err().code(), "MalformedLine");
        assert_eq!(parse_shape_file(b"3 3\nSEG 2 0 3 0\n").unwrap_err().code(), "DimensionMismatch");
        assert_eq!(parse_shape_file(b"3 3\nSEG 0 0 1 0\n#..\n").unwrap_err().code(), "MalformedLine");
    }

    #[test]
    fn format_round_trips() {
        for text in ["2 3\n#.#\n.##\n", "4 4\nSEG 0 0 1 0\nSEG 1 0 1 1\n"] {
            let (grid, sel) = parse_shape_file(text.as_bytes()).unwrap();
            assert_eq!(format_shape_file(grid, &sel), text);
        }
    }
}
