//! Single-page PDF report, written directly as uncompressed PDF 1.4.
//!
//! The page holds the title, the shape hash and its Code 128 barcode, the
//! brick dimensions, the shape drawing (a form XObject) and every strand's
//! sequence drawn at its lattice position.

use std::fmt::Write;

use super::{encode_code128, num, ExportError};
use crate::lattice::{BrickDimensions, ShapeSelection, StrandPosition};
use crate::seqdesign::DesignOutput;

const PAGE_W: f64 = 595.0;
const PAGE_H: f64 = 842.0;
const MARGIN: f64 = 40.0;
/// Fixed so that identical designs give identical files.
const CREATION_DATE: &str = "D:20000101000000Z";

fn pdf_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('(');
    for ch in s.chars() {
        match ch {
            '(' | ')' | '\\' => {
                out.push('\\');
                out.push(ch);
            }
            ' '..='~' => out.push(ch),
            _ => out.push('?'),
        }
    }
    out.push(')');
    out
}

fn text(out: &mut String, font: &str, size: f64, x: f64, y: f64, s: &str) {
    let _ = writeln!(out, "BT /{font} {} Tf {} {} Td {} Tj ET", num(size, 3), num(x, 3), num(y, 3), pdf_string(s));
}

/// Lattice rectangle `(x, y, w, h)` of a brick or segment in nm, y growing south.
fn footprint(pos: StrandPosition, dims: BrickDimensions) -> (f64, f64, f64, f64) {
    let (w, h) = (dims.width(), dims.height());
    match pos {
        StrandPosition::Brick(c) => {
            let x = f64::from(c.col) * w + if c.row % 2 == 1 { w / 2.0 } else { 0.0 };
            (x, f64::from(c.row) * h / 2.0, w, h)
        }
        StrandPosition::Segment(s) => {
            let (a, b) = (s.start(), s.end());
            let (x0, y0) = (f64::from(a.x) * w, f64::from(a.y) * h / 2.0);
            let (x1, y1) = (f64::from(b.x) * w, f64::from(b.y) * h / 2.0);
            (x0, y0, x1 - x0, y1 - y0)
        }
    }
}

/// Maps lattice coordinates into a page box, flipping y.
struct Viewport {
    min_x: f64,
    min_y: f64,
    scale: f64,
    left: f64,
    top: f64,
}

impl Viewport {
    fn fit(rects: &[(f64, f64, f64, f64)], pad: f64, left: f64, bottom: f64, width: f64, height: f64) -> Self {
        let min_x = rects.iter().map(|r| r.0).fold(f64::INFINITY, f64::min) - pad;
        let min_y = rects.iter().map(|r| r.1).fold(f64::INFINITY, f64::min) - pad;
        let max_x = rects.iter().map(|r| r.0 + r.2).fold(f64::NEG_INFINITY, f64::max) + pad;
        let max_y = rects.iter().map(|r| r.1 + r.3).fold(f64::NEG_INFINITY, f64::max) + pad;
        let scale = (width / (max_x - min_x)).min(height / (max_y - min_y));
        Viewport { min_x, min_y, scale, left, top: bottom + height }
    }

    fn x(&self, x: f64) -> f64 {
        self.left + (x - self.min_x) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        self.top - (y - self.min_y) * self.scale
    }
}

fn shape_drawing(
    selection: &ShapeSelection,
    dims: BrickDimensions,
    rects: &[(f64, f64, f64, f64)],
    v: &Viewport,
) -> String {
    let mut out = String::new();
    match selection {
        ShapeSelection::Free(_) => {
            out.push_str("0.44 0.66 0.86 rg 0.12 0.31 0.47 RG 0.3 w\n");
            for &(x, y, w, h) in rects {
                let _ = writeln!(
                    out,
                    "{} {} {} {} re B",
                    num(v.x(x), 3),
                    num(v.y(y + h), 3),
                    num(w * v.scale, 3),
                    num(h * v.scale, 3)
                );
            }
        }
        ShapeSelection::Digitized(_) => {
            let _ = writeln!(out, "0.12 0.31 0.47 RG {} w 1 J", num((dims.height() / 4.0 * v.scale).max(0.5), 3));
            for &(x, y, w, h) in rects {
                let _ = writeln!(
                    out,
                    "{} {} m {} {} l S",
                    num(v.x(x), 3),
                    num(v.y(y), 3),
                    num(v.x(x + w), 3),
                    num(v.y(y + h), 3)
                );
            }
        }
    }
    out
}

/// Renders the one-page report for a project called `title`.
pub fn write_pdf(d: &DesignOutput, title: &str) -> Result<Vec<u8>, ExportError> {
    let barcode = encode_code128(d.shape_hash.as_str())?;
    let rects: Vec<_> = d.strands.iter().map(|s| footprint(s.position, d.dims)).collect();
    let pad = d.dims.height() / 2.0;

    let mut page = String::new();
    text(&mut page, "F2", 18.0, MARGIN, PAGE_H - 50.0, title);
    text(&mut page, "F1", 10.0, MARGIN, PAGE_H - 72.0, &format!("Shape hash: {}", d.shape_hash));
    text(&mut page, "F1", 10.0, MARGIN, PAGE_H - 86.0, &format!("Brick dimensions: {}", d.dims));
    text(
        &mut page,
        "F1",
        10.0,
        MARGIN,
        PAGE_H - 100.0,
        &format!("Canvas: {}   Seed: {}   Strands: {}", d.canvas_type(), d.seed, d.strands.len()),
    );
    text(
        &mut page,
        "F1",
        10.0,
        MARGIN,
        PAGE_H - 114.0,
        &format!(
            "Full tiles: {}   Half tiles: {}   Sticky ends: {}   Bond sequences: {}",
            d.counts.full_tiles, d.counts.half_tiles, d.counts.sticky_ends, d.counts.bond_sequences
        ),
    );

    // Barcode in the top-right corner with a 10-module quiet zone.
    let module = 1.0;
    let bar_h = 40.0;
    let bx = PAGE_W - MARGIN - f64::from(barcode.total_modules() + 10) * module;
    let by = PAGE_H - 90.0;
    page.push_str("0 g\n");
    for (start, width) in barcode.bars() {
        let _ = writeln!(
            page,
            "{} {} {} {} re f",
            num(bx + f64::from(start) * module, 3),
            num(by, 3),
            num(f64::from(width) * module, 3),
            num(bar_h, 3)
        );
    }
    text(&mut page, "F3", 9.0, bx + 18.0, by - 11.0, d.shape_hash.as_str());

    // Shape drawing.
    let image_top = PAGE_H - 130.0;
    let image_h = 230.0;
    let form_v = Viewport::fit(&rects, pad, 0.0, 0.0, PAGE_W - 2.0 * MARGIN, image_h);
    let form = shape_drawing(&d.selection, d.dims, &rects, &form_v);
    let _ = writeln!(page, "q 1 0 0 1 {} {} cm /Shape Do Q", num(MARGIN, 3), num(image_top - image_h, 3));

    // Sequences in brick pattern.
    let table_top = image_top - image_h - 30.0;
    text(&mut page, "F2", 11.0, MARGIN, table_top + 8.0, "Sequences (5' to 3')");
    let table_v = Viewport::fit(&rects, pad, MARGIN, MARGIN, PAGE_W - 2.0 * MARGIN, table_top - 10.0 - MARGIN);
    page.push_str("0.6 G 0.2 w\n");
    for &(x, y, w, h) in &rects {
        if h > 0.0 && w > 0.0 {
            let _ = writeln!(
                page,
                "{} {} {} {} re S",
                num(table_v.x(x), 3),
                num(table_v.y(y + h), 3),
                num(w * table_v.scale, 3),
                num(h * table_v.scale, 3)
            );
        }
    }
    page.push_str("0 g\n");
    let (w, h) = (d.dims.width(), d.dims.height());
    for (strand, &(x, y, rw, rh)) in d.strands.iter().zip(&rects) {
        let seq_of = |range: std::ops::RangeInclusive<u8>| {
            strand
                .domains
                .iter()
                .filter(|dm| range.contains(&dm.index))
                .map(|dm| dm.seq.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match strand.position {
            StrandPosition::Brick(_) => {
                let lines = [seq_of(1..=2), seq_of(3..=4)];
                let chars = lines.iter().map(|l| l.len()).max().unwrap_or(1).max(1) as f64;
                let size = (w * table_v.scale * 0.94 / (chars * 0.6)).min(h / 4.0 * table_v.scale);
                for (i, line) in lines.iter().enumerate() {
                    if line.is_empty() {
                        continue;
                    }
                    let lane_y = y + h * (0.25 + 0.5 * i as f64);
                    text(
                        &mut page,
                        "F3",
                        size,
                        table_v.x(x) + w * table_v.scale * 0.03,
                        table_v.y(lane_y) - size * 0.35,
                        line,
                    );
                }
            }
            StrandPosition::Segment(_) => {
                let line = &strand.full_seq;
                let chars = line.len().max(1) as f64;
                let size = (w * table_v.scale * 0.9 / (chars * 0.6)).min(h / 4.0 * table_v.scale);
                let (cx, cy) = (x + rw / 2.0, y + rh / 2.0);
                let half_width = chars * 0.6 * size / 2.0;
                text(&mut page, "F3", size, table_v.x(cx) - half_width, table_v.y(cy) - size * 0.35, line);
            }
        }
    }

    let form_w = PAGE_W - 2.0 * MARGIN;
    let mut pdf = PdfWriter::default();
    pdf.object("<< /Type /Catalog /Pages 2 0 R >>");
    pdf.object("<< /Type /Pages /Kids [3 0 R] /Count 1 >>");
    pdf.object(&format!(
        "<< /Type /Page /Parent 2 0 R /MediaBox [0 0 {} {}] /Resources << /Font << /F1 4 0 R /F2 5 0 R /F3 6 0 R >> /XObject << /Shape 7 0 R >> >> /Contents 8 0 R >>",
        num(PAGE_W, 3),
        num(PAGE_H, 3)
    ));
    for font in ["Helvetica", "Helvetica-Bold", "Courier"] {
        pdf.object(&format!("<< /Type /Font /Subtype /Type1 /BaseFont /{font} /Encoding /WinAnsiEncoding >>"));
    }
    pdf.stream(
        &format!("/Type /XObject /Subtype /Form /BBox [0 0 {} {}]", num(form_w, 3), num(image_h, 3)),
        form.as_bytes(),
    );
    pdf.stream("", page.as_bytes());
    pdf.object(&format!(
        "<< /Title {} /Subject {} /Producer (brickforge) /CreationDate ({CREATION_DATE}) >>",
        pdf_string(title),
        pdf_string(&format!("Shape {}", d.shape_hash))
    ));
    Ok(pdf.finish(9))
}

#[derive(Default)]
struct PdfWriter {
    buf: Vec<u8>,
    offsets: Vec<usize>,
}

impl PdfWriter {
    fn start(&mut self) {
        if self.buf.is_empty() {
            self.buf.extend_from_slice(b"%PDF-1.4\n%\xE2\xE3\xCF\xD3\n");
        }
        self.offsets.push(self.buf.len());
        let id = self.offsets.len();
        self.buf.extend_from_slice(format!("{id} 0 obj\n").as_bytes());
    }

    fn object(&mut self, body: &str) {
        self.start();
        self.buf.extend_from_slice(body.as_bytes());
        self.buf.extend_from_slice(b"\nendobj\n");
    }

    fn stream(&mut self, dict: &str, data: &[u8]) {
        self.start();
        let sep = if dict.is_empty() { "" } else { " " };
        self.buf.extend_from_slice(format!("<< {dict}{sep}/Length {} >>\nstream\n", data.len()).as_bytes());
        self.buf.extend_from_slice(data);
        self.buf.extend_from_slice(b"\nendstream\nendobj\n");
    }

    fn finish(mut self, info: usize) -> Vec<u8> {
        let xref = self.buf.len();
        let n = self.offsets.len() + 1;
        let mut tail = format!("xref\n0 {n}\n0000000000 65535 f \n");
        for off in &self.offsets {
            let _ = writeln!(tail, "{off:010} 00000 n ");
        }
        let _ = write!(tail, "trailer\n<< /Size {n} /Root 1 0 R /Info {info} 0 R >>\nstartxref\n{xref}\n%%EOF\n");
        self.buf.extend_from_slice(tail.as_bytes());
        self.buf
    }
}
