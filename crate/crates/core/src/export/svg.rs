use std::fmt::Write;

use super::{num, ExportError};
use crate::lattice::{BrickDimensions, Grid, LatticeError, ShapeSelection};

/// SVG drawing of a selection at lattice scale (1 user unit = 1 nm).
///
/// Free-hand bricks become `W x H` rectangles at their staggered positions;
/// digitized segments become lines between nodes scaled by `(W, H / 2)`.
/// Elements are emitted in selection order, so equal inputs give equal bytes.
pub fn render_shape_svg(selection: &ShapeSelection, grid: Grid, dims: BrickDimensions) -> Result<Vec<u8>, ExportError> {
    if selection.is_empty() {
        return Err(LatticeError::EmptySelection.into());
    }
    let (w, h) = (dims.width(), dims.height());
    let (vw, vh) = match selection {
        ShapeSelection::Free(_) => (f64::from(grid.cols) * w + w / 2.0, f64::from(grid.rows + 1) * h / 2.0),
        ShapeSelection::Digitized(_) => (
            f64::from(grid.cols.saturating_sub(1)).max(1.0) * w,
            f64::from(grid.rows.saturating_sub(1)).max(1.0) * h / 2.0,
        ),
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="{}mm" height="{}mm">"#,
        num(vw, 4),
        num(vh, 4),
        num(vw, 4),
        num(vh, 4)
    );
    match selection {
        ShapeSelection::Free(cells) => {
            out.push_str("<g fill=\"#6fa8dc\" fill-opacity=\"0.8\" stroke=\"#1f4e79\" stroke-width=\"0.1\">\n");
            for c in cells {
                let x = f64::from(c.col) * w + if c.row % 2 == 1 { w / 2.0 } else { 0.0 };
                let y = f64::from(c.row) * h / 2.0;
                let _ = writeln!(
                    out,
                    r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
                    num(x, 4),
                    num(y, 4),
                    num(w, 4),
                    num(h, 4)
                );
            }
        }
        ShapeSelection::Digitized(segments) => {
            out.push_str("<g stroke=\"#1f4e79\" stroke-width=\"0.5\" stroke-linecap=\"round\">\n");
            for s in segments {
                let (a, b) = (s.start(), s.end());
                let _ = writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    num(f64::from(a.x) * w, 4),
                    num(f64::from(a.y) * h / 2.0, 4),
                    num(f64::from(b.x) * w, 4),
                    num(f64::from(b.y) * h / 2.0, 4)
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out.into_bytes())
}
