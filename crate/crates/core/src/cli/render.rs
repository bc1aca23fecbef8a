//! Pictures of planar sets: members, their exterior neighbours, and empty
//! cells, over the bounding box grown by one cell on every side. Rows run
//! with `y` increasing upward.

use std::fmt::Write as _;

use thiserror::Error;

use crate::boundary::exterior_neighbors;
use crate::lattice::{LatticePoint, PointSet};

pub const MEMBER: char = '●';
pub const NEIGHBOR: char = '○';
pub const EMPTY: char = '·';

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub mode: RenderMode,
    /// Largest allowed framed width or height, in cells.
    pub max_extent: u64,
    /// SVG cell size in pixels.
    pub cell: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            mode: RenderMode::Ascii,
            max_extent: 200,
            cell: 24,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("only 2-dimensional sets can be rendered, got dimension {0}")]
    Dimension(usize),

    #[error("framed grid is {width}x{height}, above the limit of {limit}")]
    Oversize { width: u64, height: u64, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Member,
    Neighbor,
    Empty,
}

struct Frame {
    x0: i64,
    y0: i64,
    width: u64,
    height: u64,
}

fn frame(set: &PointSet, limit: u64) -> Result<Option<Frame>, RenderError> {
    if set.dimension() != 2 {
        return Err(RenderError::Dimension(set.dimension()));
    }
    let Some(b) = set.bounding_box() else {
        return Ok(None);
    };
    let width = b[0].1.abs_diff(b[0].0) + 3;
    let height = b[1].1.abs_diff(b[1].0) + 3;
    if width > limit || height > limit {
        return Err(RenderError::Oversize {
            width,
            height,
            limit,
        });
    }
    Ok(Some(Frame {
        x0: b[0].0 - 1,
        y0: b[1].0 - 1,
        width,
        height,
    }))
}

/// Cells from the top row down, each row left to right.
fn cells(set: &PointSet, f: &Frame) -> Vec<Vec<Cell>> {
    let halo = exterior_neighbors(set);
    (0..f.height as i64)
        .rev()
        .map(|dy| {
            (0..f.width as i64)
                .map(|dx| {
                    let p = LatticePoint::new(vec![f.x0 + dx, f.y0 + dy]);
                    if set.contains(&p) {
                        Cell::Member
                    } else if halo.contains(&p) {
                        Cell::Neighbor
                    } else {
                        Cell::Empty
                    }
                })
                .collect()
        })
        .collect()
}

pub fn render_grid(set: &PointSet, options: &RenderOptions) -> Result<String, RenderError> {
    let f = frame(set, options.max_extent)?;
    Ok(match options.mode {
        RenderMode::Ascii => ascii(set, f.as_ref()),
        RenderMode::Svg => svg(set, f.as_ref(), options.cell),
    })
}

fn ascii(set: &PointSet, f: Option<&Frame>) -> String {
    let Some(f) = f else {
        return String::new();
    };
    let mut out = String::new();
    for row in cells(set, f) {
        for c in row {
            out.push(match c {
                Cell::Member => MEMBER,
                Cell::Neighbor => NEIGHBOR,
                Cell::Empty => EMPTY,
            });
        }
        out.push('\n');
    }
    out
}

fn svg(set: &PointSet, f: Option<&Frame>, cell: u32) -> String {
    let (w, h) = f.map_or((0, 0), |f| (f.width, f.height));
    let cell = cell as u64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w * cell,
        h * cell,
        w * cell,
        h * cell
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    if let Some(f) = f {
        let r = cell as f64 * 0.3;
        for (row, line) in cells(set, f).into_iter().enumerate() {
            for (col, c) in line.into_iter().enumerate() {
                let cx = col as f64 * cell as f64 + cell as f64 / 2.0;
                let cy = row as f64 * cell as f64 + cell as f64 / 2.0;
                let (class, fill, radius) = match c {
                    Cell::Member => ("member", "#1f4fd1", r),
                    Cell::Neighbor => ("neighbor", "#d12f1f", r),
                    Cell::Empty => ("empty", "#bbbbbb", r * 0.25),
                };
                let _ = writeln!(
                    out,
                    r#"  <circle class="{class}" cx="{cx}" cy="{cy}" r="{radius}" fill="{fill}"/>"#
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
