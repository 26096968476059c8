//! Pictures of the code: character grids and brick-wall SVG drawings.

use std::fmt::Write;

use crate::code::CodeParams;
use crate::error::{Error, Result};
use crate::lattice::Vertex;
use crate::window::Window;

pub const MAX_RENDER_AREA: u128 = 1_000_000;

const CELL: i64 = 20;
const MARGIN: i64 = 15;
const RADIUS: i64 = 5;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Mark {
    Codeword,
    /// A vertex on a line row that is not a codeword.
    Gap,
    Plain,
}

pub fn mark(p: &CodeParams, v: Vertex) -> Mark {
    if p.is_codeword(v) {
        Mark::Codeword
    } else if p.is_line_row(v.y) {
        Mark::Gap
    } else {
        Mark::Plain
    }
}

fn check(w: &Window) -> Result<()> {
    Window::new(w.x0, w.x1, w.y0, w.y1)?;
    if w.area() > MAX_RENDER_AREA {
        return Err(Error::WindowTooLarge { area: w.area(), limit: MAX_RENDER_AREA });
    }
    Ok(())
}

/// `#` codeword, `o` gap on a line row, `.` anything else; top row first.
pub fn render_text(p: &CodeParams, w: &Window) -> Result<String> {
    check(w)?;
    let mut out = String::with_capacity(w.area() as usize + w.height() as usize);
    for y in (w.y0..=w.y1).rev() {
        for x in w.x0..=w.x1 {
            out.push(match mark(p, Vertex::new(x, y)) {
                Mark::Codeword => '#',
                Mark::Gap => 'o',
                Mark::Plain => '.',
            });
        }
        out.push('\n');
    }
    Ok(out)
}

/// Brick-wall drawing: every edge inside the window as a `<line>`, every
/// vertex as a `<circle>` (filled for codewords, hollow for gaps, small grey
/// dot otherwise).
pub fn render_svg(p: &CodeParams, w: &Window) -> Result<String> {
    check(w)?;
    let pos = |v: Vertex| (MARGIN + (v.x - w.x0) * CELL, MARGIN + (w.y1 - v.y) * CELL);
    let width = 2 * MARGIN + (w.width() as i64 - 1) * CELL;
    let height = 2 * MARGIN + (w.height() as i64 - 1) * CELL;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<g id="edges" stroke="black" stroke-width="1">"#).unwrap();
    for v in w.vertices() {
        let (x1, y1) = pos(v);
        if v.x < w.x1 {
            let (x2, y2) = pos(v.offset(1, 0));
            writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
        }
        if v.points_up() && v.y < w.y1 {
            let (x2, y2) = pos(v.offset(0, 1));
            writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g id="vertices">"#).unwrap();
    for v in w.vertices() {
        let (cx, cy) = pos(v);
        let style = match mark(p, v) {
            Mark::Codeword => format!(r#"r="{RADIUS}" fill="black" stroke="black""#),
            Mark::Gap => format!(r#"r="{RADIUS}" fill="white" stroke="black""#),
            Mark::Plain => r#"r="2" fill="gray" stroke="none""#.to_string(),
        };
        writeln!(out, r#"<circle cx="{cx}" cy="{cy}" {style}/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
