//! Text and SVG drawings of 4-modular diagrams.
//!
//! Row `i`, column `i` is the `i`-th cell of the main diagonal. A part
//! `4b + 1` is a column: a triangle labelled 1 in the lower-left half of its
//! diagonal cell with `b` squares below it. A part `4a + 3` is a row: a
//! triangle labelled 3 in the upper-right half with `a` squares to its right.
//! Both kinds fill the diagonal from its last cell backwards, largest part
//! first. Even parts are not drawn; they are listed under the grid.

use std::fmt::Write as _;

use partition_lab::maps::ModularDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Empty,
    Square,
    /// Diagonal cell holding only a `1` triangle.
    Lower,
    /// Diagonal cell holding only a `3` triangle.
    Upper,
    /// Diagonal cell holding both triangles.
    Both,
}

impl Cell {
    fn with_lower(self) -> Cell {
        match self {
            Cell::Upper | Cell::Both => Cell::Both,
            _ => Cell::Lower,
        }
    }

    fn with_upper(self) -> Cell {
        match self {
            Cell::Lower | Cell::Both => Cell::Both,
            _ => Cell::Upper,
        }
    }

    fn ascii(self) -> &'static str {
        match self {
            Cell::Empty => "  ",
            Cell::Square => "##",
            Cell::Lower => "1.",
            Cell::Upper => ".3",
            Cell::Both => "13",
        }
    }
}

/// The diagram as a rectangular grid of cells, top row first.
pub fn cell_grid(d: &ModularDiagram) -> Vec<Vec<Cell>> {
    let diag = d.diagonal_len();
    let columns = d.column_squares();
    let rows = d.row_squares();
    let col_offset = diag - columns.len();
    let row_offset = diag - rows.len();
    let height = columns
        .iter()
        .enumerate()
        .map(|(p, &b)| col_offset + p + b as usize + 1)
        .max()
        .unwrap_or(0)
        .max(diag);
    let width = rows
        .iter()
        .enumerate()
        .map(|(p, &a)| row_offset + p + a as usize + 1)
        .max()
        .unwrap_or(0)
        .max(diag);
    let mut grid = vec![vec![Cell::Empty; width]; height];
    for (p, &b) in columns.iter().enumerate() {
        let j = col_offset + p;
        grid[j][j] = grid[j][j].with_lower();
        for r in 1..=b as usize {
            grid[j + r][j] = Cell::Square;
        }
    }
    for (p, &a) in rows.iter().enumerate() {
        let i = row_offset + p;
        grid[i][i] = grid[i][i].with_upper();
        for c in 1..=a as usize {
            grid[i][i + c] = Cell::Square;
        }
    }
    grid
}

fn even_annotation(d: &ModularDiagram) -> String {
    if d.lambda_e.is_empty() {
        return "λ_e: (none)".to_string();
    }
    let parts: Vec<String> = d.lambda_e.iter().map(u32::to_string).collect();
    format!("λ_e: ({})", parts.join(","))
}

/// Two characters per cell separated by spaces: `##` square, `13` both
/// triangles, `1.` and `.3` a single triangle. Ends with the `λ_e` line.
pub fn render_ascii(d: &ModularDiagram) -> String {
    let mut out = String::new();
    for row in cell_grid(d) {
        let line: Vec<&str> = row.iter().map(|c| c.ascii()).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out.push_str(&even_annotation(d));
    out.push('\n');
    out
}

const CELL: usize = 40;
const MARGIN: usize = 10;

/// Unit squares, a diagonal stroke through each diagonal cell and labelled
/// triangles, with the `λ_e` line underneath. Every cell carries
/// `data-row`/`data-col` attributes and triangles a `data-label`.
pub fn render_svg(d: &ModularDiagram) -> String {
    let grid = cell_grid(d);
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    let width = cols * CELL + 2 * MARGIN;
    let height = rows * CELL + 2 * MARGIN + 24;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    svg.push_str(r#"<g fill="none" stroke="black" stroke-width="1">"#);
    svg.push('\n');
    for (i, row) in grid.iter().enumerate() {
        for (j, &cell) in row.iter().enumerate() {
            let (x, y) = (MARGIN + j * CELL, MARGIN + i * CELL);
            match cell {
                Cell::Empty => {}
                Cell::Square => {
                    let _ = writeln!(
                        svg,
                        r#"<rect class="square" data-row="{i}" data-col="{j}" x="{x}" y="{y}" width="{CELL}" height="{CELL}"/>"#
                    );
                }
                Cell::Lower | Cell::Upper | Cell::Both => {
                    let (x2, y2) = (x + CELL, y + CELL);
                    if matches!(cell, Cell::Lower | Cell::Both) {
                        let _ = writeln!(
                            svg,
                            r#"<polygon class="triangle" data-row="{i}" data-col="{j}" data-label="1" points="{x},{y} {x},{y2} {x2},{y2}"/>"#
                        );
                    }
                    if matches!(cell, Cell::Upper | Cell::Both) {
                        let _ = writeln!(
                            svg,
                            r#"<polygon class="triangle" data-row="{i}" data-col="{j}" data-label="3" points="{x},{y} {x2},{y} {x2},{y2}"/>"#
                        );
                    }
                    let _ = writeln!(svg, r#"<line class="diagonal" x1="{x}" y1="{y}" x2="{x2}" y2="{y2}"/>"#);
                }
            }
        }
    }
    svg.push_str("</g>\n");
    svg.push_str(r#"<g font-family="sans-serif" font-size="14" text-anchor="middle">"#);
    svg.push('\n');
    for (i, row) in grid.iter().enumerate() {
        for (j, &cell) in row.iter().enumerate() {
            let (x, y) = (MARGIN + j * CELL, MARGIN + i * CELL);
            if matches!(cell, Cell::Lower | Cell::Both) {
                let _ = writeln!(svg, r#"<text x="{}" y="{}">1</text>"#, x + CELL * 3 / 10, y + CELL * 8 / 10);
            }
            if matches!(cell, Cell::Upper | Cell::Both) {
                let _ = writeln!(svg, r#"<text x="{}" y="{}">3</text>"#, x + CELL * 7 / 10, y + CELL * 4 / 10);
            }
        }
    }
    let _ = writeln!(
        svg,
        r#"<text class="annotation" x="{MARGIN}" y="{}" text-anchor="start">{}</text>"#,
        height - MARGIN,
        even_annotation(d)
    );
    svg.push_str("</g>\n</svg>\n");
    svg
}
