//! Text renderings: CSV, JSON, whitespace lists and SVG scatter plots.

use std::fmt::Write;

use crate::engine::Pos;

pub fn csv_points(points: &[Pos]) -> String {
    let mut s = String::from("x,y\n");
    for (x, y) in points {
        let _ = writeln!(s, "{x},{y}");
    }
    s
}

pub fn csv_points_kd(points: &[Vec<u32>], dim: usize) -> String {
    let header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    let mut s = header.join(",") + "\n";
    for p in points {
        let row: Vec<String> = p.iter().map(u32::to_string).collect();
        s += &row.join(",");
        s.push('\n');
    }
    s
}

/// `x y` lines under a `#` comment; readable back as a move file.
pub fn ascii_points<T: AsRef<[u32]>>(title: &str, points: impl IntoIterator<Item = T>) -> String {
    let mut s = format!("# {title}\n");
    for p in points {
        let row: Vec<String> = p.as_ref().iter().map(u32::to_string).collect();
        s += &row.join(" ");
        s.push('\n');
    }
    s
}

pub fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        s += cells.join("  ").trim_end();
        s.push('\n');
    }
    s
}

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 40.0;
/// `φ ≈ 75025 / 46368`, consecutive Fibonacci numbers.
const PHI_NUM: f64 = 75025.0;
const PHI_DEN: f64 = 46368.0;

pub struct Plot<'a> {
    pub title: &'a str,
    pub bound: u32,
    pub p_positions: &'a [Pos],
    pub moves: &'a [Pos],
    pub guides: bool,
}

impl Plot<'_> {
    fn scale(&self) -> f64 {
        (SIZE - 2.0 * MARGIN) / f64::from(self.bound.max(1))
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + x * self.scale()
    }

    fn py(&self, y: f64) -> f64 {
        SIZE - MARGIN - y * self.scale()
    }

    /// Marker half-width in pixels.
    fn radius(&self) -> f64 {
        (self.scale() * 0.45).clamp(0.6, 6.0)
    }

    pub fn render(&self) -> String {
        let b = f64::from(self.bound.max(1));
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="1000" height="1000" viewBox="0 0 1000 1000">"#
        );
        let _ = writeln!(s, "<title>{}</title>", escape(self.title));
        let _ = writeln!(s, r#"<rect width="1000" height="1000" fill="white"/>"#);
        let (x0, y0, x1, y1) = (self.px(0.0), self.py(0.0), self.px(b), self.py(b));
        let _ = writeln!(
            s,
            r#"<path d="M{x0:.2} {y1:.2} L{x0:.2} {y0:.2} L{x1:.2} {y0:.2}" fill="none" stroke="black" stroke-width="1"/>"#
        );
        let _ = writeln!(s, r#"<text x="{x0:.2}" y="{:.2}" font-size="14">0</text>"#, y0 + 18.0);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="end">{}</text>"#, x1, y0 + 18.0, self.bound);
        if self.guides {
            // slopes φ and 1/φ, clipped to the square
            for (ex, ey) in [(b * PHI_DEN / PHI_NUM, b), (b, b * PHI_DEN / PHI_NUM)] {
                let _ = writeln!(
                    s,
                    r##"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{:.2}" stroke="#888888" stroke-width="1" stroke-dasharray="6 4"/>"##,
                    self.px(ex),
                    self.py(ey)
                );
            }
        }
        let r = self.radius();
        if !self.p_positions.is_empty() {
            let _ = writeln!(s, r##"<g fill="#1f4fbf">"##);
            for &(x, y) in self.p_positions {
                let _ = writeln!(
                    s,
                    r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
                    self.px(f64::from(x)) - r,
                    self.py(f64::from(y)) - r,
                    2.0 * r,
                    2.0 * r
                );
            }
            let _ = writeln!(s, "</g>");
        }
        if !self.moves.is_empty() {
            let _ = writeln!(s, r##"<g fill="#d62728">"##);
            let d = r * 1.3;
            for &(x, y) in self.moves {
                let (cx, cy) = (self.px(f64::from(x)), self.py(f64::from(y)));
                let _ = writeln!(
                    s,
                    r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}"/>"#,
                    cx,
                    cy - d,
                    cx + d,
                    cy,
                    cx,
                    cy + d,
                    cx - d,
                    cy
                );
            }
            let _ = writeln!(s, "</g>");
        }
        s += "</svg>\n";
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        assert_eq!(csv_points(&[(0, 0), (1, 2)]), "x,y\n0,0\n1,2\n");
        assert_eq!(csv_points_kd(&[vec![0, 1, 2]], 3), "x1,x2,x3\n0,1,2\n");
    }

    #[test]
    fn empty_plot_is_a_document() {
        let svg = Plot {
            title: "empty",
            bound: 10,
            p_positions: &[],
            moves: &[],
            guides: true,
        }
        .render();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<rect x="));
        assert_eq!(svg.matches("<line").count(), 2);
    }

    #[test]
    fn y_axis_points_up() {
        let plot = Plot {
            title: "t",
            bound: 10,
            p_positions: &[],
            moves: &[],
            guides: false,
        };
        assert!(plot.py(10.0) < plot.py(0.0));
        assert_eq!(plot.px(0.0), MARGIN);
    }

    #[test]
    fn columns_align() {
        let rows = vec![vec!["n".into(), "a".into()], vec!["10".into(), "7".into()]];
        assert_eq!(columns(&rows), "n   a\n10  7\n");
    }
}
