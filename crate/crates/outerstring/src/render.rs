//! Deterministic SVG rendering of representations: grounding line, shapes
//! with id labels, and clause-point markers for gadget scenes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::Point;
use crate::reps::Representation;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("nothing to render: empty representation")]
    Empty,
}

const VIEW_W: f64 = 840.0;
const VIEW_H: f64 = 560.0;
const MARGIN: f64 = 40.0;

struct Mapper {
    sx: f64,
    sy: f64,
    min_x: f64,
    max_y: f64,
}

impl Mapper {
    fn new(min_x: i64, max_x: i64, min_y: i64, max_y: i64) -> Self {
        let w = ((max_x - min_x) as f64).max(1.0);
        let h = ((max_y - min_y) as f64).max(1.0);
        let s = ((VIEW_W - 2.0 * MARGIN) / w).min((VIEW_H - 2.0 * MARGIN) / h);
        Mapper { sx: s, sy: s, min_x: min_x as f64, max_y: max_y as f64 }
    }

    fn x(&self, x: i64) -> f64 {
        MARGIN + (x as f64 - self.min_x) * self.sx
    }

    fn y(&self, y: i64) -> f64 {
        MARGIN + (self.max_y - y as f64) * self.sy
    }
}

fn polyline_svg(out: &mut String, m: &Mapper, pts: &[Point], color: &str) {
    let coords: Vec<String> =
        pts.iter().map(|p| format!("{:.2},{:.2}", m.x(p.x), m.y(p.y))).collect();
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"##,
        coords.join(" ")
    );
}

fn label(out: &mut String, m: &Mapper, p: Point, text: &str) {
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-size="9" fill="#444">{text}</text>"##,
        m.x(p.x) + 2.0,
        m.y(p.y) - 2.0
    );
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Render any representation to a standalone SVG 1.1 document.
pub fn render_svg(rep: &Representation) -> Result<String, RenderError> {
    // Collect every drawable shape as a polyline (plus rectangles as closed
    // outlines); circle representations are drawn as chord diagrams.
    let mut polylines: Vec<(Point, Vec<Point>, String)> = Vec::new(); // (label anchor, points, id text)
    match rep {
        Representation::Circle(r) => {
            if r.chords.is_empty() {
                return Err(RenderError::Empty);
            }
            return Ok(render_chord_diagram(r));
        }
        Representation::Overlap(_) | Representation::Gseg(_) => {
            let intervals = match rep {
                Representation::Overlap(r) => &r.intervals,
                Representation::Gseg(r) => &r.intervals,
                _ => unreachable!(),
            };
            if intervals.is_empty() {
                return Err(RenderError::Empty);
            }
            // stacked interval bars, one row per record
            for (row, iv) in intervals.iter().enumerate() {
                let y = (row as i64 + 1) * 2;
                polylines.push((
                    Point::new(iv.lo, y),
                    vec![Point::new(iv.lo, y), Point::new(iv.hi, y)],
                    iv.id.to_string(),
                ));
            }
        }
        Representation::SquareL(r) => {
            if r.shapes.is_empty() {
                return Err(RenderError::Empty);
            }
            for s in &r.shapes {
                polylines.push((
                    Point::new(s.ground_x, 0),
                    s.to_polyline(),
                    s.id.to_string(),
                ));
            }
        }
        Representation::LShapes(r) => {
            if r.shapes.is_empty() {
                return Err(RenderError::Empty);
            }
            for s in &r.shapes {
                polylines.push((s.corner, s.to_polyline(), s.id.to_string()));
            }
        }
        Representation::Rects(r) => {
            if r.shapes.is_empty() {
                return Err(RenderError::Empty);
            }

            for s in &r.shapes {
                polylines.push((
                    Point::new(s.x1, s.y2),
                    vec![
                        Point::new(s.x1, s.y1),
                        Point::new(s.x2, s.y1),
                        Point::new(s.x2, s.y2),
                        Point::new(s.x1, s.y2),
                        Point::new(s.x1, s.y1),
                    ],
                    s.id.to_string(),
                ));
            }
        }
        Representation::Outerstring(r) => {
            if r.strings.is_empty() {
                return Err(RenderError::Empty);
            }
            for s in &r.strings {
                polylines.push((s.vertices[0], s.vertices.clone(), s.id.to_string()));
            }
        }
    }


    let min_x = polylines.iter().flat_map(|(_, p, _)| p.iter().map(|q| q.x)).min().unwrap();
    let max_x = polylines.iter().flat_map(|(_, p, _)| p.iter().map(|q| q.x)).max().unwrap();
    let min_y = polylines.iter().flat_map(|(_, p, _)| p.iter().map(|q| q.y)).min().unwrap().min(0);
    let max_y = polylines.iter().flat_map(|(_, p, _)| p.iter().map(|q| q.y)).max().unwrap();
    let m = Mapper::new(min_x, max_x, min_y, max_y);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg version="1.1" xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW_W} {VIEW_H}">"#
    );
    // grounding line
    let _ = writeln!(
        out,
        r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#999" stroke-width="1" stroke-dasharray="4 3"/>"##,
        m.x(min_x) - 10.0,
        m.y(0),
        m.x(max_x) + 10.0,
        m.y(0)
    );
    for (i, (anchor, pts, id)) in polylines.iter().enumerate() {
        polyline_svg(&mut out, &m, pts, PALETTE[i % PALETTE.len()]);
        label(&mut out, &m, *anchor, id);
    }

    // Mark points where at least two strings end: gadget clause points.
    if let Representation::Outerstring(r) = rep {
        let mut ends: BTreeMap<Point, usize> = BTreeMap::new();
        for s in &r.strings {
            *ends.entry(*s.vertices.last().unwrap()).or_insert(0) += 1;
        }
        for (p, count) in ends {
            if count >= 2 {
                let _ = writeln!(
                    out,
                    r##"<circle cx="{:.2}" cy="{:.2}" r="3" fill="#000"/>"##,
                    m.x(p.x),
                    m.y(p.y)
                );
                label(&mut out, &m, p, &format!("clause point ({},{})", p.x, p.y));
            }
        }
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

fn render_chord_diagram(r: &crate::reps::CircleRep) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg version="1.1" xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW_W} {VIEW_H}">"#
    );
    let (cx, cy) = (VIEW_W / 2.0, VIEW_H / 2.0);
    let radius = (VIEW_H / 2.0) - MARGIN;
    let _ = writeln!(
        out,
        r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{radius:.2}" fill="none" stroke="#999"/>"##
    );
    let total = 2 * r.n as i64;
    let angle = |pos: i64| 2.0 * std::f64::consts::PI * (pos as f64) / (total as f64);
    for (i, c) in r.chords.iter().enumerate() {
        let (a1, a2) = (angle(c.p), angle(c.q));
        let (x1, y1) = (cx + radius * a1.cos(), cy + radius * a1.sin());
        let (x2, y2) = (cx + radius * a2.cos(), cy + radius * a2.sin());
        let _ = writeln!(
            out,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}" stroke-width="1.5"/>"##,
            PALETTE[i % PALETTE.len()]
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-size="9" fill="#444">{}</text>"##,
            (x1 + x2) / 2.0,
            (y1 + y2) / 2.0,
            c.id
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}
