//! SVG rendering of configurations and ranges.
//!
//! Rendering converts exact rationals to floating decimals for display only;
//! the verifier, not the picture, is ground truth. Heights are color-coded:
//! green for even heights, blue for odd ones; the fixed part is black and the
//! conic gray.

use mysticum_core::labels::{parse_label, text, ParsedLabel};
use mysticum_core::{
    KirkmanLabel, Multimysticum, ProjectiveLine, ProjectivePoint, RangeSpec, Triple,
};

#[derive(Clone, Debug)]
pub enum Selection {
    Conic,
    Sextuple,
    Pascals {
        height: usize,
    },
    Kirkmans {
        height: usize,
    },
    Steiners,
    Cayleys,
    Pluckers,
    Salmons,
    Meetings,
    Ladds,
    VeroneseNodes,
    /// A Kirkman range with its Cayley-line carrier.
    KirkmanRange(KirkmanLabel),
    Element(ParsedLabel),
}

/// Parses one `--labels` token: a family keyword (`pascals`, `kirkmans@2`,
/// `steiners`, ...), a range selector (`krange:3;05`) or an exact label text.
pub fn parse_selection(token: &str) -> Result<Selection, String> {
    let t = token.trim();
    let family_height = |rest: &str| -> Result<usize, String> {
        if rest.is_empty() {
            Ok(0)
        } else {
            rest.strip_prefix('@')
                .and_then(|h| h.parse().ok())
                .ok_or_else(|| format!("bad height suffix in {t:?}"))
        }
    };
    if let Some(rest) = t.strip_prefix("pascals") {
        return Ok(Selection::Pascals {
            height: family_height(rest)?,
        });
    }
    if let Some(rest) = t.strip_prefix("kirkmans") {
        return Ok(Selection::Kirkmans {
            height: family_height(rest)?,
        });
    }
    match t {
        "conic" => return Ok(Selection::Conic),
        "sextuple" => return Ok(Selection::Sextuple),
        "steiners" => return Ok(Selection::Steiners),
        "cayleys" => return Ok(Selection::Cayleys),
        "pluckers" => return Ok(Selection::Pluckers),
        "salmons" => return Ok(Selection::Salmons),
        "meetings" => return Ok(Selection::Meetings),
        "ladds" => return Ok(Selection::Ladds),
        "veronese-nodes" => return Ok(Selection::VeroneseNodes),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("krange:") {
        match parse_label(&format!("K {rest}")) {
            Ok(ParsedLabel::Kirkman(l)) => return Ok(Selection::KirkmanRange(l)),
            _ => return Err(format!("bad Kirkman range selector {t:?}")),
        }
    }
    parse_label(t)
        .map(Selection::Element)
        .map_err(|_| format!("unknown selection token {t:?}"))
}

const FIXED: &str = "#000000";
const CONIC: &str = "#8a8a8a";
const SEXTUPLE: &str = "#b03030";

fn height_color(h: usize) -> &'static str {
    if h % 2 == 0 {
        "#2e7d32" // green, even heights
    } else {
        "#1565c0" // blue, odd heights
    }
}

enum Shape {
    Point {
        x: f64,
        y: f64,
        label: String,
        color: &'static str,
    },
    Line {
        line: ProjectiveLine,
        label: String,
        color: &'static str,
    },
    Conic,
}

fn affine(p: &ProjectivePoint) -> Option<(f64, f64)> {
    p.to_affine_f64()
}

fn push_point(shapes: &mut Vec<Shape>, p: &ProjectivePoint, label: String, color: &'static str) {
    if let Some((x, y)) = affine(p) {
        shapes.push(Shape::Point { x, y, label, color });
    }
}

fn collect(
    m: &Multimysticum,
    selection: &Selection,
    shapes: &mut Vec<Shape>,
) -> Result<(), String> {
    let base = m.base();
    let built = m.built_height();
    let need = |h: usize| -> Result<(), String> {
        if h > built {
            Err(format!("height {h} not built (built up to {built})"))
        } else {
            Ok(())
        }
    };
    match selection {
        Selection::Conic => shapes.push(Shape::Conic),
        Selection::Sextuple => {
            for letter in 0..6u8 {
                push_point(
                    shapes,
                    base.sextuple().point(letter),
                    ((b'a' + letter) as char).to_string(),
                    SEXTUPLE,
                );
            }
        }
        Selection::Pascals { height } => {
            need(*height)?;
            for (lbl, line) in &m.layers()[*height].pascals {
                shapes.push(Shape::Line {
                    line: line.clone(),
                    label: text::pascal(lbl),
                    color: height_color(*height),
                });
            }
        }
        Selection::Kirkmans { height } => {
            need(*height)?;
            for (lbl, p) in &m.layers()[*height].kirkmans {
                push_point(shapes, p, text::kirkman(lbl), height_color(*height));
            }
        }
        Selection::Steiners => {
            for (t, p) in base.steiner_nodes() {
                push_point(shapes, p, text::steiner(t), FIXED);
            }
        }
        Selection::Cayleys => {
            for (t, line) in base.cayley_lines() {
                shapes.push(Shape::Line {
                    line: line.clone(),
                    label: text::cayley(t),
                    color: FIXED,
                });
            }
        }
        Selection::Pluckers => {
            for (q, line) in base.plucker_lines() {
                shapes.push(Shape::Line {
                    line: line.clone(),
                    label: text::plucker(q),
                    color: FIXED,
                });
            }
        }
        Selection::Salmons => {
            for (q, p) in base.salmon_nodes() {
                push_point(shapes, p, text::salmon(q), FIXED);
            }
        }
        Selection::Meetings => {
            for (l, p) in base.meeting_points() {
                push_point(shapes, p, text::ordinary_meeting(l), FIXED);
            }
        }
        Selection::Ladds => {
            for (l, line) in m.ladd_lines() {
                shapes.push(Shape::Line {
                    line: line.clone(),
                    label: text::ladd(l),
                    color: FIXED,
                });
            }
        }
        Selection::VeroneseNodes => {
            for (l, p) in m.veronese_nodes() {
                push_point(shapes, p, text::veronese_node(l), FIXED);
            }
        }
        Selection::KirkmanRange(lbl) => {
            let carrier = Triple::new(lbl.x, lbl.pair.lo(), lbl.pair.hi()).complement();
            shapes.push(Shape::Line {
                line: base.cayley_line(&carrier).clone(),
                label: text::cayley(&carrier),
                color: FIXED,
            });
            let spec = RangeSpec::Kirkman(*lbl);
            let depth = mysticum_core::max_depth(m, &spec);
            match mysticum_core::extract_range(m, &spec, depth).map_err(|e| e.to_string())? {
                mysticum_core::RangeElements::Points(pts) => {
                    push_point(shapes, &pts[0], text::salmon(&lbl.pair), FIXED);
                    push_point(
                        shapes,
                        &pts[1],
                        text::steiner(&Triple::new(lbl.x, lbl.pair.lo(), lbl.pair.hi())),
                        FIXED,
                    );
                    for (i, p) in pts.iter().skip(2).enumerate() {
                        push_point(
                            shapes,
                            p,
                            format!("{}({i})", text::kirkman(lbl)),
                            height_color(i),
                        );
                    }
                }
                _ => unreachable!("kirkman ranges are point ranges"),
            }
        }
        Selection::Element(parsed) => collect_element(m, parsed, shapes)?,
    }
    Ok(())
}

fn collect_element(
    m: &Multimysticum,
    parsed: &ParsedLabel,
    shapes: &mut Vec<Shape>,
) -> Result<(), String> {
    let base = m.base();
    match parsed {
        ParsedLabel::Pascal(l) => shapes.push(Shape::Line {
            line: base.pascal(l).clone(),
            label: text::pascal(l),
            color: height_color(0),
        }),
        ParsedLabel::Kirkman(l) => {
            push_point(shapes, base.kirkman(l), text::kirkman(l), height_color(0))
        }
        ParsedLabel::Steiner(t) => {
            push_point(shapes, base.steiner_node(t), text::steiner(t), FIXED)
        }
        ParsedLabel::Cayley(t) => shapes.push(Shape::Line {
            line: base.cayley_line(t).clone(),
            label: text::cayley(t),
            color: FIXED,
        }),
        ParsedLabel::Plucker(q) => shapes.push(Shape::Line {
            line: base.plucker_line(q).clone(),
            label: text::plucker(q),
            color: FIXED,
        }),
        ParsedLabel::Salmon(q) => push_point(shapes, base.salmon_node(q), text::salmon(q), FIXED),
        ParsedLabel::OrdinaryMeeting(l) => push_point(
            shapes,
            base.ordinary_meeting_point(l),
            text::ordinary_meeting(l),
            FIXED,
        ),
        ParsedLabel::Ladd(l) => shapes.push(Shape::Line {
            line: m.ladd_line(l).map_err(|e| e.to_string())?.clone(),
            label: text::ladd(l),
            color: FIXED,
        }),
        ParsedLabel::VeroneseNode(l) => push_point(
            shapes,
            m.veronese_node(l).map_err(|e| e.to_string())?,
            text::veronese_node(l),
            FIXED,
        ),
        ParsedLabel::InterLayer { label, lower } => {
            match m
                .linking_element(label, *lower)
                .map_err(|e| e.to_string())?
            {
                mysticum_core::InterElement::Line(line) => shapes.push(Shape::Line {
                    line: line.clone(),
                    label: text::inter_layer(label, *lower),
                    color: height_color(*lower),
                }),
                mysticum_core::InterElement::Point(p) => push_point(
                    shapes,
                    p,
                    text::inter_layer(label, *lower),
                    height_color(*lower),
                ),
            }
        }
    }
    Ok(())
}

/// World window: the bounding box of every finite point of the tower, padded.
/// Every constructed line passes through at least two of these points, so
/// each selected line crosses the window.
fn world_window(m: &Multimysticum) -> (f64, f64, f64, f64) {
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    let mut take = |p: &ProjectivePoint| {
        if let Some((x, y)) = affine(p) {
            xs.push(x);
            ys.push(y);
        }
    };
    for letter in 0..6u8 {
        take(m.base().sextuple().point(letter));
    }
    for layer in m.layers() {
        layer.kirkmans.values().for_each(&mut take);
    }
    m.base().steiner_nodes().values().for_each(&mut take);
    m.base().salmon_nodes().values().for_each(&mut take);
    m.base().meeting_points().values().for_each(&mut take);
    m.veronese_nodes().values().for_each(&mut take);
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for x in xs {
        x0 = x0.min(x);
        x1 = x1.max(x);
    }
    for y in ys {
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad_x = 0.08 * (x1 - x0).max(1.0);
    let pad_y = 0.08 * (y1 - y0).max(1.0);
    (x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y)
}

/// Intersections of the affine line `a x + b y + c = 0` with a rectangle.
fn clip_line(line: &ProjectiveLine, win: (f64, f64, f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let (x0, x1, y0, y1) = win;
    let [a, b, c] = line.coeffs_f64()?;
    if a == 0.0 && b == 0.0 {
        return None; // line at infinity
    }
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-9 * (1.0 + (x1 - x0).abs() + (y1 - y0).abs());
    if b.abs() > 0.0 {
        for x in [x0, x1] {
            let y = -(c + a * x) / b;
            if y >= y0 - eps && y <= y1 + eps {
                hits.push((x, y));
            }
        }
    }
    if a.abs() > 0.0 {
        for y in [y0, y1] {
            let x = -(c + b * y) / a;
            if x >= x0 - eps && x <= x1 + eps {
                hits.push((x, y));
            }
        }
    }
    hits.dedup_by(|p, q| (p.0 - q.0).abs() < eps && (p.1 - q.1).abs() < eps);
    if hits.len() < 2 {
        return None;
    }
    // The two extreme hits along the line direction (-b, a).
    let dir = (-b, a);
    let key = |p: &(f64, f64)| p.0 * dir.0 + p.1 * dir.1;
    let lo = hits
        .iter()
        .cloned()
        .min_by(|p, q| key(p).total_cmp(&key(q)))?;
    let hi = hits
        .iter()
        .cloned()
        .max_by(|p, q| key(p).total_cmp(&key(q)))?;
    if key(&lo) == key(&hi) {
        return None;
    }
    Some((lo, hi))
}

/// Renders the selected elements to an SVG 1.1 document.
pub fn render_svg(
    m: &Multimysticum,
    selections: &[Selection],
    width: u32,
    height: u32,
) -> Result<String, String> {
    let mut shapes = Vec::new();
    for sel in selections {
        collect(m, sel, &mut shapes)?;
    }
    if shapes.is_empty() {
        return Err("empty selection".into());
    }

    let win = world_window(m);
    let (wx0, wx1, wy0, wy1) = win;
    let margin = 20.0;
    let sx = (width as f64 - 2.0 * margin) / (wx1 - wx0);
    let sy = (height as f64 - 2.0 * margin) / (wy1 - wy0);
    let scale = sx.min(sy);
    let to_svg = |x: f64, y: f64| -> (f64, f64) {
        (
            margin + (x - wx0) * scale,
            height as f64 - margin - (y - wy0) * scale,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));

    for shape in &shapes {
        match shape {
            Shape::Conic => {
                // The conic x = y^2 drawn exactly as one quadratic Bezier over
                // the visible parameter interval.
                let (v0, v1) = (wy0, wy1);
                let p0 = to_svg(v0 * v0, v0);
                let p1 = to_svg(v1 * v1, v1);
                let ctrl = to_svg(v0 * v1, (v0 + v1) / 2.0);
                out.push_str(&format!(
                    "  <path d=\"M {:.3} {:.3} Q {:.3} {:.3} {:.3} {:.3}\" fill=\"none\" stroke=\"{CONIC}\" stroke-width=\"1.5\"/>\n",
                    p0.0, p0.1, ctrl.0, ctrl.1, p1.0, p1.1
                ));
            }
            Shape::Line { line, label, color } => {
                if let Some((p, q)) = clip_line(line, win) {
                    let (x1s, y1s) = to_svg(p.0, p.1);
                    let (x2s, y2s) = to_svg(q.0, q.1);
                    out.push_str(&format!(
                        "  <line x1=\"{x1s:.3}\" y1=\"{y1s:.3}\" x2=\"{x2s:.3}\" y2=\"{y2s:.3}\" stroke=\"{color}\" stroke-width=\"1\"/>\n"
                    ));
                    let (mx, my) = ((x1s + x2s) / 2.0, (y1s + y2s) / 2.0);
                    out.push_str(&format!(
                        "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"9\" fill=\"{color}\">{}</text>\n",
                        mx + 3.0,
                        my - 3.0,
                        xml_escape(label)
                    ));
                }
            }
            Shape::Point { x, y, label, color } => {
                let (cx, cy) = to_svg(*x, *y);
                out.push_str(&format!(
                    "  <circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"3\" fill=\"{color}\"/>\n"
                ));
                out.push_str(&format!(
                    "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"9\" fill=\"{color}\">{}</text>\n",
                    cx + 4.0,
                    cy - 4.0,
                    xml_escape(label)
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
