//! Lossless JSON mirror of a built tower.
//!
//! Elements are keyed by their label text and coordinates are written as
//! exact decimal-free strings, so a serialized tower reloads to structurally
//! identical elements. Loading is deliberately permissive: coordinates are
//! re-canonicalized but no incidence theorem is re-checked, which lets the
//! verifier locate a perturbed element in a tampered file instead of refusing
//! to read it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::base::{BaseMysticum, Sextuple};
use crate::error::{Error, Result};
use crate::labels::{parse_label, text, OrderedPairPair, ParsedLabel};
use crate::mutation::{InterElements, InterLayer, Layer, Multimysticum};
use crate::projective::{ProjectiveLine, ProjectivePoint};
use crate::scalar::{parse_rational, ExactScalar, ExtendedScalar};

type Coords = [String; 3];

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FixedPartDoc {
    pub steiner_nodes: BTreeMap<String, Coords>,
    pub cayley_lines: BTreeMap<String, Coords>,
    pub plucker_lines: BTreeMap<String, Coords>,
    pub salmon_nodes: BTreeMap<String, Coords>,
    pub meeting_points: BTreeMap<String, Coords>,
    pub ladd_lines: BTreeMap<String, Coords>,
    pub veronese_nodes: BTreeMap<String, Coords>,
    pub plucker_ladd_nodes: BTreeMap<String, Coords>,
    pub salmon_veronese_lines: BTreeMap<String, Coords>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LayerDoc {
    pub height: usize,
    pub kirkmans: BTreeMap<String, Coords>,
    pub pascals: BTreeMap<String, Coords>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct InterLayerDoc {
    pub lower: usize,
    /// `"linking"` between even-odd heights, `"meeting"` between odd-even.
    pub kind: String,
    pub elements: BTreeMap<String, Coords>,
}

/// The serialized form of a [`Multimysticum`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct MultimysticumDoc {
    pub params: Vec<String>,
    pub height: usize,
    pub fixed_part: FixedPartDoc,
    pub layers: Vec<LayerDoc>,
    pub interlayers: Vec<InterLayerDoc>,
}

fn coords_of_point(p: &ProjectivePoint) -> Coords {
    let c = p.coords();
    [c[0].to_string(), c[1].to_string(), c[2].to_string()]
}

fn coords_of_line(l: &ProjectiveLine) -> Coords {
    let c = l.coeffs();
    [c[0].to_string(), c[1].to_string(), c[2].to_string()]
}

fn parse_triple(raw: &Coords) -> Result<[ExactScalar; 3]> {
    Ok([
        parse_rational(&raw[0])?,
        parse_rational(&raw[1])?,
        parse_rational(&raw[2])?,
    ])
}

fn point_of_coords(raw: &Coords) -> Result<ProjectivePoint> {
    ProjectivePoint::new(&parse_triple(raw)?)
}

fn line_of_coords(raw: &Coords) -> Result<ProjectiveLine> {
    ProjectiveLine::new(&parse_triple(raw)?)
}

/// Serializes a built tower.
pub fn to_doc(m: &Multimysticum) -> MultimysticumDoc {
    let base = m.base();
    let fixed_part = FixedPartDoc {
        steiner_nodes: base
            .steiner_nodes()
            .iter()
            .map(|(t, p)| (text::steiner(t), coords_of_point(p)))
            .collect(),
        cayley_lines: base
            .cayley_lines()
            .iter()
            .map(|(t, l)| (text::cayley(t), coords_of_line(l)))
            .collect(),
        plucker_lines: base
            .plucker_lines()
            .iter()
            .map(|(p, l)| (text::plucker(p), coords_of_line(l)))
            .collect(),
        salmon_nodes: base
            .salmon_nodes()
            .iter()
            .map(|(q, p)| (text::salmon(q), coords_of_point(p)))
            .collect(),
        meeting_points: base
            .meeting_points()
            .iter()
            .map(|(l, p)| (text::ordinary_meeting(l), coords_of_point(p)))
            .collect(),
        ladd_lines: m
            .ladd_lines()
            .iter()
            .map(|(l, x)| (text::ladd(l), coords_of_line(x)))
            .collect(),
        veronese_nodes: m
            .veronese_nodes()
            .iter()
            .map(|(l, p)| (text::veronese_node(l), coords_of_point(p)))
            .collect(),
        plucker_ladd_nodes: m
            .plucker_ladd_nodes()
            .iter()
            .map(|(l, p)| (text::ordered_pairs(l), coords_of_point(p)))
            .collect(),
        salmon_veronese_lines: m
            .salmon_veronese_lines()
            .iter()
            .map(|(l, x)| (text::ordered_pairs(l), coords_of_line(x)))
            .collect(),
    };
    let layers = m
        .layers()
        .iter()
        .map(|layer| LayerDoc {
            height: layer.height,
            kirkmans: layer
                .kirkmans
                .iter()
                .map(|(l, p)| (text::kirkman(l), coords_of_point(p)))
                .collect(),
            pascals: layer
                .pascals
                .iter()
                .map(|(l, x)| (text::pascal(l), coords_of_line(x)))
                .collect(),
        })
        .collect();
    let interlayers = m
        .inter_layers()
        .iter()
        .map(|inter| match &inter.elements {
            InterElements::Linking(map) => InterLayerDoc {
                lower: inter.lower,
                kind: "linking".into(),
                elements: map
                    .iter()
                    .map(|(l, x)| (text::inter_layer(l, inter.lower), coords_of_line(x)))
                    .collect(),
            },
            InterElements::Meeting(map) => InterLayerDoc {
                lower: inter.lower,
                kind: "meeting".into(),
                elements: map
                    .iter()
                    .map(|(l, p)| (text::inter_layer(l, inter.lower), coords_of_point(p)))
                    .collect(),
            },
        })
        .collect();
    MultimysticumDoc {
        params: m
            .base()
            .sextuple()
            .params()
            .iter()
            .map(|t| t.to_string())
            .collect(),
        height: m.built_height(),
        fixed_part,
        layers,
        interlayers,
    }
}

fn bad_doc(what: &'static str, input: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.into(),
    }
}

fn collect_points<K: Ord>(
    entries: &BTreeMap<String, Coords>,
    expected: usize,
    family: &'static str,
    key: impl Fn(ParsedLabel) -> Option<K>,
) -> Result<BTreeMap<K, ProjectivePoint>> {
    let mut out = BTreeMap::new();
    for (label, raw) in entries {
        let parsed = parse_label(label)?;
        let k = key(parsed).ok_or_else(|| bad_doc(family, label.clone()))?;
        out.insert(k, point_of_coords(raw)?);
    }
    if out.len() != expected {
        return Err(bad_doc(
            family,
            format!("{} of {expected} labels present", out.len()),
        ));
    }
    Ok(out)
}

fn collect_lines<K: Ord>(
    entries: &BTreeMap<String, Coords>,
    expected: usize,
    family: &'static str,
    key: impl Fn(ParsedLabel) -> Option<K>,
) -> Result<BTreeMap<K, ProjectiveLine>> {
    let mut out = BTreeMap::new();
    for (label, raw) in entries {
        let parsed = parse_label(label)?;
        let k = key(parsed).ok_or_else(|| bad_doc(family, label.clone()))?;
        out.insert(k, line_of_coords(raw)?);
    }
    if out.len() != expected {
        return Err(bad_doc(
            family,
            format!("{} of {expected} labels present", out.len()),
        ));
    }
    Ok(out)
}

/// Parses the ordered `xy;zw` keys used by Plücker–Ladd nodes and
/// Salmon–Veronese lines.
fn parse_ordered_pairs(label: &str) -> Result<OrderedPairPair> {
    let rewritten = label.replace(';', "(1).") + "(0)";
    match parse_label(&rewritten)? {
        ParsedLabel::InterLayer { label, .. } => Ok(label),
        _ => Err(bad_doc("ordered pair label", label)),
    }
}

/// Rebuilds a tower from its serialized form.
pub fn from_doc(doc: &MultimysticumDoc) -> Result<Multimysticum> {
    if doc.params.len() != 6 {
        return Err(bad_doc(
            "params",
            format!("{} of 6 present", doc.params.len()),
        ));
    }
    let mut params: Vec<ExtendedScalar> = Vec::with_capacity(6);
    for p in &doc.params {
        params.push(p.parse()?);
    }
    let sextuple = Sextuple::new(params.try_into().expect("length checked"))?;

    if doc.layers.len() != doc.height + 1 || doc.interlayers.len() != doc.height {
        return Err(bad_doc(
            "layers",
            "layer and inter-layer counts must match the height",
        ));
    }
    let layer0 = &doc.layers[0];

    let base = BaseMysticum::from_parts(
        sextuple,
        collect_lines(&layer0.pascals, 60, "pascal", |p| match p {
            ParsedLabel::Pascal(l) => Some(l),
            _ => None,
        })?,
        collect_points(&layer0.kirkmans, 60, "kirkman", |p| match p {
            ParsedLabel::Kirkman(l) => Some(l),
            _ => None,
        })?,
        collect_points(&doc.fixed_part.steiner_nodes, 20, "steiner", |p| match p {
            ParsedLabel::Steiner(t) => Some(t),
            _ => None,
        })?,
        collect_lines(&doc.fixed_part.cayley_lines, 20, "cayley", |p| match p {
            ParsedLabel::Cayley(t) => Some(t),
            _ => None,
        })?,
        collect_lines(&doc.fixed_part.plucker_lines, 15, "plucker", |p| match p {
            ParsedLabel::Plucker(q) => Some(q),
            _ => None,
        })?,
        collect_points(&doc.fixed_part.salmon_nodes, 15, "salmon", |p| match p {
            ParsedLabel::Salmon(q) => Some(q),
            _ => None,
        })?,
        collect_points(&doc.fixed_part.meeting_points, 45, "meeting", |p| match p {
            ParsedLabel::OrdinaryMeeting(l) => Some(l),
            _ => None,
        })?,
    );

    let mut layers = Vec::with_capacity(doc.layers.len());
    for (height, layer) in doc.layers.iter().enumerate() {
        if layer.height != height {
            return Err(bad_doc(
                "layers",
                format!("height {} out of order", layer.height),
            ));
        }
        layers.push(Layer {
            height,
            kirkmans: collect_points(&layer.kirkmans, 60, "kirkman", |p| match p {
                ParsedLabel::Kirkman(l) => Some(l),
                _ => None,
            })?,
            pascals: collect_lines(&layer.pascals, 60, "pascal", |p| match p {
                ParsedLabel::Pascal(l) => Some(l),
                _ => None,
            })?,
        });
    }

    let mut inters = Vec::with_capacity(doc.interlayers.len());
    for (lower, inter) in doc.interlayers.iter().enumerate() {
        if inter.lower != lower {
            return Err(bad_doc(
                "interlayers",
                format!("lower height {} out of order", inter.lower),
            ));
        }
        let expect_kind = if lower % 2 == 0 { "linking" } else { "meeting" };
        if inter.kind != expect_kind {
            return Err(bad_doc(
                "interlayers",
                format!("kind {} at lower {lower}", inter.kind),
            ));
        }
        let key = |p: ParsedLabel| match p {
            ParsedLabel::InterLayer { label, lower: l } if l == lower => Some(label),
            _ => None,
        };
        let elements = if lower % 2 == 0 {
            InterElements::Linking(collect_lines(&inter.elements, 90, "linking", key)?)
        } else {
            InterElements::Meeting(collect_points(&inter.elements, 90, "meeting", key)?)
        };
        inters.push(InterLayer { lower, elements });
    }

    let expect_linking_objects = doc.height >= 1;
    let expect_ladd_objects = doc.height >= 2;
    let check = |present: usize, expected: usize, family: &'static str| -> Result<()> {
        if present != expected {
            return Err(bad_doc(
                family,
                format!("{present} of {expected} labels present"),
            ));
        }
        Ok(())
    };
    let ladd_lines = collect_lines(
        &doc.fixed_part.ladd_lines,
        if expect_ladd_objects { 45 } else { 0 },
        "ladd",
        |p| match p {
            ParsedLabel::Ladd(l) => Some(l),
            _ => None,
        },
    )?;
    let veronese_nodes = collect_points(
        &doc.fixed_part.veronese_nodes,
        if expect_linking_objects { 45 } else { 0 },
        "veronese node",
        |p| match p {
            ParsedLabel::VeroneseNode(l) => Some(l),
            _ => None,
        },
    )?;
    let mut plucker_ladd_nodes = BTreeMap::new();
    for (label, raw) in &doc.fixed_part.plucker_ladd_nodes {
        plucker_ladd_nodes.insert(parse_ordered_pairs(label)?, point_of_coords(raw)?);
    }
    check(
        plucker_ladd_nodes.len(),
        if expect_ladd_objects { 90 } else { 0 },
        "plucker-ladd",
    )?;
    let mut salmon_veronese_lines = BTreeMap::new();
    for (label, raw) in &doc.fixed_part.salmon_veronese_lines {
        salmon_veronese_lines.insert(parse_ordered_pairs(label)?, line_of_coords(raw)?);
    }
    check(
        salmon_veronese_lines.len(),
        if expect_linking_objects { 90 } else { 0 },
        "salmon-veronese",
    )?;

    Ok(Multimysticum::from_parts(
        base,
        layers,
        inters,
        ladd_lines,
        veronese_nodes,
        plucker_ladd_nodes,
        salmon_veronese_lines,
    ))
}

/// Convenience: serialize to a pretty JSON string.
pub fn to_json(m: &Multimysticum) -> String {
    serde_json::to_string_pretty(&to_doc(m)).expect("tower serializes")
}

/// Convenience: parse a JSON string produced by [`to_json`].
pub fn from_json(s: &str) -> Result<Multimysticum> {
    let doc: MultimysticumDoc =
        serde_json::from_str(s).map_err(|e| bad_doc("multimysticum json", e.to_string()))?;
    from_doc(&doc)
}

/// Counts per family and height, used in report documents.
pub fn counts(m: &Multimysticum) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    out.insert("pascalsPerLayer".into(), 60);
    out.insert("kirkmansPerLayer".into(), 60);
    out.insert("layers".into(), m.layers().len());
    out.insert("interLayers".into(), m.inter_layers().len());
    out.insert("interLayerElements".into(), 90 * m.inter_layers().len());
    out.insert("steinerNodes".into(), m.base().steiner_nodes().len());
    out.insert("cayleyLines".into(), m.base().cayley_lines().len());
    out.insert("pluckerLines".into(), m.base().plucker_lines().len());
    out.insert("salmonNodes".into(), m.base().salmon_nodes().len());
    out.insert(
        "ordinaryMeetingPoints".into(),
        m.base().meeting_points().len(),
    );
    out.insert("laddLines".into(), m.ladd_lines().len());
    out.insert("veroneseNodes".into(), m.veronese_nodes().len());
    out.insert("pluckerLaddNodes".into(), m.plucker_ladd_nodes().len());
    out.insert(
        "salmonVeroneseLines".into(),
        m.salmon_veronese_lines().len(),
    );
    out
}
