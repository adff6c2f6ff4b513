//! The mutation engine: from the layer of 60 Kirkman nodes and 60 Pascal
//! lines at height `i`, build the layer at height `i + 1`.
//!
//! At even heights the passage goes through 90 *linking lines* (joins of
//! Kirkman pairs); at odd heights through 90 *higher meeting points* (meets
//! of Pascal pairs). The two ordered labels `xy(i+1).zw(i)` and
//! `zw(i+1).xy(i)` name different elements, unlike the unordered ordinary
//! meeting points of the base structure.
//!
//! The height-independent linking objects live here as well: Ladd lines,
//! Veronese nodes, Plücker–Ladd nodes and Salmon–Veronese lines.

use std::collections::BTreeMap;

use crate::base::{build_base, BaseMysticum, Sextuple};
use crate::error::{Error, Result};
use crate::labels::{
    all_kirkman_labels, all_ordered_pair_pairs, all_pair_pairs, all_pascal_labels, others, text,
    KirkmanLabel, OrderedPairPair, Pair, PairPair, PascalLabel,
};
use crate::projective::{incident, join, meet, ProjectiveLine, ProjectivePoint};

/// The mutable part at one height: 60 Kirkmans and 60 Pascals.
#[derive(Clone, Debug)]
pub struct Layer {
    pub height: usize,
    pub kirkmans: BTreeMap<KirkmanLabel, ProjectivePoint>,
    pub pascals: BTreeMap<PascalLabel, ProjectiveLine>,
}

/// The 90 elements between heights `lower` and `lower + 1`: lines when
/// `lower` is even, points when `lower` is odd.
#[derive(Clone, Debug)]
pub enum InterElements {
    Linking(BTreeMap<OrderedPairPair, ProjectiveLine>),
    Meeting(BTreeMap<OrderedPairPair, ProjectivePoint>),
}

#[derive(Clone, Debug)]
pub struct InterLayer {
    pub lower: usize,
    pub elements: InterElements,
}

/// A borrowed inter-layer element of either kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterElement<'a> {
    Line(&'a ProjectiveLine),
    Point(&'a ProjectivePoint),
}

/// The base structure together with the tower of layers built so far and the
/// height-independent linking objects.
#[derive(Clone, Debug)]
pub struct Multimysticum {
    base: BaseMysticum,
    layers: Vec<Layer>,
    inters: Vec<InterLayer>,
    ladd_lines: BTreeMap<PairPair, ProjectiveLine>,
    veronese_nodes: BTreeMap<PairPair, ProjectivePoint>,
    plucker_ladd_nodes: BTreeMap<OrderedPairPair, ProjectivePoint>,
    salmon_veronese_lines: BTreeMap<OrderedPairPair, ProjectiveLine>,
}

fn mutation_err(step: impl Into<String>) -> Error {
    Error::MutationDegeneracy { step: step.into() }
}

/// The pairs of the complement of `{x} + pair`, each paired with `x`; the
/// fixed defining order for the `x;yz` coincidence pattern.
fn complement_pairs(x: u8, pair: &Pair) -> [Pair; 3] {
    let rest = others(&[x, pair.lo(), pair.hi()]);
    [
        Pair::new(rest[0], rest[1]),
        Pair::new(rest[0], rest[2]),
        Pair::new(rest[1], rest[2]),
    ]
}

impl Multimysticum {
    /// Reassembles a tower from parsed parts; used by deserialization.
    pub(crate) fn from_parts(
        base: BaseMysticum,
        layers: Vec<Layer>,
        inters: Vec<InterLayer>,
        ladd_lines: BTreeMap<PairPair, ProjectiveLine>,
        veronese_nodes: BTreeMap<PairPair, ProjectivePoint>,
        plucker_ladd_nodes: BTreeMap<OrderedPairPair, ProjectivePoint>,
        salmon_veronese_lines: BTreeMap<OrderedPairPair, ProjectiveLine>,
    ) -> Self {
        Multimysticum {
            base,
            layers,
            inters,
            ladd_lines,
            veronese_nodes,
            plucker_ladd_nodes,
            salmon_veronese_lines,
        }
    }

    /// Wraps a built base structure as the height-0 tower.
    pub fn from_base(base: BaseMysticum) -> Self {
        let layer0 = Layer {
            height: 0,
            kirkmans: base.kirkmans().clone(),
            pascals: base.pascals().clone(),
        };
        Multimysticum {
            base,
            layers: vec![layer0],
            inters: Vec::new(),
            ladd_lines: BTreeMap::new(),
            veronese_nodes: BTreeMap::new(),
            plucker_ladd_nodes: BTreeMap::new(),
            salmon_veronese_lines: BTreeMap::new(),
        }
    }

    /// Builds the base structure and elevates it to `height`.
    pub fn build(s: &Sextuple, height: usize) -> Result<Self> {
        let mut m = Multimysticum::from_base(build_base(s)?);
        m.elevate_to(height)?;
        Ok(m)
    }

    pub fn base(&self) -> &BaseMysticum {
        &self.base
    }

    pub fn built_height(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn inter_layers(&self) -> &[InterLayer] {
        &self.inters
    }

    pub fn elevate_to(&mut self, height: usize) -> Result<()> {
        while self.built_height() < height {
            self.elevate()?;
        }
        Ok(())
    }

    /// Extends the tower by one layer, building the inter-layer system in
    /// between. Every three-fold coincidence is computed from its first two
    /// defining elements and verified on the third.
    pub fn elevate(&mut self) -> Result<()> {
        let i = self.built_height();
        let (inter, layer) = if i % 2 == 0 {
            self.elevate_even(i)?
        } else {
            self.elevate_odd(i)?
        };
        self.inters.push(inter);
        self.layers.push(layer);
        if i == 0 {
            self.build_veronese_objects()?;
        }
        if i == 1 {
            self.build_ladd_objects()?;
        }
        Ok(())
    }

    /// Even `i`: Kirkmans at height `i` produce linking lines, which meet in
    /// the Kirkmans at height `i + 1`; the new Pascals then join new Kirkman
    /// triples.
    fn elevate_even(&self, i: usize) -> Result<(InterLayer, Layer)> {
        let current = &self.layers[i];
        let mut linking = BTreeMap::new();
        for lbl in all_ordered_pair_pairs() {
            let a = &current.kirkmans[&KirkmanLabel {
                x: lbl.lower.lo(),
                pair: lbl.upper,
            }];
            let b = &current.kirkmans[&KirkmanLabel {
                x: lbl.lower.hi(),
                pair: lbl.upper,
            }];
            let line = join(a, b).map_err(|_| {
                mutation_err(format!(
                    "defining Kirkmans of linking line {} coincide",
                    text::inter_layer(&lbl, i)
                ))
            })?;
            linking.insert(lbl, line);
        }

        let mut kirkmans = BTreeMap::new();
        for lbl in all_kirkman_labels() {
            let rest = others(&[lbl.x, lbl.pair.lo(), lbl.pair.hi()]);
            let defs: Vec<&ProjectiveLine> = rest
                .iter()
                .map(|&t| &linking[&OrderedPairPair::new(Pair::new(lbl.x, t), lbl.pair)])
                .collect();
            let node = meet(defs[0], defs[1]).map_err(|_| {
                mutation_err(format!(
                    "linking lines defining {} at height {} coincide",
                    text::kirkman(&lbl),
                    i + 1
                ))
            })?;
            if !incident(&node, defs[2]) {
                return Err(mutation_err(format!(
                    "linking lines of {} at height {} are not concurrent",
                    text::kirkman(&lbl),
                    i + 1
                )));
            }
            kirkmans.insert(lbl, node);
        }

        let pascals = pascals_from_kirkmans(&kirkmans, i + 1)?;
        Ok((
            InterLayer {
                lower: i,
                elements: InterElements::Linking(linking),
            },
            Layer {
                height: i + 1,
                kirkmans,
                pascals,
            },
        ))
    }

    /// Odd `i`: the reciprocal procedure. Pascals at height `i` intersect in
    /// meeting points, which line up in the Pascals at height `i + 1`; the
    /// new Kirkmans are then meets of new Pascal triples.
    fn elevate_odd(&self, i: usize) -> Result<(InterLayer, Layer)> {
        let current = &self.layers[i];
        let mut meetings = BTreeMap::new();
        for lbl in all_ordered_pair_pairs() {
            let a = &current.pascals[&PascalLabel {
                x: lbl.lower.lo(),
                pair: lbl.upper,
            }];
            let b = &current.pascals[&PascalLabel {
                x: lbl.lower.hi(),
                pair: lbl.upper,
            }];
            let point = meet(a, b).map_err(|_| {
                mutation_err(format!(
                    "defining Pascals of meeting point {} coincide",
                    text::inter_layer(&lbl, i)
                ))
            })?;
            meetings.insert(lbl, point);
        }

        let mut pascals = BTreeMap::new();
        for lbl in all_pascal_labels() {
            let rest = others(&[lbl.x, lbl.pair.lo(), lbl.pair.hi()]);
            let defs: Vec<&ProjectivePoint> = rest
                .iter()
                .map(|&t| &meetings[&OrderedPairPair::new(Pair::new(lbl.x, t), lbl.pair)])
                .collect();
            let line = join(defs[0], defs[1]).map_err(|_| {
                mutation_err(format!(
                    "meeting points defining {} at height {} coincide",
                    text::pascal(&lbl),
                    i + 1
                ))
            })?;
            if !incident(defs[2], &line) {
                return Err(mutation_err(format!(
                    "meeting points of {} at height {} are not collinear",
                    text::pascal(&lbl),
                    i + 1
                )));
            }
            pascals.insert(lbl, line);
        }

        let mut kirkmans = BTreeMap::new();
        for lbl in all_kirkman_labels() {
            let defs: Vec<&ProjectiveLine> = complement_pairs(lbl.x, &lbl.pair)
                .iter()
                .map(|pair| {
                    &pascals[&PascalLabel {
                        x: lbl.x,
                        pair: *pair,
                    }]
                })
                .collect();
            let node = meet(defs[0], defs[1]).map_err(|_| {
                mutation_err(format!(
                    "defining Pascals of {} at height {} coincide",
                    text::kirkman(&lbl),
                    i + 1
                ))
            })?;
            if !incident(&node, defs[2]) {
                return Err(mutation_err(format!(
                    "Pascals of {} at height {} are not concurrent",
                    text::kirkman(&lbl),
                    i + 1
                )));
            }
            kirkmans.insert(lbl, node);
        }

        Ok((
            InterLayer {
                lower: i,
                elements: InterElements::Meeting(meetings),
            },
            Layer {
                height: i + 1,
                kirkmans,
                pascals,
            },
        ))
    }

    /// Veronese node `N xy.zw`: meet of the two swapped linking lines of the
    /// lowest even inter-layer; Salmon–Veronese line `xy;zw`: join of the
    /// Salmon node of the second half with the Veronese node.
    fn build_veronese_objects(&mut self) -> Result<()> {
        for pp in all_pair_pairs() {
            let node = self.veronese_node_at(&pp, 0)?;
            self.veronese_nodes.insert(pp, node);
        }
        for lbl in all_ordered_pair_pairs() {
            let node = &self.veronese_nodes[&lbl.unordered()];
            let salmon = self.base.salmon_node(&lbl.lower);
            let line = join(salmon, node).map_err(|_| {
                mutation_err(format!(
                    "Salmon node N {:?} coincides with Veronese node {}",
                    lbl.lower,
                    text::veronese_node(&lbl.unordered())
                ))
            })?;
            self.salmon_veronese_lines.insert(lbl, line);
        }
        Ok(())
    }

    /// Ladd line `L xy.zw`: join of the two swapped meeting points of the
    /// lowest odd inter-layer; Plücker–Ladd node `xy;zw`: meet of the Plücker
    /// line of the second half with the Ladd line.
    fn build_ladd_objects(&mut self) -> Result<()> {
        for pp in all_pair_pairs() {
            let line = self.ladd_line_at(&pp, 1)?;
            self.ladd_lines.insert(pp, line);
        }
        for lbl in all_ordered_pair_pairs() {
            let ladd = &self.ladd_lines[&lbl.unordered()];
            let plucker = self.base.plucker_line(&lbl.lower);
            let node = meet(plucker, ladd).map_err(|_| {
                mutation_err(format!(
                    "Plücker line L {:?} coincides with Ladd line {}",
                    lbl.lower,
                    text::ladd(&lbl.unordered())
                ))
            })?;
            self.plucker_ladd_nodes.insert(lbl, node);
        }
        Ok(())
    }

    pub fn kirkman_at(&self, lbl: &KirkmanLabel, height: usize) -> Result<&ProjectivePoint> {
        let layer = self.layers.get(height).ok_or(Error::HeightNotBuilt {
            needed: height,
            built: self.built_height(),
        })?;
        Ok(&layer.kirkmans[lbl])
    }

    pub fn pascal_at(&self, lbl: &PascalLabel, height: usize) -> Result<&ProjectiveLine> {
        let layer = self.layers.get(height).ok_or(Error::HeightNotBuilt {
            needed: height,
            built: self.built_height(),
        })?;
        Ok(&layer.pascals[lbl])
    }

    /// The inter-layer element `xy(i+1).zw(i)`: a linking line for even `i`,
    /// a higher meeting point for odd `i`. Lookup is order-sensitive:
    /// `xy(i+1).zw(i)` and `zw(i+1).xy(i)` are different elements.
    pub fn linking_element(&self, lbl: &OrderedPairPair, lower: usize) -> Result<InterElement<'_>> {
        let inter = self.inters.get(lower).ok_or(Error::HeightNotBuilt {
            needed: lower + 1,
            built: self.built_height(),
        })?;
        Ok(match &inter.elements {
            InterElements::Linking(map) => InterElement::Line(&map[lbl]),
            InterElements::Meeting(map) => InterElement::Point(&map[lbl]),
        })
    }

    /// The linking line `xy(i+1).zw(i)` for even `i`.
    pub fn linking_line(&self, lbl: &OrderedPairPair, lower: usize) -> Result<&ProjectiveLine> {
        match self.linking_element(lbl, lower)? {
            InterElement::Line(l) => Ok(l),
            InterElement::Point(_) => Err(Error::ParityMismatch { height: lower }),
        }
    }

    /// The higher meeting point `xy(i+1).zw(i)` for odd `i`.
    pub fn higher_meeting_point(
        &self,
        lbl: &OrderedPairPair,
        lower: usize,
    ) -> Result<&ProjectivePoint> {
        match self.linking_element(lbl, lower)? {
            InterElement::Point(p) => Ok(p),
            InterElement::Line(_) => Err(Error::ParityMismatch { height: lower }),
        }
    }

    /// Recomputes the Ladd line from the meeting points of the odd
    /// inter-layer `lower`; the result is independent of the choice.
    pub fn ladd_line_at(&self, pp: &PairPair, lower: usize) -> Result<ProjectiveLine> {
        if lower % 2 == 0 {
            return Err(Error::ParityMismatch { height: lower });
        }
        let fwd = OrderedPairPair::new(pp.first(), pp.second());
        let p = self.higher_meeting_point(&fwd, lower)?;
        let q = self.higher_meeting_point(&fwd.swapped(), lower)?;
        join(p, q).map_err(|_| {
            mutation_err(format!(
                "swapped meeting points of Ladd line {} coincide",
                text::ladd(pp)
            ))
        })
    }

    /// Recomputes the Veronese node from the linking lines of the even
    /// inter-layer `lower`; the result is independent of the choice.
    pub fn veronese_node_at(&self, pp: &PairPair, lower: usize) -> Result<ProjectivePoint> {
        if lower % 2 == 1 {
            return Err(Error::ParityMismatch { height: lower });
        }
        let fwd = OrderedPairPair::new(pp.first(), pp.second());
        let l = self.linking_line(&fwd, lower)?;
        let m = self.linking_line(&fwd.swapped(), lower)?;
        meet(l, m).map_err(|_| {
            mutation_err(format!(
                "swapped linking lines of Veronese node {} coincide",
                text::veronese_node(pp)
            ))
        })
    }

    /// The stored Ladd line; accepts either half-order of the label.
    pub fn ladd_line(&self, pp: &PairPair) -> Result<&ProjectiveLine> {
        self.ladd_lines.get(pp).ok_or(Error::HeightNotBuilt {
            needed: 2,
            built: self.built_height(),
        })
    }

    /// The stored Veronese node; accepts either half-order of the label.
    pub fn veronese_node(&self, pp: &PairPair) -> Result<&ProjectivePoint> {
        self.veronese_nodes.get(pp).ok_or(Error::HeightNotBuilt {
            needed: 1,
            built: self.built_height(),
        })
    }

    /// The Plücker–Ladd node `xy;zw`: the meet of the Plücker line `L zw`
    /// with the Ladd line `L xy.zw`. Order-sensitive.
    pub fn plucker_ladd_node(&self, lbl: &OrderedPairPair) -> Result<&ProjectivePoint> {
        self.plucker_ladd_nodes
            .get(lbl)
            .ok_or(Error::HeightNotBuilt {
                needed: 2,
                built: self.built_height(),
            })
    }

    /// The Salmon–Veronese line `xy;zw`: the join of the Salmon node `N zw`
    /// with the Veronese node `N xy.zw`. Order-sensitive.
    pub fn salmon_veronese_line(&self, lbl: &OrderedPairPair) -> Result<&ProjectiveLine> {
        self.salmon_veronese_lines
            .get(lbl)
            .ok_or(Error::HeightNotBuilt {
                needed: 1,
                built: self.built_height(),
            })
    }

    pub fn ladd_lines(&self) -> &BTreeMap<PairPair, ProjectiveLine> {
        &self.ladd_lines
    }

    pub fn veronese_nodes(&self) -> &BTreeMap<PairPair, ProjectivePoint> {
        &self.veronese_nodes
    }

    pub fn plucker_ladd_nodes(&self) -> &BTreeMap<OrderedPairPair, ProjectivePoint> {
        &self.plucker_ladd_nodes
    }

    pub fn salmon_veronese_lines(&self) -> &BTreeMap<OrderedPairPair, ProjectiveLine> {
        &self.salmon_veronese_lines
    }
}

fn pascals_from_kirkmans(
    kirkmans: &BTreeMap<KirkmanLabel, ProjectivePoint>,
    height: usize,
) -> Result<BTreeMap<PascalLabel, ProjectiveLine>> {
    let mut pascals = BTreeMap::new();
    for lbl in all_pascal_labels() {
        let defs: Vec<&ProjectivePoint> = complement_pairs(lbl.x, &lbl.pair)
            .iter()
            .map(|pair| {
                &kirkmans[&KirkmanLabel {
                    x: lbl.x,
                    pair: *pair,
                }]
            })
            .collect();
        let line = join(defs[0], defs[1]).map_err(|_| {
            mutation_err(format!(
                "defining Kirkmans of {} at height {height} coincide",
                text::pascal(&lbl)
            ))
        })?;
        if !incident(defs[2], &line) {
            return Err(mutation_err(format!(
                "Kirkmans of {} at height {height} are not collinear",
                text::pascal(&lbl)
            )));
        }
        pascals.insert(lbl, line);
    }
    Ok(pascals)
}
