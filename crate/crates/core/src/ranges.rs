//! The Veronese sequence, the four range families, and the verifier that
//! certifies all 300 ranges against the sequence by exact comparison.
//!
//! A *range* is an ordered list of collinear points or concurrent lines. Its
//! first three members fix the projective coordinate sending them to
//! `inf, 0, 1`; the verdict compares every later coordinate against the
//! sequence term of the same index, exactly.

use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::labels::{
    all_kirkman_labels, all_ordered_pair_pairs, all_pascal_labels, text, KirkmanLabel,
    OrderedPairPair, Pair, PairPair, PascalLabel, Triple,
};
use crate::mutation::Multimysticum;
use crate::projective::{
    cross_ratio_lines, cross_ratio_points, incident, join, ProjectiveLine, ProjectivePoint,
};
use crate::scalar::{rat, ExactScalar, ExtendedScalar};

/// The first `n` terms of the sequence `inf, 0, a0, a1, a2, ...` where
/// `a0 = 1`, `a_i + a_{i+1} = 2` for odd `i` and `1/a_i + 1/a_{i+1} = 3` for
/// even `i`. Interlaced, the `a_i` are the alternate continued-fraction
/// convergents of `1 + 1/sqrt(3)` (even indices) and `1 - 1/sqrt(3)` (odd
/// indices).
pub fn veronese_sequence(n: usize) -> Vec<ExtendedScalar> {
    let mut terms = Vec::with_capacity(n);
    if n >= 1 {
        terms.push(ExtendedScalar::Infinity);
    }
    if n >= 2 {
        terms.push(ExtendedScalar::zero());
    }
    let mut alpha = ExactScalar::one();
    let mut index = 0usize;
    while terms.len() < n {
        terms.push(ExtendedScalar::Finite(alpha.clone()));
        alpha = if index % 2 == 1 {
            rat(2) - alpha
        } else {
            (rat(3) - alpha.recip()).recip()
        };
        index += 1;
    }
    terms
}

/// One of the 300 ranges: 60 Kirkman, 60 Pascal, 90 meeting, 90 linking.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum RangeSpec {
    /// Points on the Cayley line of the complement triple.
    Kirkman(KirkmanLabel),
    /// Lines through the Steiner node of the complement triple.
    Pascal(PascalLabel),
    /// Points on the Ladd line of the unordered label.
    Meeting(OrderedPairPair),
    /// Lines through the Veronese node of the unordered label.
    Linking(OrderedPairPair),
}

impl RangeSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            RangeSpec::Kirkman(_) => "kirkman",
            RangeSpec::Pascal(_) => "pascal",
            RangeSpec::Meeting(_) => "meeting",
            RangeSpec::Linking(_) => "linking",
        }
    }

    /// Report key, e.g. `K 3;05`, `P 2;15`, `M 12;34`, `R 12;34`.
    pub fn text(&self) -> String {
        match self {
            RangeSpec::Kirkman(l) => text::kirkman(l),
            RangeSpec::Pascal(l) => text::pascal(l),
            RangeSpec::Meeting(l) => format!("M {}", text::ordered_pairs(l)),
            RangeSpec::Linking(l) => format!("R {}", text::ordered_pairs(l)),
        }
    }
}

/// The complete list of 300 range specs.
pub fn all_range_specs() -> Vec<RangeSpec> {
    let mut out = Vec::with_capacity(300);
    out.extend(all_kirkman_labels().into_iter().map(RangeSpec::Kirkman));
    out.extend(all_pascal_labels().into_iter().map(RangeSpec::Pascal));
    out.extend(all_ordered_pair_pairs().into_iter().map(RangeSpec::Meeting));
    out.extend(all_ordered_pair_pairs().into_iter().map(RangeSpec::Linking));
    out
}

/// Elements of a range: a point range or a line range (pencil).
#[derive(Clone, Debug)]
pub enum RangeElements {
    Points(Vec<ProjectivePoint>),
    Lines(Vec<ProjectiveLine>),
}

impl RangeElements {
    pub fn len(&self) -> usize {
        match self {
            RangeElements::Points(v) => v.len(),
            RangeElements::Lines(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The deepest coordinate index `d` (counting heights `0..=d`) a built tower
/// can supply for a spec; a range at depth `d` has `d + 3` elements.
pub fn max_depth(m: &Multimysticum, spec: &RangeSpec) -> usize {
    let h = m.built_height();
    match spec {
        RangeSpec::Kirkman(_) | RangeSpec::Pascal(_) => h,
        // Meeting points exist between odd heights i <= h - 1.
        RangeSpec::Meeting(_) => 2 * (h / 2),
        // Linking lines exist between even heights i <= h - 1.
        RangeSpec::Linking(_) => {
            let pairs = (h + 1) / 2;
            (2 * pairs).saturating_sub(1)
        }
    }
}

/// Extracts the range elements for `spec` down to `depth` (clamped to what
/// the built height supplies; the shortfall is visible in the result length).
pub fn extract_range(m: &Multimysticum, spec: &RangeSpec, depth: usize) -> Result<RangeElements> {
    let depth = depth.min(max_depth(m, spec));
    match spec {
        RangeSpec::Kirkman(lbl) => {
            let steiner = Triple::new(lbl.x, lbl.pair.lo(), lbl.pair.hi());
            let mut pts = vec![
                m.base().salmon_node(&lbl.pair).clone(),
                m.base().steiner_node(&steiner).clone(),
            ];
            for i in 0..=depth {
                pts.push(m.kirkman_at(lbl, i)?.clone());
            }
            Ok(RangeElements::Points(pts))
        }
        RangeSpec::Pascal(lbl) => {
            let cayley = Triple::new(lbl.x, lbl.pair.lo(), lbl.pair.hi());
            let mut lines = vec![
                m.base().cayley_line(&cayley).clone(),
                m.base().plucker_line(&lbl.pair).clone(),
            ];
            for i in 0..=depth {
                lines.push(m.pascal_at(lbl, i)?.clone());
            }
            Ok(RangeElements::Lines(lines))
        }
        RangeSpec::Meeting(lbl) => {
            let unordered = lbl.unordered();
            let mut pts = vec![
                m.base().salmon_node(&lbl.complement()).clone(),
                m.plucker_ladd_node(lbl)?.clone(),
                m.base().ordinary_meeting_point(&unordered).clone(),
            ];
            // p_i has the second half on top, q_i the first; odd i ascending.
            let mut i = 1;
            while pts.len() < depth + 3 {
                pts.push(m.higher_meeting_point(&lbl.swapped(), i)?.clone());
                if pts.len() < depth + 3 {
                    pts.push(m.higher_meeting_point(lbl, i)?.clone());
                }
                i += 2;
            }
            Ok(RangeElements::Points(pts))
        }
        RangeSpec::Linking(lbl) => {
            let mut lines = vec![
                m.salmon_veronese_line(lbl)?.clone(),
                m.base().plucker_line(&lbl.complement()).clone(),
            ];
            let mut i = 0;
            while lines.len() < depth + 3 {
                lines.push(m.linking_line(&lbl.swapped(), i)?.clone());
                if lines.len() < depth + 3 {
                    lines.push(m.linking_line(lbl, i)?.clone());
                }
                i += 2;
            }
            Ok(RangeElements::Lines(lines))
        }
    }
}

/// Coordinates of `elems` under the frame of its own first three members.
fn frame_coordinates(elems: &RangeElements) -> Result<Vec<ExtendedScalar>> {
    coordinates_in_frame(elems, elems)
}

/// Coordinate of element `k` of `elems` under the frame formed by the first
/// three elements of `frame`.
fn coordinate_in_frame(
    frame: &RangeElements,
    elems: &RangeElements,
    k: usize,
) -> Result<ExtendedScalar> {
    match (frame, elems) {
        (RangeElements::Points(f), RangeElements::Points(v)) if f.len() >= 3 => {
            cross_ratio_points(&f[0], &f[1], &f[2], &v[k])
        }
        (RangeElements::Lines(f), RangeElements::Lines(v)) if f.len() >= 3 => {
            cross_ratio_lines(&f[0], &f[1], &f[2], &v[k])
        }
        _ => Err(Error::DegenerateFrame),
    }
}

/// Coordinates of every element of `elems` under the frame formed by the
/// first three elements of `frame`.
fn coordinates_in_frame(
    frame: &RangeElements,
    elems: &RangeElements,
) -> Result<Vec<ExtendedScalar>> {
    (0..elems.len())
        .map(|k| coordinate_in_frame(frame, elems, k))
        .collect()
}

/// The first failing position of a range, if any. `found` is `None` when the
/// element does not even lie on the range's carrier, which can happen only
/// for towers loaded from a tampered file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub found: Option<ExtendedScalar>,
    pub expected: ExtendedScalar,
}

/// Exact comparison of one range against the Veronese sequence.
#[derive(Clone, Debug)]
pub struct RangeReport {
    pub spec: RangeSpec,
    pub requested_depth: usize,
    pub effective_depth: usize,
    pub coordinates: Vec<ExtendedScalar>,
    pub verdict: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Extracts the range, computes its coordinates in its own frame and compares
/// them term-by-term with the Veronese sequence. Off-carrier elements and
/// degenerate frames become failed verdicts, not errors, so that verification
/// of a tampered tower pinpoints the damage.
pub fn range_coordinates(m: &Multimysticum, spec: &RangeSpec, depth: usize) -> Result<RangeReport> {
    let effective = depth.min(max_depth(m, spec));
    let elems = extract_range(m, spec, effective)?;
    let mut coordinates = Vec::with_capacity(elems.len());
    let mut off_carrier = None;
    for k in 0..elems.len() {
        match coordinate_in_frame(&elems, &elems, k) {
            Ok(v) => coordinates.push(v),
            Err(Error::NotCollinear | Error::NotConcurrent | Error::DegenerateFrame) => {
                off_carrier = Some(k);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let expected = veronese_sequence(elems.len());
    let first_mismatch = coordinates
        .iter()
        .zip(&expected)
        .enumerate()
        .find(|(_, (got, want))| got != want)
        .map(|(k, (got, want))| Mismatch {
            index: k,
            found: Some(got.clone()),
            expected: want.clone(),
        })
        .or_else(|| {
            off_carrier.map(|k| Mismatch {
                index: k,
                found: None,
                expected: expected[k].clone(),
            })
        });
    Ok(RangeReport {
        spec: *spec,
        requested_depth: depth,
        effective_depth: effective,
        verdict: first_mismatch.is_none(),
        coordinates,
        first_mismatch,
    })
}

/// Outcome of verifying all 300 ranges.
#[derive(Clone, Debug)]
pub struct VerifySummary {
    pub reports: Vec<RangeReport>,
    pub passed: usize,
    pub total: usize,
}

impl VerifySummary {
    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }

    pub fn first_failure(&self) -> Option<&RangeReport> {
        self.reports.iter().find(|r| !r.verdict)
    }
}

/// Runs [`range_coordinates`] for all 300 specs (in parallel; the report
/// order is the spec order).
pub fn verify_all(m: &Multimysticum, depth: usize) -> Result<VerifySummary> {
    let specs = all_range_specs();
    let reports: Result<Vec<RangeReport>> = specs
        .par_iter()
        .map(|spec| range_coordinates(m, spec, depth))
        .collect();
    let reports = reports?;
    let passed = reports.iter().filter(|r| r.verdict).count();
    let total = reports.len();
    Ok(VerifySummary {
        reports,
        passed,
        total,
    })
}

/// One named check of the proof machinery.
#[derive(Clone, Debug)]
pub struct WitnessOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(name: &'static str, pass: bool, detail: impl Into<String>) -> WitnessOutcome {
    WitnessOutcome {
        name,
        pass,
        detail: detail.into(),
    }
}

/// Exact checks of the devices used in the proof of the main theorem.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    /// The Kirkman range `K 2;04` and Pascal range `P 2;15` are aligned:
    /// the node and the line of equal index are incident.
    pub alignment: WitnessOutcome,
    /// Swapping the two meeting ranges on one Ladd line acts on coordinates
    /// as `z -> 2 - z`.
    pub ladd_involution: WitnessOutcome,
    /// Swapping the two linking ranges at one Veronese node acts as
    /// `z -> z / (3 z - 1)`; the sums `1/b_{2m} + 1/b_{2m+1}` are constant.
    pub linking_involution: WitnessOutcome,
    /// The sums of reciprocal coordinate pairs measured geometrically.
    pub linking_sums: Vec<ExactScalar>,
    /// Projecting the first two Kirkman-range quadruples through the meeting
    /// point `01.45` swaps the middle pair; the quadruple is harmonic with
    /// coordinate exactly `1/2`.
    pub harmonic: WitnessOutcome,
    pub harmonic_cross_ratio: ExtendedScalar,
}

impl WitnessReport {
    pub fn all(&self) -> [&WitnessOutcome; 4] {
        [
            &self.alignment,
            &self.ladd_involution,
            &self.linking_involution,
            &self.harmonic,
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.all().iter().all(|w| w.pass)
    }
}

/// Runs the four witness checks. Requires a tower of height at least 3.
pub fn proof_witnesses(m: &Multimysticum) -> Result<WitnessReport> {
    if m.built_height() < 3 {
        return Err(Error::HeightNotBuilt {
            needed: 3,
            built: m.built_height(),
        });
    }
    Ok(WitnessReport {
        alignment: alignment_witness(m)?,
        ladd_involution: ladd_involution_witness(m)?,
        linking_involution: linking_involution_witness(m)?.0,
        linking_sums: linking_involution_witness(m)?.1,
        harmonic: harmonic_witness(m)?.0,
        harmonic_cross_ratio: harmonic_witness(m)?.1,
    })
}

/// The incidence `K 2;04 on P 2;15` lifts to an alignment of the full ranges.
fn alignment_witness(m: &Multimysticum) -> Result<WitnessOutcome> {
    let k_spec = RangeSpec::Kirkman(KirkmanLabel::new(2, 0, 4));
    let p_spec = RangeSpec::Pascal(PascalLabel::new(2, 1, 5));
    let depth = max_depth(m, &k_spec);
    let nodes = match extract_range(m, &k_spec, depth)? {
        RangeElements::Points(v) => v,
        _ => unreachable!(),
    };
    let lines = match extract_range(m, &p_spec, depth)? {
        RangeElements::Lines(v) => v,
        _ => unreachable!(),
    };
    let n = nodes.len().min(lines.len());
    for k in 0..n {
        if !incident(&nodes[k], &lines[k]) {
            return Ok(outcome(
                "alignment",
                false,
                format!("column {k} of K 2;04 vs P 2;15 is not incident"),
            ));
        }
    }
    Ok(outcome("alignment", true, format!("{n} columns incident")))
}

/// Measures both meeting ranges of the Ladd line `L 12.34` in the frame of
/// `M 12;34` and checks the position-wise relation `z -> 2 - z`.
fn ladd_involution_witness(m: &Multimysticum) -> Result<WitnessOutcome> {
    let fwd = OrderedPairPair::new(Pair::new(1, 2), Pair::new(3, 4));
    let spec_fwd = RangeSpec::Meeting(fwd);
    let spec_rev = RangeSpec::Meeting(fwd.swapped());
    let depth = max_depth(m, &spec_fwd);
    let elems_fwd = extract_range(m, &spec_fwd, depth)?;
    let elems_rev = extract_range(m, &spec_rev, depth)?;
    let cs1 = frame_coordinates(&elems_fwd)?;
    let cs2 = coordinates_in_frame(&elems_fwd, &elems_rev)?;
    for (k, (a, b)) in cs1.iter().zip(&cs2).enumerate() {
        let image = a.mobius(&rat(-1), &rat(2), &rat(0), &rat(1));
        if &image != b {
            return Ok(outcome(
                "ladd-involution",
                false,
                format!("index {k}: 2 - {a} = {image} but the swapped range reads {b}"),
            ));
        }
    }
    Ok(outcome(
        "ladd-involution",
        true,
        format!("z -> 2 - z over {} positions", cs1.len()),
    ))
}

/// Measures both linking ranges at the Veronese node `N 12.34` in the frame
/// of `R 12;34`, checks `z -> z / (3 z - 1)` position-wise, and returns the
/// geometric sums `1/b_{2m} + 1/b_{2m+1}`.
fn linking_involution_witness(m: &Multimysticum) -> Result<(WitnessOutcome, Vec<ExactScalar>)> {
    let fwd = OrderedPairPair::new(Pair::new(1, 2), Pair::new(3, 4));
    let spec_fwd = RangeSpec::Linking(fwd);
    let spec_rev = RangeSpec::Linking(fwd.swapped());
    let depth = max_depth(m, &spec_fwd);
    let elems_fwd = extract_range(m, &spec_fwd, depth)?;
    let elems_rev = extract_range(m, &spec_rev, depth)?;
    let cs1 = frame_coordinates(&elems_fwd)?;
    let cs2 = coordinates_in_frame(&elems_fwd, &elems_rev)?;

    let mut sums = Vec::new();
    let mut k = 2;
    while k < cs1.len() && k < cs2.len() {
        match (cs1[k].as_finite(), cs2[k].as_finite()) {
            (Some(a), Some(b)) => sums.push(a.recip() + b.recip()),
            _ => {
                return Ok((
                    outcome(
                        "linking-involution",
                        false,
                        format!("index {k} is infinite"),
                    ),
                    sums,
                ))
            }
        }
        k += 2;
    }

    for (k, (a, b)) in cs1.iter().zip(&cs2).enumerate() {
        let image = a.mobius(&rat(1), &rat(0), &rat(3), &rat(-1));
        if &image != b {
            return Ok((
                outcome(
                    "linking-involution",
                    false,
                    format!("index {k}: image {image} of {a} but the swapped range reads {b}"),
                ),
                sums,
            ));
        }
    }
    let constant = sums.iter().all(|s| s == &rat(3));
    Ok((
        outcome(
            "linking-involution",
            constant,
            format!(
                "{} reciprocal pair sums, all equal 3: {constant}",
                sums.len()
            ),
        ),
        sums,
    ))
}

/// Joins the quadruples `(N23, N023, K 0;23, K 0;23 at height 1)` and
/// `(N23, N123, K 1;23, K 1;23 at height 1)` to the ordinary meeting point
/// `01.45`; the two projected line quadruples coincide up to swapping the
/// middle pair, which forces the harmonic coordinate `1/2`.
fn harmonic_witness(m: &Multimysticum) -> Result<(WitnessOutcome, ExtendedScalar)> {
    let meeting = m
        .base()
        .ordinary_meeting_point(&PairPair::new(Pair::new(0, 1), Pair::new(4, 5)))
        .clone();
    let quadruple = |x: u8| -> Result<Vec<ProjectivePoint>> {
        let lbl = KirkmanLabel::new(x, 2, 3);
        Ok(vec![
            m.base().salmon_node(&Pair::new(2, 3)).clone(),
            m.base().steiner_node(&Triple::new(x, 2, 3)).clone(),
            m.kirkman_at(&lbl, 0)?.clone(),
            m.kirkman_at(&lbl, 1)?.clone(),
        ])
    };
    let q0 = quadruple(0)?;
    let q1 = quadruple(1)?;
    let project = |nodes: &[ProjectivePoint]| -> Result<Vec<ProjectiveLine>> {
        nodes.iter().map(|p| join(p, &meeting)).collect()
    };
    let lines0 = project(&q0)?;
    let lines1 = project(&q1)?;

    let ladd = m.ladd_line(&PairPair::new(Pair::new(0, 1), Pair::new(4, 5)))?;
    let p045 = m.pascal_at(&PascalLabel::new(0, 4, 5), 0)?;
    let p145 = m.pascal_at(&PascalLabel::new(1, 4, 5), 0)?;
    let link = m.linking_line(&OrderedPairPair::new(Pair::new(0, 1), Pair::new(2, 3)), 0)?;

    let named = lines0[0] == *ladd
        && lines0[1] == *p145
        && lines0[2] == *p045
        && lines0[3] == *link
        && lines1[0] == *ladd
        && lines1[1] == *p045
        && lines1[2] == *p145
        && lines1[3] == *link;
    let swapped = lines0[0] == lines1[0]
        && lines0[3] == lines1[3]
        && lines0[1] == lines1[2]
        && lines0[2] == lines1[1]
        && lines0[1] != lines0[2];

    let cr_nodes = cross_ratio_points(&q0[0], &q0[1], &q0[2], &q0[3])?;
    let cr_lines0 = cross_ratio_lines(&lines0[0], &lines0[1], &lines0[2], &lines0[3])?;
    let cr_other = cross_ratio_points(&q1[0], &q1[1], &q1[2], &q1[3])?;
    let half = ExtendedScalar::from_ratio(1, 2);
    let pass = named && swapped && cr_nodes == half && cr_lines0 == half && cr_other == half;
    let detail = format!(
        "projection identifies the named lines: {named}; middle pair swapped: {swapped}; \
         quadruple coordinate {cr_nodes}"
    );
    Ok((outcome("harmonic", pass, detail), cr_nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::fixture_sextuple;
    use crate::scalar::ratio;
    use crate::testing::{
        cmp_abs_distance_to_surd, surd_convergents, ONE_MINUS_INV_SQRT3, ONE_PLUS_INV_SQRT3,
    };
    use num_bigint::BigInt;
    use once_cell::sync::Lazy;
    use std::cmp::Ordering;

    static TOWER: Lazy<Multimysticum> =
        Lazy::new(|| Multimysticum::build(&fixture_sextuple(), 4).expect("fixture tower builds"));

    fn alpha(terms: &[ExtendedScalar], i: usize) -> &ExactScalar {
        terms[i + 2].as_finite().expect("alpha terms are finite")
    }

    #[test]
    fn first_twelve_terms_are_the_printed_sequence() {
        let expected: Vec<ExtendedScalar> = [
            "inf", "0", "1", "1/2", "3/2", "3/7", "11/7", "11/26", "41/26", "41/97", "153/97",
            "153/362",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        assert_eq!(veronese_sequence(12), expected);
    }

    #[test]
    fn edge_counts() {
        assert!(veronese_sequence(0).is_empty());
        assert_eq!(veronese_sequence(1), vec![ExtendedScalar::Infinity]);
        assert_eq!(
            veronese_sequence(4),
            vec![
                ExtendedScalar::Infinity,
                ExtendedScalar::zero(),
                ExtendedScalar::one(),
                ExtendedScalar::from_ratio(1, 2)
            ]
        );
    }

    #[test]
    fn recurrences_hold_for_many_terms() {
        let terms = veronese_sequence(40);
        for i in 0..36 {
            let (a, b) = (alpha(&terms, i), alpha(&terms, i + 1));
            if i % 2 == 1 {
                assert_eq!(a + b, ratio(2, 1), "odd rule at {i}");
            } else {
                assert_eq!(a.recip() + b.recip(), ratio(3, 1), "even rule at {i}");
            }
        }
        assert_eq!(alpha(&terms, 1) + alpha(&terms, 2), ratio(2, 1));
        assert_eq!(
            alpha(&terms, 2).recip() + alpha(&terms, 3).recip(),
            ratio(3, 1)
        );
    }

    #[test]
    fn alternate_convergent_oracle_agrees() {
        let terms = veronese_sequence(2 + 20);
        let plus = surd_convergents(ONE_PLUS_INV_SQRT3, 19);
        let minus = surd_convergents(ONE_MINUS_INV_SQRT3, 20);
        for m in 0..10 {
            assert_eq!(alpha(&terms, 2 * m), &plus[2 * m], "even alpha {m}");
            assert_eq!(alpha(&terms, 2 * m + 1), &minus[2 * m + 1], "odd alpha {m}");
        }
    }

    #[test]
    fn even_terms_approach_the_surd_strictly() {
        let terms = veronese_sequence(2 + 24);
        for m in 0..11 {
            let closer = cmp_abs_distance_to_surd(
                alpha(&terms, 2 * (m + 1)),
                alpha(&terms, 2 * m),
                ONE_PLUS_INV_SQRT3,
            );
            assert_eq!(closer, Ordering::Less, "even step {m}");
        }
    }

    #[test]
    fn spec_count_is_three_hundred() {
        let specs = all_range_specs();
        assert_eq!(specs.len(), 300);
        assert_eq!(specs.iter().filter(|s| s.kind() == "kirkman").count(), 60);
        assert_eq!(specs.iter().filter(|s| s.kind() == "pascal").count(), 60);
        assert_eq!(specs.iter().filter(|s| s.kind() == "meeting").count(), 90);
        assert_eq!(specs.iter().filter(|s| s.kind() == "linking").count(), 90);
    }

    #[test]
    fn kirkman_range_opens_with_the_documented_elements() {
        let m = &*TOWER;
        let spec = RangeSpec::Kirkman(KirkmanLabel::new(3, 0, 5));
        let elems = extract_range(m, &spec, 1).unwrap();
        let carrier = m.base().cayley_line(&Triple::new(1, 2, 4));
        match &elems {
            RangeElements::Points(pts) => {
                assert_eq!(pts.len(), 4);
                assert_eq!(&pts[0], m.base().salmon_node(&Pair::new(0, 5)));
                assert_eq!(&pts[1], m.base().steiner_node(&Triple::new(0, 3, 5)));
                assert_eq!(
                    &pts[2],
                    m.kirkman_at(&KirkmanLabel::new(3, 0, 5), 0).unwrap()
                );
                for p in pts {
                    assert!(incident(p, carrier));
                }
            }
            _ => panic!("kirkman ranges are point ranges"),
        }
    }

    #[test]
    fn meeting_range_alternates_swapped_and_direct_points() {
        let m = &*TOWER;
        let lbl = OrderedPairPair::new(Pair::new(1, 2), Pair::new(3, 4));
        let elems = extract_range(m, &RangeSpec::Meeting(lbl), 4).unwrap();
        match elems {
            RangeElements::Points(pts) => {
                assert_eq!(pts.len(), 7);
                assert_eq!(&pts[3], m.higher_meeting_point(&lbl.swapped(), 1).unwrap());
                assert_eq!(&pts[4], m.higher_meeting_point(&lbl, 1).unwrap());
                assert_eq!(&pts[5], m.higher_meeting_point(&lbl.swapped(), 3).unwrap());
                assert_eq!(&pts[6], m.higher_meeting_point(&lbl, 3).unwrap());
                let ladd = m.ladd_line(&lbl.unordered()).unwrap();
                for p in &pts {
                    assert!(incident(p, ladd));
                }
            }
            _ => panic!("meeting ranges are point ranges"),
        }
    }

    #[test]
    fn kirkman_coordinates_match_the_first_convergents() {
        let m = &*TOWER;
        let report =
            range_coordinates(m, &RangeSpec::Kirkman(KirkmanLabel::new(3, 0, 5)), 4).unwrap();
        assert!(report.verdict, "{:?}", report.first_mismatch);
        assert_eq!(report.coordinates[0], ExtendedScalar::Infinity);
        assert_eq!(report.coordinates[1], ExtendedScalar::zero());
        assert_eq!(report.coordinates[2], ExtendedScalar::one());
        assert_eq!(report.coordinates[3], ExtendedScalar::from_ratio(1, 2));
        assert_eq!(report.coordinates[4], ExtendedScalar::from_ratio(3, 2));
    }

    #[test]
    fn meeting_coordinates_match_from_the_fourth_element() {
        let m = &*TOWER;
        let lbl = OrderedPairPair::new(Pair::new(1, 2), Pair::new(3, 4));
        let report = range_coordinates(m, &RangeSpec::Meeting(lbl), 4).unwrap();
        assert!(report.verdict, "{:?}", report.first_mismatch);
        assert_eq!(report.coordinates[3], ExtendedScalar::from_ratio(1, 2));
    }

    #[test]
    fn verify_all_passes_at_height_four() {
        let m = &*TOWER;
        let summary = verify_all(m, 4).unwrap();
        assert_eq!(summary.total, 300);
        assert!(summary.all_pass(), "{:?}", summary.first_failure());
        // Kirkman/Pascal/meeting ranges reach depth 4; linking ranges stop at 3.
        for r in &summary.reports {
            match r.spec {
                RangeSpec::Linking(_) => assert_eq!(r.effective_depth, 3),
                _ => assert_eq!(r.effective_depth, 4),
            }
        }
    }

    #[test]
    fn depth_zero_is_trivially_exact() {
        let m = &*TOWER;
        let summary = verify_all(m, 0).unwrap();
        assert!(summary.all_pass());
        for r in &summary.reports {
            assert_eq!(r.coordinates.len(), 3);
        }
    }

    #[test]
    fn verdict_at_a_depth_implies_all_shallower_depths() {
        let m = &*TOWER;
        let spec = RangeSpec::Pascal(PascalLabel::new(2, 1, 5));
        let deep = range_coordinates(m, &spec, 4).unwrap();
        assert!(deep.verdict);
        for d in 0..4 {
            let shallow = range_coordinates(m, &spec, d).unwrap();
            assert!(shallow.verdict);
            assert_eq!(shallow.coordinates[..], deep.coordinates[..d + 3]);
        }
    }

    #[test]
    fn range_coordinates_survive_a_projective_transformation() {
        // Applying an invertible matrix to every element of a point range
        // leaves the coordinates unchanged.
        let m = &*TOWER;
        let spec = RangeSpec::Kirkman(KirkmanLabel::new(3, 0, 5));
        let elems = extract_range(m, &spec, 4).unwrap();
        let pts = match &elems {
            RangeElements::Points(v) => v.clone(),
            _ => unreachable!(),
        };
        let matrices: [[i64; 9]; 3] = [
            [1, 2, 0, 0, 1, 5, 3, 0, 1],
            [2, -1, 1, 1, 1, 0, 0, 4, -3],
            [0, 1, 0, 0, 0, 1, 1, 0, 0],
        ];
        let before = frame_coordinates(&elems).unwrap();
        for mat in matrices {
            let mapped: Vec<ProjectivePoint> = pts
                .iter()
                .map(|p| {
                    let c = p.coords();
                    let row = |r: usize| {
                        ExactScalar::from_integer(
                            BigInt::from(mat[3 * r]) * &c[0]
                                + BigInt::from(mat[3 * r + 1]) * &c[1]
                                + BigInt::from(mat[3 * r + 2]) * &c[2],
                        )
                    };
                    ProjectivePoint::new(&[row(0), row(1), row(2)]).unwrap()
                })
                .collect();
            let after = frame_coordinates(&RangeElements::Points(mapped)).unwrap();
            assert_eq!(before, after);
        }
    }

    #[test]
    fn no_common_frame_for_the_three_ranges_on_one_cayley_line() {
        // K 0;12, K 1;02 and K 2;01 all live on the Cayley line L 345, but
        // measuring the other two in the frame of the first does not
        // reproduce the sequence.
        let m = &*TOWER;
        let frame = extract_range(m, &RangeSpec::Kirkman(KirkmanLabel::new(0, 1, 2)), 4).unwrap();
        let expected = veronese_sequence(7);
        for (y, z) in [(1u8, (0u8, 2u8)), (2u8, (0u8, 1u8))] {
            let other =
                extract_range(m, &RangeSpec::Kirkman(KirkmanLabel::new(y, z.0, z.1)), 4).unwrap();
            let cs = coordinates_in_frame(&frame, &other).unwrap();
            assert_ne!(cs, expected, "K {y};{}{} should not align", z.0, z.1);
        }
    }

    #[test]
    fn witnesses_pass_on_the_fixture_tower() {
        let m = &*TOWER;
        let report = proof_witnesses(m).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(
            report.harmonic_cross_ratio,
            ExtendedScalar::from_ratio(1, 2)
        );
        // Height 4 supplies the sums for m = 0 and m = 1.
        assert_eq!(report.linking_sums, vec![ratio(3, 1), ratio(3, 1)]);
    }

    #[test]
    fn witnesses_need_height_three() {
        let m = Multimysticum::build(&fixture_sextuple(), 2).unwrap();
        assert_eq!(
            proof_witnesses(&m).unwrap_err(),
            Error::HeightNotBuilt {
                needed: 3,
                built: 2
            }
        );
    }
}
