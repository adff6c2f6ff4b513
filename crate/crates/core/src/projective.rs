//! Homogeneous projective primitives over exact rationals.
//!
//! Points and lines are stored as canonical integer triples: denominators are
//! cleared, the integer gcd is divided out, and the first nonzero entry is made
//! positive. With this normal form, projective equality is structural equality,
//! which is what lets element identity be decided across mutation heights.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, ExtendedScalar};

/// A point of the projective plane in canonical homogeneous coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: [BigInt; 3],
}

/// A line of the projective plane in canonical homogeneous coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveLine {
    coeffs: [BigInt; 3],
}

/// Clears denominators, divides by the integer gcd and fixes the sign so the
/// first nonzero entry is positive. This is the unique canonical
/// representative of the input's projective class.
pub fn canonicalize(raw: &[ExactScalar; 3]) -> Result<[BigInt; 3]> {
    let lcm = raw.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: [BigInt; 3] = [
        (&raw[0] * &lcm).to_integer(),
        (&raw[1] * &lcm).to_integer(),
        (&raw[2] * &lcm).to_integer(),
    ];
    canonicalize_ints(ints)
}

fn canonicalize_ints(mut v: [BigInt; 3]) -> Result<[BigInt; 3]> {
    let gcd = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return Err(Error::ZeroVector);
    }
    for x in v.iter_mut() {
        *x = &*x / &gcd;
    }
    let flip = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    if flip {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    Ok(v)
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn det3(a: &[BigInt; 3], b: &[BigInt; 3], c: &[BigInt; 3]) -> BigInt {
    dot(a, &cross(b, c))
}

impl ProjectivePoint {
    pub fn new(raw: &[ExactScalar; 3]) -> Result<Self> {
        Ok(Self {
            coords: canonicalize(raw)?,
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Ok(Self {
            coords: canonicalize_ints([x.into(), y.into(), z.into()])?,
        })
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }

    /// True when the point lies on the line `z = 0`.
    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    /// Affine coordinates as floating decimals, for rendering only; `None`
    /// for points at infinity.
    pub fn to_affine_f64(&self) -> Option<(f64, f64)> {
        use num_traits::ToPrimitive;
        if self.is_at_infinity() {
            return None;
        }
        let z = self.coords[2].to_f64()?;
        Some((self.coords[0].to_f64()? / z, self.coords[1].to_f64()? / z))
    }
}

impl ProjectiveLine {
    pub fn new(raw: &[ExactScalar; 3]) -> Result<Self> {
        Ok(Self {
            coeffs: canonicalize(raw)?,
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Ok(Self {
            coeffs: canonicalize_ints([a.into(), b.into(), c.into()])?,
        })
    }

    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.coeffs
    }

    /// Coefficients as floating decimals, for rendering only.
    pub fn coeffs_f64(&self) -> Option<[f64; 3]> {
        use num_traits::ToPrimitive;
        Some([
            self.coeffs[0].to_f64()?,
            self.coeffs[1].to_f64()?,
            self.coeffs[2].to_f64()?,
        ])
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl fmt::Debug for ProjectiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}:{}:{}]",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectiveLine> {
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    Ok(ProjectiveLine {
        coeffs: canonicalize_ints(cross(&p.coords, &q.coords))
            .expect("distinct points span a line"),
    })
}

/// The common point of two distinct lines.
pub fn meet(l: &ProjectiveLine, m: &ProjectiveLine) -> Result<ProjectivePoint> {
    if l == m {
        return Err(Error::CoincidentLines);
    }
    Ok(ProjectivePoint {
        coords: canonicalize_ints(cross(&l.coeffs, &m.coeffs)).expect("distinct lines meet"),
    })
}

/// Exact incidence: the dot product of the coordinate triples vanishes.
pub fn incident(p: &ProjectivePoint, l: &ProjectiveLine) -> bool {
    dot(&p.coords, &l.coeffs).is_zero()
}

/// True when three pairwise distinct points are collinear.
pub fn dependent_points(
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    c: &ProjectivePoint,
) -> Result<bool> {
    if a == b || a == c || b == c {
        return Err(Error::DuplicateElement);
    }
    Ok(det3(&a.coords, &b.coords, &c.coords).is_zero())
}

/// True when three pairwise distinct lines are concurrent.
pub fn dependent_lines(a: &ProjectiveLine, b: &ProjectiveLine, c: &ProjectiveLine) -> Result<bool> {
    if a == b || a == c || b == c {
        return Err(Error::DuplicateElement);
    }
    Ok(det3(&a.coeffs, &b.coeffs, &c.coeffs).is_zero())
}

/// Shared cross-ratio kernel on coordinate triples of four elements of a
/// pencil. Writing each element as a combination `alpha * t1 + beta * t2`,
/// the projective coordinate fixed by `(t1, t2, t3) -> (inf, 0, 1)` sends the
/// fourth element to `(alpha4 * beta3) / (beta4 * alpha3)`.
fn cross_ratio_triples(
    t1: &[BigInt; 3],
    t2: &[BigInt; 3],
    t3: &[BigInt; 3],
    t4: &[BigInt; 3],
) -> ExtendedScalar {
    let n = cross(t1, t2);
    let k = (0..3)
        .find(|&k| !n[k].is_zero())
        .expect("frame elements are distinct");
    // For an element t of the span, t x t2 and t1 x t are scalar multiples of
    // n; the scalars are the coordinates of t in the basis (t1, t2).
    let coeffs = |t: &[BigInt; 3]| -> (BigInt, BigInt) {
        (cross(t, t2)[k].clone(), cross(t1, t)[k].clone())
    };
    let (a3, b3) = coeffs(t3);
    let (a4, b4) = coeffs(t4);
    let num = ExactScalar::from_integer(&a4 * &b3);
    let den = ExactScalar::from_integer(&b4 * &a3);
    ExtendedScalar::quotient(num, den).expect("fourth element is a nonzero combination")
}

/// The coordinate of `p4` under the unique projective coordinate on the common
/// line sending `(p1, p2, p3)` to `(inf, 0, 1)`.
pub fn cross_ratio_points(
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
    p3: &ProjectivePoint,
    p4: &ProjectivePoint,
) -> Result<ExtendedScalar> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(Error::DegenerateFrame);
    }
    let axis = join(p1, p2).expect("frame points distinct");
    if !incident(p3, &axis) || !incident(p4, &axis) {
        return Err(Error::NotCollinear);
    }
    Ok(cross_ratio_triples(
        &p1.coords, &p2.coords, &p3.coords, &p4.coords,
    ))
}

/// Dual of [`cross_ratio_points`] for four lines of a pencil; equals the
/// cross-ratio of the four intersection points with any transversal line
/// avoiding the common point.
pub fn cross_ratio_lines(
    l1: &ProjectiveLine,
    l2: &ProjectiveLine,
    l3: &ProjectiveLine,
    l4: &ProjectiveLine,
) -> Result<ExtendedScalar> {
    if l1 == l2 || l1 == l3 || l2 == l3 {
        return Err(Error::DegenerateFrame);
    }
    let apex = meet(l1, l2).expect("frame lines distinct");
    if !incident(&apex, l3) || !incident(&apex, l4) {
        return Err(Error::NotConcurrent);
    }
    Ok(cross_ratio_triples(
        &l1.coeffs, &l2.coeffs, &l3.coeffs, &l4.coeffs,
    ))
}

/// The rational parameterization `t -> (t^2 : t : 1)` of the conic `xz = y^2`,
/// with the parameter value infinity mapped to `(1 : 0 : 0)`.
pub fn conic_point(t: &ExtendedScalar) -> ProjectivePoint {
    match t {
        ExtendedScalar::Infinity => ProjectivePoint::from_ints(1, 0, 0).unwrap(),
        ExtendedScalar::Finite(q) => {
            ProjectivePoint::new(&[q * q, q.clone(), ExactScalar::one()]).expect("nonzero triple")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::*;

    fn pt(x: i64, y: i64, z: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(x, y, z).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjectiveLine {
        ProjectiveLine::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(pt(2, 4, 6), pt(1, 2, 3));
        assert_eq!(pt(0, 0, 5), pt(0, 0, 1));
        let half = ProjectivePoint::new(&[ratio(-1, 2), rat(1), rat(0)]).unwrap();
        assert_eq!(half, pt(1, -2, 0));
        assert!(ProjectivePoint::from_ints(0, 0, 0).is_err());
    }

    #[test]
    fn canonicalize_is_idempotent_on_canonical_triples() {
        let p = pt(-10, 4, -6);
        let again = ProjectivePoint::new(&[
            ExactScalar::from_integer(p.coords()[0].clone()),
            ExactScalar::from_integer(p.coords()[1].clone()),
            ExactScalar::from_integer(p.coords()[2].clone()),
        ])
        .unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), ln(0, 0, 1));
        assert_eq!(join(&pt(0, 0, 1), &pt(1, 1, 1)).unwrap(), ln(1, -1, 0));
        assert_eq!(
            join(&pt(1, 2, 3), &pt(1, 2, 3)),
            Err(Error::CoincidentPoints)
        );
        assert_eq!(
            join(&pt(1, 2, 3), &pt(2, 4, 6)),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&ln(0, 0, 1), &ln(0, 1, 0)).unwrap(), pt(1, 0, 0));
        assert_eq!(meet(&ln(1, -1, 0), &ln(1, 1, -2)).unwrap(), pt(1, 1, 1));
        assert_eq!(
            meet(&ln(1, -1, 0), &ln(1, -1, 0)),
            Err(Error::CoincidentLines)
        );
    }

    #[test]
    fn duality_identities() {
        let (p, q, r) = (pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 1));
        assert!(incident(&p, &join(&p, &q).unwrap()));
        assert!(incident(&q, &join(&p, &q).unwrap()));
        assert_eq!(
            meet(&join(&p, &q).unwrap(), &join(&q, &r).unwrap()).unwrap(),
            q
        );
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt(1, 1, 1), &ln(1, -1, 0)));
        assert!(!incident(&pt(1, 0, 0), &ln(1, 0, 0)));
        let a = conic_point(&ExtendedScalar::from_int(3));
        let b = conic_point(&ExtendedScalar::from_ratio(-5, 7));
        let chord = join(&a, &b).unwrap();
        assert!(incident(&a, &chord) && incident(&b, &chord));
    }

    #[test]
    fn dependent_triple_examples() {
        assert!(dependent_points(&pt(1, 0, 0), &pt(0, 1, 0), &pt(1, 1, 0)).unwrap());
        assert!(!dependent_points(&pt(1, 0, 0), &pt(0, 1, 0), &pt(0, 0, 1)).unwrap());
        assert_eq!(
            dependent_points(&pt(1, 0, 0), &pt(1, 0, 0), &pt(0, 0, 1)),
            Err(Error::DuplicateElement)
        );
        assert!(dependent_lines(&ln(1, 0, 0), &ln(0, 1, 0), &ln(1, 1, 0)).unwrap());
        assert!(!dependent_lines(&ln(1, 0, 0), &ln(0, 1, 0), &ln(0, 0, 1)).unwrap());
    }

    #[test]
    fn determinant_criterion_matches_incidence() {
        let pts = [
            pt(1, 0, 0),
            pt(0, 1, 0),
            pt(0, 0, 1),
            pt(1, 1, 1),
            pt(1, 2, 3),
            pt(2, -1, 5),
        ];
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    if a == b || a == c || b == c {
                        continue;
                    }
                    let by_det = dependent_points(a, b, c).unwrap();
                    let by_incidence = incident(c, &join(a, b).unwrap());
                    assert_eq!(by_det, by_incidence);
                }
            }
        }
    }

    #[test]
    fn cross_ratio_affine_example() {
        // On the line y = 0, with frame (1:0:0), (0:0:1), (1:0:1): the
        // coordinate of (x:0:z) is the affine ratio x/z.
        let cr =
            cross_ratio_points(&pt(1, 0, 0), &pt(0, 0, 1), &pt(1, 0, 1), &pt(2, 0, 1)).unwrap();
        assert_eq!(cr, ExtendedScalar::from_int(2));
        let harmonic =
            cross_ratio_points(&pt(1, 0, 0), &pt(0, 0, 1), &pt(1, 0, 1), &pt(-1, 0, 1)).unwrap();
        assert_eq!(harmonic, ExtendedScalar::from_int(-1));
    }

    #[test]
    fn cross_ratio_frame_normalization() {
        let (p1, p2, p3) = (pt(1, 0, 0), pt(0, 0, 1), pt(1, 0, 1));
        assert_eq!(
            cross_ratio_points(&p1, &p2, &p3, &p1).unwrap(),
            ExtendedScalar::Infinity
        );
        assert_eq!(
            cross_ratio_points(&p1, &p2, &p3, &p2).unwrap(),
            ExtendedScalar::zero()
        );
        assert_eq!(
            cross_ratio_points(&p1, &p2, &p3, &p3).unwrap(),
            ExtendedScalar::one()
        );
    }

    #[test]
    fn cross_ratio_rejects_bad_frames() {
        assert_eq!(
            cross_ratio_points(&pt(1, 0, 0), &pt(1, 0, 0), &pt(1, 0, 1), &pt(2, 0, 1)),
            Err(Error::DegenerateFrame)
        );
        assert_eq!(
            cross_ratio_points(&pt(1, 0, 0), &pt(0, 0, 1), &pt(1, 0, 1), &pt(1, 1, 1)),
            Err(Error::NotCollinear)
        );
    }

    #[test]
    fn pencil_cross_ratio_example() {
        // Pencil through (0:0:1).
        let (l1, l2, l3, l4) = (ln(1, 0, 0), ln(0, 1, 0), ln(1, -1, 0), ln(2, -1, 0));
        let cr = cross_ratio_lines(&l1, &l2, &l3, &l4).unwrap();
        assert_eq!(cr, ExtendedScalar::from_int(2));
        assert_eq!(
            cross_ratio_lines(&l1, &l2, &l3, &l3).unwrap(),
            ExtendedScalar::one()
        );
        assert_eq!(
            cross_ratio_lines(&l1, &l2, &l3, &ln(0, 0, 1)),
            Err(Error::NotConcurrent)
        );
    }

    #[test]
    fn pencil_cross_ratio_is_transversal_independent() {
        let (l1, l2, l3, l4) = (ln(1, 0, 0), ln(0, 1, 0), ln(1, -1, 0), ln(2, -1, 0));
        let expected = cross_ratio_lines(&l1, &l2, &l3, &l4).unwrap();
        for transversal in [ln(0, 0, 1), ln(1, 1, -3), ln(2, 5, 7)] {
            let cut = |l: &ProjectiveLine| meet(l, &transversal).unwrap();
            let cr = cross_ratio_points(&cut(&l1), &cut(&l2), &cut(&l3), &cut(&l4)).unwrap();
            assert_eq!(cr, expected);
        }
    }

    #[test]
    fn conic_point_examples() {
        assert_eq!(conic_point(&ExtendedScalar::zero()), pt(0, 0, 1));
        assert_eq!(conic_point(&ExtendedScalar::Infinity), pt(1, 0, 0));
        assert_eq!(conic_point(&ExtendedScalar::from_int(2)), pt(4, 2, 1));
        // x z = y^2 holds exactly.
        let p = conic_point(&ExtendedScalar::from_ratio(-7, 3));
        let c = p.coords();
        assert_eq!(&c[0] * &c[2], &c[1] * &c[1]);
    }

    prop_compose! {
        fn arb_rat()(n in -40i64..40, d in 1i64..12) -> ExactScalar {
            ratio(n, d)
        }
    }

    prop_compose! {
        fn arb_triple()(a in arb_rat(), b in arb_rat(), c in arb_rat()) -> [ExactScalar; 3] {
            [a, b, c]
        }
    }

    proptest! {
        #[test]
        fn canonicalize_idempotent(t in arb_triple()) {
            prop_assume!(t.iter().any(|q| !q.is_zero()));
            let once = canonicalize(&t).unwrap();
            let twice = canonicalize(&[
                ExactScalar::from_integer(once[0].clone()),
                ExactScalar::from_integer(once[1].clone()),
                ExactScalar::from_integer(once[2].clone()),
            ]).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn canonicalize_is_scale_invariant(t in arb_triple(), s in arb_rat()) {
            prop_assume!(t.iter().any(|q| !q.is_zero()));
            prop_assume!(!s.is_zero());
            let scaled = [&t[0] * &s, &t[1] * &s, &t[2] * &s];
            prop_assert_eq!(canonicalize(&t).unwrap(), canonicalize(&scaled).unwrap());
        }

        #[test]
        fn cross_ratio_is_projectively_invariant(
            m in proptest::array::uniform9(-9i64..9),
            xs in proptest::array::uniform4(-30i64..30),
        ) {
            let det = m[0] * (m[4] * m[8] - m[5] * m[7])
                - m[1] * (m[3] * m[8] - m[5] * m[6])
                + m[2] * (m[3] * m[7] - m[4] * m[6]);
            prop_assume!(det != 0);
            prop_assume!(xs[0] != xs[1] && xs[0] != xs[2] && xs[1] != xs[2] && xs[2] != xs[3]);
            // Four collinear points (x : 0 : 1) mapped through the matrix.
            let apply = |x: i64| {
                let v = [x, 0, 1];
                let img: Vec<ExactScalar> = (0..3)
                    .map(|r| rat(m[3 * r] * v[0] + m[3 * r + 1] * v[1] + m[3 * r + 2] * v[2]))
                    .collect();
                ProjectivePoint::new(&[img[0].clone(), img[1].clone(), img[2].clone()])
            };
            let imgs: Vec<_> = xs.iter().map(|&x| apply(x)).collect();
            prop_assume!(imgs.iter().all(|p| p.is_ok()));
            let imgs: Vec<_> = imgs.into_iter().map(|p| p.unwrap()).collect();
            prop_assume!(imgs[0] != imgs[3] && imgs[1] != imgs[3]);
            let before = cross_ratio_points(
                &pt(xs[0], 0, 1), &pt(xs[1], 0, 1), &pt(xs[2], 0, 1), &pt(xs[3], 0, 1),
            ).unwrap();
            let after = cross_ratio_points(&imgs[0], &imgs[1], &imgs[2], &imgs[3]).unwrap();
            prop_assert_eq!(before, after);
        }
    }
}
