//! Exact planar geometry over arbitrary-precision rationals.
//!
//! Every predicate in this crate is decided by comparing *squared* distances
//! or signed areas, all of which are rational in the input coordinates, so
//! the computations here are exact. No square root is ever taken.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// Arbitrary-precision rational scalar used for all coordinates.
///
/// `num_rational::BigRational` keeps values canonical (fully reduced,
/// denominator positive), which the text formats rely on.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics if `den == 0`.
pub fn ratq(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
}

/// A point in the rational plane. Ordering is lexicographic (x, then y).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    /// Point from two numerator/denominator pairs.
    pub fn quads(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point::new(ratq(xn, xd), ratq(yn, yd))
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = rat(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    /// Lossy conversion for rendering only; never used in predicates.
    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Squared Euclidean distance between two points.
pub fn sq_dist(a: &Point, b: &Point) -> Rational {
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    &dx * &dx + &dy * &dy
}

/// Sign of the signed area of triangle `a b c`:
/// `1` for a left turn (counterclockwise), `-1` for a right turn, `0` for
/// collinear points.
pub fn orient_sign(a: &Point, b: &Point, c: &Point) -> i8 {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

fn on_segment_collinear(a: &Point, b: &Point, p: &Point) -> bool {
    // Assumes a, b, p collinear: is p within the bounding box of [a, b]?
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

/// Do closed segments `[a1, a2]` and `[b1, b2]` intersect anywhere other than
/// at shared endpoints?
///
/// Semantics, pinned by unit tests:
/// * proper crossings and T-contacts (an endpoint in the interior of the
///   other segment) count,
/// * collinear overlap of positive length counts,
/// * segments that meet *only* at a common endpoint do not count,
/// * zero-length segments are rejected as [`GeomError::DegenerateSegment`].
pub fn segments_cross(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> Result<bool, GeomError> {
    if a1 == a2 || b1 == b2 {
        return Err(GeomError::DegenerateSegment);
    }
    // Intersections at shared endpoints are allowed: strip that case first.
    let shared: Vec<&Point> = [a1, a2]
        .into_iter()
        .filter(|p| *p == b1 || *p == b2)
        .collect();
    if shared.len() == 2 {
        // Same segment twice: overlap of positive length.
        return Ok(true);
    }
    let o1 = orient_sign(a1, a2, b1);
    let o2 = orient_sign(a1, a2, b2);
    let o3 = orient_sign(b1, b2, a1);
    let o4 = orient_sign(b1, b2, a2);

    if let Some(&s) = shared.first() {
        // One shared endpoint. The segments still cross if the *other*
        // endpoint of one lies in the interior of the other segment
        // (collinear fold-back).
        let a_other = if s == a1 { a2 } else { a1 };
        let b_other = if s == b1 { b2 } else { b1 };
        let a_on_b = orient_sign(b1, b2, a_other) == 0
            && on_segment_collinear(b1, b2, a_other)
            && a_other != b1
            && a_other != b2;
        let b_on_a = orient_sign(a1, a2, b_other) == 0
            && on_segment_collinear(a1, a2, b_other)
            && b_other != a1
            && b_other != a2;
        return Ok(a_on_b || b_on_a);
    }

    if o1 != o2 && o3 != o4 {
        // Covers proper crossings and T-contacts (one orientation zero).
        return Ok(true);
    }
    // Collinear configurations: any endpoint inside the other segment.
    if o1 == 0 && on_segment_collinear(a1, a2, b1) {
        return Ok(true);
    }
    if o2 == 0 && on_segment_collinear(a1, a2, b2) {
        return Ok(true);
    }
    if o3 == 0 && on_segment_collinear(b1, b2, a1) {
        return Ok(true);
    }
    if o4 == 0 && on_segment_collinear(b1, b2, a2) {
        return Ok(true);
    }
    Ok(false)
}

/// A finite set of pairwise distinct points; vertex `i` of every derived
/// graph is `points[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Builds a point set, rejecting duplicates.
    pub fn new(points: Vec<Point>) -> Result<Self, GeomError> {
        let mut seen: std::collections::BTreeMap<&Point, usize> = std::collections::BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&j) = seen.get(p) {
                return Err(GeomError::DuplicatePoint(j, i));
            }
            seen.insert(p, i);
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// Integer coordinates after clearing denominators, when that is possible
    /// without overflow risk; used as a fast path for blocker predicates.
    /// Coordinates are uniformly scaled, which preserves every comparison of
    /// squared distances.
    pub(crate) fn scaled_i64(&self) -> Option<Vec<(i64, i64)>> {
        const DEN_CAP: i64 = 1 << 20;
        const COORD_CAP: i64 = 1 << 31;
        let mut lcm: BigInt = BigInt::from(1);
        for p in &self.points {
            lcm = num_integer::lcm(lcm, p.x.denom().clone());
            lcm = num_integer::lcm(lcm, p.y.denom().clone());
            if lcm > BigInt::from(DEN_CAP) {
                return None;
            }
        }
        let mut out = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let sx = (&p.x * &lcm).to_integer().to_i64()?;
            let sy = (&p.y * &lcm).to_integer().to_i64()?;
            if sx.abs() > COORD_CAP || sy.abs() > COORD_CAP {
                return None;
            }
            out.push((sx, sy));
        }
        Some(out)
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_display_matches_grammar() {
        assert_eq!(rat(5).to_string(), "5");
        assert_eq!(rat(-3).to_string(), "-3");
        assert_eq!(ratq(1, 2).to_string(), "1/2");
        assert_eq!(ratq(-2, 4).to_string(), "-1/2");
        assert_eq!(ratq(4, 2).to_string(), "2");
        assert_eq!(ratq(3, -6).to_string(), "-1/2");
        assert_eq!(rat(0).to_string(), "0");
    }

    #[test]
    fn sq_dist_examples() {
        let a = Point::ints(0, 0);
        let b = Point::ints(3, 4);
        assert_eq!(sq_dist(&a, &b), rat(25));
        let c = Point::quads(1, 2, 0, 1);
        assert_eq!(sq_dist(&a, &c), ratq(1, 4));
    }

    #[test]
    fn orientation_cases() {
        let a = Point::ints(0, 0);
        let b = Point::ints(1, 0);
        assert_eq!(orient_sign(&a, &b, &Point::ints(1, 1)), 1);
        assert_eq!(orient_sign(&a, &b, &Point::ints(1, -1)), -1);
        assert_eq!(orient_sign(&a, &b, &Point::ints(2, 0)), 0);
    }

    #[test]
    fn crossing_semantics() {
        let p = Point::ints;
        // Proper crossing.
        assert_eq!(
            segments_cross(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)),
            Ok(true)
        );
        // Disjoint.
        assert_eq!(
            segments_cross(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)),
            Ok(false)
        );
        // T-contact: endpoint interior to the other segment.
        assert_eq!(
            segments_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 1)),
            Ok(true)
        );
        // Shared endpoint only.
        assert_eq!(
            segments_cross(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 1)),
            Ok(false)
        );
        // Shared endpoint, collinear continuation (no overlap).
        assert_eq!(
            segments_cross(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 0)),
            Ok(false)
        );
        // Shared endpoint with collinear fold-back (overlap).
        assert_eq!(
            segments_cross(&p(0, 0), &p(2, 0), &p(2, 0), &p(1, 0)),
            Ok(true)
        );
        // Collinear overlap without shared endpoints.
        assert_eq!(
            segments_cross(&p(0, 0), &p(3, 0), &p(1, 0), &p(4, 0)),
            Ok(true)
        );
        // Collinear, disjoint.
        assert_eq!(
            segments_cross(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)),
            Ok(false)
        );
        // Identical segments.
        assert_eq!(
            segments_cross(&p(0, 0), &p(1, 1), &p(0, 0), &p(1, 1)),
            Ok(true)
        );
        assert_eq!(
            segments_cross(&p(0, 0), &p(1, 1), &p(1, 1), &p(0, 0)),
            Ok(true)
        );
        // Degenerate.
        assert_eq!(
            segments_cross(&p(0, 0), &p(0, 0), &p(1, 0), &p(2, 0)),
            Err(GeomError::DegenerateSegment)
        );
    }

    #[test]
    fn pointset_rejects_duplicates() {
        let pts = vec![Point::ints(0, 0), Point::ints(1, 1), Point::quads(1, 1, 1, 1)];
        assert_eq!(PointSet::new(pts).unwrap_err(), GeomError::DuplicatePoint(1, 2));
    }

    #[test]
    fn scaling_preserves_comparisons() {
        let pts = PointSet::new(vec![
            Point::quads(1, 2, 1, 3),
            Point::ints(2, 0),
            Point::quads(-7, 4, 0, 1),
        ])
        .unwrap();
        let scaled = pts.scaled_i64().unwrap();
        // lcm(2,3,4) = 12
        assert_eq!(scaled, vec![(6, 4), (24, 0), (-21, 0)]);
        let d01 = sq_dist(&pts[0], &pts[1]);
        let d02 = sq_dist(&pts[0], &pts[2]);
        let s01 = (scaled[0].0 - scaled[1].0).pow(2) + (scaled[0].1 - scaled[1].1).pow(2);
        let s02 = (scaled[0].0 - scaled[2].0).pow(2) + (scaled[0].1 - scaled[2].1).pow(2);
        assert_eq!(d01 < d02, s01 < s02);
    }
}
