//! Exact planar primitives.
//!
//! Points carry integer coordinates and every predicate is decided by the
//! sign of an integer dot or cross product evaluated in `i128`, so there is
//! no tolerance anywhere. Floating point appears only in [`rotation_angle`],
//! which exists for reporting.

use crate::error::{GeomError, InputError};

/// Largest admissible coordinate magnitude.
///
/// With coordinates bounded by 10^15, differences fit in 2^51 and every
/// degree-2 expression (dot and cross products of differences) stays below
/// 2^104, well inside `i128`.
pub const MAX_ABS_COORD: i64 = 1_000_000_000_000_000;

/// A planar point with exact integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_bounds(&self) -> bool {
        self.x.abs() <= MAX_ABS_COORD && self.y.abs() <= MAX_ABS_COORD
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

/// An angle in radians, always in `[0, pi]`. Reporting only.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(pub f64);

impl Angle {
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Orientation of the ordered triple (p, q, r).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Position of a query point relative to a closed triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrianglePosition {
    StrictlyInside,
    OnBoundary,
    Outside,
}

/// A set of pairwise distinct points; input indices are preserved and all
/// tours and paths over the set are reported as index sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates distinctness and coordinate bounds.
    pub fn new(points: Vec<Point>) -> Result<Self, InputError> {
        if points.is_empty() {
            return Err(InputError::Empty);
        }
        for p in &points {
            if !p.in_bounds() {
                return Err(InputError::CoordinateOverflow(p.x.abs().max(p.y.abs())));
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_unstable_by_key(|&i| points[i]);
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(InputError::DuplicatePoint(a, b));
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self, InputError> {
        Self::new(coords.iter().map(|&c| Point::from(c)).collect())
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
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

#[inline]
pub(crate) fn dot_at(apex: Point, a: Point, b: Point) -> i128 {
    let ux = a.x as i128 - apex.x as i128;
    let uy = a.y as i128 - apex.y as i128;
    let vx = b.x as i128 - apex.x as i128;
    let vy = b.y as i128 - apex.y as i128;
    ux * vx + uy * vy
}

#[inline]
pub(crate) fn cross_at(apex: Point, a: Point, b: Point) -> i128 {
    let ux = a.x as i128 - apex.x as i128;
    let uy = a.y as i128 - apex.y as i128;
    let vx = b.x as i128 - apex.x as i128;
    let vy = b.y as i128 - apex.y as i128;
    ux * vy - uy * vx
}

#[inline]
pub(crate) fn dist_sq(a: Point, b: Point) -> i128 {
    let dx = a.x as i128 - b.x as i128;
    let dy = a.y as i128 - b.y as i128;
    dx * dx + dy * dy
}

/// True iff the angle a-apex-b is at most pi/2, decided exactly as the sign
/// of the dot product of the two difference vectors.
pub fn nonobtuse_at(apex: Point, a: Point, b: Point) -> Result<bool, GeomError> {
    if a == apex || b == apex {
        return Err(GeomError::DegenerateInput(format!(
            "angle endpoints must differ from the apex {:?}",
            apex
        )));
    }
    Ok(dot_at(apex, a, b) >= 0)
}

/// Same predicate without the coincidence check; callers guarantee
/// `a != apex` and `b != apex`.
#[inline]
pub(crate) fn nonobtuse_unchecked(apex: Point, a: Point, b: Point) -> bool {
    debug_assert!(a != apex && b != apex);
    dot_at(apex, a, b) >= 0
}

/// Sign of the cross product (q - p) x (r - p), exact.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match cross_at(p, q, r).signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// Classifies `s` against the closed triangle `(a, b, c)` using exact
/// orientation signs. Degenerate triangles are allowed; membership then
/// means lying on the segment hull of the three vertices.
pub fn point_in_triangle(s: Point, a: Point, b: Point, c: Point) -> TrianglePosition {
    let d1 = cross_at(a, b, s).signum();
    let d2 = cross_at(b, c, s).signum();
    let d3 = cross_at(c, a, s).signum();
    let has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    let has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    if has_pos && has_neg {
        return TrianglePosition::Outside;
    }
    if d1 == 0 && d2 == 0 && d3 == 0 {
        // All four points collinear: compare along the longer spread axis.
        let key = |p: Point| -> i64 {
            let spread_x =
                a.x.max(b.x).max(c.x).max(s.x) - a.x.min(b.x).min(c.x).min(s.x);
            let spread_y =
                a.y.max(b.y).max(c.y).max(s.y) - a.y.min(b.y).min(c.y).min(s.y);
            if spread_x >= spread_y {
                p.x
            } else {
                p.y
            }
        };
        let (ka, kb, kc, ks) = (key(a), key(b), key(c), key(s));
        let lo = ka.min(kb).min(kc);
        let hi = ka.max(kb).max(kc);
        return if lo <= ks && ks <= hi {
            TrianglePosition::OnBoundary
        } else {
            TrianglePosition::Outside
        };
    }
    if d1 == 0 || d2 == 0 || d3 == 0 {
        TrianglePosition::OnBoundary
    } else {
        TrianglePosition::StrictlyInside
    }
}

/// Rotation angle at `at` between segments `prev-at` and `at-next`, in
/// `[0, pi]`. Computed as `atan2(|cross|, dot)` on exact differences; the
/// boundary values 0, pi/2 and pi come out bit-exact.
pub fn rotation_angle(prev: Point, at: Point, next: Point) -> Result<Angle, GeomError> {
    if prev == at || next == at {
        return Err(GeomError::DegenerateInput(format!(
            "rotation angle needs three points with distinct neighbors of {:?}",
            at
        )));
    }
    let dot = dot_at(at, prev, next);
    let cross = cross_at(at, prev, next).unsigned_abs();
    Ok(Angle((cross as f64).atan2(dot as f64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn nonobtuse_boundary_and_strict_cases() {
        // dot = 0: exactly pi/2 is inside the bound.
        assert!(nonobtuse_at(p(0, 0), p(1, 0), p(0, 1)).unwrap());
        // dot = -1: obtuse.
        assert!(!nonobtuse_at(p(0, 0), p(1, 0), p(-1, 1)).unwrap());
        // dot = 4: acute.
        assert!(nonobtuse_at(p(0, 0), p(2, 1), p(1, 2)).unwrap());
    }

    #[test]
    fn nonobtuse_rejects_coincident_endpoint() {
        assert!(nonobtuse_at(p(0, 0), p(0, 0), p(1, 1)).is_err());
        assert!(nonobtuse_at(p(0, 0), p(1, 1), p(0, 0)).is_err());
    }

    #[test]
    fn orientation_basic() {
        assert_eq!(
            orientation(p(0, 0), p(1, 0), p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(orientation(p(0, 0), p(1, 1), p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(p(0, 0), p(0, 1), p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn orientation_antisymmetric_under_swaps() {
        let flip = |o: Orientation| match o {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        };
        let pts = [p(3, 7), p(-2, 5), p(11, -4)];
        let (a, b, c) = (pts[0], pts[1], pts[2]);
        assert_eq!(orientation(a, b, c), flip(orientation(b, a, c)));
        assert_eq!(orientation(a, b, c), flip(orientation(a, c, b)));
        assert_eq!(orientation(a, b, c), flip(orientation(c, b, a)));
    }

    #[test]
    fn triangle_membership() {
        assert_eq!(
            point_in_triangle(p(1, 1), p(0, 0), p(4, 0), p(0, 4)),
            TrianglePosition::StrictlyInside
        );
        assert_eq!(
            point_in_triangle(p(2, 0), p(0, 0), p(4, 0), p(0, 4)),
            TrianglePosition::OnBoundary
        );
        // Three orientation signs are all positive for this configuration.
        assert_eq!(
            point_in_triangle(p(-1, 1), p(8, 6), p(-10, -2), p(3, -8)),
            TrianglePosition::StrictlyInside
        );
        assert_eq!(
            point_in_triangle(p(5, 5), p(0, 0), p(4, 0), p(0, 4)),
            TrianglePosition::Outside
        );
    }

    #[test]
    fn degenerate_triangle_membership() {
        // Collinear "triangle": membership is the segment hull.
        assert_eq!(
            point_in_triangle(p(1, 0), p(0, 0), p(2, 0), p(3, 0)),
            TrianglePosition::OnBoundary
        );
        assert_eq!(
            point_in_triangle(p(9, 0), p(0, 0), p(2, 0), p(3, 0)),
            TrianglePosition::Outside
        );
        assert_eq!(
            point_in_triangle(p(1, 1), p(0, 0), p(2, 0), p(3, 0)),
            TrianglePosition::Outside
        );
    }

    #[test]
    fn rotation_angle_reference_values() {
        assert_eq!(
            rotation_angle(p(1, 0), p(0, 0), p(0, 1)).unwrap().radians(),
            FRAC_PI_2
        );
        assert_eq!(rotation_angle(p(1, 0), p(0, 0), p(2, 0)).unwrap().radians(), 0.0);
        assert_eq!(rotation_angle(p(1, 0), p(0, 0), p(-1, 0)).unwrap().radians(), PI);
        assert!(rotation_angle(p(0, 0), p(0, 0), p(1, 0)).is_err());
    }

    #[test]
    fn strictly_inside_angles_sum_to_full_turn() {
        let (a, b, c) = (p(0, 0), p(40, 3), p(9, 31));
        let s = p(14, 11);
        assert_eq!(point_in_triangle(s, a, b, c), TrianglePosition::StrictlyInside);
        let sum = rotation_angle(a, s, b).unwrap().radians()
            + rotation_angle(b, s, c).unwrap().radians()
            + rotation_angle(c, s, a).unwrap().radians();
        assert!((sum - 2.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn pointset_rejects_duplicates() {
        let err = PointSet::from_coords(&[(0, 0), (1, 1), (0, 0)]).unwrap_err();
        assert_eq!(err, InputError::DuplicatePoint(0, 2));
    }

    #[test]
    fn pointset_rejects_oversized_coordinates() {
        let err = PointSet::from_coords(&[(0, 0), (MAX_ABS_COORD + 1, 0)]).unwrap_err();
        assert!(matches!(err, InputError::CoordinateOverflow(_)));
    }

    #[test]
    fn exact_predicate_agrees_with_float_angle() {
        // Randomized agreement between the exact predicate and the reported
        // float angle; disagreement is only tolerated inside float noise at
        // the pi/2 boundary, where the exact predicate is authoritative.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 2001) as i64 - 1000
        };
        let mut checked = 0u32;
        while checked < 1_000_000 {
            let apex = p(next(), next());
            let a = p(next(), next());
            let b = p(next(), next());
            if a == apex || b == apex {
                continue;
            }
            checked += 1;
            let exact = nonobtuse_unchecked(apex, a, b);
            let angle = rotation_angle(a, apex, b).unwrap().radians();
            if exact {
                assert!(angle <= FRAC_PI_2 + 1e-9, "exact says nonobtuse, angle {angle}");
            } else {
                assert!(angle > FRAC_PI_2 - 1e-9, "exact says obtuse, angle {angle}");
            }
            let dot = dot_at(apex, a, b);
            if dot == 0 {
                assert!(exact);
            }
        }
    }
}
