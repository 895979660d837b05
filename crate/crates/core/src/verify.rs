//! Independent exact checking of tours and paths.
//!
//! The verifier shares nothing with the construction pipeline except the
//! geometric kernel: it re-derives every verdict from the exact nonobtuse
//! predicate and reports float angles for diagnostics only.

use crate::error::VerifyError;
use crate::geom::{dot_at, rotation_angle, Angle, Point, PointSet};

/// Outcome of verifying a tour or path.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// For tours: the order visits every input index exactly once.
    pub is_permutation: bool,
    /// Exact verdict: every checked vertex passes the nonobtuse predicate.
    pub acute: bool,
    /// Offending vertices as (position in the order, reported angle).
    pub violations: Vec<(usize, f64)>,
    /// Largest reported angle over the checked vertices.
    pub max_angle: Angle,
    /// Position in the order attaining `max_angle`.
    pub max_angle_vertex: usize,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.is_permutation && self.acute
    }
}

fn scan_angles(
    triples: impl Iterator<Item = (usize, Point, Point, Point)>,
    is_permutation: bool,
) -> Result<VerificationReport, VerifyError> {
    let mut violations = Vec::new();
    let mut max_angle = -1.0f64;
    let mut max_vertex = 0usize;
    for (pos, prev, at, next) in triples {
        if prev == at || next == at {
            return Err(VerifyError::DegenerateInput(format!(
                "consecutive points coincide around position {}",
                pos
            )));
        }
        let angle = rotation_angle(prev, at, next)
            .expect("neighbors validated distinct")
            .radians();
        if dot_at(at, prev, next) < 0 {
            violations.push((pos, angle));
        }
        if angle > max_angle {
            max_angle = angle;
            max_vertex = pos;
        }
    }
    let acute = violations.is_empty();
    Ok(VerificationReport {
        is_permutation,
        acute,
        violations,
        max_angle: Angle(max_angle.max(0.0)),
        max_angle_vertex: max_vertex,
    })
}

/// Verifies a cyclic order over a point set: permutation first, then the
/// exact angle predicate at all n cyclic triples.
pub fn verify_tour(points: &PointSet, order: &[usize]) -> Result<VerificationReport, VerifyError> {
    let n = points.len();
    if order.len() != n {
        return Err(VerifyError::LengthMismatch { got: order.len(), expected: n });
    }
    for &i in order {
        if i >= n {
            return Err(VerifyError::IndexOutOfRange(i));
        }
    }
    let mut seen = vec![false; n];
    let mut is_permutation = true;
    for &i in order {
        if seen[i] {
            is_permutation = false;
            break;
        }
        seen[i] = true;
    }
    let triples = (0..n).map(|k| {
        let prev = points[order[(k + n - 1) % n]];
        let at = points[order[k]];
        let next = points[order[(k + 1) % n]];
        (k, prev, at, next)
    });
    scan_angles(triples, is_permutation)
}

/// Verifies an open path given as explicit points: interior vertices only,
/// no wraparound. Paths that revisit a point are rejected.
pub fn verify_path(points: &[Point]) -> Result<VerificationReport, VerifyError> {
    if points.len() < 2 {
        return Err(VerifyError::DegenerateInput(
            "a path needs at least two points".into(),
        ));
    }
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(VerifyError::DegenerateInput(
            "path revisits a point".into(),
        ));
    }
    if points.len() == 2 {
        return Ok(VerificationReport {
            is_permutation: true,
            acute: true,
            violations: Vec::new(),
            max_angle: Angle(0.0),
            max_angle_vertex: 0,
        });
    }
    let triples = (1..points.len() - 1).map(|k| (k, points[k - 1], points[k], points[k + 1]));
    scan_angles(triples, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn square_cycle_is_acute_with_right_angles() {
        let points =
            PointSet::from_coords(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        let report = verify_tour(&points, &[0, 1, 2, 3]).unwrap();
        assert!(report.passes());
        assert_eq!(report.max_angle.radians(), FRAC_PI_2);
    }

    #[test]
    fn sorted_collinear_cycle_fails_at_interior_vertices() {
        let points =
            PointSet::from_coords(&[(0, 0), (1, 0), (2, 0), (3, 0)]).unwrap();
        let report = verify_tour(&points, &[0, 1, 2, 3]).unwrap();
        assert!(report.is_permutation);
        assert!(!report.acute);
        let spots: Vec<usize> = report.violations.iter().map(|v| v.0).collect();
        assert_eq!(spots, vec![1, 2]);
        for &(_, angle) in &report.violations {
            assert_eq!(angle, PI);
        }
    }

    #[test]
    fn zigzag_collinear_cycle_is_acute() {
        let points =
            PointSet::from_coords(&[(0, 0), (1, 0), (2, 0), (3, 0)]).unwrap();
        let report = verify_tour(&points, &[0, 2, 1, 3]).unwrap();
        assert!(report.passes());
        assert_eq!(report.max_angle.radians(), 0.0);
    }

    #[test]
    fn repeated_index_is_not_a_permutation() {
        let points =
            PointSet::from_coords(&[(0, 0), (1, 0), (2, 1), (3, 0)]).unwrap();
        let report = verify_tour(&points, &[0, 1, 0, 2]).unwrap();
        assert!(!report.is_permutation);
        assert!(!report.passes());
    }

    #[test]
    fn tour_input_validation() {
        let points = PointSet::from_coords(&[(0, 0), (1, 0), (2, 1)]).unwrap();
        assert!(matches!(
            verify_tour(&points, &[0, 1]),
            Err(VerifyError::LengthMismatch { .. })
        ));
        assert!(matches!(
            verify_tour(&points, &[0, 1, 7]),
            Err(VerifyError::IndexOutOfRange(7))
        ));
    }

    #[test]
    fn path_examples() {
        assert!(verify_path(&[p(0, 0), p(1, 0)]).unwrap().passes());
        assert!(matches!(
            verify_path(&[p(0, 0), p(1, 0), p(0, 0)]),
            Err(VerifyError::DegenerateInput(_))
        ));
        let report = verify_path(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        assert!(report.acute);
        assert_eq!(report.max_angle.radians(), FRAC_PI_2);
        let bent = verify_path(&[p(0, 0), p(1, 0), p(2, 1)]).unwrap();
        assert!(!bent.acute);
    }
}
