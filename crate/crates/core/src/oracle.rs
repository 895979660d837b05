//! Exhaustive minimum-max-rotation-angle search for small instances.
//!
//! Enumerates the (n-1)!/2 distinct Hamiltonian cycles of up to 12 points
//! and returns the order minimizing the largest rotation angle. Angles are
//! never compared through floats: each angle is the exact certificate
//! (dot, |cross|) of its difference vectors and comparisons cross-multiply
//! in i128. Floats appear only in the reported radians.

use crate::error::OracleError;
use crate::geom::{cross_at, dot_at, Angle, Point, PointSet};
use std::cmp::Ordering;

/// Result of the exhaustive search.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Lexicographically smallest optimal order, starting at index 0.
    pub best_order: Vec<usize>,
    /// The optimal maximum rotation angle, reported in floating point.
    pub min_max_angle: Angle,
    /// Exact verdict: the optimum passes the nonobtuse predicate everywhere.
    pub acute_tour_exists: bool,
}

pub const ORACLE_MIN_POINTS: usize = 3;
pub const ORACLE_MAX_POINTS: usize = 12;

/// Largest coordinate span the exact comparator supports; beyond this the
/// cross-multiplied certificates would overflow i128.
pub const ORACLE_MAX_SPAN: i64 = 500_000_000;

/// Exact certificate of a rotation angle in [0, pi].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct AngleCert {
    dot: i128,
    cross: i128,
}

impl AngleCert {
    fn at(prev: Point, apex: Point, next: Point) -> AngleCert {
        AngleCert {
            dot: dot_at(apex, prev, next),
            cross: cross_at(apex, prev, next).abs(),
        }
    }

    /// Region 0 is [0, pi/2), region 1 is exactly pi/2, region 2 is the rest.
    fn region(self) -> u8 {
        match self.dot.signum() {
            1 => 0,
            0 => 1,
            _ => 2,
        }
    }

    fn radians(self) -> f64 {
        (self.cross as f64).atan2(self.dot as f64)
    }
}

/// Compares two certificates by the angle they represent, exactly.
fn angle_cmp(a: AngleCert, b: AngleCert) -> Ordering {
    let (ra, rb) = (a.region(), b.region());
    if ra != rb {
        return ra.cmp(&rb);
    }
    if ra == 1 {
        return Ordering::Equal;
    }
    // Within one region tan is monotone and the denominators share a sign,
    // so theta_a < theta_b iff cross_a * dot_b < cross_b * dot_a.
    (a.cross * b.dot).cmp(&(b.cross * a.dot))
}

fn max_cert(a: Option<AngleCert>, b: AngleCert) -> AngleCert {
    match a {
        None => b,
        Some(a) => {
            if angle_cmp(b, a) == Ordering::Greater {
                b
            } else {
                a
            }
        }
    }
}

fn validate(points: &PointSet) -> Result<Vec<Point>, OracleError> {
    let n = points.len();
    if !(ORACLE_MIN_POINTS..=ORACLE_MAX_POINTS).contains(&n) {
        return Err(OracleError::UnsupportedSize(n));
    }
    // Translate to the corner of the bounding box; angles are translation
    // invariant and small coordinates keep the certificates in range.
    let min_x = points.points().iter().map(|p| p.x).min().unwrap();
    let min_y = points.points().iter().map(|p| p.y).min().unwrap();
    let max_x = points.points().iter().map(|p| p.x).max().unwrap();
    let max_y = points.points().iter().map(|p| p.y).max().unwrap();
    let span = (max_x - min_x).max(max_y - min_y);
    if span > ORACLE_MAX_SPAN {
        return Err(OracleError::SpanTooLarge(span, ORACLE_MAX_SPAN));
    }
    Ok(points
        .points()
        .iter()
        .map(|p| Point::new(p.x - min_x, p.y - min_y))
        .collect())
}

/// Exact maximum rotation angle of one explicit cyclic order; the
/// instrument used to cross-check the verifier on small instances.
/// `order` must be a permutation of the point indices.
pub fn evaluate_tour_max_angle(points: &PointSet, order: &[usize]) -> Result<Angle, OracleError> {
    let pts = validate(points)?;
    assert_eq!(order.len(), pts.len(), "order must cover every point exactly once");
    let n = order.len();
    let mut max: Option<AngleCert> = None;
    for k in 0..n {
        let prev = pts[order[(k + n - 1) % n]];
        let at = pts[order[k]];
        let next = pts[order[(k + 1) % n]];
        max = Some(max_cert(max, AngleCert::at(prev, at, next)));
    }
    Ok(Angle(max.expect("cycle is nonempty").radians()))
}

/// Exhaustive min-max search over all Hamiltonian cycles.
///
/// Cycles are enumerated with vertex 0 fixed and the reflection with the
/// larger second vertex discarded; branches whose partial maximum already
/// reaches the incumbent are pruned, which cannot change the optimum. The
/// first optimal tour in lexicographic order is returned.
pub fn exhaustive_min_max_tour(points: &PointSet) -> Result<OracleResult, OracleError> {
    let pts = validate(points)?;
    let n = pts.len();
    let mut order: Vec<usize> = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    let mut best: Option<(AngleCert, Vec<usize>)> = None;

    fn dfs(
        pts: &[Point],
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        cur_max: Option<AngleCert>,
        best: &mut Option<(AngleCert, Vec<usize>)>,
    ) {
        let n = pts.len();
        let pos = order.len();
        if pos == n {
            if order[1] > order[n - 1] {
                return;
            }
            let closing_a = AngleCert::at(pts[order[n - 2]], pts[order[n - 1]], pts[order[0]]);
            let closing_b = AngleCert::at(pts[order[n - 1]], pts[order[0]], pts[order[1]]);
            let total = max_cert(Some(max_cert(cur_max, closing_a)), closing_b);
            let better = match best {
                None => true,
                Some((incumbent, _)) => angle_cmp(total, *incumbent) == Ordering::Less,
            };
            if better {
                *best = Some((total, order.clone()));
            }
            return;
        }
        for next in 1..n {
            if used[next] {
                continue;
            }
            let new_max = if pos >= 2 {
                let cert = AngleCert::at(pts[order[pos - 2]], pts[order[pos - 1]], pts[next]);
                Some(max_cert(cur_max, cert))
            } else {
                cur_max
            };
            if let (Some(m), Some((incumbent, _))) = (new_max, best.as_ref()) {
                if angle_cmp(m, *incumbent) != Ordering::Less {
                    continue;
                }
            }
            used[next] = true;
            order.push(next);
            dfs(pts, order, used, new_max, best);
            order.pop();
            used[next] = false;
        }
    }
    dfs(&pts, &mut order, &mut used, None, &mut best);

    let (cert, best_order) = best.expect("at least one cycle exists for n >= 3");
    Ok(OracleResult {
        best_order,
        min_max_angle: Angle(cert.radians()),
        acute_tour_exists: cert.dot >= 0,
    })
}
