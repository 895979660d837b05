//! Quadruples: one point per closed quadrant, classified by convexity and
//! by which of the four hook paths are acute.
//!
//! A hook is a 4-vertex path visiting all points of the quadruple; the
//! quadruple is upward when p2 p4 p3 p1 is acute, downward when p3 p1 p2 p4
//! is, leftward when p2 p4 p1 p3 is, and rightward when p1 p3 p2 p4 is.
//! Types are computed definitionally from the exact path predicate rather
//! than re-derived from the structure lemmas, which keeps degenerate inputs
//! (collinear points, points on the axes) well defined.

use crate::error::QuadrupleError;
use crate::geom::{
    nonobtuse_unchecked, point_in_triangle, Point, TrianglePosition,
};
use crate::partition::{OrthoFrame, Quadrant};

/// The four hook orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookType {
    Upward,
    Downward,
    Leftward,
    Rightward,
}

impl HookType {
    pub const ALL: [HookType; 4] = [
        HookType::Upward,
        HookType::Downward,
        HookType::Leftward,
        HookType::Rightward,
    ];

    /// Quadrant slots (0-based) visited by the defining hook path.
    fn path_slots(self) -> [usize; 4] {
        match self {
            HookType::Upward => [1, 3, 2, 0],
            HookType::Downward => [2, 0, 1, 3],
            HookType::Leftward => [1, 3, 0, 2],
            HookType::Rightward => [0, 2, 1, 3],
        }
    }
}

/// Set of hook types a quadruple carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TypeSet(u8);

impl TypeSet {
    fn bit(t: HookType) -> u8 {
        match t {
            HookType::Upward => 1,
            HookType::Downward => 2,
            HookType::Leftward => 4,
            HookType::Rightward => 8,
        }
    }

    pub fn insert(&mut self, t: HookType) {
        self.0 |= Self::bit(t);
    }

    pub fn contains(self, t: HookType) -> bool {
        self.0 & Self::bit(t) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = HookType> {
        HookType::ALL.into_iter().filter(move |&t| self.contains(t))
    }
}

/// Convex position, or concave with the named center; a concave quadruple
/// is acute when some angle at the center is at most pi/2 and obtuse when
/// all three are larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convexity {
    Convex,
    ConcaveAcute { center: Quadrant },
    ConcaveObtuse { center: Quadrant },
}

impl Convexity {
    pub fn center(self) -> Option<Quadrant> {
        match self {
            Convexity::Convex => None,
            Convexity::ConcaveAcute { center } | Convexity::ConcaveObtuse { center } => {
                Some(center)
            }
        }
    }

    pub fn is_concave_obtuse(self) -> bool {
        matches!(self, Convexity::ConcaveObtuse { .. })
    }
}

/// A classified quadruple; slot i holds the point labeled quadrant i+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadruple {
    points: [Point; 4],
    convexity: Convexity,
    types: TypeSet,
}

impl Quadruple {
    pub fn points(&self) -> [Point; 4] {
        self.points
    }

    pub fn point(&self, q: Quadrant) -> Point {
        self.points[q.index()]
    }

    pub fn convexity(&self) -> Convexity {
        self.convexity
    }

    pub fn types(&self) -> TypeSet {
        self.types
    }

    pub fn has_type(&self, t: HookType) -> bool {
        self.types.contains(t)
    }
}

/// True iff every interior vertex of the path has a nonobtuse angle, decided
/// exactly. Length-2 paths are vacuously acute. Callers guarantee that
/// consecutive points are distinct.
pub fn is_acute_path(path: &[Point]) -> bool {
    path.windows(3)
        .all(|w| nonobtuse_unchecked(w[1], w[0], w[2]))
}

/// Classifies four points, one per closed quadrant of `frame`, slot i
/// carrying quadrant label i.
pub fn classify_quadruple(
    points: [Point; 4],
    frame: &OrthoFrame,
) -> Result<Quadruple, QuadrupleError> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if points[i] == points[j] {
                return Err(QuadrupleError::PreconditionViolation(format!(
                    "quadruple points must be distinct, slots {} and {} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    for (i, &p) in points.iter().enumerate() {
        let q = Quadrant::from_index(i);
        if !frame.closed_quadrant_contains(q, p) {
            return Err(QuadrupleError::PreconditionViolation(format!(
                "slot {} point {:?} is outside closed quadrant {}",
                i + 1,
                p,
                i + 1
            )));
        }
    }

    // A point weakly inside the triangle of the other three makes the
    // quadruple concave with that point as center; the lowest slot wins
    // degenerate ties.
    let mut center: Option<usize> = None;
    for c in 0..4 {
        let others: Vec<Point> = (0..4).filter(|&i| i != c).map(|i| points[i]).collect();
        if point_in_triangle(points[c], others[0], others[1], others[2])
            != TrianglePosition::Outside
        {
            center = Some(c);
            break;
        }
    }
    let convexity = match center {
        None => Convexity::Convex,
        Some(c) => {
            let s = points[c];
            let others: Vec<Point> = (0..4).filter(|&i| i != c).map(|i| points[i]).collect();
            let any_nonobtuse = nonobtuse_unchecked(s, others[0], others[1])
                || nonobtuse_unchecked(s, others[0], others[2])
                || nonobtuse_unchecked(s, others[1], others[2]);
            let center = Quadrant::from_index(c);
            if any_nonobtuse {
                Convexity::ConcaveAcute { center }
            } else {
                Convexity::ConcaveObtuse { center }
            }
        }
    };

    let mut types = TypeSet::default();
    for t in HookType::ALL {
        let slots = t.path_slots();
        let path = [
            points[slots[0]],
            points[slots[1]],
            points[slots[2]],
            points[slots[3]],
        ];
        if is_acute_path(&path) {
            types.insert(t);
        }
    }
    if types.is_empty() {
        return Err(QuadrupleError::InternalInvariant(format!(
            "quadruple {:?} has no hook type, contradicting the structure lemmas",
            points
        )));
    }
    Ok(Quadruple { points, convexity, types })
}

/// For `p` in one closed quadrant and `q`, `r` both in the opposite closed
/// quadrant the angle q-p-r is always nonobtuse; this is the guarded form of
/// that observation. Returns an error when the quadrant condition fails.
pub fn opposite_quadrant_acute(
    p: Point,
    q: Point,
    r: Point,
    frame: &OrthoFrame,
) -> Result<bool, QuadrupleError> {
    let placed = Quadrant::ALL.into_iter().any(|quad| {
        frame.closed_quadrant_contains(quad, p)
            && frame.closed_quadrant_contains(quad.opposite(), q)
            && frame.closed_quadrant_contains(quad.opposite(), r)
    });
    if !placed {
        return Err(QuadrupleError::PreconditionViolation(format!(
            "{:?} and {:?} must lie in the closed quadrant opposite to {:?}",
            q, r, p
        )));
    }
    if p == q || p == r {
        return Err(QuadrupleError::PreconditionViolation(
            "angle endpoints must differ from the apex".into(),
        ));
    }
    let ok = nonobtuse_unchecked(p, q, r);
    if !ok {
        return Err(QuadrupleError::InternalInvariant(
            "opposite-quadrant angle came out obtuse".into(),
        ));
    }
    Ok(true)
}
