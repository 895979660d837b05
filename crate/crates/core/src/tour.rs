//! Construction of acute spanning tours.
//!
//! For even n >= 20 the pipeline is: equitable partition, pick the five
//! lexicographically smallest points per quadrant and pair them into five
//! quadruples, classify the quadruples, then dispatch.
//!
//! * Case 1: some quadruple is upward and a different one is downward. The
//!   tour glues their two hooks with two quadrant-alternating paths.
//! * A leftward/rightward pair reduces to case 1 by rotating the frame a
//!   quarter turn.
//! * Case 2: otherwise at least three quadruples share one hook type and
//!   are concave-obtuse. The frame is normalized so the shared type is
//!   upward and at least two centers lie in quadrant 2; the two subcases
//!   follow the third center.
//!
//! Every symmetry is an exact frame relabeling, never a mirrored code path,
//! and the finished tour is verified exactly before it is returned.

use crate::error::TourError;
use crate::geom::{dist_sq, Angle, Point, PointSet};
use crate::partition::{
    equitable_partition, EquitablePartition, FrameTransformKind, Quadrant,
};
use crate::quadruple::{classify_quadruple, is_acute_path, HookType, Quadruple};
use crate::verify::verify_tour;

/// Smallest point count the construction supports.
pub const MIN_TOUR_POINTS: usize = 20;

/// A spanning tour as a cyclic permutation of input indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Tour {
    pub order: Vec<usize>,
    /// Largest rotation angle, reported in floating point.
    pub max_angle: Angle,
    /// Exact verdict; always true for returned tours.
    pub acute: bool,
}

/// Which branch of the case analysis produced the tour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTaken {
    Case1,
    Case2_1,
    Case2_2,
}

impl CaseTaken {
    pub fn name(self) -> &'static str {
        match self {
            CaseTaken::Case1 => "case1",
            CaseTaken::Case2_1 => "case2.1",
            CaseTaken::Case2_2 => "case2.2",
        }
    }
}

/// Subcase selector for [`case2_tour`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcase {
    /// The center of R lies in quadrant 1.
    R1Center,
    /// The center of R lies in quadrant 2.
    R2Center,
}

/// A classified quadruple together with the input indices of its points;
/// slot i holds the point labeled quadrant i+1.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexedQuadruple {
    pub slots: [usize; 4],
    pub info: Quadruple,
}

impl IndexedQuadruple {
    fn slot(&self, q: Quadrant) -> usize {
        self.slots[q.index()]
    }
}

/// A constructed tour plus the observable record of how it was built.
#[derive(Debug, Clone, PartialEq)]
pub struct TourConstruction {
    pub tour: Tour,
    pub case_taken: CaseTaken,
    pub transforms: Vec<FrameTransformKind>,
    /// The partition in its final (possibly transformed) labeling.
    pub partition: EquitablePartition,
}

/// Constructs an acute spanning tour for even n >= 20.
pub fn construct_acute_tour(points: &PointSet) -> Result<TourConstruction, TourError> {
    validate_size(points.len())?;
    let partition = equitable_partition(points)
        .map_err(|e| TourError::InternalInvariant(e.to_string(), String::new()))?;
    construct_with_partition(points, partition)
}

/// The linear-time part of the construction, for callers that already hold
/// a partition (benchmarks time this separately).
pub fn construct_with_partition(
    points: &PointSet,
    partition: EquitablePartition,
) -> Result<TourConstruction, TourError> {
    validate_size(points.len())?;
    let mut partition = partition;
    let mut transforms: Vec<FrameTransformKind> = Vec::new();

    let reps = select_representatives(points, &partition)?;
    let mut quads: Vec<IndexedQuadruple> = (0..5)
        .map(|j| {
            let slots = [reps[0][j], reps[1][j], reps[2][j], reps[3][j]];
            classify_slots(points, &partition, slots)
        })
        .collect::<Result<_, _>>()?;

    // Opposite vertical pair: case 1 directly.
    if let Some((pi, qi)) = find_pair(&quads, HookType::Upward, HookType::Downward) {
        let tour = case1_tour(points, &partition, &quads[pi], &quads[qi])?;
        return Ok(TourConstruction { tour, case_taken: CaseTaken::Case1, transforms, partition });
    }
    // Opposite horizontal pair: a quarter turn makes it vertical.
    if let Some((pi, qi)) = find_pair(&quads, HookType::Leftward, HookType::Rightward) {
        apply_transform(points, &mut partition, &mut quads, FrameTransformKind::Rotate90)?;
        transforms.push(FrameTransformKind::Rotate90);
        let tour = case1_tour(points, &partition, &quads[pi], &quads[qi])?;
        return Ok(TourConstruction { tour, case_taken: CaseTaken::Case1, transforms, partition });
    }

    // No opposite pair exists, so at least three quadruples share one type
    // and are concave-obtuse.
    let (shared, trio) = find_shared_type(&quads).ok_or_else(|| {
        TourError::InternalInvariant(
            "no hook type is shared by three quadruples although no opposite pair exists".into(),
            diagnostics(points, &partition, &quads, "dispatch"),
        )
    })?;
    for kind in normalize_to_upward(shared) {
        apply_transform(points, &mut partition, &mut quads, kind)?;
        transforms.push(kind);
    }
    for &i in &trio {
        let q = &quads[i];
        if !q.info.convexity().is_concave_obtuse() || !q.info.has_type(HookType::Upward) {
            return Err(TourError::InternalInvariant(
                format!("trio quadruple {} is not concave-obtuse upward after normalization", i),
                diagnostics(points, &partition, &quads, "case2-normalize"),
            ));
        }
    }
    let center_of = |quads: &[IndexedQuadruple], i: usize| -> Result<Quadrant, TourError> {
        quads[i].info.convexity().center().ok_or_else(|| {
            TourError::InternalInvariant(
                "concave quadruple lost its center".into(),
                String::new(),
            )
        })
    };
    let q1_centers = trio
        .iter()
        .filter(|&&i| center_of(&quads, i).ok() == Some(Quadrant::Q1))
        .count();
    if q1_centers >= 2 {
        apply_transform(points, &mut partition, &mut quads, FrameTransformKind::ReflectSwap12_34)?;
        transforms.push(FrameTransformKind::ReflectSwap12_34);
    }

    let mut with_c2: Vec<usize> = Vec::new();
    let mut with_c1: Vec<usize> = Vec::new();
    for &i in &trio {
        match center_of(&quads, i)? {
            Quadrant::Q2 => with_c2.push(i),
            Quadrant::Q1 => with_c1.push(i),
            other => {
                return Err(TourError::InternalInvariant(
                    format!("center of an upward concave-obtuse quadruple lies in {:?}", other),
                    diagnostics(points, &partition, &quads, "case2-centers"),
                ))
            }
        }
    }
    let (mut pi, mut qi, ri, subcase) = match (with_c2.len(), with_c1.len()) {
        (2, 1) => (with_c2[0], with_c2[1], with_c1[0], Subcase::R1Center),
        (3, 0) => (with_c2[0], with_c2[1], with_c2[2], Subcase::R2Center),
        _ => {
            return Err(TourError::InternalInvariant(
                "fewer than two centers landed in quadrant 2 after reflection".into(),
                diagnostics(points, &partition, &quads, "case2-centers"),
            ))
        }
    };
    // Order P before Q so that p2 is below q2 in frame-y, ties by index.
    let below_key = |i: usize| {
        let idx = quads[i].slot(Quadrant::Q2);
        let (_, b) = partition.frame().frame_coords(points[idx]);
        (b, idx)
    };
    if below_key(pi) > below_key(qi) {
        std::mem::swap(&mut pi, &mut qi);
    }
    let tour = case2_tour(points, &partition, &quads[pi], &quads[qi], &quads[ri], subcase)?;
    let case_taken = match subcase {
        Subcase::R1Center => CaseTaken::Case2_1,
        Subcase::R2Center => CaseTaken::Case2_2,
    };
    Ok(TourConstruction { tour, case_taken, transforms, partition })
}

fn validate_size(n: usize) -> Result<(), TourError> {
    if !n.is_multiple_of(2) {
        return Err(TourError::InvalidInput(format!(
            "acute tours exist only for even point counts, got n = {}",
            n
        )));
    }
    if n < MIN_TOUR_POINTS {
        return Err(TourError::UnsupportedSize(n));
    }
    Ok(())
}

/// Five representatives per quadrant: lexicographically smallest by exact
/// frame coordinates, ties by input index.
fn select_representatives(
    points: &PointSet,
    partition: &EquitablePartition,
) -> Result<[[usize; 5]; 4], TourError> {
    let members = partition.members();
    let mut out = [[0usize; 5]; 4];
    for (qi, list) in members.iter().enumerate() {
        if list.len() < 5 {
            return Err(TourError::InternalInvariant(
                format!("quadrant {} holds {} points, need at least 5", qi + 1, list.len()),
                String::new(),
            ));
        }
        let mut keyed: Vec<(i128, i128, usize)> = list
            .iter()
            .map(|&i| {
                let (a, b) = partition.frame().frame_coords(points[i]);
                (a, b, i)
            })
            .collect();
        if keyed.len() > 5 {
            keyed.select_nth_unstable(4);
            keyed.truncate(5);
        }
        keyed.sort_unstable();
        for (j, &(_, _, i)) in keyed.iter().enumerate() {
            out[qi][j] = i;
        }
    }
    Ok(out)
}

fn classify_slots(
    points: &PointSet,
    partition: &EquitablePartition,
    slots: [usize; 4],
) -> Result<IndexedQuadruple, TourError> {
    let pts = slots.map(|i| points[i]);
    let info = classify_quadruple(pts, partition.frame()).map_err(|e| {
        TourError::InternalInvariant(
            format!("representative quadruple failed to classify: {}", e),
            String::new(),
        )
    })?;
    Ok(IndexedQuadruple { slots, info })
}

fn find_pair(
    quads: &[IndexedQuadruple],
    ta: HookType,
    tb: HookType,
) -> Option<(usize, usize)> {
    for x in 0..quads.len() {
        for y in 0..quads.len() {
            if x != y && quads[x].info.has_type(ta) && quads[y].info.has_type(tb) {
                return Some((x, y));
            }
        }
    }
    None
}

/// First hook type carried by at least three concave-obtuse quadruples.
///
/// The trio is restricted to concave-obtuse carriers: when no opposite pair
/// exists, at most one quadruple can hold an opposite pair internally (it is
/// convex or concave-acute), and the remaining four are concave-obtuse with
/// one common type; an internal-pair quadruple may still share that common
/// type and must not enter the trio.
fn find_shared_type(quads: &[IndexedQuadruple]) -> Option<(HookType, Vec<usize>)> {
    for t in HookType::ALL {
        let carriers: Vec<usize> = (0..quads.len())
            .filter(|&i| {
                quads[i].info.has_type(t) && quads[i].info.convexity().is_concave_obtuse()
            })
            .collect();
        if carriers.len() >= 3 {
            return Some((t, carriers[..3].to_vec()));
        }
    }
    None
}

/// Frame transforms that turn the given hook type into upward.
fn normalize_to_upward(t: HookType) -> Vec<FrameTransformKind> {
    match t {
        HookType::Upward => vec![],
        HookType::Leftward => vec![FrameTransformKind::Rotate90],
        HookType::Downward => vec![FrameTransformKind::Rotate180],
        HookType::Rightward => {
            vec![FrameTransformKind::Rotate90, FrameTransformKind::Rotate180]
        }
    }
}

/// Relabels the partition and every quadruple; point indices never change,
/// only quadrant slots permute, so the eventual tour needs no mapping back.
fn apply_transform(
    points: &PointSet,
    partition: &mut EquitablePartition,
    quads: &mut [IndexedQuadruple],
    kind: FrameTransformKind,
) -> Result<(), TourError> {
    *partition = partition.transform(kind);
    let mut perm = [0usize; 4];
    for old in Quadrant::ALL {
        perm[kind.map_label(old).index()] = old.index();
    }
    for quad in quads.iter_mut() {
        let old = quad.slots;
        let slots = [old[perm[0]], old[perm[1]], old[perm[2]], old[perm[3]]];
        *quad = classify_slots(points, partition, slots)?;
    }
    Ok(())
}

/// Builds the alternating path from `from` to `to` that visits `side_a` and
/// `side_b` strictly alternately, starting on side A. Interior points keep
/// their input order; forced first and last edges pin the neighbors of the
/// endpoints. Every interior angle is nonobtuse because consecutive
/// neighbors of each vertex lie in the opposite quadrant.
pub fn alternating_path(
    from: usize,
    to: usize,
    side_a: &[usize],
    side_b: &[usize],
    forced_first: Option<(usize, usize)>,
    forced_last: Option<(usize, usize)>,
) -> Result<Vec<usize>, TourError> {
    let mismatch = |msg: String| Err(TourError::ParityMismatch(msg));
    if !side_a.contains(&from) {
        return mismatch(format!("start {} is not on side A", from));
    }
    let to_in_a = side_a.contains(&to);
    let to_in_b = side_b.contains(&to);
    if to_in_a == to_in_b {
        return mismatch(format!("end {} must lie on exactly one side", to));
    }
    if from == to {
        return mismatch("start and end coincide".into());
    }

    let a_front = from;
    let mut a_back: Option<usize> = None;
    let mut b_front: Option<usize> = None;
    let mut b_back: Option<usize> = None;
    if let Some((u, v)) = forced_first {
        if u != from {
            return mismatch(format!("forced first edge must leave the start, got {} -> {}", u, v));
        }
        if !side_b.contains(&v) {
            return mismatch(format!("forced first edge target {} is not on side B", v));
        }
        b_front = Some(v);
    }
    if let Some((w, x)) = forced_last {
        if x != to {
            return mismatch(format!("forced last edge must enter the end, got {} -> {}", w, x));
        }
        if to_in_a {
            // End on side A, so the incoming edge starts on side B.
            if !side_b.contains(&w) {
                return mismatch(format!("forced last edge source {} is not on side B", w));
            }
            if b_front == Some(w) {
                return mismatch("forced edges pin the same side-B point twice".into());
            }
            b_back = Some(w);
        } else {
            if !side_a.contains(&w) {
                return mismatch(format!("forced last edge source {} is not on side A", w));
            }
            if w == from {
                return mismatch("forced last edge source collides with the start".into());
            }
            a_back = Some(w);
        }
    }
    if to_in_a {
        a_back = Some(to);
    } else {
        if b_front == Some(to) || b_back == Some(to) {
            return mismatch("end collides with a forced-edge point".into());
        }
        b_back = match b_back {
            None => Some(to),
            Some(_) => return mismatch("two points pinned to the back of side B".into()),
        };
    }

    let pinned_a: Vec<usize> = [Some(a_front), a_back].into_iter().flatten().collect();
    let pinned_b: Vec<usize> = [b_front, b_back].into_iter().flatten().collect();
    let mut a_list: Vec<usize> = Vec::with_capacity(side_a.len());
    a_list.push(a_front);
    a_list.extend(side_a.iter().copied().filter(|i| !pinned_a.contains(i)));
    if let Some(w) = a_back {
        a_list.push(w);
    }
    let mut b_list: Vec<usize> = Vec::with_capacity(side_b.len());
    if let Some(v) = b_front {
        b_list.push(v);
    }
    b_list.extend(side_b.iter().copied().filter(|i| !pinned_b.contains(i)));
    if let Some(w) = b_back {
        b_list.push(w);
    }
    if a_list.len() != side_a.len() || b_list.len() != side_b.len() {
        return mismatch("pinned points are missing from their sides".into());
    }

    let expect_a = if to_in_a { side_b.len() + 1 } else { side_b.len() };
    if side_a.len() != expect_a {
        return mismatch(format!(
            "side sizes {} and {} cannot alternate with the given endpoints",
            side_a.len(),
            side_b.len()
        ));
    }
    let mut out = Vec::with_capacity(a_list.len() + b_list.len());
    for k in 0..a_list.len() {
        out.push(a_list[k]);
        if k < b_list.len() {
            out.push(b_list[k]);
        }
    }
    debug_assert_eq!(out.first(), Some(&from));
    debug_assert_eq!(out.last(), Some(&to));
    Ok(out)
}

/// Case 1 tour: hook of upward P, alternating path over quadrants 2 and 4,
/// hook of downward Q, alternating path over quadrants 3 and 1.
pub fn case1_tour(
    points: &PointSet,
    partition: &EquitablePartition,
    p: &IndexedQuadruple,
    q: &IndexedQuadruple,
) -> Result<Tour, TourError> {
    if !p.info.has_type(HookType::Upward) {
        return Err(TourError::InvalidInput("case 1 needs an upward P".into()));
    }
    if !q.info.has_type(HookType::Downward) {
        return Err(TourError::InvalidInput("case 1 needs a downward Q".into()));
    }
    if p.slots == q.slots {
        return Err(TourError::InvalidInput("case 1 needs two distinct quadruples".into()));
    }
    let members = partition.members();
    let (p1, p2, p3, p4) = (p.slots[0], p.slots[1], p.slots[2], p.slots[3]);
    let (q1, q2, q3, q4) = (q.slots[0], q.slots[1], q.slots[2], q.slots[3]);

    let side2 = without(&members[1], &[q2]);
    let side4 = without(&members[3], &[p4]);
    let s2s4 = alternating_path(p2, q4, &side2, &side4, None, None)?;
    let side3 = without(&members[2], &[p3]);
    let side1 = without(&members[0], &[q1]);
    let s3s1 = alternating_path(q3, p1, &side3, &side1, None, None)?;
    debug_assert_path_acute(points, &s2s4);
    debug_assert_path_acute(points, &s3s1);

    let mut order = vec![p1, p3, p4, p2];
    order.extend(&s2s4[1..]);
    order.extend([q2, q1, q3]);
    order.extend(&s3s1[1..]);
    debug_assert_eq!(order.last(), Some(&p1));
    order.pop();
    finalize(points, partition, order, "case1")
}

/// Case 2 tours for three upward concave-obtuse quadruples whose centers of
/// P and Q lie in quadrant 2, p2 below q2.
pub fn case2_tour(
    points: &PointSet,
    partition: &EquitablePartition,
    p: &IndexedQuadruple,
    q: &IndexedQuadruple,
    r: &IndexedQuadruple,
    subcase: Subcase,
) -> Result<Tour, TourError> {
    for (name, quad) in [("P", p), ("Q", q), ("R", r)] {
        if !quad.info.convexity().is_concave_obtuse() || !quad.info.has_type(HookType::Upward) {
            return Err(TourError::InvalidInput(format!(
                "case 2 needs concave-obtuse upward quadruples, {} is not",
                name
            )));
        }
    }
    for (name, quad, want) in [
        ("P", p, Quadrant::Q2),
        ("Q", q, Quadrant::Q2),
        (
            "R",
            r,
            match subcase {
                Subcase::R1Center => Quadrant::Q1,
                Subcase::R2Center => Quadrant::Q2,
            },
        ),
    ] {
        if quad.info.convexity().center() != Some(want) {
            return Err(TourError::InvalidInput(format!(
                "case 2 needs the center of {} in {:?}",
                name, want
            )));
        }
    }
    let members = partition.members();
    let (p1, p2, p3) = (p.slots[0], p.slots[1], p.slots[2]);
    let (q1, q2, q3, q4) = (q.slots[0], q.slots[1], q.slots[2], q.slots[3]);
    let (r1, r2, r3, r4) = (r.slots[0], r.slots[1], r.slots[2], r.slots[3]);

    let mut order = vec![p1, p2, q1, q3, q4];
    match subcase {
        Subcase::R1Center => {
            let side4 = without(&members[3], &[r4]);
            let side2 = without(&members[1], &[p2]);
            let s4s2 = alternating_path(q4, r2, &side4, &side2, Some((q4, q2)), None)?;
            let side3 = without(&members[2], &[q3]);
            let side1 = without(&members[0], &[q1]);
            let s3s1 =
                alternating_path(r3, p1, &side3, &side1, Some((r3, r1)), Some((p3, p1)))?;
            debug_assert_path_acute(points, &s4s2);
            debug_assert_path_acute(points, &s3s1);
            order.extend(&s4s2[1..]);
            order.extend([r4, r3]);
            order.extend(&s3s1[1..]);
        }
        Subcase::R2Center => {
            let side4 = members[3].clone();
            let side2 = without(&members[1], &[p2]);
            let s4s2s4 =
                alternating_path(q4, r4, &side4, &side2, Some((q4, q2)), Some((r2, r4)))?;
            let side1 = without(&members[0], &[q1]);
            let side3 = without(&members[2], &[q3, r3]);
            let s1s3s1 = alternating_path(r1, p1, &side1, &side3, None, Some((p3, p1)))?;
            debug_assert_path_acute(points, &s4s2s4);
            debug_assert_path_acute(points, &s1s3s1);
            order.extend(&s4s2s4[1..]);
            order.extend([r3, r1]);
            order.extend(&s1s3s1[1..]);
        }
    }
    debug_assert_eq!(order.last(), Some(&p1));
    order.pop();
    let label = match subcase {
        Subcase::R1Center => "case2.1",
        Subcase::R2Center => "case2.2",
    };
    finalize(points, partition, order, label)
}

/// Greedy farthest-point path: from the start, repeatedly step to the
/// farthest remaining point (exact squared distances, ties to the smallest
/// index). The result is always an acute spanning path.
pub fn farthest_point_acute_path(
    points: &PointSet,
    start_index: usize,
) -> Result<Vec<usize>, TourError> {
    let n = points.len();
    if n < 2 {
        return Err(TourError::InvalidInput("a path needs at least two points".into()));
    }
    if start_index >= n {
        return Err(TourError::InvalidInput(format!(
            "start index {} out of range for {} points",
            start_index, n
        )));
    }
    let mut remaining: Vec<usize> = (0..n).filter(|&i| i != start_index).collect();
    let mut order = Vec::with_capacity(n);
    order.push(start_index);
    let mut current = start_index;
    while !remaining.is_empty() {
        let mut best = 0usize;
        let mut best_d = dist_sq(points[current], points[remaining[0]]);
        for (k, &i) in remaining.iter().enumerate().skip(1) {
            let d = dist_sq(points[current], points[i]);
            if d > best_d || (d == best_d && i < remaining[best]) {
                best = k;
                best_d = d;
            }
        }
        current = remaining.swap_remove(best);
        order.push(current);
    }
    Ok(order)
}

fn without(list: &[usize], exclude: &[usize]) -> Vec<usize> {
    list.iter().copied().filter(|i| !exclude.contains(i)).collect()
}

fn debug_assert_path_acute(points: &PointSet, order: &[usize]) {
    if cfg!(debug_assertions) {
        let pts: Vec<Point> = order.iter().map(|&i| points[i]).collect();
        debug_assert!(is_acute_path(&pts), "alternating path has an obtuse interior angle");
    }
}

fn finalize(
    points: &PointSet,
    partition: &EquitablePartition,
    order: Vec<usize>,
    label: &str,
) -> Result<Tour, TourError> {
    let report = verify_tour(points, &order)
        .map_err(|e| TourError::InternalInvariant(e.to_string(), String::new()))?;
    if !report.passes() {
        let mut diag = format!(
            "case: {}\norder: {:?}\nviolations: {:?}\n",
            label, order, report.violations
        );
        diag.push_str(&format!(
            "labels: {:?}\nsizes: {:?}\n",
            partition.labels(),
            partition.sizes()
        ));
        return Err(TourError::InternalInvariant(
            "constructed tour failed exact verification".into(),
            diag,
        ));
    }
    Ok(Tour { order, max_angle: report.max_angle, acute: true })
}

fn diagnostics(
    points: &PointSet,
    partition: &EquitablePartition,
    quads: &[IndexedQuadruple],
    stage: &str,
) -> String {
    let mut out = format!("stage: {}\nn: {}\nsizes: {:?}\n", stage, points.len(), partition.sizes());
    for (i, q) in quads.iter().enumerate() {
        out.push_str(&format!(
            "quadruple {}: slots {:?} convexity {:?} types {:?}\n",
            i,
            q.slots,
            q.info.convexity(),
            q.info.types().iter().collect::<Vec<_>>()
        ));
    }
    out
}
