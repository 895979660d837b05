//! Shared fixtures for the integration and acceptance suites.
#![allow(dead_code)]

use acute_tours::geom::PointSet;

/// A concave-obtuse quadruple with center p2 whose only hook type is
/// upward. Verified by classification in the tests that use it.
pub const K2_BASE: [(i64, i64); 4] = [(31, 67), (-11, 2), (-149, -54), (184, -143)];

/// A concave-obtuse quadruple with center p1 whose only hook type is
/// upward; shares the x-coordinates of [`K2_BASE`] so that translated
/// copies of the two shapes rank consistently inside each quadrant.
pub const K1_BASE: [(i64, i64); 4] = [(31, 14), (-11, 70), (-149, -128), (184, -8)];

/// Horizontal spacing between translated quadruple copies; small enough to
/// keep every point strictly inside its quadrant.
pub const COPY_STEP: i64 = 2;

/// Builds a 20-point instance from five quadruple shapes, copy j translated
/// by (j * COPY_STEP, 0). Point 4j + i is the quadrant-(i+1) point of copy j.
pub fn copies_instance(shapes: [&[(i64, i64); 4]; 5]) -> PointSet {
    let mut coords = Vec::with_capacity(20);
    for (j, shape) in shapes.iter().enumerate() {
        let dx = j as i64 * COPY_STEP;
        for &(x, y) in shape.iter() {
            coords.push((x + dx, y));
        }
    }
    PointSet::from_coords(&coords).expect("crafted instance points are distinct")
}

/// Five upward-only quadruples with all centers in quadrant 2; drives
/// subcase 2.2 with no reflection.
pub fn case22_instance() -> PointSet {
    copies_instance([&K2_BASE; 5])
}

/// Four centers in quadrant 2 and the third quadruple's center in
/// quadrant 1; drives subcase 2.1 with no reflection.
pub fn case21_instance() -> PointSet {
    copies_instance([&K2_BASE, &K2_BASE, &K1_BASE, &K2_BASE, &K2_BASE])
}

/// Five upward-only quadruples with all centers in quadrant 1; forces the
/// reflection normalization and then subcase 2.2.
pub fn reflect_instance() -> PointSet {
    copies_instance([&K1_BASE; 5])
}

/// A convex quadruple carrying upward, downward, and leftward but not
/// rightward; shares the x-coordinates of [`W_BASE`].
pub const Z_BASE: [(i64, i64); 4] = [(106, 12), (-72, 108), (-23, -16), (65, -193)];

/// A concave-obtuse quadruple (center p3) whose only hook type is leftward.
pub const W_BASE: [(i64, i64); 4] = [(106, 185), (-72, 13), (-23, -6), (65, -132)];

/// One internal-opposite-pair quadruple among four exactly-leftward obtuse
/// ones: no opposite pair across quadruples exists, and the shared-type trio
/// must skip the convex copy.
pub fn single_pair_quadruple_instance() -> PointSet {
    copies_instance([&Z_BASE, &W_BASE, &W_BASE, &W_BASE, &W_BASE])
}

/// Five translated axis-aligned squares; every quadruple is convex with all
/// four hook types, so the dispatch takes case 1.
pub fn five_squares_instance() -> PointSet {
    let mut coords = Vec::with_capacity(20);
    for j in 0..5i64 {
        let d = 10 * j;
        coords.push((1000 + d, 1000 + d));
        coords.push((-1000 + d, 1000 + d));
        coords.push((-1000 + d, -1000 + d));
        coords.push((1000 + d, -1000 + d));
    }
    PointSet::from_coords(&coords).expect("squares are distinct")
}
