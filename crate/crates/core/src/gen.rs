//! Seeded point-set generators.
//!
//! All generators work in scaled integer units (at the default scale of
//! 10^6 a unit of 10^9 is a decimal coordinate of 1000) and are
//! deterministic for a fixed seed.

use crate::error::InputError;
use crate::geom::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Normal};
use std::collections::HashSet;

/// The supported input families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointDistribution {
    Uniform,
    Gaussian,
    Clustered,
    Collinear,
    Grid,
    Circle,
}

impl PointDistribution {
    pub const ALL: [PointDistribution; 6] = [
        PointDistribution::Uniform,
        PointDistribution::Gaussian,
        PointDistribution::Clustered,
        PointDistribution::Collinear,
        PointDistribution::Grid,
        PointDistribution::Circle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PointDistribution::Uniform => "uniform",
            PointDistribution::Gaussian => "gaussian",
            PointDistribution::Clustered => "clustered",
            PointDistribution::Collinear => "collinear",
            PointDistribution::Grid => "grid",
            PointDistribution::Circle => "circle",
        }
    }
}

impl std::str::FromStr for PointDistribution {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, InputError> {
        PointDistribution::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| {
                InputError::Parse(format!(
                    "unknown distribution {:?}; expected one of uniform, gaussian, clustered, collinear, grid, circle",
                    s
                ))
            })
    }
}

const RANGE: i64 = 1_000_000_000;

/// Generates `n` distinct points from the named family, deterministically
/// for the given seed.
pub fn generate(dist: PointDistribution, n: usize, seed: u64) -> Result<PointSet, InputError> {
    if n == 0 {
        return Err(InputError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = match dist {
        PointDistribution::Uniform => distinct(n, || {
            (rng.gen_range(-RANGE..=RANGE), rng.gen_range(-RANGE..=RANGE))
        }),
        PointDistribution::Gaussian => {
            let normal = Normal::new(0.0, RANGE as f64 / 4.0).expect("valid sigma");
            distinct(n, || {
                (normal.sample(&mut rng) as i64, normal.sample(&mut rng) as i64)
            })
        }
        PointDistribution::Clustered => {
            let k = 5usize;
            let centers: Vec<(i64, i64)> = (0..k)
                .map(|_| {
                    (
                        rng.gen_range(-8 * RANGE / 10..=8 * RANGE / 10),
                        rng.gen_range(-8 * RANGE / 10..=8 * RANGE / 10),
                    )
                })
                .collect();
            let normal = Normal::new(0.0, RANGE as f64 / 25.0).expect("valid sigma");
            let mut i = 0usize;
            distinct(n, || {
                let c = centers[i % k];
                i += 1;
                (
                    c.0 + normal.sample(&mut rng) as i64,
                    c.1 + normal.sample(&mut rng) as i64,
                )
            })
        }
        PointDistribution::Collinear => {
            let dir = loop {
                let d = (rng.gen_range(-500i64..=500), rng.gen_range(-500i64..=500));
                if d != (0, 0) {
                    break d;
                }
            };
            let base = (
                rng.gen_range(-RANGE / 2..=RANGE / 2),
                rng.gen_range(-RANGE / 2..=RANGE / 2),
            );
            let mut steps: HashSet<i64> = HashSet::with_capacity(n);
            while steps.len() < n {
                steps.insert(rng.gen_range(-1_000_000i64..=1_000_000));
            }
            let mut steps: Vec<i64> = steps.into_iter().collect();
            steps.sort_unstable();
            steps
                .into_iter()
                .map(|t| (base.0 + t * dir.0, base.1 + t * dir.1))
                .collect()
        }
        PointDistribution::Grid => {
            let side = (n as f64).sqrt().ceil() as i64;
            let spacing = 10_000_000i64;
            let half = side * spacing / 2;
            (0..n as i64)
                .map(|i| {
                    let (row, col) = (i / side, i % side);
                    (col * spacing - half, row * spacing - half)
                })
                .collect()
        }
        PointDistribution::Circle => {
            let radius = 9 * RANGE / 10;
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            let mut coords = Vec::with_capacity(n);
            for j in 0..n {
                let theta = phase + std::f64::consts::TAU * j as f64 / n as f64;
                coords.push((
                    (radius as f64 * theta.cos()).round() as i64,
                    (radius as f64 * theta.sin()).round() as i64,
                ));
            }
            coords
        }
    };
    PointSet::from_coords(&coords)
}

fn distinct(n: usize, mut draw: impl FnMut() -> (i64, i64)) -> Vec<(i64, i64)> {
    let mut seen: HashSet<(i64, i64)> = HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let c = draw();
        if seen.insert(c) {
            out.push(c);
        }
    }
    out
}
