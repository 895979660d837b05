//! Acute spanning tours on planar point sets.
//!
//! For any even n >= 20 distinct points the library constructs a spanning
//! tour whose every rotation angle is at most pi/2, decided exactly on
//! integer coordinates. The pipeline is an equitable partition by two
//! orthogonal lines, a classification of one-point-per-quadrant quadruples
//! by their acute hook paths, and a case analysis that stitches hooks
//! together with quadrant-alternating paths. A brute-force oracle covers
//! small instances and an independent verifier checks every result.

pub mod error;
pub mod gen;
pub mod geom;
pub mod ingest;
pub mod oracle;
pub mod partition;
pub mod quadruple;
pub mod tour;
pub mod verify;

pub use error::{
    GeomError, InputError, OracleError, PartitionError, QuadrupleError, TourError, VerifyError,
};
pub use geom::{Angle, Orientation, Point, PointSet, TrianglePosition};
pub use partition::{
    equitable_partition, equitable_partition_with, EquitablePartition, FrameTransformKind,
    OrthoFrame, PartitionStrategy, Quadrant,
};
pub use tour::{construct_acute_tour, CaseTaken, Tour, TourConstruction};
pub use verify::{verify_path, verify_tour, VerificationReport};
