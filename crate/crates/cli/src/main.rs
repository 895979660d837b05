//! Command-line surface: point-set generation, tour construction,
//! verification, the small-instance oracle, and a scaling benchmark.
//!
//! Exit codes: 0 success, 1 invalid input, 2 unsupported size, 3 internal
//! invariant failure. Diagnostics go to stderr; result documents are
//! byte-deterministic for identical inputs and flags.

mod report;
mod svg;

use acute_tours::error::{InputError, OracleError, PartitionError, TourError, VerifyError};
use acute_tours::gen::{generate, PointDistribution};
use acute_tours::geom::PointSet;
use acute_tours::ingest::{parse_points_csv, points_to_csv, MAX_SCALE_K};
use acute_tours::oracle::exhaustive_min_max_tour;
use acute_tours::partition::equitable_partition;
use acute_tours::tour::construct_with_partition;
use acute_tours::verify::verify_tour;
use clap::{Parser, Subcommand};
use report::{ResultDoc, TourOrderDoc};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "acute-tours",
    version,
    about = "Acute spanning tours on planar point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded point-set CSV.
    Gen {
        /// Number of points.
        #[arg(long)]
        n: usize,
        /// uniform | gaussian | clustered | collinear | grid | circle
        #[arg(long, default_value = "uniform")]
        dist: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Decimal scale exponent k; coordinates are written at 10^-k units.
        #[arg(long, default_value_t = 6)]
        scale_k: u32,
    },
    /// Construct an acute spanning tour for an even n >= 20 point set.
    Tour {
        /// Input CSV of decimal x,y pairs.
        #[arg(long)]
        input: PathBuf,
        /// Output result document (JSON).
        #[arg(long)]
        output: PathBuf,
        /// Optional SVG rendering of points, partition lines, and tour.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        scale_k: u32,
    },
    /// Verify a tour document against a point set.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Tour result document produced by `tour`.
        #[arg(long)]
        tour: PathBuf,
        #[arg(long, default_value_t = 6)]
        scale_k: u32,
    },
    /// Exhaustive minimum-max-angle search, n <= 12.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        scale_k: u32,
    },
    /// Time partition and construction per size; emits CSV rows.
    Bench {
        /// Comma-separated point counts.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Failure {
        Failure::new(1, e.to_string())
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Failure {
        let code = match e {
            PartitionError::InternalInvariant(_) => 3,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TourError> for Failure {
    fn from(e: TourError) -> Failure {
        let code = match e {
            TourError::InvalidInput(_) => 1,
            TourError::UnsupportedSize(_) => 2,
            TourError::ParityMismatch(_) | TourError::InternalInvariant(_, _) => 3,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        let code = match e {
            OracleError::UnsupportedSize(_) => 2,
            OracleError::SpanTooLarge(_, _) => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Failure {
        Failure::new(1, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::new(1, e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli.command) {
        Ok(()) => {}
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn check_scale(k: u32) -> Result<(), Failure> {
    if k > MAX_SCALE_K {
        return Err(Failure::new(
            1,
            format!("scale exponent {} out of range 0..={}", k, MAX_SCALE_K),
        ));
    }
    Ok(())
}

fn read_points(path: &Path, scale_k: u32) -> Result<PointSet, Failure> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("{}: {}", path.display(), e)))?;
    Ok(parse_points_csv(&content, scale_k)?)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { n, dist, seed, out, scale_k } => {
            check_scale(scale_k)?;
            let dist: PointDistribution = dist.parse()?;
            let points = generate(dist, n, seed)?;
            std::fs::write(&out, points_to_csv(&points, scale_k))?;
            eprintln!(
                "wrote {} {} points to {}",
                points.len(),
                dist.name(),
                out.display()
            );
            Ok(())
        }
        Command::Tour { input, output, svg, scale_k } => {
            check_scale(scale_k)?;
            let points = read_points(&input, scale_k)?;
            let partition_start = Instant::now();
            let partition = equitable_partition(&points)?;
            let partition_time = partition_start.elapsed();
            let construct_start = Instant::now();
            let built = construct_with_partition(&points, partition)?;
            let construct_time = construct_start.elapsed();

            let doc = ResultDoc {
                n: points.len(),
                scale_k,
                case_taken: built.case_taken.name().to_string(),
                transforms_applied: built
                    .transforms
                    .iter()
                    .map(|t| t.name().to_string())
                    .collect(),
                acute: built.tour.acute,
                max_angle_rad: built.tour.max_angle.radians(),
                order: built.tour.order.clone(),
            };
            std::fs::write(&output, doc.to_canonical_json())?;
            if let Some(svg_path) = svg {
                let report = verify_tour(&points, &built.tour.order)?;
                std::fs::write(
                    &svg_path,
                    svg::render(&points, &built.partition, &built.tour.order, &report),
                )?;
            }
            eprintln!(
                "n={} case={} max_angle={:.6} rad; partition {:.3} ms, construction {:.3} ms",
                points.len(),
                built.case_taken.name(),
                built.tour.max_angle.radians(),
                partition_time.as_secs_f64() * 1e3,
                construct_time.as_secs_f64() * 1e3
            );
            println!(
                "acute: true  max angle: {:.6} rad  case: {}",
                built.tour.max_angle.radians(),
                built.case_taken.name()
            );
            Ok(())
        }
        Command::Verify { input, tour, scale_k } => {
            check_scale(scale_k)?;
            let points = read_points(&input, scale_k)?;
            let content = std::fs::read_to_string(&tour)
                .map_err(|e| Failure::new(1, format!("{}: {}", tour.display(), e)))?;
            let doc: TourOrderDoc = serde_json::from_str(&content)
                .map_err(|e| Failure::new(1, format!("tour document: {}", e)))?;
            let report = verify_tour(&points, &doc.order)?;
            println!(
                "spanning: {}  acute: {}  max angle: {:.6} rad at position {}",
                report.is_permutation,
                report.acute,
                report.max_angle.radians(),
                report.max_angle_vertex
            );
            for &(pos, angle) in &report.violations {
                println!("violation at position {}: angle {:.6} rad", pos, angle);
            }
            if report.is_permutation && report.acute {
                Ok(())
            } else {
                Err(Failure::new(1, "tour is not an acute spanning tour"))
            }
        }
        Command::Oracle { input, scale_k } => {
            check_scale(scale_k)?;
            let points = read_points(&input, scale_k)?;
            let result = exhaustive_min_max_tour(&points)?;
            println!(
                "min-max rotation angle: {:.4} rad",
                result.min_max_angle.radians()
            );
            println!("acute tour exists: {}", result.acute_tour_exists);
            println!(
                "best order: {}",
                result
                    .best_order
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Ok(())
        }
        Command::Bench { sizes, seed, out } => {
            if sizes.is_empty() {
                return Err(Failure::new(1, "bench needs at least one size"));
            }
            let mut csv = String::from("n,t_partition,t_construct\n");
            for (k, &n) in sizes.iter().enumerate() {
                let points = generate(PointDistribution::Uniform, n, seed + k as u64)?;
                let partition_start = Instant::now();
                let partition = equitable_partition(&points)?;
                let t_partition = partition_start.elapsed().as_secs_f64();

                // Median of five construction runs over the same partition.
                let mut times = Vec::with_capacity(5);
                for _ in 0..5 {
                    let part = partition.clone();
                    let start = Instant::now();
                    let built = construct_with_partition(&points, part)?;
                    times.push(start.elapsed().as_secs_f64());
                    if !built.tour.acute {
                        return Err(Failure::new(3, "benchmark tour not acute"));
                    }
                }
                times.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite times"));
                let t_construct = times[times.len() / 2];
                csv.push_str(&format!("{},{:.6},{:.6}\n", n, t_partition, t_construct));
                eprintln!(
                    "n={}: partition {:.3} s, construction median {:.3} s",
                    n, t_partition, t_construct
                );
            }
            match out {
                Some(path) => std::fs::write(&path, csv)?,
                None => print!("{}", csv),
            }
            Ok(())
        }
    }
}
