//! Bundled datasets.
//!
//! `seven_point` is a constructed seven-sample example: two of its points,
//! `(0.2, π/2)` and `(0.2, 3π/2)`, sit close to the origin on opposite sides,
//! so Cartesian clustering confuses them; the remaining five are placed so
//! that the upper class `{0, 1, 2, 3}` is an eps = 0.5 chain on the unrolled
//! plane while the lower class `{4, 5, 6}` only connects at eps = 1.5, through
//! the `θ = 0` seam.

use crate::bioseq::{parse_fasta_str, NucleotideSequence};
use crate::cluster::Labeling;
use crate::geometry::PolarPoint;

pub const SEVEN_POINT_CSV: &str = include_str!("../data/seven_point.csv");
pub const BETA_GLOBIN_FASTA: &str = include_str!("../data/beta_globin_exon1.fasta");

/// Index of the `(0.2, π/2)` sample.
pub const GREEN: usize = 0;
/// Index of the `(0.2, 3π/2)` sample.
pub const PURPLE: usize = 4;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub points: Vec<PolarPoint>,
    pub truth: Labeling,
}

pub fn seven_point() -> Fixture {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for line in SEVEN_POINT_CSV.lines().skip(1) {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().expect("bundled csv")).collect();
        points.push(PolarPoint::new(f[0], f[1]).expect("bundled csv"));
        labels.push(f[2] as i64);
    }
    Fixture {
        points,
        truth: Labeling::new(labels).expect("bundled csv"),
    }
}

/// Human, chimpanzee and mouse beta-globin first exons, in that order.
pub fn beta_globin() -> Vec<NucleotideSequence> {
    parse_fasta_str(BETA_GLOBIN_FASTA).expect("bundled fasta")
}
