use std::path::PathBuf;

use circlust::Linkage;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "circlust", version, about = "Cluster polar-coordinate data on an unrolled cylinder")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// K-means resolved in the middle period of the replicated plane
    Kmeans(KmeansArgs),
    /// DBSCAN keeping patterns that recur across periods
    Dbscan(DbscanArgs),
    /// Agglomerative clustering on the minimum replicated distance
    Hier(HierArgs),
    /// Write a seeded synthetic point table
    Generate(GenerateArgs),
    /// Dinucleotide profiles, trees and cophenetic correlations from FASTA
    Dna(DnaArgs),
    /// Render a labeled table or merge list as SVG
    Plot(PlotArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// CSV table with `r` and `theta` columns
    #[arg(short, long)]
    pub input: PathBuf,
    /// Read `theta` in degrees
    #[arg(long)]
    pub degrees: bool,
    /// Directory for output files (created if missing)
    #[arg(short, long)]
    pub out_dir: PathBuf,
    /// Cylinder base radius; 1 balances radius and angle, 10 is angle-driven
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Record elapsed time in the report
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct KmeansArgs {
    #[command(flatten)]
    pub common: InputArgs,
    #[arg(short, long)]
    pub k: usize,
    /// Extra periods; even, grown by 2 when no valid combination is found
    #[arg(short, long, default_value_t = circlust::search::DEFAULT_KMEANS_REPETITIONS)]
    pub c: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = circlust::KMeansConfig::DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[arg(long, default_value_t = circlust::KMeansConfig::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

#[derive(Args, Debug)]
pub struct DbscanArgs {
    #[command(flatten)]
    pub common: InputArgs,
    #[arg(long)]
    pub eps: f64,
    #[arg(long)]
    pub min_pts: usize,
    #[arg(short, long, default_value_t = circlust::search::DEFAULT_DBSCAN_REPETITIONS)]
    pub c: usize,
    /// Minimum number of periods a pattern must recur in [default: c + 1]
    #[arg(short = 'y', long)]
    pub min_repetitions: Option<usize>,
}

#[derive(Args, Debug)]
pub struct HierArgs {
    #[command(flatten)]
    pub common: InputArgs,
    #[arg(short, long, default_value_t = 1)]
    pub c: usize,
    #[arg(long, default_value_t = Linkage::Single)]
    pub linkage: Linkage,
    /// Number of clusters for the labeled table
    #[arg(short, long, default_value_t = 2)]
    pub k: usize,
    /// Also write the tree in Newick format
    #[arg(long)]
    pub newick: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(short, long)]
    pub n: usize,
    #[arg(long)]
    pub classes: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Standard deviation of the angle around each class center (radians)
    #[arg(long, default_value_t = 0.3)]
    pub angular_spread: f64,
    #[arg(long, default_value_t = 0.0)]
    pub radial_spread: f64,
    #[arg(long, default_value_t = 1.0)]
    pub base_radius: f64,
    /// Angle of the first class center; the others are evenly spaced
    #[arg(long, default_value_t = 0.0)]
    pub offset: f64,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct DnaArgs {
    /// FASTA file
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    #[arg(short, long, default_value_t = 1)]
    pub c: usize,
    #[arg(long, default_value_t = Linkage::Single)]
    pub linkage: Linkage,
    #[arg(long)]
    pub newick: bool,
    #[arg(long)]
    pub timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    PolarScatter,
    PlaneScatter,
    Dendrogram,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    /// Labeled point table, or a merge list for dendrograms
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub kind: PlotKind,
    #[arg(short, long)]
    pub output: PathBuf,
    #[arg(long)]
    pub degrees: bool,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Extra periods drawn by plane-scatter
    #[arg(short, long, default_value_t = 4)]
    pub c: usize,
}
