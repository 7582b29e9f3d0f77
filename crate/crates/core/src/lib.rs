//! Clustering for data in polar coordinates.
//!
//! Points `(r, θ)` are mapped to the lateral surface of a cylinder with base
//! radius `R` and unrolled onto the plane `(x', y') = (Rθ, r)`. Larger `R`
//! weighs angular differences more heavily. Because the unrolled plane is cut
//! at `θ = 0`, the plane is tiled with extra copies of the base period and
//! ordinary clusterers (k-means, DBSCAN, agglomerative) are run on the tiled
//! plane; [`search`] folds their output back onto the original points.
//!
//! ```
//! use circlust::{circular_dbscan, fixtures, DbscanConfig, ReconstructionParams};
//!
//! let data = fixtures::seven_point();
//! let params = ReconstructionParams::new(1.0, 4).unwrap();
//! let cfg = DbscanConfig::new(1.5, 2).unwrap();
//! let result = circular_dbscan(&data.points, &cfg, &params, 5).unwrap();
//! assert_eq!(result.labeling.labels(), &[0, 0, 0, 0, 1, 1, 1]);
//! ```

pub mod analysis;
pub mod bioseq;
pub mod cluster;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod metrics;
pub mod search;

pub use analysis::{
    adjusted_rand_index, cophenetic_correlation, cophenetic_matrix, generate_synthetic,
    CopheneticMatrix, SyntheticSpec,
};
pub use bioseq::{dna_to_polar, parse_fasta, sequence_dendrogram, DinucleotideProfile, NucleotideSequence};
pub use cluster::{
    cut_dendrogram, dbscan, hierarchical, kmeans, DbscanConfig, Dendrogram, KMeansConfig, Labeling,
    Linkage, Merge, OUTLIER,
};
pub use error::{Error, Result};
pub use geometry::{
    normalize_angle, polar_to_cartesian, reconstruct, replicate, CartesianPoint, PlanePoint,
    PolarPoint, ReconstructionParams,
};
pub use metrics::{circular_distance, euclidean_distance, manhattan_distance, pairwise_circular, DistanceMatrix};
pub use search::{
    circular_dbscan, circular_hierarchical, circular_kmeans, CircularDbscanResult,
    CircularKMeansResult,
};
