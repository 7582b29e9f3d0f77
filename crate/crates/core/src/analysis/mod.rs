//! Synthetic data, partition agreement and dendrogram comparison.

mod ari;
mod cophenetic;
mod synthetic;

pub use ari::adjusted_rand_index;
pub use cophenetic::{cophenetic_correlation, cophenetic_matrix, CopheneticMatrix};
pub use synthetic::{evenly_spaced_centers, generate_synthetic, SyntheticSpec};
