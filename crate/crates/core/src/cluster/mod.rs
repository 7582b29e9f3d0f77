//! Planar clustering engines. None of these know about circularity; the
//! [`crate::search`] module drives them over the replicated plane.

mod dbscan;
mod hierarchy;
mod kmeans;
mod labeling;

pub use dbscan::{dbscan, dbscan_detailed, dbscan_precomputed, DbscanConfig, DbscanResult};
pub use hierarchy::{cut_dendrogram, hierarchical, Dendrogram, Linkage, Merge};
pub use kmeans::{kmeans, KMeansConfig, KMeansResult};
pub use labeling::{Labeling, OUTLIER};
