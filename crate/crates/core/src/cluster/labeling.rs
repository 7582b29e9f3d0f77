use std::collections::HashMap;

use crate::error::{Error, Result};

/// Label for points that belong to no cluster.
pub const OUTLIER: i64 = -1;

/// Cluster assignment per point.
///
/// Non-outlier labels always form the contiguous range `0..k`, numbered in
/// order of each cluster's first point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<i64>,
}

impl Labeling {
    /// Validates raw labels: `-1` or a contiguous range starting at 0.
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        let max = labels.iter().copied().max().unwrap_or(OUTLIER);
        if let Some(bad) = labels.iter().find(|&&l| l < OUTLIER) {
            return Err(Error::InvalidParameter(format!("invalid label {bad}")));
        }
        if max >= 0 {
            let mut present = vec![false; max as usize + 1];
            for &l in labels.iter().filter(|&&l| l >= 0) {
                present[l as usize] = true;
            }
            if present.iter().any(|p| !p) {
                return Err(Error::InvalidParameter(
                    "cluster labels are not contiguous from 0".into(),
                ));
            }
        }
        Ok(Self { labels })
    }

    /// Renumbers arbitrary group ids by first appearance; `None` is an outlier.
    pub fn from_groups<T: Eq + std::hash::Hash + Copy>(groups: &[Option<T>]) -> Self {
        let mut ids: HashMap<T, i64> = HashMap::new();
        let labels = groups
            .iter()
            .map(|g| match g {
                None => OUTLIER,
                Some(key) => {
                    let next = ids.len() as i64;
                    *ids.entry(*key).or_insert(next)
                }
            })
            .collect();
        Self { labels }
    }

    /// Renumbers any labeling (negative values are outliers) into canonical
    /// first-appearance order.
    pub fn canonical(raw: &[i64]) -> Self {
        let groups: Vec<Option<i64>> = raw.iter().map(|&l| (l >= 0).then_some(l)).collect();
        Self::from_groups(&groups)
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn n_clusters(&self) -> usize {
        self.labels.iter().copied().max().map_or(0, |m| (m + 1).max(0) as usize)
    }

    pub fn n_outliers(&self) -> usize {
        self.labels.iter().filter(|&&l| l == OUTLIER).count()
    }

    /// Member indices of each cluster, in label order.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_clusters()];
        for (i, &l) in self.labels.iter().enumerate() {
            if l >= 0 {
                out[l as usize].push(i);
            }
        }
        out
    }

    /// True when both labelings describe the same partition, ignoring
    /// label names. Outliers must match exactly.
    pub fn same_partition(&self, other: &Labeling) -> bool {
        self.len() == other.len()
            && Self::canonical(&self.labels) == Self::canonical(&other.labels)
    }

    /// Restricts the labeling to the points where `keep` is true, renumbering
    /// canonically.
    pub fn restrict(&self, keep: &[bool]) -> Labeling {
        let raw: Vec<i64> = self
            .labels
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(&l, _)| l)
            .collect();
        Self::canonical(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_contiguity() {
        assert!(Labeling::new(vec![0, 1, -1, 1]).is_ok());
        assert!(Labeling::new(vec![0, 2]).is_err());
        assert!(Labeling::new(vec![-2]).is_err());
        assert!(Labeling::new(vec![-1, -1]).is_ok());
    }

    #[test]
    fn canonical_renumbers_by_first_appearance() {
        let l = Labeling::canonical(&[5, 5, -3, 2, 5]);
        assert_eq!(l.labels(), &[0, 0, -1, 1, 0]);
        assert_eq!(l.n_clusters(), 2);
        assert_eq!(l.n_outliers(), 1);
        assert_eq!(l.clusters(), vec![vec![0, 1, 4], vec![3]]);
    }

    #[test]
    fn partition_equality_ignores_names() {
        let a = Labeling::new(vec![0, 0, 1, -1]).unwrap();
        let b = Labeling::new(vec![1, 1, 0, -1]).unwrap();
        let c = Labeling::new(vec![1, 1, 0, 0]).unwrap();
        assert!(a.same_partition(&b));
        assert!(!a.same_partition(&c));
    }
}
