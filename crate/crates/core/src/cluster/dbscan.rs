//! Density-based clustering with brute-force neighbor search.

use super::Labeling;
use crate::error::{Error, Result};
use crate::metrics::{squared_euclidean, DistanceMatrix};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DbscanConfig {
    /// Neighborhood radius.
    pub eps: f64,
    /// Minimum neighborhood size for a core point, counting the point itself.
    pub min_pts: usize,
}

impl DbscanConfig {
    pub fn new(eps: f64, min_pts: usize) -> Result<Self> {
        let cfg = Self { eps, min_pts };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps.is_finite() && self.eps > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "eps must be positive, got {}",
                self.eps
            )));
        }
        if self.min_pts == 0 {
            return Err(Error::InvalidParameter("min_pts must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DbscanResult {
    pub labeling: Labeling,
    pub core: Vec<bool>,
}

pub fn dbscan(points: &[[f64; 2]], cfg: &DbscanConfig) -> Result<Labeling> {
    Ok(dbscan_detailed(points, cfg)?.labeling)
}

/// Like [`dbscan`] but also reports which points are core points.
pub fn dbscan_detailed(points: &[[f64; 2]], cfg: &DbscanConfig) -> Result<DbscanResult> {
    cfg.validate()?;
    if points.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let eps2 = cfg.eps * cfg.eps;
    Ok(run(points.len(), cfg.min_pts, |i, j| {
        let d = squared_euclidean(&points[i], &points[j]);
        (d <= eps2).then_some(d)
    }))
}

/// DBSCAN over a precomputed distance matrix.
pub fn dbscan_precomputed(dm: &DistanceMatrix, cfg: &DbscanConfig) -> Result<DbscanResult> {
    cfg.validate()?;
    Ok(run(dm.len(), cfg.min_pts, |i, j| {
        let d = dm.get(i, j);
        (d <= cfg.eps).then_some(d)
    }))
}

/// Core points are those with at least `min_pts` points (self included)
/// within `eps`. Core points are joined by transitive eps-adjacency; a
/// border point is attached to its nearest core neighbor, lower index on
/// ties, which keeps the result independent of input order up to label
/// names. Labels follow the order of each cluster's first point.
///
/// `within(i, j)` returns a monotone proxy of the distance when `j` lies in
/// the eps-neighborhood of `i`.
fn run(n: usize, min_pts: usize, within: impl Fn(usize, usize) -> Option<f64>) -> DbscanResult {
    let neighbors: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .filter_map(|j| within(i, j).map(|d| (j, d)))
                .collect()
        })
        .collect();
    let core: Vec<bool> = neighbors.iter().map(|nb| nb.len() + 1 >= min_pts).collect();

    let mut cluster: Vec<Option<usize>> = vec![None; n];
    let mut next = 0;
    let mut stack = Vec::new();
    for seed in 0..n {
        if !core[seed] || cluster[seed].is_some() {
            continue;
        }
        cluster[seed] = Some(next);
        stack.push(seed);
        while let Some(u) = stack.pop() {
            for &(v, _) in &neighbors[u] {
                if core[v] && cluster[v].is_none() {
                    cluster[v] = Some(next);
                    stack.push(v);
                }
            }
        }
        next += 1;
    }

    for i in 0..n {
        if core[i] {
            continue;
        }
        let nearest = neighbors[i]
            .iter()
            .filter(|(j, _)| core[*j])
            .fold(None::<(usize, f64)>, |acc, &(j, d)| match acc {
                Some((bj, bd)) if bd < d || (bd == d && bj < j) => acc,
                _ => Some((j, d)),
            });
        cluster[i] = nearest.and_then(|(j, _)| cluster[j]);
    }

    DbscanResult {
        labeling: Labeling::from_groups(&cluster),
        core,
    }
}
