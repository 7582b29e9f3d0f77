//! Distances between points and condensed pairwise matrices.

use crate::error::{Error, Result};
use crate::geometry::{angular_separation, PolarPoint};

pub fn manhattan_distance(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum())
}

pub fn euclidean_distance(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(squared_euclidean(a, b).sqrt())
}

pub(crate) fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Geodesic distance between two polar points on a cylinder of base
/// radius `radius`: the arc length is taken along the shorter direction
/// around the circle.
pub fn circular_distance(p: &PolarPoint, q: &PolarPoint, radius: f64) -> f64 {
    let arc = radius * angular_separation(p.theta(), q.theta());
    arc.hypot(p.r() - q.r())
}

/// Condensed upper-triangular distance matrix.
///
/// Entry `(i, j)` with `i < j` is stored at
/// `n*i - i*(i+1)/2 + (j - i - 1)`, the same layout as SciPy's `pdist`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    pub fn from_condensed(n: usize, values: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewPoints { needed: 2, got: n });
        }
        let expected = n * (n - 1) / 2;
        if values.len() != expected {
            return Err(Error::MalformedMatrix(format!(
                "expected {expected} entries for n = {n}, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::MalformedMatrix(format!("invalid entry {v}")));
        }
        Ok(Self { n, values })
    }

    /// Builds a matrix by evaluating `f(i, j)` for every pair `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut values = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                values.push(f(i, j));
            }
        }
        Self::from_condensed(n, values)
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn condensed(&self) -> &[f64] {
        &self.values
    }

    pub fn index_of(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j && i < self.n && j < self.n);
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.n * i - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Inverse of [`Self::index_of`].
    pub fn pair_of(&self, index: usize) -> (usize, usize) {
        let mut i = 0;
        let mut start = 0;
        loop {
            let row = self.n - i - 1;
            if index < start + row {
                return (i, i + 1 + index - start);
            }
            start += row;
            i += 1;
        }
    }

    /// Distance between `i` and `j`; zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            0.0
        } else {
            self.values[self.index_of(i, j)]
        }
    }

    /// Expands into a dense row-major `n × n` matrix.
    pub fn to_square(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// All pairwise circular distances.
pub fn pairwise_circular(points: &[PolarPoint], radius: f64) -> Result<DistanceMatrix> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: points.len(),
        });
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidBaseRadius(radius));
    }
    DistanceMatrix::from_fn(points.len(), |i, j| {
        circular_distance(&points[i], &points[j], radius)
    })
}

/// All pairwise Euclidean distances among 2-D points.
pub fn pairwise_euclidean(points: &[[f64; 2]]) -> Result<DistanceMatrix> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: points.len(),
        });
    }
    DistanceMatrix::from_fn(points.len(), |i, j| {
        squared_euclidean(&points[i], &points[j]).sqrt()
    })
}
