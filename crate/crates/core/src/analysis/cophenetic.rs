use crate::cluster::Dendrogram;
use crate::error::{Error, Result};
use crate::metrics::DistanceMatrix;

/// Merge height at which each pair of leaves first shares a cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct CopheneticMatrix {
    inner: DistanceMatrix,
}

impl CopheneticMatrix {
    pub fn from_condensed(n: usize, values: Vec<f64>) -> Result<Self> {
        Ok(Self {
            inner: DistanceMatrix::from_condensed(n, values)?,
        })
    }

    pub fn n_leaves(&self) -> usize {
        self.inner.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner.get(i, j)
    }

    pub fn condensed(&self) -> &[f64] {
        self.inner.condensed()
    }

    /// Pearson correlation between the condensed entries of two matrices.
    pub fn correlation(&self, other: &CopheneticMatrix) -> Result<f64> {
        if self.n_leaves() != other.n_leaves() {
            return Err(Error::LengthMismatch(self.n_leaves(), other.n_leaves()));
        }
        pearson(self.condensed(), other.condensed())
    }
}

fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation);
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

pub fn cophenetic_matrix(d: &Dendrogram) -> CopheneticMatrix {
    let n = d.n_leaves();
    let mut values = vec![0.0; n * (n - 1) / 2];
    let index = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        n * i - i * (i + 1) / 2 + (j - i - 1)
    };
    let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    members.resize(2 * n - 1, Vec::new());
    for m in d.merges() {
        let a = std::mem::take(&mut members[m.node_a]);
        let b = std::mem::take(&mut members[m.node_b]);
        for &i in &a {
            for &j in &b {
                values[index(i, j)] = m.height;
            }
        }
        members[m.node] = a.into_iter().chain(b).collect();
    }
    CopheneticMatrix::from_condensed(n, values).expect("merge heights are validated")
}

/// Pearson correlation between the cophenetic matrices of two trees over the
/// same leaves.
pub fn cophenetic_correlation(a: &Dendrogram, b: &Dendrogram) -> Result<f64> {
    if a.n_leaves() != b.n_leaves() {
        return Err(Error::LengthMismatch(a.n_leaves(), b.n_leaves()));
    }
    cophenetic_matrix(a).correlation(&cophenetic_matrix(b))
}
