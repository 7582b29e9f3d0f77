//! Lloyd's k-means with k-means++ seeding and seeded restarts.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Labeling;
use crate::error::{Error, Result};
use crate::metrics::squared_euclidean;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KMeansConfig {
    pub k: usize,
    pub max_iter: usize,
    pub n_restarts: usize,
    pub seed: u64,
}

impl KMeansConfig {
    pub const DEFAULT_MAX_ITER: usize = 300;
    pub const DEFAULT_RESTARTS: usize = 16;

    pub fn new(k: usize) -> Self {
        Self {
            k,
            max_iter: Self::DEFAULT_MAX_ITER,
            n_restarts: Self::DEFAULT_RESTARTS,
            seed: 0,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn with_restarts(self, n_restarts: usize) -> Self {
        Self { n_restarts, ..self }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        if self.k == 0 || self.max_iter == 0 || self.n_restarts == 0 {
            return Err(Error::InvalidParameter(
                "k, max_iter and n_restarts must be positive".into(),
            ));
        }
        if self.k > n {
            return Err(Error::InvalidParameter(format!(
                "k = {} exceeds the number of points ({n})",
                self.k
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    pub labeling: Labeling,
    /// One centroid per cluster, indexed by label.
    pub centroids: Vec<[f64; 2]>,
    /// Sum of squared distances to the assigned centroid.
    pub sse: f64,
    /// Lloyd iterations used by the winning restart.
    pub iterations: usize,
    /// SSE after each assignment step of the winning restart.
    pub sse_history: Vec<f64>,
    /// Index of the winning restart.
    pub restart: usize,
}

/// Runs `n_restarts` seeded Lloyd runs and keeps the lowest SSE. Earlier
/// restarts win ties, so the output depends only on the inputs and seed.
pub fn kmeans(points: &[[f64; 2]], cfg: &KMeansConfig) -> Result<KMeansResult> {
    cfg.validate(points.len())?;
    if let Some(v) = points.iter().flatten().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(*v));
    }

    let mut best: Option<KMeansResult> = None;
    for restart in 0..cfg.n_restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(restart as u64);
        let run = lloyd(points, cfg.k, cfg.max_iter, &mut rng, restart);
        if best.as_ref().is_none_or(|b| run.sse < b.sse) {
            best = Some(run);
        }
    }
    Ok(best.expect("at least one restart"))
}

fn lloyd(
    points: &[[f64; 2]],
    k: usize,
    max_iter: usize,
    rng: &mut impl Rng,
    restart: usize,
) -> KMeansResult {
    let mut centroids = plus_plus_init(points, k, rng);
    let mut assignment = assign(points, &centroids);
    let mut history = vec![cost(points, &centroids, &assignment)];
    let mut iterations = 0;

    while iterations < max_iter {
        iterations += 1;
        update(points, &mut centroids, &mut assignment);
        let next = assign(points, &centroids);
        history.push(cost(points, &centroids, &next));
        let converged = next == assignment;
        assignment = next;
        if converged {
            break;
        }
    }

    let raw: Vec<i64> = assignment.iter().map(|&a| a as i64).collect();
    let labeling = Labeling::canonical(&raw);
    // reorder centroids to follow the canonical labels
    let mut ordered = vec![[0.0; 2]; labeling.n_clusters()];
    for (&a, &l) in assignment.iter().zip(labeling.labels()) {
        ordered[l as usize] = centroids[a];
    }

    KMeansResult {
        labeling,
        centroids: ordered,
        sse: *history.last().expect("non-empty history"),
        iterations,
        sse_history: history,
        restart,
    }
}

fn plus_plus_init(points: &[[f64; 2]], k: usize, rng: &mut impl Rng) -> Vec<[f64; 2]> {
    let n = points.len();
    let mut centroids = Vec::with_capacity(k);
    centroids.push(points[rng.random_range(0..n)]);
    let mut nearest: Vec<f64> = points
        .iter()
        .map(|p| squared_euclidean(p, &centroids[0]))
        .collect();

    while centroids.len() < k {
        let next = match WeightedIndex::new(&nearest) {
            Ok(dist) => dist.sample(rng),
            // every remaining point coincides with a chosen centroid
            Err(_) => rng.random_range(0..n),
        };
        let c = points[next];
        for (d, p) in nearest.iter_mut().zip(points) {
            *d = d.min(squared_euclidean(p, &c));
        }
        centroids.push(c);
    }
    centroids
}

fn assign(points: &[[f64; 2]], centroids: &[[f64; 2]]) -> Vec<usize> {
    points
        .iter()
        .map(|p| {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (j, c) in centroids.iter().enumerate() {
                let d = squared_euclidean(p, c);
                if d < best_d {
                    best = j;
                    best_d = d;
                }
            }
            best
        })
        .collect()
}

fn cost(points: &[[f64; 2]], centroids: &[[f64; 2]], assignment: &[usize]) -> f64 {
    points
        .iter()
        .zip(assignment)
        .map(|(p, &a)| squared_euclidean(p, &centroids[a]))
        .sum()
}

/// Moves each centroid to the mean of its members. An empty cluster is
/// re-seeded at the point farthest from its own centroid, and that point is
/// moved into it.
fn update(points: &[[f64; 2]], centroids: &mut [[f64; 2]], assignment: &mut [usize]) {
    let k = centroids.len();
    let mut sums = vec![[0.0f64; 2]; k];
    let mut counts = vec![0usize; k];
    for (p, &a) in points.iter().zip(assignment.iter()) {
        sums[a][0] += p[0];
        sums[a][1] += p[1];
        counts[a] += 1;
    }
    for j in 0..k {
        if counts[j] > 0 {
            let c = counts[j] as f64;
            centroids[j] = [sums[j][0] / c, sums[j][1] / c];
        }
    }

    for j in 0..k {
        if counts[j] > 0 {
            continue;
        }
        let donor = (0..points.len())
            .filter(|&i| counts[assignment[i]] > 1)
            .map(|i| (i, squared_euclidean(&points[i], &centroids[assignment[i]])))
            .filter(|&(_, d)| d > 0.0)
            .fold(None::<(usize, f64)>, |acc, (i, d)| match acc {
                Some((_, bd)) if bd >= d => acc,
                _ => Some((i, d)),
            });
        if let Some((i, _)) = donor {
            counts[assignment[i]] -= 1;
            assignment[i] = j;
            counts[j] = 1;
            centroids[j] = points[i];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<[f64; 2]> {
        vec![[0.0, 0.0], [1.0, 0.0], [0.0, 2.0], [3.0, 1.0], [2.0, 2.0]]
    }

    #[test]
    fn single_cluster_is_the_mean() {
        let pts = grid();
        let res = kmeans(&pts, &KMeansConfig::new(1)).unwrap();
        let mean = [6.0 / 5.0, 5.0 / 5.0];
        assert!((res.centroids[0][0] - mean[0]).abs() < 1e-12);
        assert!((res.centroids[0][1] - mean[1]).abs() < 1e-12);
        let total: f64 = pts.iter().map(|p| squared_euclidean(p, &mean)).sum();
        assert!((res.sse - total).abs() < 1e-12);
        assert_eq!(res.labeling.labels(), &[0; 5]);
    }

    #[test]
    fn k_equals_n_gives_singletons() {
        let pts = grid();
        let res = kmeans(&pts, &KMeansConfig::new(5)).unwrap();
        assert_eq!(res.sse, 0.0);
        assert_eq!(res.labeling.n_clusters(), 5);
    }

    /// SSE of the best split found by enumerating every 2-partition.
    fn exhaustive_two_partition(pts: &[[f64; 2]]) -> (Vec<i64>, f64) {
        let n = pts.len();
        let mut best = (vec![], f64::INFINITY);
        for mask in 1..(1u32 << (n - 1)) {
            let labels: Vec<i64> = (0..n)
                .map(|i| if i == 0 { 0 } else { ((mask >> (i - 1)) & 1) as i64 })
                .collect();
            let mut sse = 0.0;
            for g in 0..2 {
                let members: Vec<&[f64; 2]> =
                    pts.iter().zip(&labels).filter(|(_, &l)| l == g).map(|(p, _)| p).collect();
                if members.is_empty() {
                    sse = f64::INFINITY;
                    break;
                }
                let m = members.len() as f64;
                let c = [
                    members.iter().map(|p| p[0]).sum::<f64>() / m,
                    members.iter().map(|p| p[1]).sum::<f64>() / m,
                ];
                sse += members.iter().map(|p| squared_euclidean(*p, &c)).sum::<f64>();
            }
            if sse < best.1 {
                best = (labels, sse);
            }
        }
        best
    }

    #[test]
    fn separated_pairs_match_exhaustive_split() {
        let pts = vec![[0.0, 0.0], [10.0, 10.2], [0.1, 0.05], [10.1, 10.0]];
        let (oracle, oracle_sse) = exhaustive_two_partition(&pts);
        let res = kmeans(&pts, &KMeansConfig::new(2)).unwrap();
        assert!(res.labeling.same_partition(&Labeling::canonical(&oracle)));
        assert!((res.sse - oracle_sse).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(kmeans(&[], &KMeansConfig::new(1)).is_err());
        assert!(kmeans(&grid(), &KMeansConfig::new(6)).is_err());
        assert!(kmeans(&grid(), &KMeansConfig::new(0)).is_err());
        assert!(kmeans(&[[f64::NAN, 0.0]], &KMeansConfig::new(1)).is_err());
    }

    #[test]
    fn deterministic_and_monotone() {
        let pts: Vec<[f64; 2]> = (0..60)
            .map(|i| {
                let t = i as f64 * 0.37;
                [t.sin() * (1.0 + (i % 3) as f64), t.cos() * 2.0 + (i % 5) as f64]
            })
            .collect();
        let cfg = KMeansConfig::new(4).with_seed(11);
        let a = kmeans(&pts, &cfg).unwrap();
        let b = kmeans(&pts, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.iterations <= cfg.max_iter);
        for w in a.sse_history.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "{:?}", a.sse_history);
        }
    }

    #[test]
    fn duplicate_points_do_not_panic() {
        let pts = vec![[1.0, 1.0]; 4];
        let res = kmeans(&pts, &KMeansConfig::new(3)).unwrap();
        assert_eq!(res.sse, 0.0);
    }
}
