//! Test-only oracles and data builders. Nothing here calls into the search
//! routines it is used to check.
#![allow(dead_code)]

use std::f64::consts::TAU;

use circlust::{circular_distance, Labeling, PolarPoint, SyntheticSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point(rng: &mut impl Rng, max_r: f64) -> PolarPoint {
    PolarPoint::new(rng.random_range(0.0..max_r), rng.random_range(0.0..TAU)).unwrap()
}

pub fn random_points(rng: &mut impl Rng, n: usize, max_r: f64) -> Vec<PolarPoint> {
    (0..n).map(|_| random_point(rng, max_r)).collect()
}

/// Minimum plane distance between `p` and the copies of `q` shifted by
/// `k·2πR`, `k ∈ {-2, …, 2}`.
pub fn replication_distance(p: &PolarPoint, q: &PolarPoint, radius: f64) -> f64 {
    let (ax, ay) = (radius * p.theta(), p.r());
    (-2i32..=2)
        .map(|k| {
            let bx = radius * q.theta() + k as f64 * TAU * radius;
            ((ax - bx).powi(2) + (ay - q.r()).powi(2)).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Within-class dispersion: for each class, the sum of squared pairwise
/// circular distances divided by the class size. For points in a plane this
/// equals the k-means objective.
pub fn dispersion(points: &[PolarPoint], labels: &[i64], radius: f64) -> f64 {
    let k = labels.iter().copied().max().unwrap_or(-1) + 1;
    (0..k)
        .map(|c| {
            let idx: Vec<usize> = (0..points.len()).filter(|&i| labels[i] == c).collect();
            if idx.is_empty() {
                return 0.0;
            }
            let mut s = 0.0;
            for (a, &i) in idx.iter().enumerate() {
                for &j in &idx[a + 1..] {
                    s += circular_distance(&points[i], &points[j], radius).powi(2);
                }
            }
            s / idx.len() as f64
        })
        .sum()
}

/// Exhaustive search over every split into two non-empty classes.
pub fn best_two_partition(points: &[PolarPoint], radius: f64) -> (Labeling, f64) {
    let n = points.len();
    assert!((2..=20).contains(&n));
    let mut best = (Vec::new(), f64::INFINITY);
    for mask in 1u32..(1 << (n - 1)) {
        let labels: Vec<i64> = (0..n)
            .map(|i| if i == 0 { 0 } else { ((mask >> (i - 1)) & 1) as i64 })
            .collect();
        let v = dispersion(points, &labels, radius);
        if v < best.1 {
            best = (labels, v);
        }
    }
    (Labeling::canonical(&best.0), best.1)
}

/// Exhaustive search over splits of the circle into two arcs: every pair of
/// cut positions in angular order.
pub fn best_two_arc_partition(points: &[PolarPoint], radius: f64) -> (Labeling, f64) {
    let n = points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| points[a].theta().total_cmp(&points[b].theta()));
    let mut best = (Vec::new(), f64::INFINITY);
    for start in 0..n {
        for len in 1..n {
            let mut labels = vec![1i64; n];
            for s in 0..len {
                labels[order[(start + s) % n]] = 0;
            }
            let v = dispersion(points, &labels, radius);
            if v < best.1 {
                best = (labels, v);
            }
        }
    }
    (Labeling::canonical(&best.0), best.1)
}

/// The two-class unit-circle set used for the large-R experiments.
pub fn two_class_spec() -> SyntheticSpec {
    SyntheticSpec {
        n_points: 50,
        n_classes: 2,
        class_centers: vec![0.6, 3.4],
        angular_spread: 0.3,
        radial_spread: 0.0,
        base_radius: 1.0,
        seed: 7,
    }
}

/// Five classes, one of them centred on the θ = 0 seam.
pub fn five_class_spec() -> SyntheticSpec {
    SyntheticSpec {
        n_points: 50,
        n_classes: 5,
        class_centers: circlust::analysis::evenly_spaced_centers(5, 0.0),
        angular_spread: 0.1,
        radial_spread: 0.05,
        base_radius: 1.0,
        seed: 11,
    }
}

/// Smallest center separation divided by the larger spread, with angular
/// separation measured as arc length on the unit circle.
pub fn separation_ratio(spec: &SyntheticSpec) -> f64 {
    let mut min_sep = f64::INFINITY;
    for (i, a) in spec.class_centers.iter().enumerate() {
        for b in &spec.class_centers[i + 1..] {
            let d = (a - b).abs() % TAU;
            min_sep = min_sep.min(d.min(TAU - d));
        }
    }
    min_sep / spec.angular_spread.max(spec.radial_spread)
}

pub fn rotate_all(points: &[PolarPoint], offset: f64) -> Vec<PolarPoint> {
    points.iter().map(|p| p.rotated(offset).unwrap()).collect()
}
