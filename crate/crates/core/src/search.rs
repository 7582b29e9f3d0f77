//! Circular clustering by period repetition.
//!
//! Each routine reconstructs the polar points onto the unrolled plane,
//! tiles the base period `c` extra times, runs an ordinary planar clusterer
//! on the tiled plane and then folds the result back onto the original
//! points:
//!
//! * [`circular_kmeans`] looks for `(c+1)·K` clusters and picks, among the
//!   clusters touching the middle period, `K` whose projections partition the
//!   original points.
//! * [`circular_dbscan`] keeps the cluster patterns (sets of original
//!   points) that recur in at least `Y` periods.
//! * [`circular_hierarchical`] takes, for every original pair, the smallest
//!   distance between any of their copies and builds a dendrogram from that.

use std::collections::{BTreeMap, BTreeSet};

use crate::cluster::{
    dbscan, hierarchical, kmeans, DbscanConfig, Dendrogram, KMeansConfig, Labeling, Linkage,
};
use crate::error::{Error, Result};
use crate::geometry::{replicate_polar, PolarPoint, ReconstructionParams, ReplicatedPoint};
use crate::metrics::{squared_euclidean, DistanceMatrix};

/// Largest repetition count tried by [`circular_kmeans`] before giving up.
pub const MAX_KMEANS_REPETITIONS: usize = 10;

/// Default repetition count for [`circular_kmeans`].
pub const DEFAULT_KMEANS_REPETITIONS: usize = 2;

/// Default repetition count for [`circular_dbscan`].
pub const DEFAULT_DBSCAN_REPETITIONS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct CircularKMeansResult {
    /// Labels over the original points.
    pub labeling: Labeling,
    /// 1-based index of the middle period the combination was taken from.
    pub chosen_period: usize,
    /// Extended-cluster labels (from [`Self::extended`]) forming the partition.
    pub chosen_combination: Vec<usize>,
    /// Repetition count that produced the result.
    pub c_used: usize,
    /// Labels over every replicated point.
    pub extended: Labeling,
    /// Replicated points the extended labels refer to.
    pub replicated: Vec<ReplicatedPoint>,
    pub sse: f64,
}

/// K-means over the replicated plane, resolved in the middle period.
///
/// `params.repetitions()` must be even and at least 2. When the middle period
/// yields no valid combination, `c` grows by 2 up to
/// [`MAX_KMEANS_REPETITIONS`].
pub fn circular_kmeans(
    points: &[PolarPoint],
    params: &ReconstructionParams,
    cfg: &KMeansConfig,
) -> Result<CircularKMeansResult> {
    let n = points.len();
    let k = cfg.k;
    let c0 = params.repetitions();
    if c0 < 2 || !c0.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "k-means search needs an even repetition count of at least 2, got {c0}"
        )));
    }
    if c0 > MAX_KMEANS_REPETITIONS {
        return Err(Error::InvalidParameter(format!(
            "repetition count {c0} exceeds the cap of {MAX_KMEANS_REPETITIONS}"
        )));
    }
    if n == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={n}")));
    }

    let mut tried = Vec::new();
    let mut middle_clusters = Vec::new();
    let mut c = c0;
    while c <= MAX_KMEANS_REPETITIONS {
        let p = params.with_repetitions(c);
        let replicated = replicate_polar(points, &p);
        let plane: Vec<[f64; 2]> = replicated.iter().map(|r| r.point.to_array()).collect();
        let inner = KMeansConfig {
            k: (c + 1) * k,
            ..*cfg
        };
        let result = kmeans(&plane, &inner)?;
        let members = result.labeling.clusters();
        let middle = c / 2;

        let candidates: BTreeSet<usize> = replicated
            .iter()
            .zip(result.labeling.labels())
            .filter(|(r, _)| r.period == middle)
            .map(|(_, &l)| l as usize)
            .collect();
        // clusters whose projection contains an original point twice can
        // never be part of a partition
        let projections: Vec<(usize, Vec<usize>)> = candidates
            .iter()
            .filter_map(|&id| {
                let mut origins: Vec<usize> = members[id].iter().map(|&i| replicated[i].origin).collect();
                origins.sort_unstable();
                let len = origins.len();
                origins.dedup();
                (origins.len() == len).then_some((id, origins))
            })
            .collect();

        tried.push(c);
        middle_clusters.push(candidates.len());

        if let Some(combo) = first_partition(&projections, k, n) {
            let mut groups = vec![None; n];
            for (slot, &pos) in combo.iter().enumerate() {
                for &o in &projections[pos].1 {
                    groups[o] = Some(slot);
                }
            }
            return Ok(CircularKMeansResult {
                labeling: Labeling::from_groups(&groups),
                chosen_period: middle + 1,
                chosen_combination: combo.iter().map(|&pos| projections[pos].0).collect(),
                c_used: c,
                extended: result.labeling,
                replicated,
                sse: result.sse,
            });
        }
        c += 2;
    }
    Err(Error::NoValidCombination {
        k,
        tried,
        middle_clusters,
    })
}

/// Depth-first search over `k`-subsets in lexicographic order; returns the
/// positions of the first subset whose sets are disjoint and cover `0..n`.
fn first_partition(sets: &[(usize, Vec<usize>)], k: usize, n: usize) -> Option<Vec<usize>> {
    fn go(
        sets: &[(usize, Vec<usize>)],
        start: usize,
        k: usize,
        n: usize,
        covered: &mut Vec<bool>,
        count: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return count == n;
        }
        for pos in start..sets.len() {
            if sets.len() - pos < k - chosen.len() {
                break;
            }
            let set = &sets[pos].1;
            if set.iter().any(|&o| covered[o]) || count + set.len() > n {
                continue;
            }
            set.iter().for_each(|&o| covered[o] = true);
            chosen.push(pos);
            if go(sets, pos + 1, k, n, covered, count + set.len(), chosen) {
                return true;
            }
            chosen.pop();
            set.iter().for_each(|&o| covered[o] = false);
        }
        false
    }
    let mut covered = vec![false; n];
    let mut chosen = Vec::with_capacity(k);
    go(sets, 0, k, n, &mut covered, 0, &mut chosen).then_some(chosen)
}

/// A set of original points clustered together, and the number of periods
/// in which that exact set appears as a cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub members: Vec<usize>,
    pub repetitions: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircularDbscanResult {
    /// Labels over the original points; unretained points are outliers.
    pub labeling: Labeling,
    /// Retained patterns, ordered by their smallest member.
    pub retained_patterns: Vec<Pattern>,
    /// Every distinct pattern found on the replicated plane.
    pub patterns: Vec<Pattern>,
    pub threshold_used: usize,
    pub extended: Labeling,
    pub replicated: Vec<ReplicatedPoint>,
}

/// DBSCAN over the replicated plane with pattern retention.
///
/// Each extended cluster is folded to the set of original indices it
/// contains. A pattern's repetition count is the number of distinct periods
/// occupied by the copies forming that pattern, so a cluster that straddles
/// the `θ = 0` seam (and therefore spans two neighbouring periods) still
/// counts every period. Patterns repeating in at least `threshold` periods
/// are retained; overlaps are resolved in favour of higher counts, then
/// larger sets.
///
/// The strip is padded with one uncounted guard period on each side. Without
/// it the two outermost periods miss the neighbours that lie across their
/// outer edge, so a cluster whose density depends on a cross-seam neighbour
/// would be lost there and could never reach `threshold = c + 1`. Guard
/// copies join clusters normally but add no period to the count, and
/// [`CircularDbscanResult::extended`] covers only the `c + 1` counted
/// periods.
pub fn circular_dbscan(
    points: &[PolarPoint],
    cfg: &DbscanConfig,
    params: &ReconstructionParams,
    threshold: usize,
) -> Result<CircularDbscanResult> {
    cfg.validate()?;
    let c = params.repetitions();
    if c < 1 {
        return Err(Error::InvalidParameter(
            "DBSCAN search needs at least one repetition".into(),
        ));
    }
    if threshold == 0 || threshold > c + 1 {
        return Err(Error::InvalidParameter(format!(
            "repetition threshold {threshold} must lie in 1..={}",
            c + 1
        )));
    }
    let n = points.len();
    if n == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }

    let padded = replicate_polar(points, &params.with_repetitions(c + 2));
    let plane: Vec<[f64; 2]> = padded.iter().map(|r| r.point.to_array()).collect();
    let padded_labels = dbscan(&plane, cfg)?;
    let counted = |i: usize| (1..=c + 1).contains(&padded[i].period);

    let mut found: BTreeMap<Vec<usize>, BTreeSet<usize>> = BTreeMap::new();
    for cluster in padded_labels.clusters() {
        if !cluster.iter().any(|&i| counted(i)) {
            continue;
        }
        let members: BTreeSet<usize> = cluster.iter().map(|&i| padded[i].origin).collect();
        let periods = found.entry(members.into_iter().collect()).or_default();
        periods.extend(cluster.iter().filter(|&&i| counted(i)).map(|&i| padded[i].period));
    }
    let patterns: Vec<Pattern> = found
        .into_iter()
        .map(|(members, periods)| Pattern {
            members,
            repetitions: periods.len(),
        })
        .collect();

    let mut ranked: Vec<&Pattern> = patterns.iter().filter(|p| p.repetitions >= threshold).collect();
    ranked.sort_by(|a, b| {
        b.repetitions
            .cmp(&a.repetitions)
            .then(b.members.len().cmp(&a.members.len()))
            .then(a.members.cmp(&b.members))
    });
    let mut taken = vec![false; n];
    let mut retained: Vec<Pattern> = Vec::new();
    for p in ranked {
        if p.members.iter().any(|&o| taken[o]) {
            continue;
        }
        p.members.iter().for_each(|&o| taken[o] = true);
        retained.push(p.clone());
    }
    retained.sort_by_key(|p| p.members[0]);

    let mut groups = vec![None; n];
    for (slot, p) in retained.iter().enumerate() {
        for &o in &p.members {
            groups[o] = Some(slot);
        }
    }

    let keep: Vec<bool> = (0..padded.len()).map(counted).collect();
    let replicated = replicate_polar(points, params);
    Ok(CircularDbscanResult {
        labeling: Labeling::from_groups(&groups),
        retained_patterns: retained,
        patterns,
        threshold_used: threshold,
        extended: padded_labels.restrict(&keep),
        replicated,
    })
}

/// Pairwise distances between original points, each taken as the smallest
/// plane distance between any two of their copies on the replicated plane.
pub fn replicated_distance_matrix(
    points: &[PolarPoint],
    params: &ReconstructionParams,
) -> Result<DistanceMatrix> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    if params.repetitions() < 1 {
        return Err(Error::InvalidParameter(
            "hierarchical search needs at least one repetition".into(),
        ));
    }
    let replicated = replicate_polar(points, params);
    let mut best = vec![f64::INFINITY; n * (n - 1) / 2];
    let index = |i: usize, j: usize| n * i - i * (i + 1) / 2 + (j - i - 1);
    for (a, pa) in replicated.iter().enumerate() {
        for pb in &replicated[a + 1..] {
            if pa.origin == pb.origin {
                continue;
            }
            let (i, j) = (pa.origin.min(pb.origin), pa.origin.max(pb.origin));
            let d = squared_euclidean(&pa.point.to_array(), &pb.point.to_array());
            let slot = &mut best[index(i, j)];
            if d < *slot {
                *slot = d;
            }
        }
    }
    DistanceMatrix::from_condensed(n, best.into_iter().map(f64::sqrt).collect())
}

/// Hierarchical clustering on the replicated minimum-distance matrix.
pub fn circular_hierarchical(
    points: &[PolarPoint],
    params: &ReconstructionParams,
    linkage: Linkage,
) -> Result<Dendrogram> {
    hierarchical(&replicated_distance_matrix(points, params)?, linkage)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::pairwise_circular;
    use std::f64::consts::{PI, TAU};

    fn pt(r: f64, t: f64) -> PolarPoint {
        PolarPoint::new(r, t).unwrap()
    }

    fn params(radius: f64, c: usize) -> ReconstructionParams {
        ReconstructionParams::new(radius, c).unwrap()
    }

    #[test]
    fn kmeans_rejects_odd_or_zero_repetitions() {
        let pts = [pt(1.0, 0.1), pt(1.0, 0.2)];
        for c in [0, 1, 3, 12] {
            assert!(matches!(
                circular_kmeans(&pts, &params(1.0, c), &KMeansConfig::new(1)),
                Err(Error::InvalidParameter(_))
            ));
        }
        assert!(circular_kmeans(&pts, &params(1.0, 2), &KMeansConfig::new(3)).is_err());
    }

    #[test]
    fn kmeans_single_cluster() {
        let pts: Vec<PolarPoint> = (0..6).map(|i| pt(1.0, 6.0 + 0.1 * i as f64)).collect();
        let res = circular_kmeans(&pts, &params(1.0, 2), &KMeansConfig::new(1)).unwrap();
        assert_eq!(res.labeling.labels(), &[0; 6]);
        assert_eq!(res.chosen_period, 2);
        assert_eq!(res.c_used, 2);
    }

    #[test]
    fn kmeans_resolves_seam_straddling_class() {
        // one class around θ = 0, another around θ = π
        let mut pts = Vec::new();
        for d in [-0.2, -0.1, 0.0, 0.1, 0.2] {
            pts.push(pt(1.0, d));
            pts.push(pt(1.0, PI + d));
        }
        let res = circular_kmeans(&pts, &params(1.0, 2), &KMeansConfig::new(2)).unwrap();
        let expected: Vec<i64> = (0..10).map(|i| (i % 2) as i64).collect();
        assert_eq!(res.labeling.labels(), expected.as_slice());
        assert_eq!(res.chosen_combination.len(), 2);
    }

    #[test]
    fn partition_search_is_lexicographic() {
        let sets = vec![
            (10, vec![0, 1]),
            (11, vec![0]),
            (12, vec![2]),
            (13, vec![1]),
            (14, vec![1, 2]),
        ];
        assert_eq!(first_partition(&sets, 2, 3), Some(vec![0, 2]));
        assert_eq!(first_partition(&sets, 3, 3), Some(vec![1, 2, 3]));
        assert_eq!(first_partition(&sets, 2, 4), None);
    }

    #[test]
    fn dbscan_isolated_point_is_outlier() {
        let cfg = DbscanConfig::new(0.3, 2).unwrap();
        let res = circular_dbscan(&[pt(1.0, 1.0)], &cfg, &params(1.0, 4), 5).unwrap();
        assert_eq!(res.labeling.labels(), &[-1]);
        assert!(res.retained_patterns.is_empty());
    }

    #[test]
    fn dbscan_counts_seam_straddling_pattern_in_every_period() {
        let pts = [pt(1.0, TAU - 0.1), pt(1.0, 0.1), pt(1.0, PI)];
        let cfg = DbscanConfig::new(0.3, 2).unwrap();
        let res = circular_dbscan(&pts, &cfg, &params(1.0, 4), 5).unwrap();
        assert_eq!(
            res.retained_patterns,
            vec![Pattern { members: vec![0, 1], repetitions: 5 }]
        );
        assert_eq!(res.labeling.labels(), &[0, 0, -1]);
    }

    #[test]
    fn dbscan_core_point_needing_cross_seam_neighbour() {
        // only the first point is core, and only with the neighbour across θ = 0
        let pts = [pt(1.0, 0.05), pt(1.0, 0.2), pt(1.0, TAU - 0.1)];
        let cfg = DbscanConfig::new(0.2, 3).unwrap();
        let res = circular_dbscan(&pts, &cfg, &params(1.0, 4), 5).unwrap();
        assert_eq!(res.labeling.labels(), &[0, 0, 0]);
        assert_eq!(res.retained_patterns[0].repetitions, 5);
        assert_eq!(res.extended.len(), res.replicated.len());
        assert_eq!(res.replicated.len(), 15);
    }

    #[test]
    fn dbscan_validates_threshold() {
        let cfg = DbscanConfig::new(0.3, 2).unwrap();
        let pts = [pt(1.0, 0.0)];
        assert!(circular_dbscan(&pts, &cfg, &params(1.0, 4), 6).is_err());
        assert!(circular_dbscan(&pts, &cfg, &params(1.0, 4), 0).is_err());
        assert!(circular_dbscan(&pts, &cfg, &params(1.0, 0), 1).is_err());
    }

    #[test]
    fn hierarchical_antipodal_pair() {
        let d = circular_hierarchical(&[pt(1.0, 0.0), pt(1.0, PI)], &params(1.0, 1), Linkage::Single)
            .unwrap();
        assert_eq!(d.merges().len(), 1);
        assert!((d.merges()[0].height - PI).abs() < 1e-12);
    }

    #[test]
    fn hierarchical_uses_across_seam_distance() {
        // A near 2π and B near 0: the direct plane distance is ~2π - 0.2,
        // the distance through the seam is 0.2
        let a = pt(1.0, TAU - 0.1);
        let b = pt(1.0, 0.1);
        let d = circular_hierarchical(&[a, b], &params(1.0, 1), Linkage::Single).unwrap();
        assert!((d.merges()[0].height - 0.2).abs() < 1e-12);
    }

    #[test]
    fn replicated_matrix_equals_closed_form() {
        let pts: Vec<PolarPoint> = (0..9)
            .map(|i| pt(0.2 * i as f64, (i as f64 * 2.3).rem_euclid(TAU)))
            .collect();
        for c in [1, 2, 4] {
            for radius in [0.5, 1.0, 10.0] {
                let a = replicated_distance_matrix(&pts, &params(radius, c)).unwrap();
                let b = pairwise_circular(&pts, radius).unwrap();
                for (x, y) in a.condensed().iter().zip(b.condensed()) {
                    assert!((x - y).abs() <= 1e-12, "{x} vs {y}");
                }
            }
        }
        assert!(replicated_distance_matrix(&pts, &params(1.0, 0)).is_err());
    }
}
