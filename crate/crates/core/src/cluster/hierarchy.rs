//! Agglomerative clustering over a condensed distance matrix.

use std::fmt;
use std::str::FromStr;

use super::Labeling;
use crate::error::{Error, Result};
use crate::metrics::DistanceMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Linkage {
    #[default]
    Single,
    Complete,
    Average,
}

impl Linkage {
    /// Lance–Williams update for the distance between the merged cluster
    /// `i ∪ j` and a third cluster `k`.
    fn update(self, d_ik: f64, d_jk: f64, n_i: usize, n_j: usize) -> f64 {
        match self {
            Linkage::Single => d_ik.min(d_jk),
            Linkage::Complete => d_ik.max(d_jk),
            Linkage::Average => {
                (n_i as f64 * d_ik + n_j as f64 * d_jk) / (n_i + n_j) as f64
            }
        }
    }
}

impl fmt::Display for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Linkage::Single => "single",
            Linkage::Complete => "complete",
            Linkage::Average => "average",
        })
    }
}

impl FromStr for Linkage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "single" => Ok(Linkage::Single),
            "complete" => Ok(Linkage::Complete),
            "average" => Ok(Linkage::Average),
            other => Err(Error::InvalidParameter(format!("unknown linkage '{other}'"))),
        }
    }
}

/// One agglomeration step. Leaves are `0..n`, the merge at position `m`
/// creates node `n + m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Merge {
    pub node_a: usize,
    pub node_b: usize,
    pub height: f64,
    pub node: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dendrogram {
    n_leaves: usize,
    merges: Vec<Merge>,
}

impl Dendrogram {
    /// Builds a dendrogram from `(node_a, node_b, height)` triples, assigning
    /// new node ids in order.
    pub fn from_merge_list(n_leaves: usize, steps: &[(usize, usize, f64)]) -> Result<Self> {
        if n_leaves < 2 {
            return Err(Error::MalformedDendrogram("need at least two leaves".into()));
        }
        if steps.len() != n_leaves - 1 {
            return Err(Error::MalformedDendrogram(format!(
                "{} leaves need {} merges, got {}",
                n_leaves,
                n_leaves - 1,
                steps.len()
            )));
        }
        let total = 2 * n_leaves - 1;
        let mut used = vec![false; total];
        let mut merges = Vec::with_capacity(steps.len());
        for (m, &(a, b, height)) in steps.iter().enumerate() {
            let node = n_leaves + m;
            for child in [a, b] {
                if child >= node {
                    return Err(Error::MalformedDendrogram(format!(
                        "merge {m} references node {child} before it exists"
                    )));
                }
                if used[child] {
                    return Err(Error::MalformedDendrogram(format!(
                        "node {child} is merged twice"
                    )));
                }
                used[child] = true;
            }
            if a == b {
                return Err(Error::MalformedDendrogram(format!("merge {m} joins node {a} with itself")));
            }
            if !(height.is_finite() && height >= 0.0) {
                return Err(Error::MalformedDendrogram(format!("invalid height {height}")));
            }
            merges.push(Merge {
                node_a: a.min(b),
                node_b: a.max(b),
                height,
                node,
            });
        }
        Ok(Self { n_leaves, merges })
    }

    pub fn n_leaves(&self) -> usize {
        self.n_leaves
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    pub fn heights(&self) -> impl Iterator<Item = f64> + '_ {
        self.merges.iter().map(|m| m.height)
    }

    /// True when merge heights never decrease along the merge order.
    pub fn is_monotone(&self) -> bool {
        self.merges.windows(2).all(|w| w[0].height <= w[1].height)
    }

    /// Same merge pairs in the same order, heights within `tol`.
    pub fn same_structure(&self, other: &Dendrogram, tol: f64) -> bool {
        self.n_leaves == other.n_leaves
            && self.merges.iter().zip(&other.merges).all(|(a, b)| {
                a.node_a == b.node_a && a.node_b == b.node_b && (a.height - b.height).abs() <= tol
            })
    }

    /// Height of a node: zero for leaves.
    pub fn node_height(&self, node: usize) -> f64 {
        if node < self.n_leaves {
            0.0
        } else {
            self.merges[node - self.n_leaves].height
        }
    }

    /// Leaves under `node`, in left-to-right drawing order.
    pub fn leaves_under(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(v) = stack.pop() {
            if v < self.n_leaves {
                out.push(v);
            } else {
                let m = &self.merges[v - self.n_leaves];
                stack.push(m.node_b);
                stack.push(m.node_a);
            }
        }
        out
    }

    pub fn root(&self) -> usize {
        2 * self.n_leaves - 2
    }

    /// Leaf order for drawing: children left to right as merged.
    pub fn leaf_order(&self) -> Vec<usize> {
        self.leaves_under(self.root())
    }

    /// Newick string with branch lengths equal to height differences.
    pub fn to_newick(&self, names: Option<&[String]>) -> String {
        fn write(d: &Dendrogram, node: usize, parent: f64, names: Option<&[String]>, out: &mut String) {
            let h = d.node_height(node);
            if node < d.n_leaves {
                match names {
                    Some(n) => out.push_str(&n[node]),
                    None => out.push_str(&node.to_string()),
                }
            } else {
                let m = &d.merges[node - d.n_leaves];
                out.push('(');
                write(d, m.node_a, h, names, out);
                out.push(',');
                write(d, m.node_b, h, names, out);
                out.push(')');
            }
            if parent.is_finite() {
                out.push_str(&format!(":{}", parent - h));
            }
        }
        let mut out = String::new();
        write(self, self.root(), f64::NAN, names, &mut out);
        out.push(';');
        out
    }
}

type Candidate = (f64, (usize, usize), (usize, usize));

/// Agglomerative clustering. At each step the pair of active clusters with
/// the smallest linkage distance is merged; ties go to the lexicographically
/// smallest `(node_a, node_b)` pair of node ids.
pub fn hierarchical(dm: &DistanceMatrix, linkage: Linkage) -> Result<Dendrogram> {
    let n = dm.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let mut dist = dm.to_square();
    // slot -> (node id, size); None once absorbed
    let mut slots: Vec<Option<(usize, usize)>> = (0..n).map(|i| Some((i, 1))).collect();
    let mut steps = Vec::with_capacity(n - 1);

    for m in 0..n - 1 {
        // (distance, (node ids), (slots))
        let mut best: Option<Candidate> = None;
        for i in 0..n {
            let Some((id_i, _)) = slots[i] else { continue };
            for j in i + 1..n {
                let Some((id_j, _)) = slots[j] else { continue };
                let d = dist[i][j];
                let key = (id_i.min(id_j), id_i.max(id_j));
                let better = match best {
                    None => true,
                    Some((bd, bkey, _)) => d < bd || (d == bd && key < bkey),
                };
                if better {
                    best = Some((d, key, (i, j)));
                }
            }
        }
        let (height, (a, b), (i, j)) = best.expect("two active clusters remain");
        steps.push((a, b, height));

        let size_i = slots[i].unwrap().1;
        let size_j = slots[j].unwrap().1;
        for k in 0..n {
            if k == i || k == j || slots[k].is_none() {
                continue;
            }
            let d = linkage.update(dist[i][k], dist[j][k], size_i, size_j);
            dist[i][k] = d;
            dist[k][i] = d;
        }
        slots[i] = Some((n + m, size_i + size_j));
        slots[j] = None;
    }
    Dendrogram::from_merge_list(n, &steps)
}

/// Flat clustering with `k` clusters obtained by undoing the `k - 1`
/// highest merges (later merges win ties). Labels follow leaf order.
pub fn cut_dendrogram(d: &Dendrogram, k: usize) -> Result<Labeling> {
    let n = d.n_leaves();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={n}")));
    }
    let mut order: Vec<usize> = (0..d.merges.len()).collect();
    order.sort_by(|&x, &y| {
        d.merges[x]
            .height
            .total_cmp(&d.merges[y].height)
            .then(x.cmp(&y))
    });
    let mut keep = vec![false; d.merges.len()];
    for &m in order.iter().take(n - k) {
        keep[m] = true;
    }

    // each node is represented by its first leaf
    let mut rep = vec![0usize; 2 * n - 1];
    for (i, r) in rep.iter_mut().enumerate().take(n) {
        *r = i;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (m, merge) in d.merges.iter().enumerate() {
        let (ra, rb) = (rep[merge.node_a], rep[merge.node_b]);
        rep[merge.node] = ra;
        if keep[m] {
            let (x, y) = (find(&mut parent, ra), find(&mut parent, rb));
            parent[x.max(y)] = x.min(y);
        }
    }
    let roots: Vec<Option<usize>> = (0..n).map(|i| Some(find(&mut parent, i))).collect();
    Ok(Labeling::from_groups(&roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(n: usize, values: &[f64]) -> DistanceMatrix {
        DistanceMatrix::from_condensed(n, values.to_vec()).unwrap()
    }

    #[test]
    fn two_points_one_merge() {
        let d = hierarchical(&dm(2, &[1.5]), Linkage::Single).unwrap();
        assert_eq!(d.merges(), &[Merge { node_a: 0, node_b: 1, height: 1.5, node: 2 }]);
    }

    #[test]
    fn equidistant_tie_break() {
        for linkage in [Linkage::Single, Linkage::Complete, Linkage::Average] {
            let d = hierarchical(&dm(3, &[2.0, 2.0, 2.0]), linkage).unwrap();
            assert_eq!((d.merges()[0].node_a, d.merges()[0].node_b), (0, 1));
            assert_eq!(d.merges()[0].height, 2.0);
            assert_eq!((d.merges()[1].node_a, d.merges()[1].node_b), (2, 3));
            let cut = cut_dendrogram(&d, 2).unwrap();
            assert_eq!(cut.labels(), &[0, 0, 1]);
        }
    }

    #[test]
    fn linkage_heights_on_a_line() {
        // points at 0, 1, 3 on a line
        let m = dm(3, &[1.0, 3.0, 2.0]);
        let s = hierarchical(&m, Linkage::Single).unwrap();
        let c = hierarchical(&m, Linkage::Complete).unwrap();
        let a = hierarchical(&m, Linkage::Average).unwrap();
        assert_eq!(s.heights().collect::<Vec<_>>(), vec![1.0, 2.0]);
        assert_eq!(c.heights().collect::<Vec<_>>(), vec![1.0, 3.0]);
        assert_eq!(a.heights().collect::<Vec<_>>(), vec![1.0, 2.5]);
    }

    /// Kruskal on the complete graph: the sorted MST edge weights are the
    /// single-linkage merge heights.
    fn mst_weights(m: &DistanceMatrix) -> Vec<f64> {
        let n = m.len();
        let mut edges: Vec<(f64, usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (m.get(i, j), i, j))
            .collect();
        edges.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut comp: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        for (w, i, j) in edges {
            let (ci, cj) = (comp[i], comp[j]);
            if ci != cj {
                for c in comp.iter_mut() {
                    if *c == cj {
                        *c = ci;
                    }
                }
                out.push(w);
            }
        }
        out
    }

    #[test]
    fn single_linkage_matches_mst() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20 {
            let pts: Vec<[f64; 2]> = (0..8).map(|_| [next() * 4.0, next() * 4.0]).collect();
            let m = crate::metrics::pairwise_euclidean(&pts).unwrap();
            let d = hierarchical(&m, Linkage::Single).unwrap();
            let heights: Vec<f64> = d.heights().collect();
            assert_eq!(heights, mst_weights(&m));
        }
    }

    #[test]
    fn cut_extremes() {
        let m = dm(4, &[1.0, 4.0, 5.0, 3.5, 4.5, 2.0]);
        let d = hierarchical(&m, Linkage::Average).unwrap();
        assert!(d.is_monotone());
        assert_eq!(cut_dendrogram(&d, 1).unwrap().labels(), &[0; 4]);
        assert_eq!(cut_dendrogram(&d, 4).unwrap().labels(), &[0, 1, 2, 3]);
        assert_eq!(cut_dendrogram(&d, 2).unwrap().labels(), &[0, 0, 1, 1]);
        assert!(cut_dendrogram(&d, 0).is_err());
        assert!(cut_dendrogram(&d, 5).is_err());
    }

    #[test]
    fn malformed_merge_lists() {
        assert!(Dendrogram::from_merge_list(3, &[(0, 1, 1.0)]).is_err());
        assert!(Dendrogram::from_merge_list(3, &[(0, 1, 1.0), (0, 2, 2.0)]).is_err());
        assert!(Dendrogram::from_merge_list(3, &[(0, 4, 1.0), (1, 2, 2.0)]).is_err());
        assert!(Dendrogram::from_merge_list(2, &[(0, 1, -1.0)]).is_err());
        assert!(Dendrogram::from_merge_list(3, &[(0, 1, 1.0), (2, 3, 2.0)]).is_ok());
    }

    #[test]
    fn newick_output() {
        let d = Dendrogram::from_merge_list(3, &[(0, 1, 1.0), (2, 3, 5.0)]).unwrap();
        assert_eq!(d.to_newick(None), "(2:5,(0:1,1:1):4);");
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(d.to_newick(Some(&names)), "(c:5,(a:1,b:1):4);");
        assert_eq!(d.leaf_order(), vec![2, 0, 1]);
    }

    #[test]
    fn linkage_parsing() {
        assert_eq!("Average".parse::<Linkage>().unwrap(), Linkage::Average);
        assert!("ward".parse::<Linkage>().is_err());
        assert_eq!(Linkage::default().to_string(), "single");
    }
}
