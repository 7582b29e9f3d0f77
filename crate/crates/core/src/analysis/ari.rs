use std::collections::HashMap;

use crate::cluster::Labeling;
use crate::error::{Error, Result};

fn choose2(x: usize) -> f64 {
    (x * x.saturating_sub(1)) as f64 / 2.0
}

/// Adjusted Rand index between two labelings. Each outlier is treated as a
/// class of its own.
///
/// When both labelings are trivial in the same way (every point alone, or
/// everything in one class) the index is defined as 1.
pub fn adjusted_rand_index(a: &Labeling, b: &Labeling) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let n = a.len();
    // outliers get unique negative ids
    let key = |l: i64, i: usize| if l < 0 { -(i as i64) - 1 } else { l };
    let mut table: HashMap<(i64, i64), usize> = HashMap::new();
    let mut rows: HashMap<i64, usize> = HashMap::new();
    let mut cols: HashMap<i64, usize> = HashMap::new();
    for (i, (&x, &y)) in a.labels().iter().zip(b.labels()).enumerate() {
        let (x, y) = (key(x, i), key(y, i));
        *table.entry((x, y)).or_default() += 1;
        *rows.entry(x).or_default() += 1;
        *cols.entry(y).or_default() += 1;
    }
    let index: f64 = table.values().map(|&v| choose2(v)).sum();
    let sum_a: f64 = rows.values().map(|&v| choose2(v)).sum();
    let sum_b: f64 = cols.values().map(|&v| choose2(v)).sum();
    let expected = sum_a * sum_b / choose2(n).max(1.0);
    let max = (sum_a + sum_b) / 2.0;
    if max == expected {
        return Ok(1.0);
    }
    Ok((index - expected) / (max - expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(v: &[i64]) -> Labeling {
        Labeling::canonical(v)
    }

    #[test]
    fn identical_and_renamed() {
        let a = l(&[0, 0, 1, 1, 2]);
        assert_eq!(adjusted_rand_index(&a, &a).unwrap(), 1.0);
        let b = Labeling::new(vec![2, 2, 0, 0, 1]).unwrap();
        assert_eq!(adjusted_rand_index(&a, &b).unwrap(), 1.0);
    }

    #[test]
    fn crossed_pairs_give_minus_half() {
        // contingency is all ones: index 0, sum_a = sum_b = 2, expected 4/6,
        // max 2, so (0 - 2/3) / (2 - 2/3) = -1/2
        let v = adjusted_rand_index(&l(&[0, 0, 1, 1]), &l(&[0, 1, 0, 1])).unwrap();
        assert!((v + 0.5).abs() < 1e-15);
    }

    #[test]
    fn outliers_are_singletons() {
        let a = Labeling::new(vec![-1, -1, 0, 0]).unwrap();
        let b = Labeling::new(vec![0, 1, 2, 2]).unwrap();
        assert_eq!(adjusted_rand_index(&a, &b).unwrap(), 1.0);
        let c = Labeling::new(vec![0, 0, 1, 1]).unwrap();
        assert!(adjusted_rand_index(&a, &c).unwrap() < 1.0);
    }

    #[test]
    fn length_mismatch() {
        assert!(adjusted_rand_index(&l(&[0]), &l(&[0, 0])).is_err());
    }

    proptest! {
        #[test]
        fn symmetric_and_bounded(a in prop::collection::vec(-1i64..4, 2..30), seed in 0u64..1000) {
            let b: Vec<i64> = a.iter().enumerate().map(|(i, &x)| (x + (i as i64) * seed as i64) % 3).collect();
            let (la, lb) = (l(&a), l(&b));
            let ab = adjusted_rand_index(&la, &lb).unwrap();
            let ba = adjusted_rand_index(&lb, &la).unwrap();
            prop_assert!((ab - ba).abs() < 1e-12);
            prop_assert!((-1.0..=1.0 + 1e-12).contains(&ab));
        }

        #[test]
        fn permutation_invariant(a in prop::collection::vec(0i64..4, 2..30), shift in 1i64..4) {
            let renamed: Vec<i64> = a.iter().map(|&x| (x + shift) % 4).collect();
            prop_assert_eq!(adjusted_rand_index(&l(&a), &l(&renamed)).unwrap(), 1.0);
        }
    }
}
