//! Single-linkage clustering of sorted values by consecutive-gap threshold.
//!
//! Both point configurations and eigenvalue lists use this one routine, so
//! collision detection and multiplicity detection always make identical
//! merging decisions and round trips between the two are exact.

/// Cluster weakly ascending `values`: consecutive entries whose gap is at
/// most `rel_tol × (max − min)` fall into the same cluster. Returns cluster
/// sizes in positional (ascending-value) order.
///
/// A zero range (all values equal) yields a single cluster.
///
/// # Panics
/// If `values` is empty, not weakly ascending, not finite, or `rel_tol` is
/// negative or non-finite.
pub fn single_linkage(values: &[f64], rel_tol: f64) -> Vec<usize> {
    assert!(!values.is_empty(), "cannot cluster an empty list");
    assert!(
        values.iter().all(|v| v.is_finite()),
        "values must be finite"
    );
    assert!(
        values.windows(2).all(|w| w[0] <= w[1]),
        "values must be weakly ascending"
    );
    assert!(
        rel_tol >= 0.0 && rel_tol.is_finite(),
        "rel_tol must be a finite nonnegative number"
    );

    let range = values[values.len() - 1] - values[0];
    let threshold = rel_tol * range;
    let mut sizes = vec![1usize];
    for w in values.windows(2) {
        if w[1] - w[0] <= threshold {
            *sizes.last_mut().unwrap() += 1;
        } else {
            sizes.push(1);
        }
    }
    sizes
}

/// Mean of each cluster, in positional order.
pub fn cluster_means(values: &[f64], sizes: &[usize]) -> Vec<f64> {
    debug_assert_eq!(sizes.iter().sum::<usize>(), values.len());
    let mut means = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &size in sizes {
        let sum: f64 = values[start..start + size].iter().sum();
        means.push(sum / size as f64);
        start += size;
    }
    means
}
