//! Property tests for the affine quotient and the clustering rule.

use proptest::prelude::*;

use eigenstrata::configuration::{compactified_cell, normalize, Configuration};
use eigenstrata::spectral::{eigen_configuration, SymmetricMatrix};

/// Strictly separated point lists, so affine images stay distinct too.
fn distinct_points() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-1e3..1e3f64, 2..9).prop_filter_map(
        "points must be pairwise separated",
        |mut v| {
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let range = v[v.len() - 1] - v[0];
            if range == 0.0 {
                return None;
            }
            if v.windows(2).any(|w| w[1] - w[0] < 1e-6 * range) {
                return None;
            }
            Some(v)
        },
    )
}

proptest! {
    #[test]
    fn normalize_is_affine_invariant(
        points in distinct_points(),
        a in 1e-3..1e3f64,
        b in -1e3..1e3f64,
    ) {
        let base = normalize(&Configuration::new(points.clone()).unwrap()).unwrap();
        let moved: Vec<f64> = points.iter().map(|x| a * x + b).collect();
        let moved = normalize(&Configuration::new(moved).unwrap()).unwrap();
        prop_assert_eq!(&base.chamber, &moved.chamber);
        prop_assert!(base.simplex_point.max_abs_diff(&moved.simplex_point) <= 1e-12);
    }

    #[test]
    fn compactified_cell_with_zero_tolerance_matches_normalize(points in distinct_points()) {
        let config = Configuration::new(points).unwrap();
        let interior = normalize(&config).unwrap();
        let cell = compactified_cell(&config, 0.0).unwrap();
        prop_assert!(cell.cell.is_chamber());
        prop_assert_eq!(cell.simplex_point.coords(), interior.simplex_point.coords());
    }

    #[test]
    fn spectral_affine_invariance(
        diag in proptest::collection::vec(-10.0..10.0f64, 2..7),
        a in 0.01..100.0f64,
        b in -10.0..10.0f64,
    ) {
        let q = SymmetricMatrix::from_diagonal(&diag).unwrap();
        match eigen_configuration(&q, 1e-8) {
            Ok(base) => {
                let moved = eigen_configuration(&q.affine(a, b), 1e-8).unwrap();
                prop_assert_eq!(base.partition, moved.partition);
                prop_assert!(base.simplex_point.max_abs_diff(&moved.simplex_point) <= 1e-12);
            }
            Err(_) => {
                // degenerate diagonal stays degenerate under affine maps
                prop_assert!(eigen_configuration(&q.affine(a, b), 1e-8).is_err());
            }
        }
    }
}
