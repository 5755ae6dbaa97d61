//! Normalized gap coordinates on the standard simplex.
//!
//! A configuration of `n` values on the line, taken up to orientation-
//! preserving affine maps, is the vector of its `n−1` consecutive gaps
//! divided by the total range: barycentric coordinates of a point of the
//! `(n−2)`-simplex. Collisions put zeros in the gap vector, landing on the
//! simplex boundary.

use std::fmt;

use crate::error::{Error, Result};

/// Tolerance on `Σ t_k = 1` accepted at construction.
pub const COORD_SUM_TOL: f64 = 1e-12;

/// Barycentric gap coordinates `(t₁, …, t_{n−1})` with `t_k ≥ 0` and
/// `Σ t_k = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    pub fn from_coords(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidStructure(
                "a simplex point needs at least one coordinate".into(),
            ));
        }
        if coords.iter().any(|t| !t.is_finite() || *t < 0.0) {
            return Err(Error::InvalidStructure(format!(
                "simplex coordinates must be finite and nonnegative: {coords:?}"
            )));
        }
        let sum: f64 = coords.iter().sum();
        if (sum - 1.0).abs() > COORD_SUM_TOL {
            return Err(Error::InvalidStructure(format!(
                "simplex coordinates must sum to 1, got {sum}"
            )));
        }
        Ok(SimplexPoint { coords })
    }

    /// The boundary point of a clustered value list: `representatives` are
    /// the strictly ascending cluster values and `sizes` their
    /// multiplicities. Gaps inside a cluster are exactly `0`; the gap
    /// between clusters `j` and `j+1` is their representative difference
    /// over the full representative range.
    ///
    /// # Panics
    /// If fewer than two clusters, representatives not strictly ascending,
    /// or any size is zero.
    pub fn from_clustered(representatives: &[f64], sizes: &[usize]) -> SimplexPoint {
        assert!(representatives.len() >= 2, "need at least two clusters");
        assert_eq!(representatives.len(), sizes.len());
        assert!(
            sizes.iter().all(|&s| s > 0),
            "cluster sizes must be positive"
        );
        assert!(
            representatives.windows(2).all(|w| w[0] < w[1]),
            "representatives must be strictly ascending"
        );
        let range = representatives[representatives.len() - 1] - representatives[0];
        let n: usize = sizes.iter().sum();
        let mut coords = Vec::with_capacity(n - 1);
        for (j, &size) in sizes.iter().enumerate() {
            // size − 1 internal gaps collapse to zero
            coords.extend(std::iter::repeat_n(0.0, size - 1));
            if j + 1 < representatives.len() {
                coords.push((representatives[j + 1] - representatives[j]) / range);
            }
        }
        debug_assert_eq!(coords.len(), n - 1);
        SimplexPoint { coords }
    }

    /// Interior point of a strictly ascending value list (all clusters
    /// singletons).
    pub fn from_sorted_distinct(values: &[f64]) -> SimplexPoint {
        SimplexPoint::from_clustered(values, &vec![1; values.len()])
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Indices (1-based) of exactly-zero gaps: the simplex facets this point
    /// lies on.
    pub fn zero_gaps(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == 0.0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Largest absolute coordinate difference against `other`.
    ///
    /// # Panics
    /// If the lengths differ.
    pub fn max_abs_diff(&self, other: &SimplexPoint) -> f64 {
        assert_eq!(self.len(), other.len(), "simplex dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_values_give_interior_point() {
        let t = SimplexPoint::from_sorted_distinct(&[3.0, 5.0, 7.0]);
        assert_eq!(t.coords(), &[0.5, 0.5]);
        assert!(t.zero_gaps().is_empty());
    }

    #[test]
    fn two_values_give_the_zero_simplex_point() {
        let t = SimplexPoint::from_sorted_distinct(&[0.0, 1.0]);
        assert_eq!(t.coords(), &[1.0]);
    }

    #[test]
    fn clustered_values_put_exact_zeros_at_internal_gaps() {
        // multiplicities (2, 1) on representatives (1, 2)
        let t = SimplexPoint::from_clustered(&[1.0, 2.0], &[2, 1]);
        assert_eq!(t.coords(), &[0.0, 1.0]);
        assert_eq!(t.zero_gaps(), vec![1]);
    }

    #[test]
    fn construction_validates() {
        assert!(SimplexPoint::from_coords(vec![]).is_err());
        assert!(SimplexPoint::from_coords(vec![0.5, 0.4]).is_err());
        assert!(SimplexPoint::from_coords(vec![1.5, -0.5]).is_err());
        assert!(SimplexPoint::from_coords(vec![0.5, 0.5]).is_ok());
        assert!(SimplexPoint::from_coords(vec![1.0]).is_ok());
    }
}
