//! Labelled point configurations on the line, normalized modulo
//! orientation-preserving affine maps.
//!
//! A configuration of distinct labelled points determines a chamber (the
//! sorting permutation of its labels) and a point of the open simplex (its
//! normalized gap vector). Allowing collisions completes the picture: the
//! merged points give a face of the Coxeter complex and a boundary simplex
//! point. Collision detection reuses the eigenvalue clustering rule, so the
//! round trip through diagonal matrices is exact.

use crate::clustering::{cluster_means, single_linkage};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::polytopes::OrderedSetPartition;
use crate::simplex::SimplexPoint;
use crate::spectral::SymmetricMatrix;

/// Default relative collision threshold, matching the spectral default.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// A list of `n ≥ 2` labelled real points. Duplicates are permitted at
/// construction; [`normalize`] insists on distinct points while
/// [`compactified_cell`] merges them.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    points: Vec<f64>,
}

impl Configuration {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::OutOfRange {
                what: "configuration size",
                value: points.len(),
                min: 2,
                max: usize::MAX,
            });
        }
        for (i, &p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NotFinite {
                    location: format!("point {}", i + 1),
                });
            }
        }
        Ok(Configuration { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }
}

/// A configuration of distinct points up to `x ↦ ax + b`, `a > 0`: its
/// chamber and its interior simplex point.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedConfiguration {
    /// `chamber.apply(k)` (0-based) is the label of the k-th smallest
    /// point; one-line display is 1-based.
    pub chamber: Permutation,
    /// Gap vector of the sorted points over their range.
    pub simplex_point: SimplexPoint,
}

/// A possibly-collided configuration resolved to a closed cell: the ordered
/// set partition of labels (blocks in increasing value order) and the
/// boundary simplex point with exact zeros at merged gaps.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactifiedCell {
    pub cell: OrderedSetPartition,
    pub simplex_point: SimplexPoint,
}

/// Normalize a configuration of distinct points.
///
/// Invariant under `x ↦ ax + b` with `a > 0`. Reflections (`a < 0`) land in
/// the chamber relabelled through the order-reversing permutation, with the
/// gap vector reversed; that behavior falls out of sorting and is exercised
/// in tests but is not part of the affine-invariance contract.
pub fn normalize(config: &Configuration) -> Result<NormalizedConfiguration> {
    let points = config.points();
    let chamber = Permutation::stable_argsort(points);
    let sorted: Vec<f64> = chamber.images().iter().map(|&i| points[i]).collect();
    if sorted[0] == sorted[sorted.len() - 1] {
        return Err(Error::DegenerateConfiguration);
    }
    for (k, w) in sorted.windows(2).enumerate() {
        if w[0] == w[1] {
            return Err(Error::DuplicatePoints {
                first: chamber.apply(k) + 1,
                second: chamber.apply(k + 1) + 1,
            });
        }
    }
    let simplex_point = SimplexPoint::from_sorted_distinct(&sorted);
    Ok(NormalizedConfiguration {
        chamber,
        simplex_point,
    })
}

/// Resolve a configuration with collisions: points whose sorted gaps are at
/// most `rel_tol × range` merge into blocks.
///
/// With `rel_tol = 0`, distinct inputs reproduce [`normalize`] (every block
/// a singleton). All points coinciding — or all merging into one block — is
/// [`Error::DegenerateConfiguration`].
pub fn compactified_cell(config: &Configuration, rel_tol: f64) -> Result<CompactifiedCell> {
    let points = config.points();
    let order = Permutation::stable_argsort(points);
    let sorted: Vec<f64> = order.images().iter().map(|&i| points[i]).collect();
    if sorted[0] == sorted[sorted.len() - 1] {
        return Err(Error::DegenerateConfiguration);
    }
    let sizes = single_linkage(&sorted, rel_tol);
    if sizes.len() < 2 {
        return Err(Error::DegenerateConfiguration);
    }
    let representatives = cluster_means(&sorted, &sizes);

    let mut blocks = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &size in &sizes {
        let block: Vec<usize> = (start..start + size).map(|k| order.apply(k) + 1).collect();
        blocks.push(block);
        start += size;
    }
    let cell = OrderedSetPartition::new(points.len(), blocks)?;
    let simplex_point = SimplexPoint::from_clustered(&representatives, &sizes);
    Ok(CompactifiedCell {
        cell,
        simplex_point,
    })
}

/// The diagonal matrix with the configuration on its diagonal.
pub fn embed_diagonal(config: &Configuration) -> SymmetricMatrix {
    SymmetricMatrix::from_diagonal(config.points()).expect("configuration points are finite")
}
