//! Order-preserving batch evaluation over independent inputs.
//!
//! With the `parallel` feature (on by default) the mapped closure runs on
//! the rayon thread pool; results always come back in input order, so
//! parallel and sequential runs are interchangeable bit for bit. Building
//! with `--no-default-features` drops the rayon dependency entirely and
//! [`map_ordered`] degrades to the sequential path.

use crate::error::Result;
use crate::spectral::{self, EigenConfiguration, SpectralAnalysis, SymmetricMatrix};

/// Map `op` over `items`, results in input order, in parallel when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: &[T], op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(op).collect()
}

/// Map `op` over `items`, results in input order, in parallel when the
/// `parallel` feature is enabled.
#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: &[T], op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_ordered_seq(items, op)
}

/// The sequential reference path, always available.
pub fn map_ordered_seq<T, R, F>(items: &[T], op: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(op).collect()
}

/// Classify many matrices; one result per input, in input order.
pub fn eigen_configurations(
    matrices: &[SymmetricMatrix],
    rel_tol: f64,
) -> Vec<Result<EigenConfiguration>> {
    map_ordered(matrices, |q| spectral::eigen_configuration(q, rel_tol))
}

/// Sequential twin of [`eigen_configurations`].
pub fn eigen_configurations_seq(
    matrices: &[SymmetricMatrix],
    rel_tol: f64,
) -> Vec<Result<EigenConfiguration>> {
    map_ordered_seq(matrices, |q| spectral::eigen_configuration(q, rel_tol))
}

/// Full analyses (raw spectrum, normalized object, configuration) for many
/// matrices, in input order.
pub fn analyses(matrices: &[SymmetricMatrix], rel_tol: f64) -> Vec<Result<SpectralAnalysis>> {
    map_ordered(matrices, |q| spectral::analyze(q, rel_tol))
}
