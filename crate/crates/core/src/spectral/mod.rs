//! Symmetric eigendecomposition and the classification of a form by its
//! normalized eigenvalue configuration.
//!
//! A nondegenerate form (at least two eigenvalue clusters) is normalized so
//! its extreme eigenvalues sit at 0 and 1; the multiplicity pattern of the
//! clustered spectrum indexes its stratum, and the between-cluster gaps give
//! a point on a simplex. The labelled-eigenvalue layer keeps the orthogonal
//! frame alongside, with signed permutations as the finite isotropy.

mod jacobi;
mod matrix;

pub use jacobi::{
    jacobi_eigen, EigenDecomposition, CONVERGENCE_REL, FRAME_ORTH_TOL, MAX_SWEEPS, RECON_REL_TOL,
};
pub use matrix::{SquareMatrix, SymmetricMatrix, SYMMETRY_REL_TOL};

use num::bigint::BigUint;

use crate::clustering::{cluster_means, single_linkage};
use crate::combinatorics::{arnold_codim, normalizer_order, stratum_dims, Partition, StratumDims};
use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};
use crate::simplex::SimplexPoint;

/// Default relative clustering threshold: square root of double-precision
/// epsilon scale, robust to eigensolver noise.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// Largest order accepted by [`diagonalizer_census`]
/// (`2⁶·6! = 46080` signed permutation matrices).
pub const MAX_CENSUS_ORDER: usize = 6;

/// Eigenvalues grouped into multiplicity clusters.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterPartition {
    /// Cluster sizes in canonical descending order.
    pub partition: Partition,
    /// Cluster sizes in positional (ascending-eigenvalue) order.
    pub cluster_sizes: Vec<usize>,
    /// Cluster means in ascending order, one per cluster.
    pub representatives: Vec<f64>,
}

/// Where a form sits in the multiplicity stratification, together with its
/// normalized spectral shape.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenConfiguration {
    /// Between-eigenvalue gaps over the spectral range; exactly `0` at
    /// intra-cluster gaps.
    pub simplex_point: SimplexPoint,
    /// Multiplicity partition, descending.
    pub partition: Partition,
    /// Codimension of the stratum.
    pub codim: usize,
    /// Full dimension bookkeeping of the stratum.
    pub stratum: StratumDims,
    /// `∏ n_i!·2^{n_i}`, the order of the finite isotropy of a labelled
    /// diagonalization.
    pub normalizer_order: BigUint,
    /// Cluster sizes in positional (ascending-eigenvalue) order.
    pub cluster_sizes: Vec<usize>,
    /// Cluster means in ascending order.
    pub representatives: Vec<f64>,
}

/// Everything computed from one diagonalization pass: the raw spectrum, its
/// normalized labelled object, and the stratification data.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralAnalysis {
    /// Decomposition of the input matrix.
    pub decomposition: EigenDecomposition,
    /// Decomposition of the normalized form: eigenvalues mapped onto
    /// `[0, 1]` with the extremes pinned exactly, same frame.
    pub normalized: EigenDecomposition,
    /// Stratum and simplex location of the clustered spectrum.
    pub configuration: EigenConfiguration,
}

/// Exhaustive census of signed permutation matrices commuting with a
/// diagonal matrix up to clustering.
#[derive(Debug, Clone)]
pub struct DiagonalizerCensus {
    pub count: usize,
    pub matrices: Vec<SignedPermutation>,
}

/// Cluster a weakly ascending eigenvalue list at the given relative
/// threshold.
///
/// Errors with [`Error::DegenerateForm`] when everything merges into a
/// single cluster (the scalar family).
///
/// # Panics
/// If `eigs` has fewer than two entries or is not weakly ascending.
pub fn cluster_partition(eigs: &[f64], rel_tol: f64) -> Result<ClusterPartition> {
    assert!(eigs.len() >= 2, "need at least two eigenvalues");
    let cluster_sizes = single_linkage(eigs, rel_tol);
    if cluster_sizes.len() < 2 {
        return Err(Error::DegenerateForm);
    }
    let representatives = cluster_means(eigs, &cluster_sizes);
    let partition = Partition::new(cluster_sizes.clone())?;
    Ok(ClusterPartition {
        partition,
        cluster_sizes,
        representatives,
    })
}

/// Full analysis of a nondegenerate form: one Jacobi pass feeding the
/// normalized labelled object and the stratum data.
pub fn analyze(q: &SymmetricMatrix, rel_tol: f64) -> Result<SpectralAnalysis> {
    let decomposition = jacobi_eigen(q)?;
    if q.order() < 2 {
        return Err(Error::DegenerateForm);
    }
    let clusters = cluster_partition(decomposition.eigenvalues(), rel_tol)?;

    let lo = decomposition.eigenvalues()[0];
    let hi = decomposition.eigenvalues()[q.order() - 1];
    let range = hi - lo;
    let normalized_q = q.affine(1.0 / range, -lo / range);
    let normalized_eigs: Vec<f64> = decomposition
        .eigenvalues()
        .iter()
        .map(|&x| (x - lo) / range)
        .collect();
    let normalized =
        EigenDecomposition::new(normalized_q, decomposition.frame().clone(), normalized_eigs)?;

    let configuration = configuration_from_clusters(&clusters);
    Ok(SpectralAnalysis {
        decomposition,
        normalized,
        configuration,
    })
}

fn configuration_from_clusters(clusters: &ClusterPartition) -> EigenConfiguration {
    let simplex_point =
        SimplexPoint::from_clustered(&clusters.representatives, &clusters.cluster_sizes);
    let partition = clusters.partition.clone();
    EigenConfiguration {
        simplex_point,
        codim: arnold_codim(&partition),
        stratum: stratum_dims(&partition),
        normalizer_order: normalizer_order(&partition),
        partition,
        cluster_sizes: clusters.cluster_sizes.clone(),
        representatives: clusters.representatives.clone(),
    }
}

/// `(Q − λ_min·I)/(λ_max − λ_min)`: eigenvalues mapped onto `[0, 1]`.
///
/// Idempotent up to solver accuracy. Degenerate forms (single cluster at
/// `rel_tol`) are rejected.
pub fn normalize_form(q: &SymmetricMatrix, rel_tol: f64) -> Result<SymmetricMatrix> {
    Ok(analyze(q, rel_tol)?.normalized.matrix().clone())
}

/// Stratum membership and simplex location of the clustered spectrum.
pub fn eigen_configuration(q: &SymmetricMatrix, rel_tol: f64) -> Result<EigenConfiguration> {
    Ok(analyze(q, rel_tol)?.configuration)
}

/// The canonical labelled object of a nondegenerate form: its normalized
/// matrix, the deterministic orthogonal frame, and the normalized spectrum
/// with extremes exactly 0 and 1.
///
/// Distinct eigenvalue clusters separated by less than solver accuracy
/// (far below the default `rel_tol`) make the normalized reconstruction
/// check fail with [`Error::InvalidDecomposition`]; labels carry no meaning
/// at that scale.
pub fn labelled_object(q: &SymmetricMatrix, rel_tol: f64) -> Result<EigenDecomposition> {
    Ok(analyze(q, rel_tol)?.normalized)
}

/// Look for a relabeling morphism between two labelled objects: a
/// permutation `σ` realized by `S_b S_aᵀ` carrying the diagonal of `a` to
/// the diagonal of `b`, with the underlying forms equal within `tol`.
///
/// Returns `None` when the forms differ or the frames are not related by a
/// signed permutation. The returned `σ` satisfies
/// `X_b[i] = X_a[σ(i)]` within `tol`.
pub fn find_morphism(
    a: &EigenDecomposition,
    b: &EigenDecomposition,
    tol: f64,
) -> Result<Option<Permutation>> {
    let n = a.order();
    if b.order() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.order(),
        });
    }
    if a.matrix().max_abs_diff(b.matrix()) > tol {
        return Ok(None);
    }
    let relating = b.frame().mul_transposed(a.frame()); // S_b · S_aᵀ
    let mut image = vec![usize::MAX; n];
    for i in 0..n {
        let mut hit = None;
        for j in 0..n {
            let v = relating.get(i, j).abs();
            if (v - 1.0).abs() <= tol {
                if hit.is_some() {
                    return Ok(None);
                }
                hit = Some(j);
            } else if v > tol {
                return Ok(None);
            }
        }
        match hit {
            Some(j) => image[i] = j,
            None => return Ok(None),
        }
    }
    let sigma = match Permutation::from_images(image) {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    // conjugation by a signed permutation pulls diagonal entry σ(i) to slot i
    for i in 0..n {
        if (b.eigenvalues()[i] - a.eigenvalues()[sigma.apply(i)]).abs() > tol {
            return Ok(None);
        }
    }
    Ok(Some(sigma))
}

/// Brute-force enumeration of the signed permutation matrices `M` with
/// `M diag(x) Mᵀ = diag(x)` up to the clustering of `x` at `rel_tol`.
///
/// The closed-form count `∏ n_i!·2^{n_i}` from the partition module is the
/// matching oracle; the two are cross-checked in tests.
///
/// # Panics
/// If `x_diag` is empty or not weakly ascending.
pub fn diagonalizer_census(x_diag: &[f64], rel_tol: f64) -> Result<DiagonalizerCensus> {
    let n = x_diag.len();
    if n > MAX_CENSUS_ORDER {
        return Err(Error::OutOfRange {
            what: "census order",
            value: n,
            min: 1,
            max: MAX_CENSUS_ORDER,
        });
    }
    assert!(n >= 1, "need at least one diagonal entry");
    let sizes = single_linkage(x_diag, rel_tol);
    let mut cluster_of = Vec::with_capacity(n);
    for (c, &size) in sizes.iter().enumerate() {
        cluster_of.extend(std::iter::repeat_n(c, size));
    }

    let mut matrices = Vec::new();
    for sp in SignedPermutation::all(n)? {
        if commutes_clustered(&sp, x_diag, &cluster_of) {
            matrices.push(sp);
        }
    }
    Ok(DiagonalizerCensus {
        count: matrices.len(),
        matrices,
    })
}

/// Forms `M X Mᵀ` and checks it agrees with `X` at cluster resolution:
/// exactly diagonal, with every diagonal entry in the same cluster as the
/// entry it replaced.
fn commutes_clustered(sp: &SignedPermutation, x_diag: &[f64], cluster_of: &[usize]) -> bool {
    let n = x_diag.len();
    let m = sp.matrix();
    for i in 0..n {
        for j in 0..n {
            // (M X Mᵀ)[i][j] = Σ_k m[i][k] x[k] m[j][k]
            let entry: f64 = (0..n).map(|k| m[i][k] * x_diag[k] * m[j][k]).sum();
            if i == j {
                let source = match x_diag.iter().position(|&x| x == entry) {
                    Some(k) => k,
                    None => return false,
                };
                if cluster_of[source] != cluster_of[i] {
                    return false;
                }
            } else if entry != 0.0 {
                return false;
            }
        }
    }
    true
}
