//! Classification of real symmetric matrices by the eigenvalue-multiplicity
//! stratification, with the combinatorial geometry of normalized spectra.
//!
//! A symmetric matrix, taken up to orthogonal conjugation and affine
//! rescaling of its spectrum, is pinned down by its normalized eigenvalue
//! configuration: a point of a simplex together with a multiplicity
//! partition. This crate computes that classification and the combinatorial
//! structures around it:
//!
//! - [`combinatorics`] — partitions, stratum codimensions, and dimension
//!   bookkeeping, all in exact integer arithmetic;
//! - [`polytopes`] — faces of the type-A Coxeter complex and the
//!   associahedron, the blowdown between them, and moduli tiling counts;
//! - [`configuration`] — labelled point configurations on the line modulo
//!   orientation-preserving affine maps, with collision handling;
//! - [`spectral`] — a deterministic Jacobi eigensolver, spectrum
//!   normalization to `[0, 1]`, multiplicity clustering, labelled
//!   eigendecompositions with their morphisms and signed-permutation
//!   isotropy;
//! - [`groupoid`] — finite transformation groupoids, orbits, isotropy,
//!   exact groupoid cardinality, and fiber products along functors;
//! - [`batch`] — order-preserving batch evaluation, parallel via rayon
//!   when the `parallel` feature (default) is enabled.
//!
//! Collision detection for configurations and multiplicity detection for
//! spectra share one clustering routine, so normalizing a diagonal matrix
//! agrees exactly with normalizing the configuration on its diagonal.
//!
//! ```
//! use eigenstrata::spectral::{analyze, SymmetricMatrix};
//!
//! // two eigenvalues collide, one stays apart: stratum 2+1
//! let q = SymmetricMatrix::from_diagonal(&[0.0, 0.0, 1.0])?;
//! let result = analyze(&q, 1e-8)?;
//! assert_eq!(result.configuration.partition.parts(), &[2, 1]);
//! assert_eq!(result.configuration.codim, 2);
//! assert_eq!(result.configuration.simplex_point.coords(), &[0.0, 1.0]);
//! # Ok::<(), eigenstrata::Error>(())
//! ```

pub mod batch;
pub mod clustering;
pub mod combinatorics;
pub mod configuration;
mod error;
pub mod groupoid;
pub mod perm;
pub mod polytopes;
pub mod simplex;
pub mod spectral;

pub use error::{Error, Result};
