//! Cyclic Jacobi eigensolver for symmetric matrices.
//!
//! Jacobi rotations deliver high relative accuracy for clustered spectra,
//! which is exactly the regime the multiplicity stratification cares about,
//! and the fixed sweep order plus a sign convention make the output a
//! deterministic function of the input.

use crate::error::{Error, Result};

use super::matrix::{SquareMatrix, SymmetricMatrix};

/// Sweep limit before conceding [`Error::NoConvergence`].
pub const MAX_SWEEPS: usize = 100;
/// Convergence target: off-diagonal Frobenius norm relative to `‖Q‖_F`.
pub const CONVERGENCE_REL: f64 = 1e-13;

/// Accepted orthogonality defect `‖S Sᵀ − I‖_max` of a frame.
pub const FRAME_ORTH_TOL: f64 = 1e-12;
/// Accepted reconstruction defect `‖S Q Sᵀ − X‖_max` relative to
/// `1 + ‖Q‖_max`.
pub const RECON_REL_TOL: f64 = 1e-10;

/// A diagonalization `S Q Sᵀ = X` of a symmetric matrix: the rows of the
/// orthogonal frame `S` are eigenvectors and `diag` holds the eigenvalues,
/// weakly ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    q: SymmetricMatrix,
    frame: SquareMatrix,
    diag: Vec<f64>,
}

impl EigenDecomposition {
    /// Assemble and validate a decomposition: frame orthogonal to
    /// [`FRAME_ORTH_TOL`], eigenvalues weakly ascending, and
    /// `‖S Q Sᵀ − X‖_max ≤ 1e-10 (1 + ‖Q‖_max)`.
    pub fn new(q: SymmetricMatrix, frame: SquareMatrix, diag: Vec<f64>) -> Result<Self> {
        let n = q.order();
        if frame.order() != n || diag.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: frame.order().max(diag.len()),
            });
        }
        if frame.orthogonality_defect() > FRAME_ORTH_TOL {
            return Err(Error::InvalidDecomposition {
                reason: "frame is not orthogonal",
            });
        }
        if diag.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDecomposition {
                reason: "eigenvalues not ascending",
            });
        }
        let recon_tol = RECON_REL_TOL * (1.0 + q.max_norm());
        let conj = q.conjugate(&frame);
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { diag[i] } else { 0.0 };
                defect = defect.max((conj.get(i, j) - target).abs());
            }
        }
        if defect > recon_tol {
            return Err(Error::InvalidDecomposition {
                reason: "S Q St does not reproduce the diagonal",
            });
        }
        Ok(EigenDecomposition { q, frame, diag })
    }

    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.q
    }

    /// The orthogonal frame `S`, rows = eigenvectors, with `S Q Sᵀ = X`.
    pub fn frame(&self) -> &SquareMatrix {
        &self.frame
    }

    /// Eigenvalues, weakly ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.diag
    }

    pub fn order(&self) -> usize {
        self.q.order()
    }

    /// `Sᵀ X S`: the matrix rebuilt from its spectral data.
    pub fn reconstruct(&self) -> SymmetricMatrix {
        let n = self.order();
        let mut xs = self.frame.clone(); // will hold X·S
        for i in 0..n {
            for j in 0..n {
                xs.set(i, j, self.diag[i] * self.frame.get(i, j));
            }
        }
        let full = self.frame.transpose().mul(&xs);
        let mut rows = full.rows();
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (rows[i][j] + rows[j][i]);
                rows[i][j] = avg;
                rows[j][i] = avg;
            }
        }
        SymmetricMatrix::from_rows(&rows).expect("reconstruction is symmetric and finite")
    }
}

/// Diagonalize `q` with cyclic Jacobi sweeps.
///
/// Deterministic: fixed row-major sweep order, eigenvalues sorted ascending
/// with ties kept in sweep order, and each eigenvector's largest-magnitude
/// entry made positive (lowest index wins ties).
pub fn jacobi_eigen(q: &SymmetricMatrix) -> Result<EigenDecomposition> {
    let n = q.order();
    let norm = q.frobenius_norm();
    let target = CONVERGENCE_REL * norm;

    let mut a: Vec<f64> = q.data().to_vec();
    let mut v = SquareMatrix::identity(n); // columns accumulate eigenvectors

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a, n);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n.saturating_sub(1) {
            for r in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, r);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    // ascending eigenvalue order, stable on ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        a[x * n + x]
            .partial_cmp(&a[y * n + y])
            .expect("finite eigenvalues")
            .then(x.cmp(&y))
    });
    let diag: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();

    // S row k = eigenvector for diag[k] = column order[k] of v,
    // sign-fixed: largest-magnitude entry positive, lowest index on ties.
    let mut frame = SquareMatrix::identity(n);
    for (k, &col) in order.iter().enumerate() {
        let mut best = 0;
        let mut best_abs = -1.0f64;
        for i in 0..n {
            let abs = v.get(i, col).abs();
            if abs > best_abs {
                best_abs = abs;
                best = i;
            }
        }
        let sign = if v.get(best, col) < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            frame.set(k, j, sign * v.get(j, col));
        }
    }

    EigenDecomposition::new(q.clone(), frame, diag)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for p in 0..n {
        for r in (p + 1)..n {
            acc += a[p * n + r] * a[p * n + r];
        }
    }
    (2.0 * acc).sqrt()
}

/// One Jacobi rotation annihilating `a[p][r]`, accumulated into `v`.
fn rotate(a: &mut [f64], v: &mut SquareMatrix, n: usize, p: usize, r: usize) {
    let apr = a[p * n + r];
    if apr == 0.0 {
        return;
    }
    let theta = 0.5 * (a[r * n + r] - a[p * n + p]) / apr;
    let t = if theta.abs() > 1e150 {
        // avoid overflow in theta²; the rotation is then essentially zero
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    let app = a[p * n + p];
    let arr = a[r * n + r];
    a[p * n + p] = app - t * apr;
    a[r * n + r] = arr + t * apr;
    a[p * n + r] = 0.0;
    a[r * n + p] = 0.0;

    for j in 0..n {
        if j != p && j != r {
            let ajp = a[j * n + p];
            let ajr = a[j * n + r];
            a[j * n + p] = ajp - s * (ajr + tau * ajp);
            a[j * n + r] = ajr + s * (ajp - tau * ajr);
            a[p * n + j] = a[j * n + p];
            a[r * n + j] = a[j * n + r];
        }
    }
    for j in 0..n {
        let vjp = v.get(j, p);
        let vjr = v.get(j, r);
        v.set(j, p, vjp - s * (vjr + tau * vjp));
        v.set(j, r, vjr + s * (vjp - tau * vjr));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[Vec<f64>]) -> SymmetricMatrix {
        SymmetricMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn two_by_two_example() {
        // characteristic polynomial λ² − 4λ + 3 = (λ−1)(λ−3)
        let q = sym(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let eig = jacobi_eigen(&q).unwrap();
        let inv_sqrt2 = 0.5f64.sqrt();
        assert!((eig.eigenvalues()[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues()[1] - 3.0).abs() < 1e-14);
        // rows are the eigenvectors, sign convention: tie broken at index 0
        let s = eig.frame();
        assert!((s.get(0, 0) - inv_sqrt2).abs() < 1e-14);
        assert!((s.get(0, 1) + inv_sqrt2).abs() < 1e-14);
        assert!((s.get(1, 0) - inv_sqrt2).abs() < 1e-14);
        assert!((s.get(1, 1) - inv_sqrt2).abs() < 1e-14);
    }

    #[test]
    fn identity_needs_no_sweeps() {
        let eig = jacobi_eigen(&SymmetricMatrix::identity(3)).unwrap();
        assert_eq!(eig.eigenvalues(), &[1.0, 1.0, 1.0]);
        assert_eq!(eig.frame(), &SquareMatrix::identity(3));
    }

    #[test]
    fn diagonal_input_only_sorts() {
        let q = SymmetricMatrix::from_diagonal(&[3.0, 1.0, 2.0]).unwrap();
        let eig = jacobi_eigen(&q).unwrap();
        assert_eq!(eig.eigenvalues(), &[1.0, 2.0, 3.0]);
        let expected = SquareMatrix::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 0.0],
        ])
        .unwrap();
        assert_eq!(eig.frame(), &expected);
    }

    #[test]
    fn zero_matrix_is_fine() {
        let q = SymmetricMatrix::from_diagonal(&[0.0, 0.0]).unwrap();
        let eig = jacobi_eigen(&q).unwrap();
        assert_eq!(eig.eigenvalues(), &[0.0, 0.0]);
    }

    #[test]
    fn one_by_one() {
        let q = SymmetricMatrix::from_diagonal(&[4.5]).unwrap();
        let eig = jacobi_eigen(&q).unwrap();
        assert_eq!(eig.eigenvalues(), &[4.5]);
    }

    #[test]
    fn reconstruction_and_orthogonality() {
        let q = sym(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, 3.0, 2.0],
            vec![3.0, 2.0, 2.0],
        ]);
        let eig = jacobi_eigen(&q).unwrap();
        assert!(eig.frame().orthogonality_defect() < 1e-13);
        assert!(eig.reconstruct().max_abs_diff(&q) < 1e-12);
        // eigenvalues sum to the trace
        let trace: f64 = (0..3).map(|i| q.get(i, i)).sum();
        let sum: f64 = eig.eigenvalues().iter().sum();
        assert!((trace - sum).abs() < 1e-12);
    }

    #[test]
    fn determinism() {
        let q = sym(&[
            vec![0.3, -1.2, 0.7, 0.1],
            vec![-1.2, 2.0, 0.4, -0.9],
            vec![0.7, 0.4, -1.0, 0.2],
            vec![0.1, -0.9, 0.2, 0.8],
        ]);
        let a = jacobi_eigen(&q).unwrap();
        let b = jacobi_eigen(&q).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn manual_decomposition_is_validated() {
        let q = sym(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let bad = EigenDecomposition::new(q.clone(), SquareMatrix::identity(2), vec![1.0, 3.0]);
        assert!(matches!(bad, Err(Error::InvalidDecomposition { .. })));
        let unsorted = EigenDecomposition::new(q, SquareMatrix::identity(2), vec![3.0, 1.0]);
        assert!(unsorted.is_err());
    }
}
