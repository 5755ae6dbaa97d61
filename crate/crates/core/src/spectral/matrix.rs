//! Dense symmetric and square matrices, sized for desk-scale spectra
//! (orders up to a few hundred).

use std::fmt;

use crate::error::{Error, Result};

/// Relative asymmetry absorbed silently at construction; anything larger is
/// rejected rather than repaired.
pub const SYMMETRY_REL_TOL: f64 = 1e-9;

/// A real symmetric matrix with exact symmetry enforced at construction.
///
/// Inputs whose asymmetry is at most `1e-9 × ‖Q‖_max` are averaged with
/// their transpose; larger asymmetry is a [`Error::NotSymmetric`] error.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NotFinite {
                        location: format!("({}, {})", i + 1, j + 1),
                    });
                }
                data.push(v);
            }
        }
        let max_abs = data.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut max_asym = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                max_asym = max_asym.max((data[i * n + j] - data[j * n + i]).abs());
            }
        }
        let tolerance = SYMMETRY_REL_TOL * max_abs;
        if max_asym > tolerance {
            return Err(Error::NotSymmetric {
                max_asymmetry: max_asym,
                tolerance,
            });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (data[i * n + j] + data[j * n + i]);
                data[i * n + j] = avg;
                data[j * n + i] = avg;
            }
        }
        Ok(SymmetricMatrix { n, data })
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        let mut data = vec![0.0; n * n];
        for (i, &v) in diag.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NotFinite {
                    location: format!("({0}, {0})", i + 1),
                });
            }
            data[i * n + i] = v;
        }
        Ok(SymmetricMatrix { n, data })
    }

    pub fn identity(n: usize) -> Self {
        SymmetricMatrix::from_diagonal(&vec![1.0; n]).expect("identity is valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }

    /// Largest absolute entry.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest absolute entry difference against `other`.
    ///
    /// # Panics
    /// If the orders differ.
    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> f64 {
        assert_eq!(self.n, other.n, "order mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// The affine image `a·Q + b·I`.
    pub fn affine(&self, a: f64, b: f64) -> SymmetricMatrix {
        let mut data: Vec<f64> = self.data.iter().map(|v| a * v).collect();
        for i in 0..self.n {
            data[i * self.n + i] += b;
        }
        SymmetricMatrix { n: self.n, data }
    }

    /// `M Q Mᵀ`, symmetrized. Intended for (numerically) orthogonal `M`,
    /// where the product is symmetric up to rounding.
    pub fn conjugate(&self, m: &SquareMatrix) -> SymmetricMatrix {
        assert_eq!(self.n, m.order(), "order mismatch");
        let qmt = SquareMatrix::from(self.clone()).mul_transposed(m);
        let b = m.mul(&qmt);
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = 0.5 * (b.get(i, j) + b.get(j, i));
            }
        }
        SymmetricMatrix { n, data }
    }
}

/// A plain dense square matrix; used for orthogonal frames.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: rows.first().map_or(0, |r| r.len()),
            });
        }
        let data = rows.iter().flatten().copied().collect();
        Ok(SquareMatrix { n, data })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> SquareMatrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        SquareMatrix { n, data }
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "order mismatch");
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        SquareMatrix { n, data }
    }

    /// `self · otherᵀ`.
    pub fn mul_transposed(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "order mismatch");
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += self.data[i * n + k] * other.data[j * n + k];
                }
                data[i * n + j] = acc;
            }
        }
        SquareMatrix { n, data }
    }

    /// `‖M Mᵀ − I‖_max`.
    pub fn orthogonality_defect(&self) -> f64 {
        let prod = self.mul_transposed(self);
        let n = self.n;
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((prod.get(i, j) - target).abs());
            }
        }
        defect
    }

    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        assert_eq!(self.n, other.n, "order mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm of `M Mᵀ − I`.
    pub fn orthogonality_defect_fro(&self) -> f64 {
        let prod = self.mul_transposed(self);
        let n = self.n;
        let mut acc = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                let d = prod.get(i, j) - target;
                acc += d * d;
            }
        }
        acc.sqrt()
    }
}

impl From<SymmetricMatrix> for SquareMatrix {
    fn from(q: SymmetricMatrix) -> Self {
        SquareMatrix {
            n: q.n,
            data: q.data,
        }
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>12.6}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
