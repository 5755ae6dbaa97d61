//! Permutations and signed permutations of `{1, …, n}`.
//!
//! Stored with 0-based images internally; the `Display` form and the
//! [`Permutation::one_line`] accessor are 1-based, matching the usual
//! one-line notation `(2, 3, 1)`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Build from the image vector: `image[i]` is where `i` is sent.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::InvalidStructure(format!(
                    "not a permutation of 0..{n}: {image:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// One-line notation with 1-based values.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            image: (0..self.degree())
                .map(|i| self.image[other.image[i]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// The permutation that stably sorts `values` ascending: image `k ↦`
    /// original index of the k-th smallest value. Ties keep input order.
    pub fn stable_argsort(values: &[f64]) -> Permutation {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite values"));
        Permutation { image: idx }
    }

    /// All permutations of degree `n` in lexicographic order of their image
    /// vectors. Guarded at `n ≤ 9` (`9! = 362880` materialized values).
    pub fn all(n: usize) -> Result<Vec<Permutation>> {
        if n > 9 {
            return Err(Error::OutOfRange {
                what: "permutation degree",
                value: n,
                min: 0,
                max: 9,
            });
        }
        let mut out = Vec::new();
        let mut image = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if image.len() == n {
                out.push(Permutation {
                    image: image.clone(),
                });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    image.push(v);
                    rec(n, image, used, out);
                    image.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut image, &mut used, &mut out);
        Ok(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.one_line().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A signed permutation: a permutation together with a sign per row.
///
/// As a matrix, `M[i][j] = sign[i]` when `perm(i) = j` and `0` otherwise, so
/// `M diag(x) Mᵀ = diag(x ∘ perm)` regardless of signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Permutation,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Permutation, signs: Vec<i8>) -> Result<Self> {
        if perm.degree() != signs.len() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidStructure(format!(
                "signs must be ±1 and match the permutation degree, got {signs:?}"
            )));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn matrix(&self) -> Vec<Vec<f64>> {
        let n = self.degree();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            m[i][self.perm.apply(i)] = f64::from(self.signs[i]);
        }
        m
    }

    /// All `2ⁿ·n!` signed permutations of degree `n`, permutation-major in
    /// lexicographic order, signs enumerated as binary counters (`+` first).
    /// Guarded at `n ≤ 7` (`2⁷·7! = 645120` materialized values).
    pub fn all(n: usize) -> Result<Vec<SignedPermutation>> {
        if n > 7 {
            return Err(Error::OutOfRange {
                what: "signed permutation degree",
                value: n,
                min: 0,
                max: 7,
            });
        }
        let perms = Permutation::all(n)?;
        let mut out = Vec::with_capacity(perms.len() << n);
        for perm in perms {
            for mask in 0..(1u32 << n) {
                let signs = (0..n)
                    .map(|i| if mask & (1 << i) == 0 { 1 } else { -1 })
                    .collect();
                out.push(SignedPermutation {
                    perm: perm.clone(),
                    signs,
                });
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let t = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // (s ∘ t)(i) = s(t(i))
        let st = s.compose(&t);
        assert_eq!(st.images(), &[1, 0, 2]);
        assert!(s.compose(&s.inverse()).is_identity());
        assert!(s.inverse().compose(&s).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn argsort_is_stable() {
        let p = Permutation::stable_argsort(&[2.0, 1.0, 2.0, 1.0]);
        assert_eq!(p.images(), &[1, 3, 0, 2]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(4).unwrap().len(), 24);
        assert_eq!(SignedPermutation::all(3).unwrap().len(), 48);
        assert_eq!(SignedPermutation::all(0).unwrap().len(), 1);
    }

    #[test]
    fn signed_matrix_shape() {
        let sp = SignedPermutation::new(Permutation::from_images(vec![1, 0]).unwrap(), vec![1, -1])
            .unwrap();
        assert_eq!(sp.matrix(), vec![vec![0.0, 1.0], vec![-1.0, 0.0]]);
    }

    #[test]
    fn display_is_one_based() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(p.to_string(), "(2,3,1)");
    }
}
