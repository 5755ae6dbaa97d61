//! Exact integer combinatorics of eigenvalue-multiplicity partitions and the
//! dimension bookkeeping of the Arnold stratification of symmetric matrices.
//!
//! The space of real symmetric `n × n` matrices is stratified by the
//! multiplicity pattern of the spectrum: a partition `n = n₁ + ⋯ + n_r`
//! with `ν_i` parts of size `i`. Everything in this module is exact integer
//! arithmetic; there is no floating point here.

use std::fmt;

use num::bigint::BigUint;
use num::One;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`partitions_of`]. `p(30) = 5604`, which keeps
/// full enumerations cheap; downstream factorial-sized brute forces carry
/// their own, tighter caps.
pub const MAX_PARTITION_N: usize = 30;

/// Largest `Σ parts` a [`Partition`] will hold. Matrices here are
/// desk-scale (a few hundred rows); the cap keeps every derived quantity,
/// including the `∏ n_i!·2^{n_i}` normalizer order, comfortably computable.
pub const MAX_PARTITION_SUM: usize = 4096;

/// A partition of a positive integer, stored in descending canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalizes `parts` (sorts descending). Rejects empty input, zero
    /// parts, and sums beyond [`MAX_PARTITION_SUM`].
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidStructure(format!(
                "partition parts must be positive and nonempty, got {parts:?}"
            )));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_PARTITION_SUM {
            return Err(Error::OutOfRange {
                what: "partition sum",
                value: n,
                min: 1,
                max: MAX_PARTITION_SUM,
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parts in descending order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer `n = Σ parts`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `ν_i`: the number of parts equal to `i`.
    pub fn nu(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }
}

impl fmt::Display for Partition {
    /// Renders as `3+2+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Dimension counts attached to one stratum of the multiplicity
/// stratification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumDims {
    /// `dim ∏ O(n_i) = Σ n_i(n_i−1)/2`, the isotropy of a form in the stratum.
    pub orth_isotropy_dim: usize,
    /// `dim O(n)/O(𝐧)`: the flag directions along the orbit.
    pub flag_dim: usize,
    /// `orth_isotropy_dim + flag_dim`; always `n(n−1)/2`.
    pub relative_dim: usize,
    /// Codimension of the stratum in the space of forms.
    pub codim: usize,
    /// `r`, the number of distinct-eigenvalue slots (parts).
    pub family_dim: usize,
}

/// Dimensions of the ambient spaces for order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceDims {
    /// `dim` of the space of symmetric matrices: `n(n+1)/2`.
    pub quad_dim: usize,
    /// `dim O(n) = n(n−1)/2`.
    pub orth_dim: usize,
    /// `quad_dim − orth_dim`; always `n`.
    pub difference: usize,
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1,…,1)` last.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if !(1..=MAX_PARTITION_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "partition target n",
            value: n,
            min: 1,
            max: MAX_PARTITION_N,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// Codimension `a(𝐧) = ½ Σ (i+2)(i−1) ν_i` of the stratum indexed by `p`.
pub fn arnold_codim(p: &Partition) -> usize {
    let twice: usize = p.parts.iter().map(|&ni| (ni + 2) * (ni - 1)).sum();
    debug_assert_eq!(twice % 2, 0, "(i+2)(i-1) is always even");
    twice / 2
}

/// The same codimension through the dimension-count route
/// `½n(n+1) − [r + ½(n(n−1) − Σ n_i(n_i−1))]`, kept as an independent
/// cross-check of [`arnold_codim`].
pub fn arnold_codim_raw(p: &Partition) -> usize {
    let n = p.n();
    let r = p.len();
    let iso_twice: usize = p.parts.iter().map(|&ni| ni * (ni - 1)).sum();
    let stratum_dim = r + (n * (n - 1) - iso_twice) / 2;
    n * (n + 1) / 2 - stratum_dim
}

/// Ambient dimension counts for order `n ≥ 1`.
pub fn space_dims(n: usize) -> SpaceDims {
    assert!(n >= 1, "order must be positive");
    SpaceDims {
        quad_dim: n * (n + 1) / 2,
        orth_dim: n * (n - 1) / 2,
        difference: n,
    }
}

/// Dimension bookkeeping of the stratum indexed by `p`.
pub fn stratum_dims(p: &Partition) -> StratumDims {
    let n = p.n();
    let orth_isotropy_dim: usize = p.parts.iter().map(|&ni| ni * (ni - 1) / 2).sum();
    let flag_dim = n * (n - 1) / 2 - orth_isotropy_dim;
    StratumDims {
        orth_isotropy_dim,
        flag_dim,
        relative_dim: orth_isotropy_dim + flag_dim,
        codim: arnold_codim(p),
        family_dim: p.len(),
    }
}

/// Order of the finite normalizer `∏ Σ_{n_i} ≀ Z₂`, i.e. `∏ n_i!·2^{n_i}`:
/// the signed permutations preserving each multiplicity cluster.
///
/// The matching brute force lives in the spectral module
/// (`diagonalizer_census`), which enumerates signed permutation matrices
/// commuting with a diagonal matrix of the given multiplicity pattern.
pub fn normalizer_order(p: &Partition) -> BigUint {
    let mut order = BigUint::one();
    for &ni in p.parts() {
        for k in 2..=ni {
            order *= BigUint::from(k);
        }
        order <<= ni;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent partition-count oracle: Euler's pentagonal-number
    /// recurrence for p(n).
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    acc += sign * p[m - g2];
                }
                k += 1;
            }
            p[m] = acc;
        }
        p[n] as u64
    }

    #[test]
    fn partitions_of_small() {
        let one = partitions_of(1).unwrap();
        assert_eq!(one, vec![part(&[1])]);

        let four = partitions_of(4).unwrap();
        let expected: Vec<Partition> = [
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ]
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect();
        assert_eq!(four, expected);

        assert_eq!(partitions_of(5).unwrap().len(), 7);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        for n in 1..=20 {
            assert_eq!(
                partitions_of(n).unwrap().len() as u64,
                partition_count(n),
                "p({n})"
            );
        }
    }

    #[test]
    fn partitions_of_bounds() {
        assert!(matches!(partitions_of(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(partitions_of(31), Err(Error::OutOfRange { .. })));
        assert_eq!(partitions_of(30).unwrap().len(), 5604);
    }

    #[test]
    fn partition_canonicalizes() {
        let p = Partition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.n(), 6);
        assert_eq!(p.nu(1), 1);
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![MAX_PARTITION_SUM + 1]).is_err());
        assert!(Partition::new(vec![MAX_PARTITION_SUM]).is_ok());
    }

    #[test]
    fn nu_sums_to_n() {
        for p in partitions_of(9).unwrap() {
            let n: usize = (1..=9).map(|i| i * p.nu(i)).sum();
            assert_eq!(n, p.n());
        }
    }

    #[test]
    fn codim_examples() {
        assert_eq!(arnold_codim(&part(&[1, 1, 1])), 0);
        assert_eq!(arnold_codim(&part(&[2])), 2);
        assert_eq!(arnold_codim(&part(&[2, 2])), 4);
        assert_eq!(arnold_codim(&part(&[4])), 9);
        // hand substitution of the raw route: (2,2) → 10 − (2 + 4) = 4,
        // (4) → 10 − (1 + 0) = 9
        assert_eq!(arnold_codim_raw(&part(&[1, 1, 1, 1])), 0);
        assert_eq!(arnold_codim_raw(&part(&[2, 2])), 4);
        assert_eq!(arnold_codim_raw(&part(&[4])), 9);
    }

    #[test]
    fn codim_routes_agree_exhaustively() {
        for n in 1..=12 {
            for p in partitions_of(n).unwrap() {
                assert_eq!(arnold_codim(&p), arnold_codim_raw(&p), "{p}");
            }
        }
    }

    #[test]
    fn codim_zero_iff_all_ones() {
        for n in 1..=10 {
            for p in partitions_of(n).unwrap() {
                let all_ones = p.parts().iter().all(|&x| x == 1);
                assert_eq!(arnold_codim(&p) == 0, all_ones, "{p}");
            }
        }
    }

    #[test]
    fn codim_weakly_increases_under_merges() {
        for n in 2..=12 {
            for p in partitions_of(n).unwrap() {
                let parts = p.parts();
                for i in 0..parts.len() {
                    for j in (i + 1)..parts.len() {
                        let mut merged: Vec<usize> = parts.to_vec();
                        let b = merged.remove(j);
                        merged[i] += b;
                        let q = Partition::new(merged).unwrap();
                        assert!(
                            arnold_codim(&q) >= arnold_codim(&p),
                            "merging {p} into {q} dropped codim"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn space_dims_examples() {
        assert_eq!(
            space_dims(1),
            SpaceDims {
                quad_dim: 1,
                orth_dim: 0,
                difference: 1
            }
        );
        assert_eq!(
            space_dims(3),
            SpaceDims {
                quad_dim: 6,
                orth_dim: 3,
                difference: 3
            }
        );
        assert_eq!(
            space_dims(4),
            SpaceDims {
                quad_dim: 10,
                orth_dim: 6,
                difference: 4
            }
        );
        for n in 1..=50 {
            let d = space_dims(n);
            assert_eq!(d.quad_dim - d.orth_dim, n);
            assert_eq!(d.difference, n);
        }
    }

    #[test]
    fn stratum_dims_examples() {
        let d = stratum_dims(&part(&[1, 1, 1]));
        assert_eq!(
            d,
            StratumDims {
                orth_isotropy_dim: 0,
                flag_dim: 3,
                relative_dim: 3,
                codim: 0,
                family_dim: 3
            }
        );
        let d = stratum_dims(&part(&[2, 1]));
        assert_eq!(
            d,
            StratumDims {
                orth_isotropy_dim: 1,
                flag_dim: 2,
                relative_dim: 3,
                codim: 2,
                family_dim: 2
            }
        );
        let d = stratum_dims(&part(&[3]));
        assert_eq!(
            d,
            StratumDims {
                orth_isotropy_dim: 3,
                flag_dim: 0,
                relative_dim: 3,
                codim: 5,
                family_dim: 1
            }
        );
    }

    #[test]
    fn relative_dim_is_constant_per_n() {
        for n in 1..=12 {
            for p in partitions_of(n).unwrap() {
                assert_eq!(stratum_dims(&p).relative_dim, n * (n - 1) / 2, "{p}");
            }
        }
    }

    #[test]
    fn normalizer_order_examples() {
        assert_eq!(normalizer_order(&part(&[1, 1, 1])), BigUint::from(8u32));
        assert_eq!(normalizer_order(&part(&[2, 1])), BigUint::from(16u32));
        assert_eq!(normalizer_order(&part(&[3])), BigUint::from(48u32));
    }

    #[test]
    fn normalizer_order_divides_hyperoctahedral_order() {
        for n in 1..=12 {
            let mut full = BigUint::one();
            for k in 2..=n {
                full *= BigUint::from(k);
            }
            full <<= n;
            for p in partitions_of(n).unwrap() {
                let ord = normalizer_order(&p);
                assert_eq!(&full % &ord, BigUint::ZERO, "{p}");
            }
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(part(&[2, 1]).to_string(), "2+1");
        assert_eq!(part(&[4]).to_string(), "4");
    }
}
