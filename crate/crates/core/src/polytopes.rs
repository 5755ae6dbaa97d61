//! Face combinatorics of the type-A Coxeter complex and the associahedron,
//! the blowdown projection between them, and tiling counts for the real
//! genus-zero moduli space.
//!
//! The braid arrangement cuts the `(n−2)`-sphere into `n!` simplicial
//! chambers; the faces of the resulting complex are ordered set partitions
//! of `{1, …, n}` into at least two blocks (the barycentric subdivision of
//! the boundary of the `(n−1)`-simplex). Truncating a chamber at its corners
//! yields the associahedron `Kₙ`, whose faces are laminar families of
//! proper consecutive brackets on the word `1 … n`. Forgetting the nesting
//! of brackets projects a `Kₙ`-face back down to a chamber face: the
//! blowdown.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Bounds accepted by the Coxeter-complex enumerators.
pub const COXETER_MIN_N: usize = 3;
pub const COXETER_MAX_N: usize = 8;
/// Bounds accepted by the associahedron enumerators
/// (`Catalan(8) = 1430` vertices at the top end).
pub const ASSOCIAHEDRON_MIN_N: usize = 3;
pub const ASSOCIAHEDRON_MAX_N: usize = 9;
/// Bounds accepted by [`tiling_stats`].
pub const TILING_MIN_N: usize = 3;
pub const TILING_MAX_N: usize = 10;

/// An ordered set partition of `{1, …, n}`: a face of the Coxeter complex.
///
/// `blocks.len() − 2` is the face dimension; blocks are kept with labels
/// ascending inside each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Validates that `blocks` are nonempty, pairwise disjoint, cover
    /// `{1, …, n}`, and number at least two. Labels inside each block are
    /// sorted ascending; block order is preserved.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::InvalidStructure(format!(
                "an ordered set partition needs at least 2 blocks, got {}",
                blocks.len()
            )));
        }
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidStructure("empty block".into()));
            }
            block.sort_unstable();
            for &label in block.iter() {
                if label < 1 || label > n {
                    return Err(Error::InvalidStructure(format!(
                        "label {label} outside 1..={n}"
                    )));
                }
                if seen[label - 1] {
                    return Err(Error::InvalidStructure(format!("label {label} repeated")));
                }
                seen[label - 1] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidStructure(
                "blocks do not cover the ground set".into(),
            ));
        }
        Ok(OrderedSetPartition { n, blocks })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Dimension of the face: `block_count − 2`.
    pub fn dim(&self) -> usize {
        self.blocks.len() - 2
    }

    /// A chamber assigns each label its own block.
    pub fn is_chamber(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// Canonical encoding: `assignment[i]` is the block index of label
    /// `i+1`. Faces are emitted in lexicographic order of this vector.
    pub fn assignment(&self) -> Vec<usize> {
        let mut a = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &label in block {
                a[label - 1] = b;
            }
        }
        a
    }
}

impl fmt::Display for OrderedSetPartition {
    /// Renders as `({1,2}|{3})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "{{")?;
            for (j, label) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{label}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

/// A laminar family of proper consecutive brackets on the word `1 … n`:
/// a face of the associahedron `Kₙ` of codimension `brackets.len()`.
///
/// A bracket is an interval `[i..j]` with `2 ≤ j−i+1 ≤ n−1`; two brackets
/// must be nested or disjoint. The empty family is the top face (the whole
/// polytope); `n−2` brackets pin down a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketSet {
    n: usize,
    brackets: Vec<(usize, usize)>,
}

impl BracketSet {
    pub fn new(n: usize, mut brackets: Vec<(usize, usize)>) -> Result<Self> {
        brackets.sort_unstable();
        for w in brackets.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidStructure(format!(
                    "bracket {:?} repeated",
                    w[0]
                )));
            }
        }
        for &(i, j) in &brackets {
            if i < 1 || j > n || i >= j || j - i + 1 > n - 1 {
                return Err(Error::InvalidStructure(format!(
                    "bracket [{i}..{j}] is not a proper consecutive substring of 1..={n}"
                )));
            }
        }
        for (a, &(i1, j1)) in brackets.iter().enumerate() {
            for &(i2, j2) in &brackets[a + 1..] {
                let nested = (i1 <= i2 && j2 <= j1) || (i2 <= i1 && j1 <= j2);
                let disjoint = j1 < i2 || j2 < i1;
                if !nested && !disjoint {
                    return Err(Error::InvalidStructure(format!(
                        "brackets [{i1}..{j1}] and [{i2}..{j2}] partially overlap"
                    )));
                }
            }
        }
        Ok(BracketSet { n, brackets })
    }

    pub fn word_length(&self) -> usize {
        self.n
    }

    /// Brackets as inclusive 1-based intervals, sorted lexicographically.
    pub fn brackets(&self) -> &[(usize, usize)] {
        &self.brackets
    }

    /// Codimension of the face in `Kₙ`.
    pub fn codim(&self) -> usize {
        self.brackets.len()
    }

    /// Dimension of the face: `(n−2) − codim`.
    pub fn dim(&self) -> usize {
        self.n - 2 - self.brackets.len()
    }

    /// The gaps this face collapses: gap `k` (between positions `k` and
    /// `k+1`) lies inside some bracket. This is the blowdown of the face to
    /// a chamber-simplex face; bracket nesting is forgotten.
    pub fn blowdown(&self) -> BTreeSet<usize> {
        let mut gaps = BTreeSet::new();
        for &(i, j) in &self.brackets {
            gaps.extend(i..j);
        }
        gaps
    }

    /// Image under the dihedral relabeling `i ↦ n+1−i` of positions.
    pub fn reversed(&self) -> BracketSet {
        let brackets = self
            .brackets
            .iter()
            .map(|&(i, j)| (self.n + 1 - j, self.n + 1 - i))
            .collect();
        BracketSet::new(self.n, brackets).expect("reversal preserves laminarity")
    }
}

impl fmt::Display for BracketSet {
    /// Renders as `{[1..2],[1..3]}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.brackets.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{i}..{j}]")?;
        }
        write!(f, "}}")
    }
}

/// Face counts by ascending dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        FVector { counts }
    }

    /// `counts()[d]` is the number of faces of dimension `d`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `Σ (−1)^d f_d`: the Euler characteristic of the complex.
    pub fn alternating_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Tile counts for the chamber decomposition and the induced tilings of the
/// real genus-zero moduli space and its orientable double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingStats {
    /// `n!` simplicial chambers of the Coxeter complex.
    pub chambers: u64,
    /// `n!/2` associahedra tiling the compactified moduli space.
    pub tiles_moduli: u64,
    /// `n!` associahedra tiling its orientable double cover.
    pub tiles_oriented: u64,
}

fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        });
    }
    Ok(())
}

/// All faces of dimension `dim` of the Coxeter complex on `n` labels:
/// ordered set partitions of `{1, …, n}` into `dim + 2` blocks, in
/// lexicographic order of their canonical assignment encodings.
pub fn coxeter_faces(n: usize, dim: usize) -> Result<Vec<OrderedSetPartition>> {
    check_range("coxeter complex order n", n, COXETER_MIN_N, COXETER_MAX_N)?;
    check_range("face dimension", dim, 0, n - 2)?;
    let b = dim + 2;
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    surjections(n, b, 0, 0, &mut assignment, &mut out);
    Ok(out)
}

/// Recursive enumeration of surjective block assignments in lexicographic
/// order. `used` counts blocks already hit; pruning keeps it feasible.
fn surjections(
    n: usize,
    b: usize,
    pos: usize,
    used: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<OrderedSetPartition>,
) {
    if pos == n {
        debug_assert_eq!(used, b);
        let mut blocks = vec![Vec::new(); b];
        for (i, &block) in assignment.iter().enumerate() {
            blocks[block].push(i + 1);
        }
        out.push(OrderedSetPartition { n, blocks });
        return;
    }
    // remaining elements must still be able to hit every unused block
    let remaining = n - pos;
    for block in 0..b {
        let new_used = if block_hit(assignment, pos, block) {
            used
        } else {
            used + 1
        };
        if b - new_used > remaining - 1 {
            continue;
        }
        assignment[pos] = block;
        surjections(n, b, pos + 1, new_used, assignment, out);
    }
}

fn block_hit(assignment: &[usize], pos: usize, block: usize) -> bool {
    assignment[..pos].contains(&block)
}

/// Face counts of the Coxeter complex by dimension, computed from Stirling
/// partition numbers: `f_d = (d+2)! · S(n, d+2)`.
///
/// The enumeration route ([`coxeter_faces`]) cross-checks this in tests.
pub fn coxeter_fvector(n: usize) -> Result<FVector> {
    check_range("coxeter complex order n", n, COXETER_MIN_N, COXETER_MAX_N)?;
    let stirling = stirling2_row(n);
    let counts = (2..=n).map(|b| factorial(b) * stirling[b]).collect();
    Ok(FVector::new(counts))
}

/// Row `n` of the Stirling partition-number triangle.
fn stirling2_row(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for _ in 1..=n {
        let mut next = vec![0u64; n + 1];
        for k in 1..=n {
            next[k] = k as u64 * row[k] + row[k - 1];
        }
        row = next;
    }
    row
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// All faces of `Kₙ` of the given codimension: laminar families of exactly
/// `codim` proper brackets, in lexicographic order of their sorted bracket
/// lists.
pub fn associahedron_faces(n: usize, codim: usize) -> Result<Vec<BracketSet>> {
    check_range(
        "associahedron order n",
        n,
        ASSOCIAHEDRON_MIN_N,
        ASSOCIAHEDRON_MAX_N,
    )?;
    check_range("face codimension", codim, 0, n - 2)?;
    let candidates = proper_brackets(n);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(codim);
    laminar_families(&candidates, 0, codim, &mut chosen, &mut |family| {
        out.push(BracketSet {
            n,
            brackets: family.to_vec(),
        })
    });
    Ok(out)
}

/// Face counts of `Kₙ` by ascending dimension (`f_{n-2} = 1` for the whole
/// polytope).
pub fn associahedron_fvector(n: usize) -> Result<FVector> {
    check_range(
        "associahedron order n",
        n,
        ASSOCIAHEDRON_MIN_N,
        ASSOCIAHEDRON_MAX_N,
    )?;
    let candidates = proper_brackets(n);
    let mut by_codim = vec![0u64; n - 1];
    let mut chosen = Vec::new();
    count_laminar_families(&candidates, 0, n - 2, &mut chosen, &mut by_codim);
    let counts = (0..=n - 2).map(|d| by_codim[n - 2 - d]).collect();
    Ok(FVector::new(counts))
}

/// All proper consecutive brackets on `1 … n`, lexicographically sorted.
fn proper_brackets(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if j - i < n - 1 {
                v.push((i, j));
            }
        }
    }
    v
}

fn compatible(a: (usize, usize), b: (usize, usize)) -> bool {
    let nested = (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1);
    let disjoint = a.1 < b.0 || b.1 < a.0;
    nested || disjoint
}

fn laminar_families(
    candidates: &[(usize, usize)],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for k in start..candidates.len() {
        let c = candidates[k];
        if chosen.iter().all(|&prev| compatible(prev, c)) {
            chosen.push(c);
            laminar_families(candidates, k + 1, remaining - 1, chosen, emit);
            chosen.pop();
        }
    }
}

fn count_laminar_families(
    candidates: &[(usize, usize)],
    start: usize,
    max_size: usize,
    chosen: &mut Vec<(usize, usize)>,
    by_size: &mut [u64],
) {
    by_size[chosen.len()] += 1;
    if chosen.len() == max_size {
        return;
    }
    for k in start..candidates.len() {
        let c = candidates[k];
        if chosen.iter().all(|&prev| compatible(prev, c)) {
            chosen.push(c);
            count_laminar_families(candidates, k + 1, max_size, chosen, by_size);
            chosen.pop();
        }
    }
}

/// Gaps collapsed by a `Kₙ`-face: the chamber-simplex face it blows down to.
pub fn blowdown(face: &BracketSet) -> BTreeSet<usize> {
    face.blowdown()
}

/// All `Kₙ`-faces whose blowdown equals `gaps`: the combinatorial fiber of
/// the projection. The fiber over the empty set is the single top face; a
/// boundary face can have several preimages distinguished by nesting.
pub fn blowdown_fiber(n: usize, gaps: &BTreeSet<usize>) -> Result<Vec<BracketSet>> {
    check_range(
        "associahedron order n",
        n,
        ASSOCIAHEDRON_MIN_N,
        ASSOCIAHEDRON_MAX_N,
    )?;
    let mut out = Vec::new();
    for codim in 0..=n - 2 {
        for face in associahedron_faces(n, codim)? {
            if face.blowdown() == *gaps {
                out.push(face);
            }
        }
    }
    Ok(out)
}

/// Chamber and tile counts for order `n`: `n!` chambers, `n!/2` associahedra
/// tiling the compactified real moduli space, `n!` tiling its orientable
/// double cover.
pub fn tiling_stats(n: usize) -> Result<TilingStats> {
    check_range("tiling order n", n, TILING_MIN_N, TILING_MAX_N)?;
    let chambers = factorial(n);
    Ok(TilingStats {
        chambers,
        tiles_moduli: chambers / 2,
        tiles_oriented: chambers,
    })
}
