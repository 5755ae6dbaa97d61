//! Finite groups given by multiplication tables, and their actions on
//! finite sets. Everything is validated exhaustively at construction, so
//! downstream constructions can rely on the axioms.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exhaustive associativity checking is skipped above this group order;
/// the named constructors below build their tables from genuinely
/// associative operations.
const ASSOC_CHECK_MAX_ORDER: usize = 200;

/// Upper bound on `|G|² · |X|`, the cost of exhaustive action validation.
const ACTION_CHECK_LIMIT: usize = 20_000_000;

/// A finite group presented by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// `mult[g][h]` is the index of `g·h`.
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table: a two-sided identity, two-sided
    /// inverses, and (up to order 200) associativity on all triples.
    pub fn from_mult_table(labels: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidStructure(
                "multiplication table is not square".into(),
            ));
        }
        if mult.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidStructure("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::InvalidStructure("no two-sided identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| mult[g][h] == identity && mult[h][g] == identity)
                .ok_or_else(|| Error::InvalidStructure(format!("{} has no inverse", labels[g])))?;
        }
        if n <= ASSOC_CHECK_MAX_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                            return Err(Error::InvalidStructure(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            mult,
            identity,
            inverse,
        })
    }

    /// The symmetric group on `n` letters, elements in lexicographic
    /// one-line order.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n > 6 {
            return Err(Error::OutOfRange {
                what: "symmetric group degree",
                value: n,
                min: 0,
                max: 6,
            });
        }
        let perms = Permutation::all(n)?;
        let index: std::collections::HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images().to_vec(), i))
            .collect();
        let mult = perms
            .iter()
            .map(|g| perms.iter().map(|h| index[g.compose(h).images()]).collect())
            .collect();
        let labels = perms.iter().map(|p| p.to_string()).collect();
        FiniteGroup::from_mult_table(labels, mult)
    }

    /// The cyclic group of order `k`.
    pub fn cyclic(k: usize) -> Result<Self> {
        if k == 0 || k > 1000 {
            return Err(Error::OutOfRange {
                what: "cyclic group order",
                value: k,
                min: 1,
                max: 1000,
            });
        }
        let labels = (0..k).map(|i| format!("r{i}")).collect();
        let mult = (0..k)
            .map(|a| (0..k).map(|b| (a + b) % k).collect())
            .collect();
        FiniteGroup::from_mult_table(labels, mult)
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1).expect("trivial group is valid")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn multiply(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// The underlying permutations when this group was built by
    /// [`FiniteGroup::symmetric`]; reconstructed from labels elsewhere.
    pub fn element_count(&self) -> usize {
        self.labels.len()
    }
}

/// A left action of a finite group on a finite labelled set, with identity
/// and compatibility laws verified exhaustively at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    points: Vec<String>,
    /// `act[g][x]` is the image point index.
    act: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(group: FiniteGroup, points: Vec<String>, act: Vec<Vec<usize>>) -> Result<Self> {
        let ng = group.order();
        let nx = points.len();
        if nx == 0 {
            return Err(Error::InvalidStructure("the acted-on set is empty".into()));
        }
        if act.len() != ng || act.iter().any(|row| row.len() != nx) {
            return Err(Error::InvalidStructure(
                "action table has wrong shape".into(),
            ));
        }
        if act.iter().flatten().any(|&v| v >= nx) {
            return Err(Error::InvalidStructure(
                "action table entry out of range".into(),
            ));
        }
        let cost = ng * ng * nx;
        if cost > ACTION_CHECK_LIMIT {
            return Err(Error::SizeLimit {
                size: cost,
                max: ACTION_CHECK_LIMIT,
            });
        }
        let e = group.identity();
        for x in 0..nx {
            if act[e][x] != x {
                return Err(Error::InvalidStructure(format!(
                    "identity moves point {}",
                    points[x]
                )));
            }
        }
        for g in 0..ng {
            for h in 0..ng {
                let gh = group.multiply(g, h);
                for x in 0..nx {
                    if act[g][act[h][x]] != act[gh][x] {
                        return Err(Error::InvalidStructure(format!(
                            "action incompatible with multiplication at (g={g}, h={h}, x={x})"
                        )));
                    }
                }
            }
        }
        Ok(GroupAction { group, points, act })
    }

    /// The symmetric group on `n` letters permuting `{1, …, n}`.
    pub fn symmetric_natural(n: usize) -> Result<Self> {
        let group = FiniteGroup::symmetric(n)?;
        let perms = Permutation::all(n)?;
        let act = perms.iter().map(|p| p.images().to_vec()).collect();
        let points = (1..=n).map(|i| i.to_string()).collect();
        GroupAction::new(group, points, act)
    }

    /// Any group acting trivially on a labelled set.
    pub fn trivial(group: FiniteGroup, points: Vec<String>) -> Result<Self> {
        let nx = points.len();
        let act = vec![(0..nx).collect::<Vec<usize>>(); group.order()];
        GroupAction::new(group, points, act)
    }

    /// The group acting on itself by left translation.
    pub fn left_translation(group: FiniteGroup) -> Result<Self> {
        let n = group.order();
        let points = group.labels().to_vec();
        let act = (0..n)
            .map(|g| (0..n).map(|x| group.multiply(g, x)).collect())
            .collect();
        GroupAction::new(group, points, act)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g][x]
    }
}
