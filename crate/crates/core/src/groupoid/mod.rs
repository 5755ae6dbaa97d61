//! Finite groupoid calculus: transformation groupoids of finite group
//! actions, isotropy groups, orbits, exact groupoid cardinality, and fiber
//! products of groupoids along functors.
//!
//! Groupoids are materialized — explicit object and morphism lists with a
//! composition table — because everything here runs at desk scale and
//! materialization makes the exhaustive law checks trivial.

mod action;
mod fiber;

pub use action::{FiniteGroup, GroupAction};
pub use fiber::{fiber_product, FiberProduct, GroupoidFunctor};

use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use crate::error::{Error, Result};

/// Morphism-count bound for the exhaustive composition-closure scan.
const CLOSURE_CHECK_MAX_MORPHISMS: usize = 1024;
/// Morphism-count bound for the exhaustive associativity scan.
const ASSOC_CHECK_MAX_MORPHISMS: usize = 100;
/// Spec guard for transformation groupoids: `|G|·|X|` morphisms at most.
pub const TRANSFORMATION_SIZE_LIMIT: usize = 1_000_000;
/// Guard on materialized composition tables.
const COMPOSE_TABLE_LIMIT: usize = 4_000_000;

/// One arrow of a groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A finite groupoid: labelled objects, labelled morphisms, and explicit
/// identity, inverse, and composition data, all validated at construction.
///
/// Objects and morphisms are addressed by their stable indices, never by
/// label equality, so constructions that duplicate labels stay well-defined.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
    /// `(g, f) ↦ g∘f` for every composable pair (`target f = source g`).
    compose: HashMap<(usize, usize), usize>,
}

impl FiniteGroupoid {
    /// Assemble and validate. Identity and inverse laws are always checked;
    /// composition-closure is scanned exhaustively up to 1024 morphisms,
    /// associativity on all composable triples up to 100 morphisms.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        inverses: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let g = FiniteGroupoid {
            objects,
            morphisms,
            identities,
            inverses,
            compose,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n_obj = self.objects.len();
        let n_mor = self.morphisms.len();
        let fail = |msg: String| Err(Error::InvalidStructure(msg));

        if self.identities.len() != n_obj || self.inverses.len() != n_mor {
            return fail("identity/inverse tables have wrong length".into());
        }
        for m in &self.morphisms {
            if m.source >= n_obj || m.target >= n_obj {
                return fail(format!("morphism '{}' has out-of-range endpoints", m.label));
            }
        }
        for (o, &id) in self.identities.iter().enumerate() {
            if id >= n_mor || self.morphisms[id].source != o || self.morphisms[id].target != o {
                return fail(format!("object {o} has an invalid identity"));
            }
        }
        // composition table entries are well-typed
        for (&(g, f), &h) in &self.compose {
            if g >= n_mor || f >= n_mor || h >= n_mor {
                return fail("composition entry out of range".into());
            }
            let (mf, mg, mh) = (&self.morphisms[f], &self.morphisms[g], &self.morphisms[h]);
            if mf.target != mg.source || mh.source != mf.source || mh.target != mg.target {
                return fail(format!("ill-typed composition ({g}, {f}) -> {h}"));
            }
        }
        // identity laws and two-sided inverses, per morphism
        for (m, mor) in self.morphisms.iter().enumerate() {
            let id_src = self.identities[mor.source];
            let id_tgt = self.identities[mor.target];
            if self.compose.get(&(m, id_src)) != Some(&m)
                || self.compose.get(&(id_tgt, m)) != Some(&m)
            {
                return fail(format!("identity laws fail for '{}'", mor.label));
            }
            let inv = self.inverses[m];
            if inv >= n_mor {
                return fail("inverse out of range".into());
            }
            let mi = &self.morphisms[inv];
            if mi.source != mor.target || mi.target != mor.source {
                return fail(format!("inverse of '{}' has wrong endpoints", mor.label));
            }
            if self.compose.get(&(inv, m)) != Some(&id_src)
                || self.compose.get(&(m, inv)) != Some(&id_tgt)
            {
                return fail(format!("'{}' lacks a two-sided inverse", mor.label));
            }
        }
        // closure: every composable pair has an entry
        if n_mor <= CLOSURE_CHECK_MAX_MORPHISMS {
            for g in 0..n_mor {
                for f in 0..n_mor {
                    let composable = self.morphisms[f].target == self.morphisms[g].source;
                    if composable != self.compose.contains_key(&(g, f)) {
                        return fail(format!("composition table disagrees on pair ({g}, {f})"));
                    }
                }
            }
        }
        // associativity on composable triples
        if n_mor <= ASSOC_CHECK_MAX_MORPHISMS {
            let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); n_obj];
            for (m, mor) in self.morphisms.iter().enumerate() {
                by_source[mor.source].push(m);
            }
            for f in 0..n_mor {
                for &g in &by_source[self.morphisms[f].target] {
                    let gf = self.compose[&(g, f)];
                    for &h in &by_source[self.morphisms[g].target] {
                        let hg = self.compose[&(h, g)];
                        if self.compose[&(h, gf)] != self.compose[&(hg, f)] {
                            return fail(format!("associativity fails on ({h}, {g}, {f})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_label(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity_of(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn inverse_of(&self, m: usize) -> usize {
        self.inverses[m]
    }

    /// `g ∘ f` when `target f = source g`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    /// Only identity morphisms.
    pub fn is_discrete(&self) -> bool {
        self.morphisms.len() == self.objects.len()
    }

    /// All automorphisms of `obj`, verified closed under composition and
    /// inverse.
    pub fn isotropy(&self, obj: usize) -> Result<Vec<usize>> {
        if obj >= self.objects.len() {
            return Err(Error::UnknownObject { id: obj });
        }
        let iso: Vec<usize> = (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].source == obj && self.morphisms[m].target == obj)
            .collect();
        for &a in &iso {
            debug_assert!(iso.contains(&self.inverses[a]));
            for &b in &iso {
                let ab = self.compose[&(a, b)];
                debug_assert!(iso.contains(&ab));
            }
        }
        Ok(iso)
    }

    /// Connected components (sorted object indices, components ordered by
    /// least member) and the groupoid cardinality
    /// `Σ_components 1/|isotropy|` as an exact rational.
    pub fn orbits_and_cardinality(&self) -> (Vec<Vec<usize>>, BigRational) {
        let n = self.objects.len();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let root = find(dsu, dsu[x]);
                dsu[x] = root;
            }
            dsu[x]
        }
        for m in &self.morphisms {
            let (a, b) = (find(&mut dsu, m.source), find(&mut dsu, m.target));
            if a != b {
                dsu[a.max(b)] = a.min(b);
            }
        }
        let mut components: HashMap<usize, Vec<usize>> = HashMap::new();
        for o in 0..n {
            components.entry(find(&mut dsu, o)).or_default().push(o);
        }
        let mut components: Vec<Vec<usize>> = components.into_values().collect();
        components.sort_by_key(|c| c[0]);

        let mut cardinality = BigRational::zero();
        for component in &components {
            let rep = component[0];
            let iso = self.isotropy(rep).expect("representative exists");
            cardinality += BigRational::new(BigInt::from(1), BigInt::from(iso.len()));
        }
        (components, cardinality)
    }
}

/// The transformation groupoid of a finite group action: objects are the
/// points, morphisms are pairs `(g, x): x → g·x`, composition is group
/// multiplication.
pub fn transformation_groupoid(action: &GroupAction) -> Result<FiniteGroupoid> {
    let ng = action.group().order();
    let nx = action.point_count();
    let n_mor = ng * nx;
    if n_mor > TRANSFORMATION_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            size: n_mor,
            max: TRANSFORMATION_SIZE_LIMIT,
        });
    }
    let table_size = ng * ng * nx;
    if table_size > COMPOSE_TABLE_LIMIT {
        return Err(Error::SizeLimit {
            size: table_size,
            max: COMPOSE_TABLE_LIMIT,
        });
    }

    let objects: Vec<String> = action.points().to_vec();
    // morphism (g, x) gets index g·nx + x
    let mor_id = |g: usize, x: usize| g * nx + x;
    let mut morphisms = Vec::with_capacity(n_mor);
    for g in 0..ng {
        for x in 0..nx {
            morphisms.push(Morphism {
                source: x,
                target: action.apply(g, x),
                label: format!("({}, {})", action.group().label(g), action.points()[x]),
            });
        }
    }
    let e = action.group().identity();
    let identities: Vec<usize> = (0..nx).map(|x| mor_id(e, x)).collect();
    let inverses: Vec<usize> = (0..ng)
        .flat_map(|g| (0..nx).map(move |x| (g, x)))
        .map(|(g, x)| mor_id(action.group().inverse(g), action.apply(g, x)))
        .collect();

    let mut compose = HashMap::with_capacity(ng * ng * nx);
    for g in 0..ng {
        for x in 0..nx {
            let gx = action.apply(g, x);
            for h in 0..ng {
                // (h, g·x) ∘ (g, x) = (h·g, x)
                compose.insert(
                    (mor_id(h, gx), mor_id(g, x)),
                    mor_id(action.group().multiply(h, g), x),
                );
            }
        }
    }
    FiniteGroupoid::from_parts(objects, morphisms, identities, inverses, compose)
}
