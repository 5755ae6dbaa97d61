//! Functors between finite groupoids and their fiber products.
//!
//! The fiber product of `F: A → C` and `G: B → C` has as objects the
//! triples `(a, b, φ)` with `φ: F(a) → G(b)` a morphism of `C`, and as
//! morphisms the pairs `(α, β)` making the evident square commute:
//! `φ₁ ∘ F(α) = G(β) ∘ φ₀`.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{FiniteGroupoid, Morphism};

/// Guard on the morphism count of a materialized fiber product.
const FIBER_MORPHISM_LIMIT: usize = 50_000;
/// Guard on the `|Mor A|²` functoriality scan.
const FUNCTOR_CHECK_LIMIT: usize = 1_000_000;

/// A functor between finite groupoids, validated exhaustively at
/// construction: endpoints, identities, and composition are all preserved.
#[derive(Debug, Clone)]
pub struct GroupoidFunctor<'a> {
    source: &'a FiniteGroupoid,
    target: &'a FiniteGroupoid,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

impl<'a> GroupoidFunctor<'a> {
    pub fn new(
        source: &'a FiniteGroupoid,
        target: &'a FiniteGroupoid,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidStructure(msg));
        if object_map.len() != source.object_count()
            || morphism_map.len() != source.morphism_count()
        {
            return fail("functor maps have wrong length".into());
        }
        if object_map.iter().any(|&o| o >= target.object_count())
            || morphism_map.iter().any(|&m| m >= target.morphism_count())
        {
            return fail("functor map entry out of range".into());
        }
        for (m, &fm) in morphism_map.iter().enumerate() {
            let src = source.morphism(m);
            let dst = target.morphism(fm);
            if dst.source != object_map[src.source] || dst.target != object_map[src.target] {
                return fail(format!("functor breaks endpoints of morphism {m}"));
            }
        }
        for (o, &fo) in object_map.iter().enumerate() {
            if morphism_map[source.identity_of(o)] != target.identity_of(fo) {
                return fail(format!(
                    "functor does not preserve the identity of object {o}"
                ));
            }
        }
        let n_mor = source.morphism_count();
        if n_mor * n_mor > FUNCTOR_CHECK_LIMIT {
            return Err(Error::SizeLimit {
                size: n_mor * n_mor,
                max: FUNCTOR_CHECK_LIMIT,
            });
        }
        for g in 0..n_mor {
            for f in 0..n_mor {
                if let Some(gf) = source.compose(g, f) {
                    let image = target
                        .compose(morphism_map[g], morphism_map[f])
                        .ok_or_else(|| {
                            Error::InvalidStructure(format!(
                                "functor images of ({g}, {f}) are not composable"
                            ))
                        })?;
                    if image != morphism_map[gf] {
                        return fail(format!("functor breaks composition on ({g}, {f})"));
                    }
                }
            }
        }
        Ok(GroupoidFunctor {
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    /// The identity functor.
    pub fn identity(groupoid: &'a FiniteGroupoid) -> Self {
        GroupoidFunctor {
            source: groupoid,
            target: groupoid,
            object_map: (0..groupoid.object_count()).collect(),
            morphism_map: (0..groupoid.morphism_count()).collect(),
        }
    }

    /// The constant functor collapsing `source` onto one object of
    /// `target`, sending every morphism to its identity.
    pub fn constant(
        source: &'a FiniteGroupoid,
        target: &'a FiniteGroupoid,
        obj: usize,
    ) -> Result<Self> {
        if obj >= target.object_count() {
            return Err(Error::UnknownObject { id: obj });
        }
        GroupoidFunctor::new(
            source,
            target,
            vec![obj; source.object_count()],
            vec![target.identity_of(obj); source.morphism_count()],
        )
    }

    pub fn source(&self) -> &'a FiniteGroupoid {
        self.source
    }

    pub fn target(&self) -> &'a FiniteGroupoid {
        self.target
    }

    pub fn on_object(&self, o: usize) -> usize {
        self.object_map[o]
    }

    pub fn on_morphism(&self, m: usize) -> usize {
        self.morphism_map[m]
    }
}

/// A materialized fiber product, keeping the triple and pair structure of
/// its objects and morphisms alongside the validated groupoid.
#[derive(Debug, Clone)]
pub struct FiberProduct {
    pub groupoid: FiniteGroupoid,
    /// Per fiber object: `(object of A, object of B, morphism φ of C)`.
    pub object_triples: Vec<(usize, usize, usize)>,
    /// Per fiber morphism: `(morphism of A, morphism of B)`.
    pub morphism_pairs: Vec<(usize, usize)>,
}

/// The fiber product of `f: A → C` and `g: B → C`.
///
/// Both functors must target the same groupoid value (checked by pointer
/// identity, since groupoid identity here is by instance, not by label).
pub fn fiber_product(f: &GroupoidFunctor<'_>, g: &GroupoidFunctor<'_>) -> Result<FiberProduct> {
    if !std::ptr::eq(f.target, g.target) {
        return Err(Error::IncompatibleTargets);
    }
    let a = f.source;
    let b = g.source;
    let c = f.target;

    // objects: triples (a_obj, b_obj, φ) with φ: F(a_obj) → G(b_obj)
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    let mut triple_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut labels = Vec::new();
    for a_obj in 0..a.object_count() {
        for b_obj in 0..b.object_count() {
            let fa = f.on_object(a_obj);
            let gb = g.on_object(b_obj);
            for (phi, mor) in c.morphisms().iter().enumerate() {
                if mor.source == fa && mor.target == gb {
                    triple_index.insert((a_obj, b_obj, phi), triples.len());
                    triples.push((a_obj, b_obj, phi));
                    labels.push(format!(
                        "({}, {}, {})",
                        a.object_label(a_obj),
                        b.object_label(b_obj),
                        mor.label
                    ));
                }
            }
        }
    }

    // morphisms: (α, β) from each compatible source triple; the target
    // triple carries φ₁ = G(β) ∘ φ₀ ∘ F(α)⁻¹
    struct FiberMor {
        alpha: usize,
        beta: usize,
        src: usize,
        tgt: usize,
    }
    let mut morphisms_data: Vec<FiberMor> = Vec::new();
    let mut morphism_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for (alpha, am) in a.morphisms().iter().enumerate() {
        let fa_inv = f.on_morphism(a.inverse_of(alpha));
        for (beta, bm) in b.morphisms().iter().enumerate() {
            let gb = g.on_morphism(beta);
            for (src_idx, &(a0, b0, phi0)) in triples.iter().enumerate() {
                if a0 != am.source || b0 != bm.source {
                    continue;
                }
                let phi0_fainv = c.compose(phi0, fa_inv).expect("endpoints match");
                let phi1 = c.compose(gb, phi0_fainv).expect("endpoints match");
                let tgt_idx = triple_index[&(am.target, bm.target, phi1)];
                if morphisms_data.len() == FIBER_MORPHISM_LIMIT {
                    return Err(Error::SizeLimit {
                        size: morphisms_data.len() + 1,
                        max: FIBER_MORPHISM_LIMIT,
                    });
                }
                morphism_index.insert((alpha, beta, src_idx), morphisms_data.len());
                morphisms_data.push(FiberMor {
                    alpha,
                    beta,
                    src: src_idx,
                    tgt: tgt_idx,
                });
            }
        }
    }

    let morphisms: Vec<Morphism> = morphisms_data
        .iter()
        .map(|m| Morphism {
            source: m.src,
            target: m.tgt,
            label: format!(
                "({}, {})",
                a.morphism(m.alpha).label,
                b.morphism(m.beta).label
            ),
        })
        .collect();

    let identities: Vec<usize> = triples
        .iter()
        .enumerate()
        .map(|(idx, &(a_obj, b_obj, _))| {
            morphism_index[&(a.identity_of(a_obj), b.identity_of(b_obj), idx)]
        })
        .collect();

    let inverses: Vec<usize> = morphisms_data
        .iter()
        .map(|m| morphism_index[&(a.inverse_of(m.alpha), b.inverse_of(m.beta), m.tgt)])
        .collect();

    // componentwise composition
    let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); triples.len()];
    for (idx, m) in morphisms_data.iter().enumerate() {
        by_source[m.src].push(idx);
    }
    let mut compose = HashMap::new();
    for (m1_idx, m1) in morphisms_data.iter().enumerate() {
        for &m2_idx in &by_source[m1.tgt] {
            let m2 = &morphisms_data[m2_idx];
            let alpha = a.compose(m2.alpha, m1.alpha).expect("composable in A");
            let beta = b.compose(m2.beta, m1.beta).expect("composable in B");
            compose.insert((m2_idx, m1_idx), morphism_index[&(alpha, beta, m1.src)]);
        }
    }

    let groupoid = FiniteGroupoid::from_parts(labels, morphisms, identities, inverses, compose)?;
    Ok(FiberProduct {
        groupoid,
        object_triples: triples,
        morphism_pairs: morphisms_data.iter().map(|m| (m.alpha, m.beta)).collect(),
    })
}
