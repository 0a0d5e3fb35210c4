//! Category constructions: coproducts, full subcategories, codiagonals.

use crate::category::{CategoryBuilder, CatRef, FinCategory, MorId, ObjId};
use crate::functor::FunctorData;
use std::collections::HashMap;
use std::sync::Arc;

/// Disjoint union A + B with its two inclusion functors.
pub fn coproduct(a: &CatRef, b: &CatRef) -> (CatRef, FunctorData, FunctorData) {
    let mut bld = CategoryBuilder::new();
    for o in a.objects() {
        bld.add_object(format!("0.{}", a.object_name(o)));
    }
    for o in b.objects() {
        bld.add_object(format!("1.{}", b.object_name(o)));
    }
    let ob_off = a.n_objects();
    for m in a.morphisms() {
        let id = bld.add_mor(a.src(m), a.dst(m), format!("0.{}", a.mor_name(m)));
        debug_assert_eq!(id, m);
    }
    for m in b.morphisms() {
        bld.add_mor(
            ob_off + b.src(m),
            ob_off + b.dst(m),
            format!("1.{}", b.mor_name(m)),
        );
    }
    let mor_off = a.n_mors();
    for o in a.objects() {
        bld.set_id(o, a.id(o));
    }
    for o in b.objects() {
        bld.set_id(ob_off + o, mor_off + b.id(o));
    }
    for (&(g, f), &gf) in &a.comp {
        bld.set_comp(g, f, gf);
    }
    for (&(g, f), &gf) in &b.comp {
        bld.set_comp(mor_off + g, mor_off + f, mor_off + gf);
    }
    let cat = Arc::new(bld.build());
    let inl = FunctorData {
        dom: a.clone(),
        cod: cat.clone(),
        omap: (0..a.n_objects()).collect(),
        mmap: (0..a.n_mors()).collect(),
    };
    let inr = FunctorData {
        dom: b.clone(),
        cod: cat.clone(),
        omap: (0..b.n_objects()).map(|o| ob_off + o).collect(),
        mmap: (0..b.n_mors()).map(|m| mor_off + m).collect(),
    };
    (cat, inl, inr)
}

/// The copairing [F, G]: A + B → D of functors with common codomain.
pub fn copair(coprod: &CatRef, f: &FunctorData, g: &FunctorData) -> FunctorData {
    assert_eq!(
        coprod.n_objects(),
        f.dom.n_objects() + g.dom.n_objects(),
        "copair: coproduct shape mismatch"
    );
    let mut omap = f.omap.clone();
    omap.extend_from_slice(&g.omap);
    let mut mmap = f.mmap.clone();
    mmap.extend_from_slice(&g.mmap);
    FunctorData {
        dom: coprod.clone(),
        cod: f.cod.clone(),
        omap,
        mmap,
    }
}

/// The codiagonal ∇: C + C → C.
pub fn codiagonal(coprod: &CatRef, c: &CatRef) -> FunctorData {
    copair(coprod, &FunctorData::identity(c.clone()), &FunctorData::identity(c.clone()))
}

/// The full subcategory on the given objects, with its inclusion functor.
pub fn full_subcategory(c: &CatRef, objects: &[ObjId]) -> (CatRef, FunctorData) {
    let keep: Vec<ObjId> = objects.to_vec();
    let in_keep: HashMap<ObjId, usize> = keep.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut bld = CategoryBuilder::new();
    for &o in &keep {
        bld.add_object(c.object_name(o).to_string());
    }
    let mut mor_map: HashMap<MorId, MorId> = HashMap::new();
    let mut mmap = Vec::new();
    for m in c.morphisms() {
        let (s, d) = (c.src(m), c.dst(m));
        if let (Some(&s2), Some(&d2)) = (in_keep.get(&s), in_keep.get(&d)) {
            let id = bld.add_mor(s2, d2, c.mor_name(m).to_string());
            mor_map.insert(m, id);
            mmap.push(m);
            if c.id(s) == m && s == d {
                bld.set_id(s2, id);
            }
        }
    }
    for (&m1, &i1) in &mor_map {
        for (&m2, &i2) in &mor_map {
            if c.dst(m1) == c.src(m2) {
                bld.set_comp(i2, i1, mor_map[&c.compose(m2, m1)]);
            }
        }
    }
    let sub = Arc::new(bld.build());
    let incl = FunctorData {
        dom: sub.clone(),
        cod: c.clone(),
        omap: keep,
        mmap,
    };
    (sub, incl)
}

/// Connected components of a category's underlying undirected graph,
/// as object sets.
pub fn connected_components(c: &FinCategory) -> Vec<Vec<ObjId>> {
    let n = c.n_objects();
    let mut comp = vec![usize::MAX; n];
    let mut adj: Vec<Vec<ObjId>> = vec![Vec::new(); n];
    for m in c.morphisms() {
        let (s, d) = (c.src(m), c.dst(m));
        if s != d {
            adj[s].push(d);
            adj[d].push(s);
        }
    }
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let idx = out.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = idx;
        while let Some(o) = stack.pop() {
            members.push(o);
            for &next in &adj[o] {
                if comp[next] == usize::MAX {
                    comp[next] = idx;
                    stack.push(next);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// True iff the category has a terminal object (within itself).
pub fn has_terminal(c: &FinCategory) -> bool {
    c.objects()
        .any(|t| c.objects().all(|o| c.hom(o, t).len() == 1))
}
