//! Discrete fibrations, categories of elements, and the sing functor.

use crate::category::{CategoryBuilder, CatRef, MorId, ObjId};
use crate::functor::FunctorData;
use crate::presheaf::{Elem, Presheaf};
use std::collections::HashMap;
use std::sync::Arc;

/// Evidence against discrete fibredness: an object e and a morphism
/// f: b → F(e) with `liftings` many liftings instead of exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationWitness {
    pub object: ObjId,
    pub mor: MorId,
    pub liftings: usize,
}

/// Checks unique existence of cartesian liftings: for every object e of the
/// domain and f: b → F(e), exactly one u: e' → e with F(u) = f.
pub fn is_discrete_fibration(fd: &FunctorData) -> Result<(), FibrationWitness> {
    for e in fd.dom.objects() {
        let fe = fd.ob(e);
        for b in fd.cod.objects() {
            for f in fd.cod.hom(b, fe) {
                let liftings = fd
                    .dom
                    .morphisms()
                    .filter(|&u| fd.dom.dst(u) == e && fd.mor(u) == f)
                    .count();
                if liftings != 1 {
                    return Err(FibrationWitness {
                        object: e,
                        mor: f,
                        liftings,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The unique cartesian lifting u: e' → e of e along f: b → F(e).
pub fn cartesian_lift(fd: &FunctorData, e: ObjId, f: MorId) -> MorId {
    fd.dom
        .morphisms()
        .find(|&u| fd.dom.dst(u) == e && fd.mor(u) == f)
        .expect("discrete fibration")
}

/// True iff `fd` is a Grothendieck fibration (cartesian liftings exist but
/// need not be unique). Used only for negative demonstrations.
pub fn is_fibration(fd: &FunctorData) -> bool {
    for e in fd.dom.objects() {
        let fe = fd.ob(e);
        for b in fd.cod.objects() {
            for f in fd.cod.hom(b, fe) {
                let has_cartesian = fd
                    .dom
                    .morphisms()
                    .filter(|&u| fd.dom.dst(u) == e && fd.mor(u) == f)
                    .any(|u| is_cartesian(fd, u));
                if !has_cartesian {
                    return false;
                }
            }
        }
    }
    true
}

fn is_cartesian(fd: &FunctorData, u: MorId) -> bool {
    let e = fd.dom.dst(u);
    let x = fd.dom.src(u);
    for v in fd.dom.morphisms() {
        if fd.dom.dst(v) != e {
            continue;
        }
        let z = fd.dom.src(v);
        for k in fd.cod.hom(fd.ob(z), fd.ob(x)) {
            if fd.cod.compose(fd.mor(u), k) != fd.mor(v) {
                continue;
            }
            let ws: Vec<MorId> = fd
                .dom
                .hom(z, x)
                .into_iter()
                .filter(|&w| fd.mor(w) == k && fd.dom.compose(u, w) == v)
                .collect();
            if ws.len() != 1 {
                return false;
            }
        }
    }
    true
}

/// The category of elements of X with its projection, a discrete fibration.
pub fn elements(x: &Presheaf) -> (CatRef, FunctorData) {
    let base = &x.base;
    let mut b = CategoryBuilder::new();
    // objects (c, e) in canonical order
    let mut obj_of: HashMap<(ObjId, usize), ObjId> = HashMap::new();
    for c in base.objects() {
        for e in 0..x.size(c) {
            let o = b.add_object(format!(
                "({},{:?})",
                base.object_name(c),
                x.elem(c, e)
            ));
            obj_of.insert((c, e), o);
        }
    }
    // morphisms (c, x'·f) → (c', x') for f: c → c'
    let mut mor_of: HashMap<(MorId, usize), MorId> = HashMap::new();
    let mut omap = vec![0usize; obj_of.len()];
    for (&(c, _e), &o) in &obj_of {
        omap[o] = c;
    }
    let mut mmap = Vec::new();
    for f in base.morphisms() {
        let (c, c2) = (base.src(f), base.dst(f));
        for e2 in 0..x.size(c2) {
            let e = x.act(f, e2);
            let m = b.add_mor(
                obj_of[&(c, e)],
                obj_of[&(c2, e2)],
                format!("{}[{:?}]", base.mor_name(f), x.elem(c2, e2)),
            );
            mor_of.insert((f, e2), m);
            mmap.push(f);
            if f == base.id(c) {
                b.set_id(obj_of[&(c, e)], m);
            }
        }
    }
    // composition: (g, e3) ∘ (f, e2) where e2 = e3·g
    for g in base.morphisms() {
        for f in base.morphisms() {
            if base.dst(f) != base.src(g) {
                continue;
            }
            let gf = base.compose(g, f);
            for e3 in 0..x.size(base.dst(g)) {
                let e2 = x.act(g, e3);
                b.set_comp(mor_of[&(g, e3)], mor_of[&(f, e2)], mor_of[&(gf, e3)]);
            }
        }
    }
    let cat = Arc::new(b.build());
    let proj = FunctorData {
        dom: cat.clone(),
        cod: x.base.clone(),
        omap,
        mmap,
    };
    (cat, proj)
}

#[derive(Debug, thiserror::Error)]
#[error("sing requires a discrete fibration; witness: {0:?}")]
pub struct NotDiscreteFibration(pub FibrationWitness);

/// sing(p)(c) = p⁻¹(c), with action by cartesian lifting.
pub fn sing(fd: &FunctorData) -> Result<Presheaf, NotDiscreteFibration> {
    is_discrete_fibration(fd).map_err(NotDiscreteFibration)?;
    let base = fd.cod.clone();
    let fibres: Vec<Vec<ObjId>> = base
        .objects()
        .map(|c| fd.dom.objects().filter(|&e| fd.ob(e) == c).collect())
        .collect();
    let carriers: Vec<Vec<Elem>> = fibres
        .iter()
        .map(|fibre| {
            fibre
                .iter()
                .map(|&e| Elem::s(fd.dom.object_name(e).to_string()))
                .collect()
        })
        .collect();
    let action: Vec<Vec<usize>> = base
        .morphisms()
        .map(|f| {
            let (a, bb) = (base.src(f), base.dst(f));
            fibres[bb]
                .iter()
                .map(|&e| {
                    let u = cartesian_lift(fd, e, f);
                    let e2 = fd.dom.src(u);
                    fibres[a].iter().position(|&z| z == e2).unwrap()
                })
                .collect()
        })
        .collect();
    Ok(Presheaf {
        base,
        carriers,
        action,
    })
}
