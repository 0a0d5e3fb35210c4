//! Booleanisation and boolean Kan operations, plus the comma-category
//! criterion for when right extension commutes with booleanisation.

use crate::construct::{connected_components, full_subcategory, has_terminal};
use crate::functor::FunctorData;
use crate::kan::{lan, ran, restrict};
use crate::presheaf::{isomorphic, Elem, Presheaf};

/// The reflection collapsing each carrier to empty or singleton.
pub fn booleanise(x: &Presheaf) -> Presheaf {
    let carriers: Vec<Vec<Elem>> = x
        .carriers
        .iter()
        .map(|c| {
            if c.is_empty() {
                Vec::new()
            } else {
                vec![Elem::Unit]
            }
        })
        .collect();
    let action = x
        .base
        .morphisms()
        .map(|f| {
            let b = x.base.dst(f);
            if x.size(b) == 0 {
                Vec::new()
            } else {
                vec![0usize]
            }
        })
        .collect();
    Presheaf {
        base: x.base.clone(),
        carriers,
        action,
    }
}

/// True iff every carrier has at most one element.
pub fn is_boolean(x: &Presheaf) -> bool {
    x.carriers.iter().all(|c| c.len() <= 1)
}

/// Boolean left extension, computed in 2: Σ̄_F(X)(d) = ∃ (c, g: d → F c) with
/// X(c) non-empty.
pub fn bool_lan(fd: &FunctorData, x: &Presheaf) -> Presheaf {
    debug_assert!(is_boolean(x));
    let accept: Vec<bool> = fd
        .cod
        .objects()
        .map(|d| {
            fd.dom
                .objects()
                .any(|c| x.size(c) > 0 && !fd.cod.hom(d, fd.ob(c)).is_empty())
        })
        .collect();
    boolean_from_accept(&fd.cod, &accept)
}

/// Boolean right extension, computed in 2 (the end in 2 is a conjunction):
/// Π̄_F(X)(d) = ∀ (c, g: F c → d), X(c) non-empty.
pub fn bool_ran(fd: &FunctorData, x: &Presheaf) -> Presheaf {
    debug_assert!(is_boolean(x));
    let accept: Vec<bool> = fd
        .cod
        .objects()
        .map(|d| {
            fd.dom
                .objects()
                .all(|c| x.size(c) > 0 || fd.cod.hom(fd.ob(c), d).is_empty())
        })
        .collect();
    boolean_from_accept(&fd.cod, &accept)
}

/// Builds a boolean presheaf from an acceptance vector. The vector must be
/// closed under the actions (accept(dst f) implies accept(src f)).
pub fn boolean_from_accept(base: &crate::category::CatRef, accept: &[bool]) -> Presheaf {
    let carriers: Vec<Vec<Elem>> = accept
        .iter()
        .map(|&a| if a { vec![Elem::Unit] } else { Vec::new() })
        .collect();
    let action = base
        .morphisms()
        .map(|f| {
            if accept[base.dst(f)] {
                vec![0usize]
            } else {
                Vec::new()
            }
        })
        .collect();
    Presheaf {
        base: base.clone(),
        carriers,
        action,
    }
}

/// Verdict of [`bool_ran_commutes`].
#[derive(Debug, Clone)]
pub struct RanCommutesReport {
    /// The criterion: every comma F/d is a coproduct of categories with a
    /// terminal object.
    pub criterion: bool,
    /// Object of the codomain whose comma fails the criterion, if any.
    pub failing_object: Option<usize>,
    /// When the criterion holds, whether booleanise ∘ ran_F ≅ ran_F ∘
    /// booleanise held on all the given samples (vacuously true otherwise).
    pub sampled_commutation: bool,
}

/// Decides the comma-category criterion for booleanisation commuting with
/// Π_F, and verifies the commutation on samples when the criterion holds.
pub fn bool_ran_commutes(fd: &FunctorData, samples: &[Presheaf]) -> RanCommutesReport {
    let mut criterion = true;
    let mut failing_object = None;
    for d in fd.cod.objects() {
        // comma F/d: objects (c, g: F c → d)
        let mut bld = crate::category::CategoryBuilder::new();
        let mut objs = Vec::new();
        let mut obj_of = std::collections::HashMap::new();
        for c in fd.dom.objects() {
            for g in fd.cod.hom(fd.ob(c), d) {
                let o = bld.add_object(format!("({c},{g})"));
                obj_of.insert((c, g), o);
                objs.push((c, g));
            }
        }
        let mut mor_of = std::collections::HashMap::new();
        for (i, &(c, g)) in objs.iter().enumerate() {
            for (j, &(c2, g2)) in objs.iter().enumerate() {
                for f in fd.dom.hom(c, c2) {
                    if fd.cod.compose(g2, fd.mor(f)) == g {
                        let m = bld.add_mor(i, j, format!("{f}"));
                        mor_of.insert((i, j, f), m);
                        if i == j && f == fd.dom.id(c) {
                            bld.set_id(i, m);
                        }
                    }
                }
            }
        }
        for (&(i, j, f), &m1) in &mor_of {
            for (&(j2, k, f2), &m2) in &mor_of {
                if j == j2 {
                    bld.set_comp(m2, m1, mor_of[&(i, k, fd.dom.compose(f2, f))]);
                }
            }
        }
        let comma = std::sync::Arc::new(bld.build());
        debug_assert!(crate::category::validate_category(&comma).is_empty());
        let ok = connected_components(&comma).iter().all(|comp| {
            let (sub, _) = full_subcategory(&comma, comp);
            has_terminal(&sub)
        });
        if !ok {
            criterion = false;
            failing_object = Some(d);
            break;
        }
    }
    let sampled_commutation = if criterion {
        samples.iter().all(|x| {
            let lhs = booleanise(&ran(fd, x));
            let rhs = bool_ran(fd, &booleanise(x));
            isomorphic(&lhs, &rhs)
        })
    } else {
        true
    };
    RanCommutesReport {
        criterion,
        failing_object,
        sampled_commutation,
    }
}

/// booleanise ∘ Σ_F ≅ Σ̄_F ∘ booleanise on samples over the domain.
/// Holds for all functors.
pub fn bool_lan_commutes(fd: &FunctorData, samples_on_dom: &[Presheaf]) -> bool {
    samples_on_dom
        .iter()
        .all(|x| isomorphic(&booleanise(&lan(fd, x)), &bool_lan(fd, &booleanise(x))))
}

/// booleanise ∘ Δ_F = Δ_F ∘ booleanise on samples over the codomain.
/// Holds on the nose.
pub fn bool_restrict_commutes(fd: &FunctorData, samples_on_cod: &[Presheaf]) -> bool {
    samples_on_cod.iter().all(|y| {
        isomorphic(
            &booleanise(&restrict(fd, y)),
            &restrict(fd, &booleanise(y)),
        )
    })
}
