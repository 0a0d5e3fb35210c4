//! Lax colimits of spans of categories, presented by generators (the span's
//! morphisms plus λ and ρ components) modulo the naturality congruence,
//! with hom-sets computed by union–find closure over normal-form candidates.

use crate::category::{CategoryBuilder, CatRef, MorId, ObjId};
use crate::functor::FunctorData;
use crate::kan::UnionFind;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
#[error("lax colimit closure exceeded the morphism budget ({budget})")]
pub struct LaxColimitBudget {
    pub budget: usize,
}

/// The lax colimit of the span A ←S− X −T→ B with injections and the
/// structural transformations λ, ρ.
pub struct LaxColimit {
    pub cat: CatRef,
    pub inj_a: FunctorData,
    pub inj_b: FunctorData,
    pub inj_x: FunctorData,
    /// λ_x: inj_a(S x) → inj_x(x), per object of X.
    pub lambda: Vec<MorId>,
    /// ρ_x: inj_b(T x) → inj_x(x), per object of X.
    pub rho: Vec<MorId>,
}

/// Computes the lax colimit. New hom-sets hom(a, x) and hom(b, x) are the
/// quotients of {(f: x0 → x, g: a → S x0)} by (f∘h, g) ~ (f, S h ∘ g),
/// computed by union–find; every class has the canonical representative
/// (id_x, g'), so classes are indexed by A(a, S x) (resp. B(b, T x)).
pub fn lax_colimit_span(
    s: &FunctorData,
    t: &FunctorData,
    budget: usize,
) -> Result<LaxColimit, LaxColimitBudget> {
    let x_cat = s.dom.clone();
    let a_cat = s.cod.clone();
    let b_cat = t.cod.clone();
    assert!(crate::functor::same_category(&t.dom, &x_cat));

    let mut bld = CategoryBuilder::new();
    let a_off = 0usize;
    for o in a_cat.objects() {
        bld.add_object(format!("A.{}", a_cat.object_name(o)));
    }
    let b_off = a_cat.n_objects();
    for o in b_cat.objects() {
        bld.add_object(format!("B.{}", b_cat.object_name(o)));
    }
    let x_off = b_off + b_cat.n_objects();
    for o in x_cat.objects() {
        bld.add_object(format!("X.{}", x_cat.object_name(o)));
    }

    // verify the quotient of λ-composites by union-find closure; the classes
    // must biject with A(a, S x) via (f, g) ↦ S f ∘ g
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            let mut nodes: Vec<(ObjId, MorId, MorId)> = Vec::new();
            for x0 in x_cat.objects() {
                for f in x_cat.hom(x0, x) {
                    for g in a_cat.hom(a, s.ob(x0)) {
                        nodes.push((x0, f, g));
                    }
                }
            }
            let index: HashMap<(ObjId, MorId, MorId), usize> =
                nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
            let mut uf = UnionFind::new(nodes.len());
            for &(x0, f, g) in &nodes {
                // decomposition f = f1 ∘ h gives (x0, f, g) ~ (x1, f1, S h ∘ g)
                for h in x_cat.morphisms() {
                    if x_cat.src(h) != x0 {
                        continue;
                    }
                    let x1 = x_cat.dst(h);
                    for f1 in x_cat.hom(x1, x) {
                        if x_cat.compose(f1, h) == f {
                            let other = (x1, f1, a_cat.compose(s.mor(h), g));
                            uf.union(index[&(x0, f, g)], index[&other]);
                        }
                    }
                }
            }
            let mut roots: Vec<usize> = (0..nodes.len()).map(|i| uf.find(i)).collect();
            roots.sort_unstable();
            roots.dedup();
            let expected = a_cat.hom(a, s.ob(x)).len();
            assert_eq!(
                roots.len(),
                expected,
                "lambda-hom closure must normalise to A(a, S x)"
            );
        }
    }

    // morphisms: A's, B's, X's, plus hom(a, x) ≅ A(a, S x) and hom(b, x) ≅ B(b, T x)
    let mut a_mor = Vec::new();
    for m in a_cat.morphisms() {
        a_mor.push(bld.add_mor(
            a_off + a_cat.src(m),
            a_off + a_cat.dst(m),
            format!("A.{}", a_cat.mor_name(m)),
        ));
    }
    let mut b_mor = Vec::new();
    for m in b_cat.morphisms() {
        b_mor.push(bld.add_mor(
            b_off + b_cat.src(m),
            b_off + b_cat.dst(m),
            format!("B.{}", b_cat.mor_name(m)),
        ));
    }
    let mut x_mor = Vec::new();
    for m in x_cat.morphisms() {
        x_mor.push(bld.add_mor(
            x_off + x_cat.src(m),
            x_off + x_cat.dst(m),
            format!("X.{}", x_cat.mor_name(m)),
        ));
    }
    // λ-side morphisms (x, g: a → S x) with λ_x ∘ g as the normal form
    let mut lam_mor: HashMap<(ObjId, MorId), MorId> = HashMap::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            for g in a_cat.hom(a, s.ob(x)) {
                let m = bld.add_mor(
                    a_off + a,
                    x_off + x,
                    format!("lam_{}.{}", x_cat.object_name(x), a_cat.mor_name(g)),
                );
                lam_mor.insert((x, g), m);
            }
        }
    }
    let mut rho_mor: HashMap<(ObjId, MorId), MorId> = HashMap::new();
    for x in x_cat.objects() {
        for b in b_cat.objects() {
            for g in b_cat.hom(b, t.ob(x)) {
                let m = bld.add_mor(
                    b_off + b,
                    x_off + x,
                    format!("rho_{}.{}", x_cat.object_name(x), b_cat.mor_name(g)),
                );
                rho_mor.insert((x, g), m);
            }
        }
    }
    if bld.n_mors() > budget {
        return Err(LaxColimitBudget { budget });
    }

    for o in a_cat.objects() {
        bld.set_id(a_off + o, a_mor[a_cat.id(o)]);
    }
    for o in b_cat.objects() {
        bld.set_id(b_off + o, b_mor[b_cat.id(o)]);
    }
    for o in x_cat.objects() {
        bld.set_id(x_off + o, x_mor[x_cat.id(o)]);
    }

    // composition tables
    for (&(g2, g1), &c) in &a_cat.comp {
        bld.set_comp(a_mor[g2], a_mor[g1], a_mor[c]);
    }
    for (&(g2, g1), &c) in &b_cat.comp {
        bld.set_comp(b_mor[g2], b_mor[g1], b_mor[c]);
    }
    for (&(g2, g1), &c) in &x_cat.comp {
        bld.set_comp(x_mor[g2], x_mor[g1], x_mor[c]);
    }
    // (λ_x ∘ g) ∘ h = λ_x ∘ (g ∘ h) for h in A
    for (&(x, g), &m) in &lam_mor {
        for h in a_cat.morphisms() {
            if a_cat.dst(h) == a_cat.src(g) {
                bld.set_comp(m, a_mor[h], lam_mor[&(x, a_cat.compose(g, h))]);
            }
        }
        // f ∘ (λ_x ∘ g) = λ_x' ∘ (S f ∘ g) for f: x → x' in X
        for f in x_cat.morphisms() {
            if x_cat.src(f) == x {
                let x2 = x_cat.dst(f);
                bld.set_comp(
                    x_mor[f],
                    m,
                    lam_mor[&(x2, a_cat.compose(s.mor(f), g))],
                );
            }
        }
    }
    for (&(x, g), &m) in &rho_mor {
        for h in b_cat.morphisms() {
            if b_cat.dst(h) == b_cat.src(g) {
                bld.set_comp(m, b_mor[h], rho_mor[&(x, b_cat.compose(g, h))]);
            }
        }
        for f in x_cat.morphisms() {
            if x_cat.src(f) == x {
                let x2 = x_cat.dst(f);
                bld.set_comp(
                    x_mor[f],
                    m,
                    rho_mor[&(x2, b_cat.compose(t.mor(f), g))],
                );
            }
        }
    }

    let cat = Arc::new(bld.build());
    let inj_a = FunctorData {
        dom: a_cat.clone(),
        cod: cat.clone(),
        omap: (0..a_cat.n_objects()).map(|o| a_off + o).collect(),
        mmap: a_mor.clone(),
    };
    let inj_b = FunctorData {
        dom: b_cat.clone(),
        cod: cat.clone(),
        omap: (0..b_cat.n_objects()).map(|o| b_off + o).collect(),
        mmap: b_mor.clone(),
    };
    let inj_x = FunctorData {
        dom: x_cat.clone(),
        cod: cat.clone(),
        omap: (0..x_cat.n_objects()).map(|o| x_off + o).collect(),
        mmap: x_mor.clone(),
    };
    let lambda = x_cat
        .objects()
        .map(|x| lam_mor[&(x, a_cat.id(s.ob(x)))])
        .collect();
    let rho = x_cat
        .objects()
        .map(|x| rho_mor[&(x, b_cat.id(t.ob(x)))])
        .collect();
    Ok(LaxColimit {
        cat,
        inj_a,
        inj_b,
        inj_x,
        lambda,
        rho,
    })
}

/// The cocomma square exhibiting the lax colimit's universal property:
///
/// ```text
///   X + X ----∇----> X
///  S+T |            | inj_x
///      v            v
///   A + B --[i,i]-> LC
/// ```
///
/// with φ components λ (first copy) and ρ (second copy).
pub fn cocomma_square(lc: &LaxColimit, s: &FunctorData, t: &FunctorData) -> crate::square::Square {
    let x_cat = s.dom.clone();
    let (xx, xinl, xinr) = crate::construct::coproduct(&x_cat, &x_cat);
    let (ab, ainl, binr) = crate::construct::coproduct(&s.cod, &t.cod);
    let legs = crate::construct::copair(&xx, &ainl.compose(s), &binr.compose(t));
    let nabla = crate::construct::codiagonal(&xx, &x_cat);
    let bottom = crate::construct::copair(&ab, &lc.inj_a, &lc.inj_b);
    let _ = (xinl, xinr);
    let mut phi = Vec::new();
    for x in x_cat.objects() {
        phi.push(lc.lambda[x]);
    }
    for x in x_cat.objects() {
        phi.push(lc.rho[x]);
    }
    crate::square::Square {
        s: legs,
        t: nabla,
        u: bottom,
        v: lc.inj_x.clone(),
        phi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete, empty, terminal, validate_category};
    use crate::square::is_exact;

    #[test]
    fn span_with_empty_apex_is_disjoint_union() {
        let a = Arc::new(chain(2));
        let b = Arc::new(discrete(2));
        let x = Arc::new(empty());
        let s = FunctorData {
            dom: x.clone(),
            cod: a.clone(),
            omap: vec![],
            mmap: vec![],
        };
        let t = FunctorData {
            dom: x.clone(),
            cod: b.clone(),
            omap: vec![],
            mmap: vec![],
        };
        let lc = lax_colimit_span(&s, &t, 100).unwrap();
        assert!(validate_category(&lc.cat).is_empty());
        assert_eq!(lc.cat.n_objects(), 4);
        assert_eq!(lc.cat.n_mors(), a.n_mors() + b.n_mors());
    }

    #[test]
    fn span_of_points_with_identity_legs() {
        let pt = Arc::new(terminal());
        let idf = FunctorData::identity(pt.clone());
        let lc = lax_colimit_span(&idf, &idf, 100).unwrap();
        assert!(validate_category(&lc.cat).is_empty());
        assert_eq!(lc.cat.n_objects(), 3);
        // three identities, one λ, one ρ
        assert_eq!(lc.cat.n_mors(), 5);
        assert_eq!(lc.lambda.len(), 1);
        assert_eq!(lc.rho.len(), 1);
    }

    #[test]
    fn cocomma_square_into_lax_colimit_is_exact() {
        let c = Arc::new(chain(2));
        let idf = FunctorData::identity(c.clone());
        let lc = lax_colimit_span(&idf, &idf, 1000).unwrap();
        assert!(validate_category(&lc.cat).is_empty());
        let sq = cocomma_square(&lc, &idf, &idf);
        assert!(sq.validate());
        assert!(is_exact(&sq).is_ok());
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let c = Arc::new(chain(3));
        let idf = FunctorData::identity(c.clone());
        assert!(lax_colimit_span(&idf, &idf, 2).is_err());
    }
}
