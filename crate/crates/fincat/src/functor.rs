//! Functors between finite categories, checked exhaustively.

use crate::category::{CatRef, MorId, ObjId};

/// A functor given by explicit object and morphism tables.
#[derive(Clone, Debug)]
pub struct FunctorData {
    pub dom: CatRef,
    pub cod: CatRef,
    pub omap: Vec<ObjId>,
    pub mmap: Vec<MorId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    BadTableSize,
    EndpointsNotPreserved { mor: MorId },
    IdentityNotPreserved { object: ObjId },
    CompositionNotPreserved { g: MorId, f: MorId },
}

impl FunctorData {
    pub fn identity(c: CatRef) -> Self {
        FunctorData {
            omap: (0..c.n_objects()).collect(),
            mmap: (0..c.n_mors()).collect(),
            dom: c.clone(),
            cod: c,
        }
    }

    pub fn ob(&self, o: ObjId) -> ObjId {
        self.omap[o]
    }

    pub fn mor(&self, m: MorId) -> MorId {
        self.mmap[m]
    }

    /// self ∘ other (other first).
    pub fn compose(&self, other: &FunctorData) -> FunctorData {
        assert!(
            same_category(&other.cod, &self.dom),
            "functor composition endpoint mismatch"
        );
        FunctorData {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            omap: other.omap.iter().map(|&o| self.omap[o]).collect(),
            mmap: other.mmap.iter().map(|&m| self.mmap[m]).collect(),
        }
    }

    pub fn validate(&self) -> Vec<FunctorViolation> {
        let mut report = Vec::new();
        if self.omap.len() != self.dom.n_objects() || self.mmap.len() != self.dom.n_mors() {
            report.push(FunctorViolation::BadTableSize);
            return report;
        }
        for m in self.dom.morphisms() {
            let fm = self.mmap[m];
            if self.cod.src(fm) != self.omap[self.dom.src(m)]
                || self.cod.dst(fm) != self.omap[self.dom.dst(m)]
            {
                report.push(FunctorViolation::EndpointsNotPreserved { mor: m });
            }
        }
        if !report.is_empty() {
            return report;
        }
        for o in self.dom.objects() {
            if self.mmap[self.dom.id(o)] != self.cod.id(self.omap[o]) {
                report.push(FunctorViolation::IdentityNotPreserved { object: o });
            }
        }
        for f in self.dom.morphisms() {
            for g in self.dom.morphisms() {
                if self.dom.dst(f) != self.dom.src(g) {
                    continue;
                }
                let lhs = self.mmap[self.dom.compose(g, f)];
                let rhs = self.cod.compose(self.mmap[g], self.mmap[f]);
                if lhs != rhs {
                    report.push(FunctorViolation::CompositionNotPreserved { g, f });
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// True iff for all a, b in dom, the map hom(a,b) → hom(Fa,Fb) is a bijection.
    pub fn is_fully_faithful(&self) -> bool {
        for a in self.dom.objects() {
            for b in self.dom.objects() {
                let dom_hom = self.dom.hom(a, b);
                let cod_hom = self.cod.hom(self.omap[a], self.omap[b]);
                let mut images: Vec<MorId> = dom_hom.iter().map(|&m| self.mmap[m]).collect();
                images.sort_unstable();
                images.dedup();
                if images.len() != dom_hom.len() || images.len() != cod_hom.len() {
                    return false;
                }
            }
        }
        true
    }
}

/// Structural equality of the underlying categories, for endpoint assertions.
pub fn same_category(a: &CatRef, b: &CatRef) -> bool {
    std::sync::Arc::ptr_eq(a, b) || **a == **b
}

/// Enumerates every functor from `dom` to `cod` by backtracking over object
/// and morphism assignments. Only sensible for very small categories.
pub fn all_functors(dom: &CatRef, cod: &CatRef) -> Vec<FunctorData> {
    let mut out = Vec::new();
    let n_obj = dom.n_objects();
    let mut omap = vec![0usize; n_obj];
    fn rec_obj(
        dom: &CatRef,
        cod: &CatRef,
        omap: &mut Vec<ObjId>,
        idx: usize,
        out: &mut Vec<FunctorData>,
    ) {
        if idx == omap.len() {
            // assign morphisms by backtracking
            let mut mmap = vec![usize::MAX; dom.n_mors()];
            rec_mor(dom, cod, omap, &mut mmap, 0, out);
            return;
        }
        for o in cod.objects() {
            omap[idx] = o;
            rec_obj(dom, cod, omap, idx + 1, out);
        }
    }
    fn rec_mor(
        dom: &CatRef,
        cod: &CatRef,
        omap: &[ObjId],
        mmap: &mut Vec<MorId>,
        idx: usize,
        out: &mut Vec<FunctorData>,
    ) {
        if idx == mmap.len() {
            let f = FunctorData {
                dom: dom.clone(),
                cod: cod.clone(),
                omap: omap.to_vec(),
                mmap: mmap.clone(),
            };
            if f.is_valid() {
                out.push(f);
            }
            return;
        }
        let (s, d, _) = dom.mors[idx];
        for m in cod.hom(omap[s], omap[d]) {
            mmap[idx] = m;
            // cheap pruning: identities must map to identities
            if dom.id(s) == idx && s == d && m != cod.id(omap[s]) {
                continue;
            }
            rec_mor(dom, cod, omap, mmap, idx + 1, out);
        }
    }
    if n_obj == 0 {
        out.push(FunctorData {
            dom: dom.clone(),
            cod: cod.clone(),
            omap: Vec::new(),
            mmap: Vec::new(),
        });
        return out;
    }
    if cod.n_objects() == 0 {
        return out;
    }
    rec_obj(dom, cod, &mut omap, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete, terminal};
    use std::sync::Arc;

    #[test]
    fn identity_functor_is_valid() {
        let c = Arc::new(chain(3));
        assert!(FunctorData::identity(c).is_valid());
    }

    #[test]
    fn all_functors_counts() {
        let one = Arc::new(terminal());
        let two = Arc::new(chain(2));
        // functors 1 → 2-chain: pick an object
        assert_eq!(all_functors(&one, &two).len(), 2);
        // functors 2-chain → 1: unique
        assert_eq!(all_functors(&two, &one).len(), 1);
        // functors 2-discrete → 2-chain: any object pair
        let d2 = Arc::new(discrete(2));
        assert_eq!(all_functors(&d2, &two).len(), 4);
        // functors 2-chain → 2-chain: monotone self-maps: 3
        assert_eq!(all_functors(&two, &two).len(), 3);
    }

    #[test]
    fn fully_faithful_detection() {
        let one = Arc::new(terminal());
        let two = Arc::new(chain(2));
        for f in all_functors(&one, &two) {
            assert!(f.is_fully_faithful());
        }
        let d2 = Arc::new(discrete(2));
        let collapse = FunctorData {
            dom: d2.clone(),
            cod: one.clone(),
            omap: vec![0, 0],
            mmap: vec![0, 0],
        };
        assert!(collapse.is_valid());
        // hom(a, b) is empty in the discrete domain but not in the point
        assert!(!collapse.is_fully_faithful());
        // Another non-ff example: parallel pair → chain(2) collapsing f,g.
        let pp = Arc::new(crate::category::parallel_pair());
        let h = FunctorData {
            dom: pp.clone(),
            cod: two.clone(),
            omap: vec![0, 1],
            mmap: vec![two.id(0), two.id(1), two.hom(0, 1)[0], two.hom(0, 1)[0]],
        };
        assert!(h.is_valid());
        assert!(!h.is_fully_faithful());
    }
}
