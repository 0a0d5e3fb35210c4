//! Set-valued presheaves on finite categories, natural transformations,
//! and a decision procedure for presheaf isomorphism.

use crate::category::{CatRef, MorId, ObjId};
use crate::functor::same_category;
use std::fmt;

/// Structured element names. Carriers are sets of these; the structure
/// mirrors how the element was produced (pairs for coend classes, lists for
/// families) so witnesses stay readable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Unit,
    Nat(u64),
    Str(String),
    Pair(Box<Elem>, Box<Elem>),
    List(Vec<Elem>),
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Unit => write!(f, "*"),
            Elem::Nat(n) => write!(f, "{n}"),
            Elem::Str(s) => write!(f, "{s}"),
            Elem::Pair(a, b) => write!(f, "({a:?},{b:?})"),
            Elem::List(xs) => {
                write!(f, "[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x:?}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl Elem {
    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Box::new(a), Box::new(b))
    }
    pub fn s(s: impl Into<String>) -> Elem {
        Elem::Str(s.into())
    }
}

/// A presheaf X on a finite category: a finite carrier set per object and a
/// contravariant action per morphism (position-indexed).
///
/// For f: a → b, `action[f]` maps positions of X(b) to positions of X(a),
/// i.e. x·f for x ∈ X(b).
#[derive(Clone, Debug)]
pub struct Presheaf {
    pub base: CatRef,
    pub carriers: Vec<Vec<Elem>>,
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresheafViolation {
    BadTableSize,
    ActionOutOfRange { mor: MorId },
    IdentityNotIdentity { object: ObjId },
    NotFunctorial { g: MorId, f: MorId },
}

impl Presheaf {
    /// X(o) size.
    pub fn size(&self, o: ObjId) -> usize {
        self.carriers[o].len()
    }

    /// Applies the action of f to position x of X(dst f).
    pub fn act(&self, f: MorId, x: usize) -> usize {
        self.action[f][x]
    }

    pub fn elem(&self, o: ObjId, x: usize) -> &Elem {
        &self.carriers[o][x]
    }

    /// Canonicalises carrier order (sorts by element, rewrites actions).
    pub fn sort_carriers(&mut self) {
        let mut perms: Vec<Vec<usize>> = Vec::with_capacity(self.carriers.len());
        for c in &mut self.carriers {
            let mut idx: Vec<usize> = (0..c.len()).collect();
            idx.sort_by(|&a, &b| c[a].cmp(&c[b]));
            // perm[old] = new
            let mut perm = vec![0usize; c.len()];
            for (new, &old) in idx.iter().enumerate() {
                perm[old] = new;
            }
            let mut sorted = c.clone();
            for (old, e) in c.iter().enumerate() {
                sorted[perm[old]] = e.clone();
            }
            *c = sorted;
            perms.push(perm);
        }
        for (f, map) in self.action.iter_mut().enumerate() {
            let a = self.base.src(f);
            let b = self.base.dst(f);
            let mut new_map = vec![0usize; map.len()];
            for (old_x, &old_y) in map.iter().enumerate() {
                new_map[perms[b][old_x]] = perms[a][old_y];
            }
            *map = new_map;
        }
    }

    pub fn validate(&self) -> Vec<PresheafViolation> {
        let c = &self.base;
        let mut report = Vec::new();
        if self.carriers.len() != c.n_objects() || self.action.len() != c.n_mors() {
            report.push(PresheafViolation::BadTableSize);
            return report;
        }
        for f in c.morphisms() {
            let (a, b) = (c.src(f), c.dst(f));
            if self.action[f].len() != self.size(b)
                || self.action[f].iter().any(|&y| y >= self.size(a))
            {
                report.push(PresheafViolation::ActionOutOfRange { mor: f });
            }
        }
        if !report.is_empty() {
            return report;
        }
        for o in c.objects() {
            let idm = c.id(o);
            if (0..self.size(o)).any(|x| self.act(idm, x) != x) {
                report.push(PresheafViolation::IdentityNotIdentity { object: o });
            }
        }
        // x · f · g = x · (f ∘ g)
        for f in c.morphisms() {
            for g in c.morphisms() {
                if c.dst(g) != c.src(f) {
                    continue;
                }
                let fg = c.compose(f, g);
                for x in 0..self.size(c.dst(f)) {
                    if self.act(g, self.act(f, x)) != self.act(fg, x) {
                        report.push(PresheafViolation::NotFunctorial { g, f });
                        break;
                    }
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The terminal presheaf on `base` (every carrier a singleton).
    pub fn terminal(base: CatRef) -> Presheaf {
        let carriers = vec![vec![Elem::Unit]; base.n_objects()];
        let action = (0..base.n_mors()).map(|_| vec![0usize]).collect();
        Presheaf {
            base,
            carriers,
            action,
        }
    }

    /// The empty presheaf on `base`.
    pub fn empty(base: CatRef) -> Presheaf {
        let carriers = vec![Vec::new(); base.n_objects()];
        let action = (0..base.n_mors()).map(|_| Vec::new()).collect();
        Presheaf {
            base,
            carriers,
            action,
        }
    }

    /// The representable presheaf hom(-, c).
    pub fn representable(base: CatRef, c: ObjId) -> Presheaf {
        let carriers: Vec<Vec<Elem>> = base
            .objects()
            .map(|a| {
                base.hom(a, c)
                    .into_iter()
                    .map(|m| Elem::s(base.mor_name(m).to_string()))
                    .collect()
            })
            .collect();
        // position of morphism m in hom(src m, c)
        let pos = |a: ObjId, m: MorId| base.hom(a, c).iter().position(|&x| x == m).unwrap();
        let action = (0..base.n_mors())
            .map(|f| {
                let (a, b) = (base.src(f), base.dst(f));
                base.hom(b, c)
                    .into_iter()
                    .map(|m| pos(a, base.compose(m, f)))
                    .collect()
            })
            .collect();
        Presheaf {
            base,
            carriers,
            action,
        }
    }

    /// Coproduct of presheaves on the same base.
    pub fn coproduct(xs: &[&Presheaf]) -> Presheaf {
        assert!(!xs.is_empty());
        let base = xs[0].base.clone();
        let mut carriers = vec![Vec::new(); base.n_objects()];
        let mut action: Vec<Vec<usize>> = (0..base.n_mors()).map(|_| Vec::new()).collect();
        let mut offsets: Vec<Vec<usize>> = Vec::new();
        for (i, x) in xs.iter().enumerate() {
            assert!(same_category(&x.base, &base));
            let offs: Vec<usize> = carriers.iter().map(|c| c.len()).collect();
            for o in base.objects() {
                for e in &x.carriers[o] {
                    carriers[o].push(Elem::pair(Elem::Nat(i as u64), e.clone()));
                }
            }
            for f in base.morphisms() {
                let a = base.src(f);
                for &y in &x.action[f] {
                    action[f].push(offs[a] + y);
                }
            }
            offsets.push(offs);
        }
        Presheaf {
            base,
            carriers,
            action,
        }
    }
}

/// A natural transformation between presheaves on the same base,
/// as a position map per object.
#[derive(Clone, Debug)]
pub struct NatTrans {
    pub components: Vec<Vec<usize>>,
}

impl NatTrans {
    /// Checks naturality: for f: a → b, t_a(x·f) = t_b(x)·f.
    pub fn is_natural(&self, x: &Presheaf, y: &Presheaf) -> bool {
        let c = &x.base;
        for f in c.morphisms() {
            let (a, b) = (c.src(f), c.dst(f));
            for e in 0..x.size(b) {
                if self.components[a][x.act(f, e)] != y.act(f, self.components[b][e]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.iter().enumerate().all(|(i, &v)| i == v))
    }
}

/// A componentwise bijection between two presheaves commuting with both
/// actions. Witnesses all "up to isomorphism" claims.
#[derive(Clone, Debug)]
pub struct PresheafIso {
    pub forward: Vec<Vec<usize>>,
}

/// Searches for a presheaf isomorphism by backtracking over componentwise
/// bijections constrained by the actions, visiting small carriers first.
pub fn find_iso(x: &Presheaf, y: &Presheaf) -> Option<PresheafIso> {
    let c = x.base.clone();
    if !same_category(&x.base, &y.base) {
        return None;
    }
    for o in c.objects() {
        if x.size(o) != y.size(o) {
            return None;
        }
    }
    let mut order: Vec<ObjId> = c.objects().collect();
    order.sort_by_key(|&o| (x.size(o), o));
    let mut assign: Vec<Option<Vec<usize>>> = vec![None; c.n_objects()];

    fn consistent(c: &CatRef, x: &Presheaf, y: &Presheaf, assign: &[Option<Vec<usize>>]) -> bool {
        for f in c.morphisms() {
            let (a, b) = (c.src(f), c.dst(f));
            if let (Some(ta), Some(tb)) = (&assign[a], &assign[b]) {
                for e in 0..x.size(b) {
                    if ta[x.act(f, e)] != y.act(f, tb[e]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        c: &CatRef,
        x: &Presheaf,
        y: &Presheaf,
        order: &[ObjId],
        pos: usize,
        assign: &mut Vec<Option<Vec<usize>>>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let o = order[pos];
        let n = x.size(o);
        let mut perm: Vec<usize> = (0..n).collect();
        // enumerate permutations via Heap-ish recursion
        fn perms(
            perm: &mut Vec<usize>,
            k: usize,
            c: &CatRef,
            x: &Presheaf,
            y: &Presheaf,
            order: &[ObjId],
            pos: usize,
            o: ObjId,
            assign: &mut Vec<Option<Vec<usize>>>,
        ) -> bool {
            let n = perm.len();
            if k == n {
                assign[o] = Some(perm.clone());
                if consistent(c, x, y, assign) && rec(c, x, y, order, pos + 1, assign) {
                    return true;
                }
                assign[o] = None;
                return false;
            }
            for i in k..n {
                perm.swap(k, i);
                if perms(perm, k + 1, c, x, y, order, pos, o, assign) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        perms(&mut perm, 0, c, x, y, order, pos, o, assign)
    }

    if rec(&c, x, y, &order, 0, &mut assign) {
        Some(PresheafIso {
            forward: assign.into_iter().map(|a| a.unwrap()).collect(),
        })
    } else {
        None
    }
}

/// True iff the two presheaves are isomorphic.
pub fn isomorphic(x: &Presheaf, y: &Presheaf) -> bool {
    find_iso(x, y).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, parallel_pair, terminal};
    use std::sync::Arc;

    #[test]
    fn terminal_presheaf_validates() {
        let c = Arc::new(chain(3));
        assert!(Presheaf::terminal(c.clone()).is_valid());
        assert!(Presheaf::empty(c.clone()).is_valid());
        for o in 0..3 {
            assert!(Presheaf::representable(c.clone(), o).is_valid());
        }
    }

    #[test]
    fn representable_on_chain_sizes() {
        let c = Arc::new(chain(3));
        let y1 = Presheaf::representable(c.clone(), 1);
        assert_eq!(y1.size(0), 1);
        assert_eq!(y1.size(1), 1);
        assert_eq!(y1.size(2), 0);
    }

    #[test]
    fn iso_found_and_rejected() {
        let c = Arc::new(parallel_pair());
        let y = Presheaf::representable(c.clone(), 1);
        let y2 = y.clone();
        assert!(isomorphic(&y, &y2));
        let t = Presheaf::terminal(c.clone());
        assert!(!isomorphic(&y, &t)); // y(0) has 2 elements (f, g)
    }

    #[test]
    fn iso_respects_action_not_just_sizes() {
        // On the parallel pair a ⇉ b, two presheaves with equal sizes but
        // different actions: X(b)={0,1} with f=id,g=id vs f=id,g=swap.
        let c = Arc::new(parallel_pair());
        let f = c.hom(0, 1)[0];
        let g = c.hom(0, 1)[1];
        let mk = |gact: Vec<usize>| {
            let mut action: Vec<Vec<usize>> = vec![Vec::new(); c.n_mors()];
            action[c.id(0)] = vec![0, 1];
            action[c.id(1)] = vec![0, 1];
            action[f] = vec![0, 1];
            action[g] = gact;
            Presheaf {
                base: c.clone(),
                carriers: vec![
                    vec![Elem::Nat(0), Elem::Nat(1)],
                    vec![Elem::Nat(0), Elem::Nat(1)],
                ],
                action,
            }
        };
        let x = mk(vec![0, 1]);
        let y = mk(vec![1, 0]);
        assert!(x.is_valid() && y.is_valid());
        assert!(!isomorphic(&x, &y));
    }

    #[test]
    fn coproduct_of_representables_validates() {
        let c = Arc::new(chain(2));
        let y0 = Presheaf::representable(c.clone(), 0);
        let y1 = Presheaf::representable(c.clone(), 1);
        let x = Presheaf::coproduct(&[&y0, &y1]);
        assert!(x.is_valid());
        assert_eq!(x.size(0), 2);
        assert_eq!(x.size(1), 1);
        let _ = Arc::new(terminal());
    }
}
