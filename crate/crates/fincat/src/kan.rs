//! Restriction and its two adjoints: left extension by a union–find coend
//! quotient, right extension by backtracking over natural families.

use crate::category::MorId;
use crate::functor::{same_category, FunctorData};
use crate::presheaf::{Elem, NatTrans, Presheaf};
use std::collections::HashMap;

/// Union-find with path compression, used for the coend quotient.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            self.parent[i] = self.find(self.parent[i]);
        }
        self.parent[i]
    }

    pub fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            // keep the smaller index as representative for determinism
            let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
            self.parent[hi] = lo;
        }
    }
}

/// Pre-composition Δ_F: carrier at c is X(F c), action along f is X(F f).
pub fn restrict(fd: &FunctorData, x: &Presheaf) -> Presheaf {
    assert!(
        same_category(&fd.cod, &x.base),
        "restrict: presheaf not on the functor codomain"
    );
    Presheaf {
        base: fd.dom.clone(),
        carriers: fd.dom.objects().map(|o| x.carriers[fd.ob(o)].clone()).collect(),
        action: fd.dom.morphisms().map(|m| x.action[fd.mor(m)].clone()).collect(),
    }
}

/// Left extension Σ_F by the coend formula: carrier at d is the quotient of
/// ⊔_c X(c) × hom(d, F c) by the congruence generated by
/// (x, F(f)∘g) ~ (x·f, g), computed by union–find closure.
pub fn lan(fd: &FunctorData, x: &Presheaf) -> Presheaf {
    assert!(same_category(&fd.dom, &x.base));
    let c_cat = &fd.dom;
    let d_cat = &fd.cod;
    // nodes per target object d: (c, x ∈ X(c), g: d → F c)
    let mut carriers: Vec<Vec<Elem>> = Vec::with_capacity(d_cat.n_objects());
    // class index per (d, node)
    let mut node_index: Vec<HashMap<(usize, usize, MorId), usize>> = Vec::new();
    let mut class_of: Vec<Vec<usize>> = Vec::new();
    for d in d_cat.objects() {
        let mut nodes: Vec<(usize, usize, MorId)> = Vec::new();
        for c in c_cat.objects() {
            for g in d_cat.hom(d, fd.ob(c)) {
                for xe in 0..x.size(c) {
                    nodes.push((c, xe, g));
                }
            }
        }
        nodes.sort_unstable();
        let index: HashMap<(usize, usize, MorId), usize> =
            nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut uf = UnionFind::new(nodes.len());
        // relation (5): for f: c → c', x' ∈ X(c'), g: d → F c:
        //   (c', x', F(f)∘g) ~ (c, x'·f, g)
        for f in c_cat.morphisms() {
            let (c, c2) = (c_cat.src(f), c_cat.dst(f));
            for g in d_cat.hom(d, fd.ob(c)) {
                let ffg = d_cat.compose(fd.mor(f), g);
                for x2 in 0..x.size(c2) {
                    let left = index[&(c2, x2, ffg)];
                    let right = index[&(c, x.act(f, x2), g)];
                    uf.union(left, right);
                }
            }
        }
        // canonical representative = smallest node in the class
        let mut reps: Vec<usize> = Vec::new();
        let mut class: Vec<usize> = vec![usize::MAX; nodes.len()];
        for i in 0..nodes.len() {
            let r = uf.find(i);
            if class[r] == usize::MAX {
                class[r] = reps.len();
                reps.push(r);
            }
            class[i] = class[r];
        }
        let elems: Vec<Elem> = reps
            .iter()
            .map(|&r| {
                let (c, xe, g) = nodes[r];
                Elem::pair(
                    x.elem(c, xe).clone(),
                    Elem::s(d_cat.mor_name(g).to_string()),
                )
            })
            .collect();
        carriers.push(elems);
        node_index.push(index);
        class_of.push(class);
    }
    // action along h: d' → d precomposes the hom component: (x, g) ↦ (x, g∘h)
    let action: Vec<Vec<usize>> = d_cat
        .morphisms()
        .map(|h| {
            let (d1, d2) = (d_cat.src(h), d_cat.dst(h));
            // need, for each class at d2, its image class at d1; compute via any node
            let mut nodes_by_class: Vec<Option<(usize, usize, MorId)>> =
                vec![None; carriers[d2].len()];
            for (&node, &i) in &node_index[d2] {
                let cl = class_of[d2][i];
                if nodes_by_class[cl].is_none() || node < nodes_by_class[cl].unwrap() {
                    nodes_by_class[cl] = Some(node);
                }
            }
            nodes_by_class
                .into_iter()
                .map(|n| {
                    let (c, xe, g) = n.unwrap();
                    let gh = d_cat.compose(g, h);
                    class_of[d1][node_index[d1][&(c, xe, gh)]]
                })
                .collect()
        })
        .collect();
    Presheaf {
        base: fd.cod.clone(),
        carriers,
        action,
    }
}

/// Right extension Π_F by the end formula: carrier at d is the set of
/// families α_c: hom(F c, d) → X(c) satisfying α_c(g ∘ F f) = α_{c'}(g)·f,
/// enumerated by backtracking with early constraint checks.
pub fn ran(fd: &FunctorData, x: &Presheaf) -> Presheaf {
    assert!(same_category(&fd.dom, &x.base));
    let c_cat = &fd.dom;
    let d_cat = &fd.cod;

    let mut carriers: Vec<Vec<Elem>> = Vec::with_capacity(d_cat.n_objects());
    // store families for action computation: per d, per family, map (c, g) -> value
    let mut families: Vec<Vec<HashMap<(usize, MorId), usize>>> = Vec::new();
    for d in d_cat.objects() {
        // slots (c, g: F c → d)
        let mut slots: Vec<(usize, MorId)> = Vec::new();
        for c in c_cat.objects() {
            for g in d_cat.hom(fd.ob(c), d) {
                slots.push((c, g));
            }
        }
        slots.sort_unstable();
        let slot_index: HashMap<(usize, MorId), usize> =
            slots.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        // constraints: for f: c → c' in C, g: F c' → d:
        //   α_c(g ∘ F f) = α_{c'}(g) · f
        // as (slot_a, slot_b, f) meaning value[slot_a] = x.act(f, value[slot_b])
        let mut constraints: Vec<(usize, usize, MorId)> = Vec::new();
        for f in c_cat.morphisms() {
            let (c, c2) = (c_cat.src(f), c_cat.dst(f));
            for g in d_cat.hom(fd.ob(c2), d) {
                let gff = d_cat.compose(g, fd.mor(f));
                constraints.push((slot_index[&(c, gff)], slot_index[&(c2, g)], f));
            }
        }
        // group constraints by max slot index for early checking
        let mut by_slot: Vec<Vec<(usize, usize, MorId)>> = vec![Vec::new(); slots.len()];
        for &(a, b, f) in &constraints {
            by_slot[a.max(b)].push((a, b, f));
        }
        let mut found: Vec<HashMap<(usize, MorId), usize>> = Vec::new();
        let mut current: Vec<usize> = vec![usize::MAX; slots.len()];
        fn rec(
            slots: &[(usize, MorId)],
            x: &Presheaf,
            by_slot: &[Vec<(usize, usize, MorId)>],
            current: &mut Vec<usize>,
            i: usize,
            found: &mut Vec<HashMap<(usize, MorId), usize>>,
        ) {
            if i == slots.len() {
                found.push(
                    slots
                        .iter()
                        .enumerate()
                        .map(|(j, &s)| (s, current[j]))
                        .collect(),
                );
                return;
            }
            let (c, _) = slots[i];
            for v in 0..x.size(c) {
                current[i] = v;
                let ok = by_slot[i].iter().all(|&(a, b, f)| {
                    let va = current[a];
                    let vb = current[b];
                    va == x.act(f, vb)
                });
                if ok {
                    rec(slots, x, by_slot, current, i + 1, found);
                }
            }
            current[i] = usize::MAX;
        }
        rec(&slots, x, &by_slot, &mut current, 0, &mut found);
        // deterministic order: sort families by their value vectors
        found.sort_by_key(|fam| {
            let mut v: Vec<(usize, MorId, usize)> =
                fam.iter().map(|(&(c, g), &val)| (c, g, val)).collect();
            v.sort_unstable();
            v
        });
        let elems: Vec<Elem> = found
            .iter()
            .map(|fam| {
                let mut v: Vec<(usize, MorId, usize)> =
                    fam.iter().map(|(&(c, g), &val)| (c, g, val)).collect();
                v.sort_unstable();
                Elem::List(
                    v.into_iter()
                        .map(|(c, g, val)| {
                            Elem::pair(
                                Elem::s(d_cat.mor_name(g).to_string()),
                                x.elem(c, val).clone(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        carriers.push(elems);
        families.push(found);
    }
    // action along h: d' → d precomposes hom arguments: (α·h)_c(g) = α_c(h ∘ g)
    let action: Vec<Vec<usize>> = d_cat
        .morphisms()
        .map(|h| {
            let (d1, d2) = (d_cat.src(h), d_cat.dst(h));
            families[d2]
                .iter()
                .map(|fam| {
                    // build restricted family at d1
                    let mut restricted: Vec<(usize, MorId, usize)> = Vec::new();
                    for c in fd.dom.objects() {
                        for g in d_cat.hom(fd.ob(c), d1) {
                            let hg = d_cat.compose(h, g);
                            restricted.push((c, g, fam[&(c, hg)]));
                        }
                    }
                    restricted.sort_unstable();
                    families[d1]
                        .iter()
                        .position(|f2| {
                            restricted
                                .iter()
                                .all(|&(c, g, val)| f2[&(c, g)] == val)
                        })
                        .expect("restricted family must be a family")
                })
                .collect()
        })
        .collect();
    Presheaf {
        base: fd.cod.clone(),
        carriers,
        action,
    }
}

/// Unit of Σ_F ⊣ Δ_F at X: X → Δ_F Σ_F X, x ↦ [(x, id_{F c})].
pub fn lan_unit(fd: &FunctorData, x: &Presheaf, lan_x: &Presheaf) -> NatTrans {
    let components = fd
        .dom
        .objects()
        .map(|c| {
            (0..x.size(c))
                .map(|xe| lan_class_of(fd, x, lan_x, fd.ob(c), c, xe, fd.cod.id(fd.ob(c))))
                .collect()
        })
        .collect();
    NatTrans { components }
}

/// Counit of Σ_F ⊣ Δ_F at Y: Σ_F Δ_F Y → Y, [(y, g)] ↦ y·g.
pub fn lan_counit(fd: &FunctorData, y: &Presheaf, lan_res_y: &Presheaf) -> NatTrans {
    // lan_res_y = Σ_F Δ_F Y; its classes at d are generated by nodes (c, y ∈ Y(F c), g: d → F c).
    // We recompute representatives to map each class to y·g.
    let res = restrict(fd, y);
    let components = fd
        .cod
        .objects()
        .map(|d| {
            (0..lan_res_y.size(d))
                .map(|cl| {
                    let (c, xe, g) = lan_class_rep(fd, &res, lan_res_y, d, cl);
                    let _ = c;
                    y.act(g, xe)
                })
                .collect()
        })
        .collect();
    NatTrans { components }
}

/// Finds the class index in `lan_x` at object d of the node (c, xe, g).
pub fn lan_class_of(
    fd: &FunctorData,
    x: &Presheaf,
    lan_x: &Presheaf,
    d: usize,
    c: usize,
    xe: usize,
    g: MorId,
) -> usize {
    // Recompute the union-find for object d. This duplicates work but keeps
    // the lan output self-contained; fine at desk scale.
    let (class_of, index) = lan_tables(fd, x, d);
    let cl = class_of[index[&(c, xe, g)]];
    debug_assert!(cl < lan_x.size(d));
    cl
}

/// Representative node (c, xe, g) of class `cl` at object d.
pub fn lan_class_rep(
    fd: &FunctorData,
    x: &Presheaf,
    lan_x: &Presheaf,
    d: usize,
    cl: usize,
) -> (usize, usize, MorId) {
    let (class_of, index) = lan_tables(fd, x, d);
    let mut best: Option<(usize, usize, MorId)> = None;
    for (&node, &i) in &index {
        if class_of[i] == cl && (best.is_none() || node < best.unwrap()) {
            best = Some(node);
        }
    }
    let _ = lan_x;
    best.expect("class exists")
}

fn lan_tables(
    fd: &FunctorData,
    x: &Presheaf,
    d: usize,
) -> (Vec<usize>, HashMap<(usize, usize, MorId), usize>) {
    let c_cat = &fd.dom;
    let d_cat = &fd.cod;
    let mut nodes: Vec<(usize, usize, MorId)> = Vec::new();
    for c in c_cat.objects() {
        for g in d_cat.hom(d, fd.ob(c)) {
            for xe in 0..x.size(c) {
                nodes.push((c, xe, g));
            }
        }
    }
    nodes.sort_unstable();
    let index: HashMap<(usize, usize, MorId), usize> =
        nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut uf = UnionFind::new(nodes.len());
    for f in c_cat.morphisms() {
        let (c, c2) = (c_cat.src(f), c_cat.dst(f));
        for g in d_cat.hom(d, fd.ob(c)) {
            let ffg = d_cat.compose(fd.mor(f), g);
            for x2 in 0..x.size(c2) {
                uf.union(index[&(c2, x2, ffg)], index[&(c, x.act(f, x2), g)]);
            }
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut class: Vec<usize> = vec![usize::MAX; nodes.len()];
    for i in 0..nodes.len() {
        let r = uf.find(i);
        if class[r] == usize::MAX {
            class[r] = reps.len();
            reps.push(r);
        }
        class[i] = class[r];
    }
    (class, index)
}

/// Unit of Δ_F ⊣ Π_F at Y: Y → Π_F Δ_F Y, y ↦ (α_c(g) = y·g).
pub fn ran_unit(fd: &FunctorData, y: &Presheaf, ran_res_y: &Presheaf) -> NatTrans {
    let res = restrict(fd, y);
    let components = fd
        .cod
        .objects()
        .map(|d| {
            (0..y.size(d))
                .map(|ye| {
                    // family α_c(g: F c → d) = y · g
                    find_family(fd, &res, ran_res_y, d, |c, g| {
                        let _ = c;
                        y.act(g, ye)
                    })
                })
                .collect()
        })
        .collect();
    NatTrans { components }
}

/// Counit of Δ_F ⊣ Π_F at X: Δ_F Π_F X → X, α ↦ α_c(id_{F c}).
pub fn ran_counit(fd: &FunctorData, x: &Presheaf, ran_x: &Presheaf) -> NatTrans {
    let components = fd
        .dom
        .objects()
        .map(|c| {
            let d = fd.ob(c);
            (0..ran_x.size(d))
                .map(|fam| family_value(fd, x, ran_x, d, fam, c, fd.cod.id(d)))
                .collect()
        })
        .collect();
    NatTrans { components }
}

/// Recomputes the family table of `ran(fd, x)` at `d` and returns the index of
/// the family matching `value(c, g)`.
fn find_family(
    fd: &FunctorData,
    x: &Presheaf,
    ran_x: &Presheaf,
    d: usize,
    value: impl Fn(usize, MorId) -> usize,
) -> usize {
    let fams = ran_families(fd, x, d);
    debug_assert_eq!(fams.len(), ran_x.size(d));
    fams.iter()
        .position(|fam| fam.iter().all(|(&(c, g), &v)| value(c, g) == v))
        .expect("family exists")
}

/// Value α_c(g) of family index `fam` of ran(fd, x) at object d.
pub fn family_value(
    fd: &FunctorData,
    x: &Presheaf,
    ran_x: &Presheaf,
    d: usize,
    fam: usize,
    c: usize,
    g: MorId,
) -> usize {
    let fams = ran_families(fd, x, d);
    debug_assert_eq!(fams.len(), ran_x.size(d));
    fams[fam][&(c, g)]
}

fn ran_families(fd: &FunctorData, x: &Presheaf, d: usize) -> Vec<HashMap<(usize, MorId), usize>> {
    // identical enumeration to `ran`, kept deterministic
    let c_cat = &fd.dom;
    let d_cat = &fd.cod;
    let mut slots: Vec<(usize, MorId)> = Vec::new();
    for c in c_cat.objects() {
        for g in d_cat.hom(fd.ob(c), d) {
            slots.push((c, g));
        }
    }
    slots.sort_unstable();
    let slot_index: HashMap<(usize, MorId), usize> =
        slots.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut constraints: Vec<(usize, usize, MorId)> = Vec::new();
    for f in c_cat.morphisms() {
        let (c, c2) = (c_cat.src(f), c_cat.dst(f));
        for g in d_cat.hom(fd.ob(c2), d) {
            let gff = d_cat.compose(g, fd.mor(f));
            constraints.push((slot_index[&(c, gff)], slot_index[&(c2, g)], f));
        }
    }
    let mut by_slot: Vec<Vec<(usize, usize, MorId)>> = vec![Vec::new(); slots.len()];
    for &(a, b, f) in &constraints {
        by_slot[a.max(b)].push((a, b, f));
    }
    let mut found: Vec<HashMap<(usize, MorId), usize>> = Vec::new();
    let mut current: Vec<usize> = vec![usize::MAX; slots.len()];
    fn rec(
        slots: &[(usize, MorId)],
        x: &Presheaf,
        by_slot: &[Vec<(usize, usize, MorId)>],
        current: &mut Vec<usize>,
        i: usize,
        found: &mut Vec<HashMap<(usize, MorId), usize>>,
    ) {
        if i == slots.len() {
            found.push(
                slots
                    .iter()
                    .enumerate()
                    .map(|(j, &s)| (s, current[j]))
                    .collect(),
            );
            return;
        }
        let (c, _) = slots[i];
        for v in 0..x.size(c) {
            current[i] = v;
            let ok = by_slot[i]
                .iter()
                .all(|&(a, b, f)| current[a] == x.act(f, current[b]));
            if ok {
                rec(slots, x, by_slot, current, i + 1, found);
            }
        }
        current[i] = usize::MAX;
    }
    rec(&slots, x, &by_slot, &mut current, 0, &mut found);
    found.sort_by_key(|fam| {
        let mut v: Vec<(usize, MorId, usize)> =
            fam.iter().map(|(&(c, g), &val)| (c, g, val)).collect();
        v.sort_unstable();
        v
    });
    found
}
