//! Explicit finite categories with composition tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Object index into a [`FinCategory`].
pub type ObjId = usize;
/// Morphism index into a [`FinCategory`]. Globally unique within its category.
pub type MorId = usize;

/// A finite category given by explicit object/morphism tables.
///
/// Objects and morphisms are dense integer ids so every checker can be a
/// plain loop. The composition table is defined exactly on composable pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub object_names: Vec<String>,
    /// Per morphism: (source, target, name).
    pub mors: Vec<(ObjId, ObjId, String)>,
    /// Identity morphism per object.
    pub ids: Vec<MorId>,
    /// comp[(g, f)] = g ∘ f, for f: a → b, g: b → c.
    pub comp: HashMap<(MorId, MorId), MorId>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCategory({} objects, {} morphisms)",
            self.object_names.len(),
            self.mors.len()
        )
    }
}

impl FinCategory {
    pub fn n_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn n_mors(&self) -> usize {
        self.mors.len()
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.mors[m].0
    }

    pub fn dst(&self, m: MorId) -> ObjId {
        self.mors[m].1
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        0..self.n_objects()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        0..self.n_mors()
    }

    /// g ∘ f. Panics on non-composable pairs; use [`FinCategory::try_compose`]
    /// where the table might be incomplete.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        self.comp[&(g, f)]
    }

    pub fn try_compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp.get(&(g, f)).copied()
    }

    pub fn id(&self, o: ObjId) -> MorId {
        self.ids[o]
    }

    /// All morphisms a → b, in id order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        self.morphisms()
            .filter(|&m| self.src(m) == a && self.dst(m) == b)
            .collect()
    }

    pub fn mor_name(&self, m: MorId) -> &str {
        &self.mors[m].2
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.object_names[o]
    }
}

/// One violated law found by [`validate_category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryViolation {
    BadIdentity { object: ObjId },
    IdentityNotNeutral { mor: MorId },
    CompNotDefined { g: MorId, f: MorId },
    CompDefinedOnNonComposable { g: MorId, f: MorId },
    BadCompEndpoints { g: MorId, f: MorId },
    NotAssociative { h: MorId, g: MorId, f: MorId },
}

/// Checks every FinCategory invariant exhaustively and reports each failure.
pub fn validate_category(c: &FinCategory) -> Vec<CategoryViolation> {
    let mut report = Vec::new();
    if c.ids.len() != c.n_objects() {
        report.push(CategoryViolation::BadIdentity {
            object: c.ids.len().min(c.n_objects()),
        });
        return report;
    }
    for o in c.objects() {
        let i = c.ids[o];
        if i >= c.n_mors() || c.src(i) != o || c.dst(i) != o {
            report.push(CategoryViolation::BadIdentity { object: o });
        }
    }
    if !report.is_empty() {
        return report;
    }
    // comp defined exactly on composable pairs, with correct endpoints
    for g in c.morphisms() {
        for f in c.morphisms() {
            let composable = c.dst(f) == c.src(g);
            match c.try_compose(g, f) {
                None if composable => report.push(CategoryViolation::CompNotDefined { g, f }),
                Some(_) if !composable => {
                    report.push(CategoryViolation::CompDefinedOnNonComposable { g, f })
                }
                Some(gf) => {
                    if c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g) {
                        report.push(CategoryViolation::BadCompEndpoints { g, f });
                    }
                }
                None => {}
            }
        }
    }
    if !report.is_empty() {
        return report;
    }
    for m in c.morphisms() {
        if c.compose(m, c.id(c.src(m))) != m || c.compose(c.id(c.dst(m)), m) != m {
            report.push(CategoryViolation::IdentityNotNeutral { mor: m });
        }
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            if c.dst(f) != c.src(g) {
                continue;
            }
            for h in c.morphisms() {
                if c.dst(g) != c.src(h) {
                    continue;
                }
                let left = c.compose(h, c.compose(g, f));
                let right = c.compose(c.compose(h, g), f);
                if left != right {
                    report.push(CategoryViolation::NotAssociative { h, g, f });
                }
            }
        }
    }
    report
}

/// Incremental builder used by the category constructions.
#[derive(Default)]
pub struct CategoryBuilder {
    object_names: Vec<String>,
    mors: Vec<(ObjId, ObjId, String)>,
    ids: Vec<Option<MorId>>,
    comp: HashMap<(MorId, MorId), MorId>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> ObjId {
        self.object_names.push(name.into());
        self.ids.push(None);
        self.object_names.len() - 1
    }

    pub fn add_object_with_id(&mut self, name: impl Into<String>) -> ObjId {
        let name = name.into();
        let o = self.add_object(name.clone());
        let m = self.add_mor(o, o, format!("id_{name}"));
        self.ids[o] = Some(m);
        o
    }

    pub fn add_mor(&mut self, src: ObjId, dst: ObjId, name: impl Into<String>) -> MorId {
        self.mors.push((src, dst, name.into()));
        self.mors.len() - 1
    }

    pub fn set_id(&mut self, o: ObjId, m: MorId) {
        self.ids[o] = Some(m);
    }

    pub fn set_comp(&mut self, g: MorId, f: MorId, gf: MorId) {
        self.comp.insert((g, f), gf);
    }

    pub fn n_mors(&self) -> usize {
        self.mors.len()
    }

    /// Completes the composition table with identity laws and returns the
    /// category. Remaining composable pairs must already be set.
    pub fn build(mut self) -> FinCategory {
        let ids: Vec<MorId> = self.ids.iter().map(|i| i.expect("identity set")).collect();
        for (m, &(s, d, _)) in self.mors.iter().enumerate() {
            self.comp.insert((m, ids[s]), m);
            self.comp.insert((ids[d], m), m);
        }
        FinCategory {
            object_names: self.object_names,
            mors: self.mors,
            ids,
            comp: self.comp,
        }
    }
}

/// Builds a poset category from an explicit reflexive-transitive `leq`
/// relation. At most one morphism per ordered pair.
pub fn poset_category(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let n = names.len();
    let mut b = CategoryBuilder::new();
    for name in &names {
        b.add_object(name.clone());
    }
    let mut mor_of = HashMap::new();
    for a in 0..n {
        for c in 0..n {
            if leq(a, c) {
                let m = b.add_mor(a, c, format!("{}<={}", names[a], names[c]));
                mor_of.insert((a, c), m);
                if a == c {
                    b.set_id(a, m);
                }
            }
        }
    }
    for (&(a, c), &f) in &mor_of {
        for (&(c2, d), &g) in &mor_of {
            if c == c2 {
                b.set_comp(g, f, mor_of[&(a, d)]);
            }
        }
    }
    b.build()
}

/// The n-element linear order as a category.
pub fn chain(n: usize) -> FinCategory {
    poset_category((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b)
}

/// The discrete category on n objects.
pub fn discrete(n: usize) -> FinCategory {
    poset_category((0..n).map(|i| i.to_string()).collect(), |a, b| a == b)
}

/// The terminal category.
pub fn terminal() -> FinCategory {
    chain(1)
}

/// The empty category.
pub fn empty() -> FinCategory {
    poset_category(Vec::new(), |_, _| false)
}

/// Two parallel arrows a ⇉ b (plus identities).
pub fn parallel_pair() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let a = b.add_object_with_id("a");
    let c = b.add_object_with_id("b");
    b.add_mor(a, c, "f");
    b.add_mor(a, c, "g");
    b.build()
}

/// The one-object group Z/2 as a category.
pub fn z2_group() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let o = b.add_object_with_id("*");
    let g = b.add_mor(o, o, "g");
    let id = b.mors[0].2.clone();
    let _ = id;
    b.set_comp(g, g, 0);
    b.build()
}

pub type CatRef = Arc<FinCategory>;
