//! Arenas: simple finite DAGs of moves with roots, an enabling relation,
//! uniform path parity, and optional question/answer labels.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

/// Question/answer label for bracketing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Qa {
    Q,
    A,
}

/// Who plays a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    O,
    P,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::O => Polarity::P,
            Polarity::P => Polarity::O,
        }
    }
}

/// A directed acyclic graph of moves; an edge m → m' means m is justified by
/// m'. All paths from a move to a root must have equal parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arena {
    pub name: String,
    pub move_names: Vec<String>,
    /// enabling edges child → parent
    pub edges: Vec<(usize, usize)>,
    pub roots: Vec<usize>,
    pub qa: Vec<Option<Qa>>,
}

pub type ArenaRef = Arc<Arena>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArenaViolation {
    DuplicateEdge { child: usize, parent: usize },
    SelfLoop { mv: usize },
    Cyclic,
    RootHasOutgoingEdge { mv: usize },
    ParityMismatch { mv: usize, depths: (usize, usize) },
    UnreachableMove { mv: usize },
    EdgeOutOfRange { child: usize, parent: usize },
    RootOutOfRange { mv: usize },
}

impl Arena {
    pub fn new(name: impl Into<String>, move_names: Vec<String>) -> Arena {
        let n = move_names.len();
        Arena {
            name: name.into(),
            move_names,
            edges: Vec::new(),
            roots: Vec::new(),
            qa: vec![None; n],
        }
    }

    pub fn n_moves(&self) -> usize {
        self.move_names.len()
    }

    pub fn parents(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .filter(move |&&(c, _)| c == m)
            .map(|&(_, p)| p)
    }

    pub fn is_root(&self, m: usize) -> bool {
        self.roots.contains(&m)
    }

    pub fn has_edge(&self, child: usize, parent: usize) -> bool {
        self.edges.contains(&(child, parent))
    }

    /// Length of some path from m to a root; all agree mod 2 on valid arenas.
    pub fn depth(&self, m: usize) -> Option<usize> {
        let mut dist: HashMap<usize, usize> = self.roots.iter().map(|&r| (r, 0)).collect();
        let mut queue: Vec<usize> = self.roots.clone();
        while let Some(x) = queue.pop() {
            let d = dist[&x];
            for (c, p) in self.edges.iter().copied() {
                if p == x && !dist.contains_key(&c) {
                    dist.insert(c, d + 1);
                    queue.push(c);
                }
            }
        }
        dist.get(&m).copied()
    }

    /// O iff some (hence every) path to a root has even length.
    pub fn polarity(&self, m: usize) -> Option<Polarity> {
        self.depth(m).map(|d| {
            if d % 2 == 0 {
                Polarity::O
            } else {
                Polarity::P
            }
        })
    }

    /// Fills in the default question/answer labelling: roots Q, depth-1 moves
    /// A, deeper moves alternating Q/A by depth.
    pub fn with_default_qa(mut self) -> Arena {
        for m in 0..self.n_moves() {
            if self.qa[m].is_none() {
                if let Some(d) = self.depth(m) {
                    self.qa[m] = Some(if d % 2 == 0 { Qa::Q } else { Qa::A });
                }
            }
        }
        self
    }
}

/// Checks all arena invariants; the report is empty iff the arena is valid.
pub fn validate_arena(a: &Arena) -> Vec<ArenaViolation> {
    let n = a.n_moves();
    let mut report = Vec::new();
    for &(c, p) in &a.edges {
        if c >= n || p >= n {
            report.push(ArenaViolation::EdgeOutOfRange { child: c, parent: p });
        } else if c == p {
            report.push(ArenaViolation::SelfLoop { mv: c });
        }
    }
    for &r in &a.roots {
        if r >= n {
            report.push(ArenaViolation::RootOutOfRange { mv: r });
        }
    }
    if !report.is_empty() {
        return report;
    }
    let mut seen = std::collections::HashSet::new();
    for &(c, p) in &a.edges {
        if !seen.insert((c, p)) {
            report.push(ArenaViolation::DuplicateEdge { child: c, parent: p });
        }
    }
    // acyclicity: edges point child → parent; peel moves whose parents are done
    {
        let mut removed = vec![false; n];
        let mut done = 0usize;
        loop {
            let mut progressed = false;
            for m in 0..n {
                if !removed[m] && a.edges.iter().all(|&(c, p)| c != m || removed[p]) {
                    removed[m] = true;
                    done += 1;
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        if done != n {
            report.push(ArenaViolation::Cyclic);
            return report;
        }
    }
    for &r in &a.roots {
        if a.parents(r).next().is_some() {
            report.push(ArenaViolation::RootHasOutgoingEdge { mv: r });
        }
    }
    // parity: all paths from m to a root have equal parity
    let mut memo: Vec<Option<Vec<usize>>> = vec![None; n];
    fn all_depths(a: &Arena, m: usize, memo: &mut Vec<Option<Vec<usize>>>) -> Vec<usize> {
        if let Some(v) = &memo[m] {
            return v.clone();
        }
        let mut out = Vec::new();
        if a.is_root(m) {
            out.push(0);
        }
        for p in a.parents(m) {
            for d in all_depths(a, p, memo) {
                out.push(d + 1);
            }
        }
        out.sort_unstable();
        out.dedup();
        memo[m] = Some(out.clone());
        out
    }
    for m in 0..n {
        let ds = all_depths(a, m, &mut memo);
        if ds.is_empty() {
            report.push(ArenaViolation::UnreachableMove { mv: m });
            continue;
        }
        if let Some(&odd) = ds.iter().find(|&&d| d % 2 != ds[0] % 2) {
            report.push(ArenaViolation::ParityMismatch {
                mv: m,
                depths: (ds[0], odd),
            });
        }
    }
    report
}

/// The arrow arena A → B: disjoint union plus an edge from every root of A
/// to every root of B, with B's roots as the roots. Empty B gives the empty
/// arena.
pub fn arrow_arena(a: &Arena, b: &Arena) -> Arena {
    if b.n_moves() == 0 {
        return Arena::new(format!("({}->{})", a.name, b.name), Vec::new());
    }
    let mut names: Vec<String> = a.move_names.iter().map(|s| format!("L.{s}")).collect();
    names.extend(b.move_names.iter().map(|s| format!("R.{s}")));
    let off = a.n_moves();
    let mut out = Arena::new(format!("({}->{})", a.name, b.name), names);
    out.edges = a.edges.clone();
    out.edges
        .extend(b.edges.iter().map(|&(c, p)| (c + off, p + off)));
    for &ra in &a.roots {
        for &rb in &b.roots {
            out.edges.push((ra, rb + off));
        }
    }
    out.roots = b.roots.iter().map(|&r| r + off).collect();
    out.qa = a.qa.clone();
    out.qa.extend(b.qa.iter().copied());
    out
}

/// The single-move arena `o`.
pub fn arena_o() -> Arena {
    let mut a = Arena::new("o", vec!["r".into()]);
    a.roots = vec![0];
    a.with_default_qa()
}

/// The boolean arena: a question enabling two answers.
pub fn arena_bool() -> Arena {
    let mut a = Arena::new("bool", vec!["q".into(), "t".into(), "f".into()]);
    a.roots = vec![0];
    a.edges = vec![(1, 0), (2, 0)];
    a.with_default_qa()
}

/// The arena bool → o.
pub fn arena_bool_to_o() -> Arena {
    let mut a = arrow_arena(&arena_bool(), &arena_o());
    a.name = "bool_to_o".into();
    a.with_default_qa()
}

/// The empty arena.
pub fn arena_empty() -> Arena {
    Arena::new("empty", Vec::new())
}

/// Resolves a built-in arena by name.
pub fn builtin_arena(name: &str) -> Option<Arena> {
    match name {
        "o" => Some(arena_o()),
        "bool" => Some(arena_bool()),
        "bool_to_o" => Some(arena_bool_to_o()),
        "empty" => Some(arena_empty()),
        _ => None,
    }
}
