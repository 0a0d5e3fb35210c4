//! Justified sequences, plays, interaction sequences and their operations:
//! projections, copycat insertion, cartesian liftings, zipping, P-views,
//! prefix posets and a textual rendering.

mod enumerate;
mod poset;
mod render;
mod transform;
mod view;

pub use enumerate::{enumerate_layer, enumerate_plays, is_layer_object, project_to_pair, LayerKind};
pub use poset::{prefix_category, prefix_poset, PosetError};
pub use render::render_seq;
pub use transform::{insert_copycat, iota, project, restrict_interaction, zip4, LiftError, ZipError, ZipSide};
pub use view::{is_copycat_play, is_view, iota_preimage, pview, view_positions, views_of, ViewError};

use crate::arena::{Arena, ArenaRef, Polarity, Qa};
use std::sync::Arc;

/// A list of 1–4 arenas with the iterated-arrow structure
/// (...(A0 → A1) → ...) → A(n-1) flattened to (component, move) pairs.
#[derive(Clone, Debug)]
pub struct ListArena {
    pub arenas: Vec<ArenaRef>,
    /// Components erased because some arena to their right is empty.
    erased_upto: Option<usize>,
}

pub type ListRef = Arc<ListArena>;

/// A move of the list arena.
pub type Mv = (usize, usize);

impl ListArena {
    pub fn new(arenas: Vec<ArenaRef>) -> ListArena {
        assert!((1..=4).contains(&arenas.len()));
        // arrow(X, empty) is empty, so an empty arena erases everything to
        // its left (and itself); arrow(empty, B) is just B.
        let mut erased_upto = None;
        for (i, a) in arenas.iter().enumerate() {
            if a.n_moves() == 0 {
                erased_upto = Some(i);
            }
        }
        ListArena {
            arenas,
            erased_upto,
        }
    }

    pub fn arity(&self) -> usize {
        self.arenas.len()
    }

    pub fn component_live(&self, i: usize) -> bool {
        match self.erased_upto {
            Some(e) => i > e,
            None => true,
        }
    }

    pub fn is_empty_arena(&self) -> bool {
        !self.component_live(self.arity() - 1)
    }

    pub fn moves(&self) -> impl Iterator<Item = Mv> + '_ {
        (0..self.arity())
            .filter(|&i| self.component_live(i))
            .flat_map(move |i| (0..self.arenas[i].n_moves()).map(move |m| (i, m)))
    }

    pub fn arena(&self, i: usize) -> &Arena {
        &self.arenas[i]
    }

    /// Roots of the whole list arena: the roots of the rightmost arena.
    pub fn is_list_root(&self, (i, m): Mv) -> bool {
        i == self.arity() - 1 && self.arenas[i].is_root(m) && self.component_live(i)
    }

    /// Enabling in the list arena: within-component edges, plus every root of
    /// A(k-1) justified by every root of A(k) for adjacent live components.
    pub fn enables(&self, child: Mv, parent: Mv) -> bool {
        let (ci, cm) = child;
        let (pi, pm) = parent;
        if !self.component_live(ci) || !self.component_live(pi) {
            return false;
        }
        if ci == pi {
            return self.arenas[ci].has_edge(cm, pm);
        }
        if pi == ci + 1 {
            return self.arenas[ci].is_root(cm)
                && self.arenas[pi].is_root(pm)
                && (ci..pi).all(|j| self.component_live(j));
        }
        false
    }

    /// Polarity in the list arena: parity of (depth within the component)
    /// plus the distance to the rightmost component.
    pub fn polarity(&self, (i, m): Mv) -> Polarity {
        let d = self.arenas[i].depth(m).expect("reachable move");
        let shift = self.arity() - 1 - i;
        if (d + shift) % 2 == 0 {
            Polarity::O
        } else {
            Polarity::P
        }
    }

    pub fn qa(&self, (i, m): Mv) -> Option<Qa> {
        self.arenas[i].qa[m]
    }

    pub fn move_name(&self, (i, m): Mv) -> &str {
        &self.arenas[i].move_names[m]
    }

    /// The sub-list with component k removed (arity must stay ≥ 1).
    pub fn delete(&self, k: usize) -> ListArena {
        let mut arenas = self.arenas.clone();
        arenas.remove(k);
        ListArena::new(arenas)
    }

    /// The list with component k duplicated.
    pub fn duplicate(&self, k: usize) -> ListArena {
        let mut arenas = self.arenas.clone();
        arenas.insert(k, self.arenas[k].clone());
        ListArena::new(arenas)
    }
}

/// A justified sequence: moves with justifier indices. Positions are
/// 1-based; justifier 0 marks an initial move.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Seq {
    pub moves: Vec<Mv>,
    pub justs: Vec<usize>,
}

impl Seq {
    pub fn empty() -> Seq {
        Seq::default()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Move at 1-based position.
    pub fn mv(&self, pos: usize) -> Mv {
        self.moves[pos - 1]
    }

    /// Justifier of the move at 1-based position.
    pub fn just(&self, pos: usize) -> usize {
        self.justs[pos - 1]
    }

    pub fn push(&mut self, mv: Mv, just: usize) {
        self.moves.push(mv);
        self.justs.push(just);
    }

    pub fn prefix(&self, len: usize) -> Seq {
        Seq {
            moves: self.moves[..len].to_vec(),
            justs: self.justs[..len].to_vec(),
        }
    }

    pub fn is_prefix_of(&self, other: &Seq) -> bool {
        self.len() <= other.len()
            && self.moves[..] == other.moves[..self.len()]
            && self.justs[..] == other.justs[..self.len()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqViolation {
    JustifierNotEarlier { pos: usize },
    InitialNotRoot { pos: usize },
    NoEnablingEdge { pos: usize },
    DeadMove { pos: usize },
}

/// Checks the justified-sequence clauses: justifiers strictly earlier,
/// initial moves are roots, non-initial moves point along enabling edges.
pub fn validate_jseq(list: &ListArena, s: &Seq) -> Vec<SeqViolation> {
    let mut report = Vec::new();
    for pos in 1..=s.len() {
        let mv = s.mv(pos);
        let j = s.just(pos);
        if !list.component_live(mv.0) || mv.1 >= list.arena(mv.0).n_moves() {
            report.push(SeqViolation::DeadMove { pos });
            continue;
        }
        if j >= pos {
            report.push(SeqViolation::JustifierNotEarlier { pos });
            continue;
        }
        if j == 0 {
            if !list.is_list_root(mv) {
                report.push(SeqViolation::InitialNotRoot { pos });
            }
        } else if !list.enables(mv, s.mv(j)) {
            report.push(SeqViolation::NoEnablingEdge { pos });
        }
    }
    report
}

/// O at odd positions, P at even positions, matching the arena polarity.
pub fn is_alternating(list: &ListArena, s: &Seq) -> bool {
    (1..=s.len()).all(|pos| {
        let expect = if pos % 2 == 1 { Polarity::O } else { Polarity::P };
        list.polarity(s.mv(pos)) == expect
    })
}

/// The hereditary root: follow justifiers to the initial move.
pub fn thread_root(s: &Seq, mut pos: usize) -> usize {
    while s.just(pos) != 0 {
        pos = s.just(pos);
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{arena_bool, arena_empty, arena_o};

    fn list(arenas: Vec<Arena>) -> ListArena {
        ListArena::new(arenas.into_iter().map(Arc::new).collect())
    }

    #[test]
    fn empty_sequence_validates() {
        let l = list(vec![arena_bool()]);
        assert!(validate_jseq(&l, &Seq::empty()).is_empty());
    }

    #[test]
    fn example_boolean_justified_sequence() {
        // q t q f with each move justified correctly (second q restarts)
        let l = list(vec![arena_bool()]);
        let mut s = Seq::empty();
        s.push((0, 0), 0); // q
        s.push((0, 1), 1); // t justified by q
        s.push((0, 0), 0); // q again
        s.push((0, 2), 3); // f justified by the second q
        assert!(validate_jseq(&l, &s).is_empty());
    }

    #[test]
    fn justifier_not_earlier_detected() {
        let l = list(vec![arena_bool()]);
        let s = Seq {
            moves: vec![(0, 0), (0, 1)],
            justs: vec![0, 3],
        };
        let report = validate_jseq(&l, &s);
        assert!(report
            .iter()
            .any(|v| matches!(v, SeqViolation::JustifierNotEarlier { pos: 2 })));
    }

    #[test]
    fn pair_list_polarities() {
        // (o, o): right root O, left root P
        let l = list(vec![arena_o(), arena_o()]);
        assert_eq!(l.polarity((1, 0)), Polarity::O);
        assert_eq!(l.polarity((0, 0)), Polarity::P);
        assert!(l.is_list_root((1, 0)));
        assert!(!l.is_list_root((0, 0)));
        assert!(l.enables((0, 0), (1, 0)));
    }

    #[test]
    fn empty_component_erases_left() {
        let l = list(vec![arena_bool(), arena_empty(), arena_o()]);
        assert!(!l.component_live(0));
        assert!(!l.component_live(1));
        assert!(l.component_live(2));
        assert_eq!(l.moves().count(), 1);
        let l2 = list(vec![arena_bool(), arena_empty()]);
        assert!(l2.is_empty_arena());
    }
}
