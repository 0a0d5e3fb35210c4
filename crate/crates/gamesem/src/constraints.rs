//! The four play predicates: P-visibility, O-visibility, well-bracketing
//! and well-threadedness. Each is a per-position condition, so all four are
//! prefix-closed by construction.

use crate::arena::{Polarity, Qa};
use crate::plays::{thread_root, view_positions, ListArena, Seq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintKind {
    PVisible,
    OVisible,
    WellBracketed,
    WellThreaded,
}

impl ConstraintKind {
    pub const ALL: [ConstraintKind; 4] = [
        ConstraintKind::PVisible,
        ConstraintKind::OVisible,
        ConstraintKind::WellBracketed,
        ConstraintKind::WellThreaded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstraintKind::PVisible => "p-vis",
            ConstraintKind::OVisible => "o-vis",
            ConstraintKind::WellBracketed => "wb",
            ConstraintKind::WellThreaded => "wt",
        }
    }

    pub fn parse(s: &str) -> Option<ConstraintKind> {
        match s {
            "p-vis" => Some(ConstraintKind::PVisible),
            "o-vis" => Some(ConstraintKind::OVisible),
            "wb" => Some(ConstraintKind::WellBracketed),
            "wt" => Some(ConstraintKind::WellThreaded),
            _ => None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConstraintError {
    #[error("well-bracketing needs question/answer labels; move {0} has none")]
    MissingQa(String),
}

/// Positions of the O-view of the prefix ending at `upto`: the dual
/// recursion to the P-view, with initial moves retained.
pub fn oview_positions(list: &ListArena, s: &Seq, upto: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = upto;
    loop {
        if cur == 0 {
            break;
        }
        out.push(cur);
        let mv = s.mv(cur);
        match list.polarity(mv) {
            Polarity::O => {
                if cur == 1 {
                    break;
                }
                cur -= 1;
            }
            Polarity::P => {
                let j = s.just(cur);
                if j == 0 {
                    break;
                }
                cur = j;
            }
        }
    }
    out.reverse();
    out
}

/// Does the play (or alternating prefix) satisfy the predicate?
pub fn satisfies(
    kind: ConstraintKind,
    list: &ListArena,
    s: &Seq,
) -> Result<bool, ConstraintError> {
    match kind {
        ConstraintKind::PVisible => Ok(p_visible(list, s)),
        ConstraintKind::OVisible => Ok(o_visible(list, s)),
        ConstraintKind::WellBracketed => well_bracketed(list, s),
        ConstraintKind::WellThreaded => Ok(well_threaded(list, s)),
    }
}

/// Every P-move's justifier occurs in the P-view at that point.
pub fn p_visible(list: &ListArena, s: &Seq) -> bool {
    (1..=s.len()).all(|pos| {
        if list.polarity(s.mv(pos)) != Polarity::P {
            return true;
        }
        let j = s.just(pos);
        j == 0 || view_positions(list, s, pos - 1).contains(&j)
    })
}

/// Every non-initial O-move's justifier occurs in the O-view at that point.
pub fn o_visible(list: &ListArena, s: &Seq) -> bool {
    (1..=s.len()).all(|pos| {
        if list.polarity(s.mv(pos)) != Polarity::O {
            return true;
        }
        let j = s.just(pos);
        j == 0 || oview_positions(list, s, pos - 1).contains(&j)
    })
}

/// Every answer is justified by the most recent unanswered question.
pub fn well_bracketed(list: &ListArena, s: &Seq) -> Result<bool, ConstraintError> {
    let mut pending: Vec<usize> = Vec::new();
    for pos in 1..=s.len() {
        let mv = s.mv(pos);
        let qa = list
            .qa(mv)
            .ok_or_else(|| ConstraintError::MissingQa(list.move_name(mv).to_string()))?;
        match qa {
            Qa::Q => pending.push(pos),
            Qa::A => {
                let j = s.just(pos);
                match pending.last() {
                    Some(&top) if top == j => {
                        pending.pop();
                    }
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// Every P-move is hereditarily justified by the same initial move as the
/// immediately preceding O-move.
pub fn well_threaded(list: &ListArena, s: &Seq) -> bool {
    (1..=s.len()).all(|pos| {
        if list.polarity(s.mv(pos)) != Polarity::P || pos == 1 {
            return true;
        }
        thread_root(s, pos) == thread_root(s, pos - 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{arena_bool, arena_bool_to_o, arena_o};
    use crate::plays::{enumerate_layer, is_layer_object, pview, ListArena};
    use std::sync::Arc;

    fn l(arenas: Vec<crate::arena::Arena>) -> ListArena {
        ListArena::new(arenas.into_iter().map(Arc::new).collect())
    }

    #[test]
    fn epsilon_satisfies_all() {
        let list = l(vec![arena_bool(), arena_bool()]);
        for kind in ConstraintKind::ALL {
            assert!(satisfies(kind, &list, &Seq::empty()).unwrap());
        }
    }

    #[test]
    fn every_view_is_p_visible() {
        let list = l(vec![arena_bool(), arena_bool_to_o()]);
        let (plays, _) = enumerate_layer(&list, 8);
        for p in &plays {
            if p.is_empty() {
                continue;
            }
            if let Ok(v) = pview(&list, p, p.len()) {
                if v == *p {
                    assert!(p_visible(&list, p), "{p:?}");
                }
            }
        }
    }

    #[test]
    fn non_p_visible_play_found_by_search() {
        // search over iterated-arrow pairs for a P-move pointing outside its view
        let list = l(vec![arena_bool_to_o(), arena_o()]);
        let (plays, _) = enumerate_layer(&list, 6);
        let witness = plays.iter().find(|p| !p_visible(&list, p));
        assert!(witness.is_some(), "expected a non-P-visible play at bound 6");
        let w = witness.unwrap();
        // and pview errors exactly on such plays when the dangling pointer is
        // on a kept P-move
        assert!(!p_visible(&list, w));
    }

    #[test]
    fn prefix_closure_exhaustive() {
        let lists = [
            l(vec![arena_bool(), arena_bool()]),
            l(vec![arena_bool_to_o(), arena_bool()]),
        ];
        for list in &lists {
            let (plays, _) = enumerate_layer(&list, 8);
            for p in &plays {
                for kind in ConstraintKind::ALL {
                    if satisfies(kind, list, p).unwrap() {
                        for len in (0..p.len()).step_by(2) {
                            let pref = p.prefix(len);
                            assert!(
                                satisfies(kind, list, &pref).unwrap(),
                                "{kind:?} not prefix-closed at {p:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn well_bracketing_example() {
        let list = l(vec![arena_bool(), arena_bool()]);
        // q_R q_L t_L f_R: questions q_R, q_L; answers t_L (to q_L), f_R (to q_R)
        let neg = Seq {
            moves: vec![(1, 0), (0, 0), (0, 1), (1, 2)],
            justs: vec![0, 1, 2, 1],
        };
        assert!(well_bracketed(&list, &neg).unwrap());
        // answering the outer question while the inner is pending is not wb
        let bad = Seq {
            moves: vec![(1, 0), (0, 0), (1, 1), (0, 1)],
            justs: vec![0, 1, 1, 2],
        };
        if is_layer_object(&list, &bad) {
            assert!(!well_bracketed(&list, &bad).unwrap());
        }
        assert!(!well_bracketed(&list, &bad).unwrap());
    }

    #[test]
    fn well_threadedness_example() {
        let list = l(vec![arena_o(), arena_o()]);
        // r_R r_L r_R' r_L'@1: the second P-move answers the first thread
        let cross = Seq {
            moves: vec![(1, 0), (0, 0), (1, 0), (0, 0)],
            justs: vec![0, 1, 0, 1],
        };
        assert!(!well_threaded(&list, &cross));
        let straight = Seq {
            moves: vec![(1, 0), (0, 0), (1, 0), (0, 0)],
            justs: vec![0, 1, 0, 3],
        };
        assert!(well_threaded(&list, &straight));
    }

    #[test]
    fn o_visibility_differs_from_p_visibility() {
        let list = l(vec![arena_bool_to_o(), arena_bool_to_o()]);
        let (plays, _) = enumerate_layer(&list, 8);
        let mut diff = false;
        for p in &plays {
            if p_visible(&list, p) != o_visible(&list, p) {
                diff = true;
                break;
            }
        }
        assert!(diff, "expected the two visibility predicates to differ");
    }
}
