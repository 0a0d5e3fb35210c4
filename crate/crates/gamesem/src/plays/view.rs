//! P-views, view occurrences, and the copycat-play test.

use super::transform::{insert_copycat, iota};
use super::{ListArena, Seq};
use crate::arena::Polarity;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ViewError {
    #[error("dangling justifier at position {pos}: the play is not P-visible there")]
    DanglingJustifier { pos: usize },
}

/// Positions (1-based, ascending) of the P-view of the prefix ending at
/// `upto`. The standard recursion: P-moves extend the view of the shorter
/// prefix, initial O-moves restart it, non-initial O-moves jump to their
/// justifier.
pub fn view_positions(list: &ListArena, s: &Seq, upto: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = upto;
    loop {
        if cur == 0 {
            break;
        }
        out.push(cur);
        let mv = s.mv(cur);
        match list.polarity(mv) {
            Polarity::P => {
                if cur == 1 {
                    break;
                }
                cur -= 1;
            }
            Polarity::O => {
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

/// The P-view as a justified sequence, with justifiers re-indexed into the
/// view. Fails if a kept move's justifier was erased (non-P-visibility).
pub fn pview(list: &ListArena, s: &Seq, upto: usize) -> Result<Seq, ViewError> {
    let kept = view_positions(list, s, upto);
    let mut new_pos = vec![0usize; s.len() + 1];
    for (i, &p) in kept.iter().enumerate() {
        new_pos[p] = i + 1;
    }
    let mut out = Seq::empty();
    for &p in &kept {
        let j = s.just(p);
        let nj = if j == 0 {
            0
        } else {
            let mapped = new_pos[j];
            if mapped == 0 {
                return Err(ViewError::DanglingJustifier { pos: p });
            }
            mapped
        };
        out.push(s.mv(p), nj);
    }
    Ok(out)
}

/// A play is a view iff it equals its own P-view.
pub fn is_view(list: &ListArena, s: &Seq) -> bool {
    if s.is_empty() {
        return true;
    }
    matches!(pview(list, s, s.len()), Ok(v) if v == *s)
}

/// The views of a play: the P-views of its non-empty even prefixes, each
/// paired with the position of its last move.
pub fn views_of(list: &ListArena, p: &Seq) -> Result<Vec<(Seq, usize)>, ViewError> {
    let mut out = Vec::new();
    let mut end = 2;
    while end <= p.len() {
        out.push((pview(list, p, end)?, end));
        end += 2;
    }
    Ok(out)
}

/// Decides whether a play on (A, A) is the copycat insertion of some unary
/// justified sequence, by decoding the pairing and re-inserting.
pub fn is_copycat_play(pair: &ListArena, p: &Seq) -> bool {
    assert_eq!(pair.arity(), 2);
    if p.len() % 2 != 0 {
        return false;
    }
    // decode s from the duplicated pairs
    let unary = pair.delete(0);
    let mut s = Seq::empty();
    let mut pair_of = vec![0usize; p.len() + 1]; // w-position → s-position
    let n_pairs = p.len() / 2;
    for i in 0..n_pairs {
        let (a_pos, b_pos) = (2 * i + 1, 2 * i + 2);
        let (ca, ma) = p.mv(a_pos);
        let (cb, mb) = p.mv(b_pos);
        if ma != mb || ca == cb {
            return false;
        }
        // the component-1 copy carries the original pointer structure
        let orig_pos = if ca == 1 { a_pos } else { b_pos };
        let j = p.just(orig_pos);
        let sj = if j == 0 {
            0
        } else {
            let (cj, _) = p.mv(j);
            if cj != 1 {
                return false;
            }
            pair_of[j]
        };
        s.push((0, ma), sj);
        pair_of[a_pos] = i + 1;
        pair_of[b_pos] = i + 1;
    }
    insert_copycat(&unary, &s) == *p
}

/// Image test for a general insertion ι_k: decodes and re-inserts.
pub fn iota_preimage(list_plus: &ListArena, k: usize, p: &Seq) -> Option<Seq> {
    // undo: delete component k (the first copy), then shift components
    let s = super::transform::project(list_plus, p, k);
    let base = list_plus.delete(k);
    if iota(&base, &s, k) == *p {
        Some(s)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{arena_bool, arena_o};
    use crate::plays::enumerate::enumerate_layer;
    use std::sync::Arc;

    fn l(arenas: Vec<crate::arena::Arena>) -> ListArena {
        ListArena::new(arenas.into_iter().map(Arc::new).collect())
    }

    fn negation_play() -> (ListArena, Seq) {
        // q_R q_L t_L f_R on (bool, bool)
        let list = l(vec![arena_bool(), arena_bool()]);
        let p = Seq {
            moves: vec![(1, 0), (0, 0), (0, 1), (1, 2)],
            justs: vec![0, 1, 2, 1],
        };
        (list, p)
    }

    #[test]
    fn pview_of_negation_is_whole_play() {
        let (list, p) = negation_play();
        let v = pview(&list, &p, 4).unwrap();
        assert_eq!(v, p);
        assert!(is_view(&list, &p));
    }

    #[test]
    fn fresh_initial_move_restarts_view() {
        // q_R q_L then a fresh initial q_R': view of position 3 is just q_R'
        let list = l(vec![arena_bool(), arena_bool()]);
        let s = Seq {
            moves: vec![(1, 0), (0, 0), (1, 0)],
            justs: vec![0, 1, 0],
        };
        let v = pview(&list, &s, 3).unwrap();
        assert_eq!(
            v,
            Seq {
                moves: vec![(1, 0)],
                justs: vec![0],
            }
        );
    }

    #[test]
    fn play_equals_pview_iff_o_moves_point_at_predecessor() {
        let list = l(vec![arena_bool(), arena_bool()]);
        let (plays, _) = enumerate_layer(&list, 6);
        for p in &plays {
            if p.is_empty() {
                continue;
            }
            // a play is its own view iff every O-move after the first points
            // at the immediately preceding move (later initial moves restart
            // the view, so they break the equality too)
            let expected = (1..=p.len()).all(|pos| {
                if list.polarity(p.mv(pos)) == Polarity::O && pos > 1 {
                    p.just(pos) == pos - 1
                } else {
                    true
                }
            });
            if let Ok(v) = pview(&list, p, p.len()) {
                assert_eq!(v == *p, expected, "{p:?}");
            } else {
                assert!(!expected);
            }
        }
    }

    #[test]
    fn views_of_negation() {
        let (list, p) = negation_play();
        let vs = views_of(&list, &p).unwrap();
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0].0, p.prefix(2));
        assert_eq!(vs[1].0, p);
        assert!(views_of(&list, &Seq::empty()).unwrap().is_empty());
    }

    #[test]
    fn views_of_a_view_are_its_even_prefixes() {
        let list = l(vec![arena_bool(), arena_bool()]);
        let (plays, _) = enumerate_layer(&list, 6);
        for p in plays.iter().filter(|p| is_view(&list, p)) {
            if let Ok(vs) = views_of(&list, p) {
                for (i, (v, _)) in vs.iter().enumerate() {
                    assert_eq!(*v, p.prefix(2 * (i + 1)));
                }
            }
        }
    }

    #[test]
    fn copycat_play_detection() {
        let list = l(vec![arena_bool(), arena_bool()]);
        // (q,1)(q,0)(t,0)(t,1) is copycat
        let cc = Seq {
            moves: vec![(1, 0), (0, 0), (0, 1), (1, 1)],
            justs: vec![0, 1, 2, 1],
        };
        assert!(is_copycat_play(&list, &cc));
        // negation is not
        let (_, neg) = negation_play();
        assert!(!is_copycat_play(&list, &neg));
        // ε is
        assert!(is_copycat_play(&list, &Seq::empty()));
    }

    #[test]
    fn pview_idempotent_on_views() {
        let list = l(vec![arena_bool(), arena_o()]);
        let (plays, _) = enumerate_layer(&list, 8);
        for p in &plays {
            if let Ok(v) = pview(&list, p, p.len().max(1).min(p.len())) {
                if p.is_empty() {
                    continue;
                }
                let vv = pview(&list, &v, v.len()).unwrap();
                assert_eq!(vv, v, "pview of a pview is itself");
            }
        }
    }
}
