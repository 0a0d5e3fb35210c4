//! Exhaustive enumeration of play layers in canonical order.

use super::transform::project;
use super::{is_alternating, ListArena, Mv, Seq};

/// What a layer's objects are, by arity: all justified sequences (1),
/// alternating even-length plays (2), interaction sequences (3, 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerKind {
    JustSeqs,
    Plays,
    Interactions,
}

impl LayerKind {
    pub fn for_arity(n: usize) -> LayerKind {
        match n {
            1 => LayerKind::JustSeqs,
            2 => LayerKind::Plays,
            3 | 4 => LayerKind::Interactions,
            _ => panic!("arity out of range"),
        }
    }
}

/// First live component index, for the ending condition.
fn first_live(list: &ListArena) -> usize {
    (0..list.arity())
        .find(|&i| list.component_live(i))
        .unwrap_or(list.arity() - 1)
}

/// Is the sequence an object of its layer (assuming the prefix invariant
/// already holds)?
pub fn is_layer_object(list: &ListArena, s: &Seq) -> bool {
    if !super::validate_jseq(list, s).is_empty() {
        return false;
    }
    match LayerKind::for_arity(list.arity()) {
        LayerKind::JustSeqs => true,
        LayerKind::Plays => s.len() % 2 == 0 && is_alternating(list, s),
        LayerKind::Interactions => {
            if s.is_empty() {
                return true;
            }
            // ends in the leftmost or rightmost component
            let last = s.mv(s.len()).0;
            if last != first_live(list) && last != list.arity() - 1 {
                return false;
            }
            // all consecutive-pair projections are plays
            consecutive_projections_are_plays(list, s)
        }
    }
}

fn consecutive_projections_are_plays(list: &ListArena, s: &Seq) -> bool {
    for k in 0..list.arity() - 1 {
        let (pair, proj) = project_to_pair(list, s, k);
        if proj.len() % 2 != 0 || !is_alternating(&pair, &proj) {
            return false;
        }
    }
    true
}

/// Projection to the consecutive pair (A_k, A_{k+1}), by deleting all other
/// components.
pub fn project_to_pair(list: &ListArena, s: &Seq, k: usize) -> (ListArena, Seq) {
    let mut cur_list = list.clone();
    let mut cur = s.clone();
    // delete from the right so indices stay stable
    for i in (0..list.arity()).rev() {
        if i != k && i != k + 1 {
            cur = project(&cur_list, &cur, i);
            cur_list = cur_list.delete(i);
        }
    }
    (cur_list, cur)
}

/// Incremental enumeration state: the parity of each consecutive-pair
/// projection decides alternation in O(1) per extension.
struct EnumState {
    /// pair_len[k] = length so far of the projection to (A_k, A_{k+1})
    pair_len: Vec<usize>,
}

/// Polarity of a list-arena move inside the consecutive pair (k, k+1).
fn pair_polarity(list: &ListArena, k: usize, mv: Mv) -> crate::arena::Polarity {
    let d = list.arena(mv.0).depth(mv.1).expect("reachable move");
    let shift = if mv.0 == k { 1 } else { 0 };
    if (d + shift) % 2 == 0 {
        crate::arena::Polarity::O
    } else {
        crate::arena::Polarity::P
    }
}

/// Does appending `mv` preserve the prefix-stable invariant? For plays this
/// is global alternation; for interactions, alternation of each containing
/// consecutive-pair projection.
fn extension_ok(list: &ListArena, st: &EnumState, len: usize, mv: Mv) -> bool {
    use crate::arena::Polarity;
    match LayerKind::for_arity(list.arity()) {
        LayerKind::JustSeqs => true,
        LayerKind::Plays => {
            let expect = if len % 2 == 0 { Polarity::O } else { Polarity::P };
            list.polarity(mv) == expect
        }
        LayerKind::Interactions => {
            for k in touched_pairs(list, mv.0) {
                let expect = if st.pair_len[k] % 2 == 0 {
                    Polarity::O
                } else {
                    Polarity::P
                };
                if pair_polarity(list, k, mv) != expect {
                    return false;
                }
            }
            true
        }
    }
}

/// Enumerates all objects of the layer with at most `bound` moves, in
/// canonical (length-lexicographic) order. Returns `(objects, saturated)`
/// where `saturated` reports whether some prefix at the bound was still
/// extendable (so a larger bound could contain more objects).
pub fn enumerate_layer(list: &ListArena, bound: usize) -> (Vec<Seq>, bool) {
    let moves: Vec<Mv> = {
        let mut v: Vec<Mv> = list.moves().collect();
        v.sort_unstable();
        v
    };
    let mut out = Vec::new();
    let mut saturated = false;
    let mut s = Seq::empty();
    let mut st = EnumState {
        pair_len: vec![0; list.arity().saturating_sub(1)],
    };
    let fl = first_live(list);
    let n = list.arity();
    // quick object test using the incremental state
    let is_object = |_list: &ListArena, st: &EnumState, s: &Seq| -> bool {
        match LayerKind::for_arity(n) {
            LayerKind::JustSeqs => true,
            LayerKind::Plays => s.len() % 2 == 0,
            LayerKind::Interactions => {
                if s.is_empty() {
                    return true;
                }
                let last = s.mv(s.len()).0;
                (last == fl || last == n - 1) && st.pair_len.iter().all(|&l| l % 2 == 0)
            }
        }
    };
    fn rec(
        list: &ListArena,
        moves: &[Mv],
        bound: usize,
        s: &mut Seq,
        st: &mut EnumState,
        out: &mut Vec<Seq>,
        saturated: &mut bool,
        is_object: &dyn Fn(&ListArena, &EnumState, &Seq) -> bool,
    ) {
        if is_object(list, st, s) {
            out.push(s.clone());
        }
        let at_bound = s.len() >= bound;
        for &mv in moves {
            let ok_move = extension_ok(list, st, s.len(), mv);
            if !ok_move {
                continue;
            }
            let mut justs: Vec<usize> = Vec::new();
            if list.is_list_root(mv) {
                justs.push(0);
            }
            for pos in 1..=s.len() {
                if list.enables(mv, s.mv(pos)) {
                    justs.push(pos);
                }
            }
            if justs.is_empty() {
                continue;
            }
            if at_bound {
                *saturated = true;
                return;
            }
            for j in justs {
                s.push(mv, j);
                let touched = touched_pairs(list, mv.0);
                for &k in &touched {
                    st.pair_len[k] += 1;
                }
                rec(list, moves, bound, s, st, out, saturated, is_object);
                for &k in &touched {
                    st.pair_len[k] -= 1;
                }
                s.moves.pop();
                s.justs.pop();
            }
        }
    }
    rec(
        list, &moves, bound, &mut s, &mut st, &mut out, &mut saturated, &is_object,
    );
    out.sort_by(|a, b| (a.len(), &a.moves, &a.justs).cmp(&(b.len(), &b.moves, &b.justs)));
    (out, saturated)
}

fn touched_pairs(list: &ListArena, c: usize) -> Vec<usize> {
    let n = list.arity();
    let mut ks = Vec::with_capacity(2);
    if n >= 2 {
        if c >= 1 && c - 1 <= n - 2 {
            ks.push(c - 1);
        }
        if c <= n - 2 {
            ks.push(c);
        }
    }
    ks
}

/// Convenience: enumerate plays (or justified sequences / interactions by
/// arity) over a list of arenas.
pub fn enumerate_plays(arenas: Vec<crate::arena::ArenaRef>, bound: usize) -> Vec<Seq> {
    let list = ListArena::new(arenas);
    enumerate_layer(&list, bound).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{arena_bool, arena_o, ArenaRef};
    use std::sync::Arc;

    fn l(arenas: Vec<crate::arena::Arena>) -> ListArena {
        ListArena::new(arenas.into_iter().map(Arc::new).collect())
    }

    #[test]
    fn plays_on_o_o_bound_2() {
        let list = l(vec![arena_o(), arena_o()]);
        let (plays, _) = enumerate_layer(&list, 2);
        assert_eq!(plays.len(), 2); // ε and r_R r_L
        assert_eq!(plays[0], Seq::empty());
        assert_eq!(
            plays[1],
            Seq {
                moves: vec![(1, 0), (0, 0)],
                justs: vec![0, 1],
            }
        );
    }

    #[test]
    fn plays_on_bool_bool_bound_2() {
        let list = l(vec![arena_bool(), arena_bool()]);
        let (plays, _) = enumerate_layer(&list, 2);
        // ε, q_R q_L, q_R t_R, q_R f_R
        assert_eq!(plays.len(), 4);
    }

    #[test]
    fn bound_zero_gives_epsilon() {
        let list = l(vec![arena_bool()]);
        let (seqs, _) = enumerate_layer(&list, 0);
        assert_eq!(seqs, vec![Seq::empty()]);
    }

    #[test]
    fn unary_layer_has_all_justified_sequences() {
        let list = l(vec![arena_bool()]);
        let (seqs, _) = enumerate_layer(&list, 2);
        // ε; q; q t; q f; q q  (q is the only root; t/f justified by q)
        assert_eq!(seqs.len(), 5);
    }

    #[test]
    fn plays_on_o_o_bound_4() {
        // ε, rr, and the two 4-move plays with the second r_L pointing at
        // either r_R occurrence
        let list = l(vec![arena_o(), arena_o()]);
        let (plays, _) = enumerate_layer(&list, 4);
        assert_eq!(plays.len(), 4);
    }

    #[test]
    fn saturation_flag() {
        let list = l(vec![arena_o(), arena_o()]);
        let (_, sat2) = enumerate_layer(&list, 2);
        assert!(sat2); // rr extends to rrrr
        let arenas: Vec<ArenaRef> = vec![Arc::new(arena_o())];
        let (_, sat) = enumerate_layer(&ListArena::new(arenas), 50);
        assert!(sat); // unary o: r r r ... never stops extending
    }
}
