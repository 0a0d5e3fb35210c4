//! Sequence transformations: projections (with pointer prolongation),
//! insertions (copycat duplication), cartesian liftings, and zipping.

use super::enumerate::is_layer_object;
use super::{ListArena, Mv, Seq};
use crate::arena::Polarity;

/// Deletes component k, prolongating justifier chains through deleted moves
/// (a → b → c becomes a → c).
pub fn project(_list: &ListArena, s: &Seq, k: usize) -> Seq {
    let mut new_pos = vec![0usize; s.len() + 1];
    let mut out = Seq::empty();
    for pos in 1..=s.len() {
        let (c, m) = s.mv(pos);
        if c == k {
            continue;
        }
        let mut j = s.just(pos);
        while j != 0 && s.mv(j).0 == k {
            j = s.just(j);
        }
        let nc = if c > k { c - 1 } else { c };
        out.push((nc, m), new_pos[j]);
        new_pos[pos] = out.len();
    }
    out
}

/// Duplicates component k: every move of component k becomes an adjacent
/// pair of copies, the copy with O polarity (in the standalone arena) first.
/// Within-component pointers are duplicated per copy; roots of the first
/// copy are justified by their own twin in the second copy.
pub fn iota(list: &ListArena, s: &Seq, k: usize) -> Seq {
    let n = list.arity();
    let mut out = Seq::empty();
    // positions of the emitted images of each source position:
    // single[pos] for moves outside k; (copy1[pos], copy2[pos]) inside k
    let mut single = vec![0usize; s.len() + 1];
    let mut copy1 = vec![0usize; s.len() + 1];
    let mut copy2 = vec![0usize; s.len() + 1];
    for pos in 1..=s.len() {
        let (c, m) = s.mv(pos);
        let j = s.just(pos);
        if c != k {
            let nc = if c > k { c + 1 } else { c };
            let nj = if j == 0 {
                0
            } else {
                let (cj, _) = s.mv(j);
                if cj == k {
                    // a root of A(k-1) pointing into component k: retarget to
                    // the first copy
                    copy1[j]
                } else {
                    single[j]
                }
            };
            out.push((nc, m), nj);
            single[pos] = out.len();
        } else {
            // justifier of the second copy ("as in p")
            let j2 = if j == 0 {
                0
            } else {
                let (cj, _) = s.mv(j);
                if cj == k {
                    copy2[j]
                } else {
                    single[j]
                }
            };
            let is_root = list.arena(k).is_root(m);
            let o_first = list.arena(k).polarity(m) == Some(Polarity::O);
            if o_first {
                // second copy (component k+1) first
                out.push((k + 1, m), j2);
                copy2[pos] = out.len();
                let j1 = if is_root { copy2[pos] } else { copy1[j] };
                out.push((k, m), j1);
                copy1[pos] = out.len();
            } else {
                // first copy (component k) first; non-roots only, since roots
                // are O-moves in their arena
                debug_assert!(!is_root);
                out.push((k, m), copy1[j]);
                copy1[pos] = out.len();
                out.push((k + 1, m), j2);
                copy2[pos] = out.len();
            }
        }
    }
    let _ = n;
    out
}

/// ι₀ on a unary justified sequence: the copycat play on (A, A).
pub fn insert_copycat(list: &ListArena, s: &Seq) -> Seq {
    assert_eq!(list.arity(), 1);
    iota(list, s, 0)
}

#[derive(Debug, thiserror::Error)]
pub enum LiftError {
    #[error("the given play is not a prefix of the projection")]
    NotAPrefix,
    #[error("no qualifying prefix found")]
    NoLift,
}

/// The cartesian lifting: the shortest prefix of u that is an object of its
/// layer and projects (deleting component k) onto p.
pub fn restrict_interaction(
    list: &ListArena,
    u: &Seq,
    p: &Seq,
    k: usize,
) -> Result<Seq, LiftError> {
    if !p.is_prefix_of(&project(list, u, k)) {
        return Err(LiftError::NotAPrefix);
    }
    for len in 0..=u.len() {
        let pref = u.prefix(len);
        if is_layer_object(list, &pref) && project(list, &pref, k) == *p {
            return Ok(pref);
        }
    }
    Err(LiftError::NoLift)
}

/// Which zipping square a quaternary merge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZipSide {
    /// x ∈ P(A,B,D), y ∈ P(B,C,D), agreeing on P(B,D).
    Left,
    /// x ∈ P(A,C,D), y ∈ P(A,B,C), agreeing on P(A,C).
    Right,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ZipError {
    #[error("the shared projections of the two inputs disagree")]
    SharedMismatch,
    #[error("no valid merge exists")]
    NoMerge,
    #[error("merge is not unique ({0} candidates)")]
    NotUnique(usize),
}

/// Reconstructs the unique quaternary interaction sequence projecting to the
/// two given ternary ones. `quaternary` is the four-arena list.
pub fn zip4(quaternary: &ListArena, x: &Seq, y: &Seq, side: ZipSide) -> Result<Seq, ZipError> {
    assert_eq!(quaternary.arity(), 4);
    // component indices each input covers, in quaternary numbering
    let (x_comps, y_comps) = match side {
        ZipSide::Left => ([0usize, 1, 3], [1usize, 2, 3]),
        ZipSide::Right => ([0usize, 2, 3], [0usize, 1, 2]),
    };
    let x_list = match side {
        ZipSide::Left => quaternary.delete(2),
        ZipSide::Right => quaternary.delete(1),
    };
    let y_list = match side {
        ZipSide::Left => quaternary.delete(0),
        ZipSide::Right => quaternary.delete(3),
    };
    // shared projection must agree
    let (x_shared, y_shared) = match side {
        ZipSide::Left => (project(&x_list, x, 0), project(&y_list, y, 1)),
        ZipSide::Right => (project(&x_list, x, 2), project(&y_list, y, 1)),
    };
    if x_shared != y_shared {
        return Err(ZipError::SharedMismatch);
    }
    let shared: Vec<usize> = match side {
        ZipSide::Left => vec![1, 3],
        ZipSide::Right => vec![0, 2],
    };
    // interleave: walk both sequences, synchronising on shared-component moves
    let mut candidates = Vec::new();
    let mut w = Seq::empty();
    let mut x_map = vec![0usize; x.len() + 1];
    let mut y_map = vec![0usize; y.len() + 1];
    merge(
        quaternary,
        x,
        y,
        &x_comps,
        &y_comps,
        &shared,
        side,
        1,
        1,
        &mut w,
        &mut x_map,
        &mut y_map,
        &mut candidates,
    );
    match candidates.len() {
        0 => Err(ZipError::NoMerge),
        1 => Ok(candidates.pop().unwrap()),
        n => Err(ZipError::NotUnique(n)),
    }
}

#[allow(clippy::too_many_arguments)]
fn merge(
    quaternary: &ListArena,
    x: &Seq,
    y: &Seq,
    x_comps: &[usize; 3],
    y_comps: &[usize; 3],
    shared: &[usize],
    side: ZipSide,
    xi: usize,
    yi: usize,
    w: &mut Seq,
    x_map: &mut Vec<usize>,
    y_map: &mut Vec<usize>,
    candidates: &mut Vec<Seq>,
) {
    if candidates.len() > 1 {
        return; // already non-unique
    }
    if xi > x.len() && yi > y.len() {
        // the candidate must be an object and must actually project back
        // onto both inputs (pointer reconciliation included)
        let (kx, ky) = match side {
            ZipSide::Left => (2usize, 0usize),
            ZipSide::Right => (1usize, 3usize),
        };
        if is_layer_object(quaternary, w)
            && project(quaternary, w, kx) == *x
            && project(quaternary, w, ky) == *y
        {
            candidates.push(w.clone());
        }
        return;
    }
    // next move of x in quaternary numbering
    let x_next = (xi <= x.len()).then(|| {
        let (c, m) = x.mv(xi);
        (x_comps[c], m)
    });
    let y_next = (yi <= y.len()).then(|| {
        let (c, m) = y.mv(yi);
        (y_comps[c], m)
    });
    let both_shared = match (x_next, y_next) {
        (Some(a), Some(b)) => a == b && shared.contains(&a.0),
        _ => false,
    };
    if both_shared {
        // emit the common move once; justifier from the non-prolongated side
        let mv: Mv = x_next.unwrap();
        let j = shared_justifier(quaternary, x, y, xi, yi, x_map, y_map, side, mv);
        if let Some(j) = j {
            w.push(mv, j);
            x_map[xi] = w.len();
            y_map[yi] = w.len();
            merge(
                quaternary, x, y, x_comps, y_comps, shared, side, xi + 1, yi + 1, w, x_map,
                y_map, candidates,
            );
            w.moves.pop();
            w.justs.pop();
            x_map[xi] = 0;
            y_map[yi] = 0;
        }
        return;
    }
    // x may advance on a move private to x
    if let Some(mv) = x_next {
        if !shared.contains(&mv.0) {
            let j0 = x.just(xi);
            let j = if j0 == 0 { Some(0) } else { private_just(x_map, j0) };
            if let Some(j) = j {
                if justifier_ok(quaternary, w, mv, j) {
                    w.push(mv, j);
                    x_map[xi] = w.len();
                    merge(
                        quaternary, x, y, x_comps, y_comps, shared, side, xi + 1, yi, w,
                        x_map, y_map, candidates,
                    );
                    w.moves.pop();
                    w.justs.pop();
                    x_map[xi] = 0;
                }
            }
        }
    }
    if let Some(mv) = y_next {
        if !shared.contains(&mv.0) {
            let j0 = y.just(yi);
            let j = if j0 == 0 { Some(0) } else { private_just(y_map, j0) };
            if let Some(j) = j {
                if justifier_ok(quaternary, w, mv, j) {
                    w.push(mv, j);
                    y_map[yi] = w.len();
                    merge(
                        quaternary, x, y, x_comps, y_comps, shared, side, xi, yi + 1, w,
                        x_map, y_map, candidates,
                    );
                    w.moves.pop();
                    w.justs.pop();
                    y_map[yi] = 0;
                }
            }
        }
    }
}

fn private_just(map: &[usize], j: usize) -> Option<usize> {
    let w_pos = map[j];
    (w_pos != 0).then_some(w_pos)
}

fn justifier_ok(quaternary: &ListArena, w: &Seq, mv: Mv, j: usize) -> bool {
    if j == 0 {
        quaternary.is_list_root(mv)
    } else {
        j <= w.len() && quaternary.enables(mv, w.mv(j))
    }
}

/// Justifier of a shared move: taken from whichever input sees the pointer
/// without prolongation, per the quaternary enabling structure.
#[allow(clippy::too_many_arguments)]
fn shared_justifier(
    quaternary: &ListArena,
    x: &Seq,
    y: &Seq,
    xi: usize,
    yi: usize,
    x_map: &[usize],
    y_map: &[usize],
    side: ZipSide,
    mv: Mv,
) -> Option<usize> {
    // For Left (shared B, D): B-moves may point into C (deleted in x), so use
    // y; D-moves are rightmost, pointers agree, use x. For Right (shared A,
    // C): A-moves may point into B (deleted in x), use y; C-moves may point
    // into D (deleted in y), use x.
    let (from_x, seq, idx, map): (bool, &Seq, usize, &[usize]) = match (side, mv.0) {
        (ZipSide::Left, 1) => (false, y, yi, y_map),
        (ZipSide::Left, 3) => (true, x, xi, x_map),
        (ZipSide::Right, 0) => (false, y, yi, y_map),
        (ZipSide::Right, 2) => (true, x, xi, x_map),
        _ => unreachable!("not a shared component"),
    };
    let _ = (from_x, quaternary);
    let j = seq.just(idx);
    if j == 0 {
        Some(0)
    } else {
        private_just(map, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{arena_bool, arena_o};
    use crate::plays::enumerate::enumerate_layer;
    use crate::plays::validate_jseq;
    use std::sync::Arc;

    fn l(arenas: Vec<crate::arena::Arena>) -> ListArena {
        ListArena::new(arenas.into_iter().map(Arc::new).collect())
    }

    /// The six-move interaction realizing double negation on (bool, bool, bool):
    /// q_C q_B q_A t_A f_B t_C.
    fn double_negation() -> (ListArena, Seq) {
        let list = l(vec![arena_bool(), arena_bool(), arena_bool()]);
        let mut u = Seq::empty();
        u.push((2, 0), 0); // q_C
        u.push((1, 0), 1); // q_B justified by q_C
        u.push((0, 0), 2); // q_A justified by q_B
        u.push((0, 1), 3); // t_A answers q_A
        u.push((1, 2), 2); // f_B answers q_B
        u.push((2, 1), 1); // t_C answers q_C
        (list, u)
    }

    #[test]
    fn double_negation_is_interaction() {
        let (list, u) = double_negation();
        assert!(validate_jseq(&list, &u).is_empty());
        assert!(is_layer_object(&list, &u));
    }

    #[test]
    fn projections_of_double_negation() {
        let (list, u) = double_negation();
        // δ₂ (delete C) = negation play q_B q_A t_A f_B on (A,B)
        let d2 = project(&list, &u, 2);
        assert_eq!(
            d2,
            Seq {
                moves: vec![(1, 0), (0, 0), (0, 1), (1, 2)],
                justs: vec![0, 1, 2, 1],
            }
        );
        // δ₀ (delete A) = negation play q_C q_B f_B t_C on (B,C)
        let d0 = project(&list, &u, 0);
        assert_eq!(
            d0,
            Seq {
                moves: vec![(1, 0), (0, 0), (0, 2), (1, 1)],
                justs: vec![0, 1, 2, 1],
            }
        );
        // δ₁ (delete B) = copycat play q_C q_A t_A t_C on (A,C)
        let d1 = project(&list, &u, 1);
        assert_eq!(
            d1,
            Seq {
                moves: vec![(1, 0), (0, 0), (0, 1), (1, 1)],
                justs: vec![0, 1, 2, 1],
            }
        );
    }

    #[test]
    fn project_of_empty_is_empty() {
        let (list, _) = double_negation();
        assert_eq!(project(&list, &Seq::empty(), 1), Seq::empty());
    }

    #[test]
    fn insert_copycat_example() {
        // q t on bool yields (q,R)(q,L)(t,L)(t,R) with pointers @0 @1 @2 @1
        let unary = l(vec![arena_bool()]);
        let mut s = Seq::empty();
        s.push((0, 0), 0);
        s.push((0, 1), 1);
        let cc = insert_copycat(&unary, &s);
        assert_eq!(
            cc,
            Seq {
                moves: vec![(1, 0), (0, 0), (0, 1), (1, 1)],
                justs: vec![0, 1, 2, 1],
            }
        );
    }

    #[test]
    fn insert_copycat_always_yields_plays() {
        let unary = l(vec![arena_bool()]);
        let pair = l(vec![arena_bool(), arena_bool()]);
        let (seqs, _) = enumerate_layer(&unary, 4);
        for s in seqs {
            let cc = insert_copycat(&unary, &s);
            assert!(validate_jseq(&pair, &cc).is_empty(), "{s:?}");
            assert!(is_layer_object(&pair, &cc), "{s:?}");
            // deleting either copy recovers s
            assert_eq!(project(&pair, &cc, 0), s);
            assert_eq!(project(&pair, &cc, 1), s);
        }
    }

    #[test]
    fn restrict_interaction_shortest_prefix() {
        let (list, u) = double_negation();
        let d1 = project(&list, &u, 1);
        // lifting the 2-move prefix of δ₁(u)
        let p = d1.prefix(2);
        let lifted = restrict_interaction(&list, &u, &p, 1).unwrap();
        // shortest interaction prefix projecting to q_C q_A is the 4-move one:
        // q_C q_B q_A ends in A... q_C q_B q_A projects to q_C q_A and ends in A.
        assert_eq!(lifted.len(), 3);
        assert_eq!(project(&list, &lifted, 1), p);
        // lifting ε gives ε
        let e = restrict_interaction(&list, &u, &Seq::empty(), 1).unwrap();
        assert_eq!(e, Seq::empty());
        // lifting the full projection trims nothing here (u ends in C)
        let full = restrict_interaction(&list, &u, &d1, 1).unwrap();
        assert_eq!(full, u);
    }

    #[test]
    fn zip4_empty() {
        let q = l(vec![arena_o(), arena_o(), arena_o(), arena_o()]);
        let w = zip4(&q, &Seq::empty(), &Seq::empty(), ZipSide::Left).unwrap();
        assert_eq!(w, Seq::empty());
    }

    #[test]
    fn zip4_left_reconstructs() {
        // build quaternary objects over (o,o,o,o) and check both squares
        let q = l(vec![arena_o(), arena_o(), arena_o(), arena_o()]);
        let (ws, _) = enumerate_layer(&q, 6);
        for w in &ws {
            let x = project(&q, w, 2); // delete C → (A,B,D)
            let y = project(&q, w, 0); // delete A → (B,C,D)
            let back = zip4(&q, &x, &y, ZipSide::Left).unwrap();
            assert_eq!(&back, w);
            let x2 = project(&q, w, 1); // delete B → (A,C,D)
            let y2 = project(&q, w, 3); // delete D → (A,B,C)
            let back2 = zip4(&q, &x2, &y2, ZipSide::Right).unwrap();
            assert_eq!(&back2, w);
        }
        assert!(ws.len() > 1);
    }

    #[test]
    fn zip4_mismatch_reported() {
        let q = l(vec![arena_o(), arena_o(), arena_o(), arena_o()]);
        let (ws, _) = enumerate_layer(&q, 4);
        let w = ws.iter().find(|w| w.len() == 4).unwrap();
        let x = project(&q, w, 2);
        let y_bad = {
            let mut y = project(&q, w, 0);
            y.moves.truncate(0);
            y.justs.truncate(0);
            y
        };
        // ε has shared projection ε which may mismatch x's shared projection
        let res = zip4(&q, &x, &y_bad, ZipSide::Left);
        assert!(matches!(res, Err(ZipError::SharedMismatch)) || res.is_err());
    }
}
