//! Textual rendering of justified sequences: one move per line, one column
//! per component, time flowing downwards, justifiers as "@k" suffixes.

use super::{ListArena, Seq};

pub fn render_seq(list: &ListArena, s: &Seq) -> String {
    let n = list.arity();
    // column widths from the moves actually present
    let mut widths = vec![1usize; n];
    for pos in 1..=s.len() {
        let (c, _) = s.mv(pos);
        let cell = cell_text(list, s, pos);
        widths[c] = widths[c].max(cell.len());
    }
    let mut out = String::new();
    for pos in 1..=s.len() {
        let (c, _) = s.mv(pos);
        let cell = cell_text(list, s, pos);
        let indent: usize = widths[..c].iter().map(|w| w + 2).sum();
        out.push_str(&" ".repeat(indent));
        out.push_str(&cell);
        out.push('\n');
    }
    out
}

fn cell_text(list: &ListArena, s: &Seq, pos: usize) -> String {
    format!("{} @{}", list.move_name(s.mv(pos)), s.just(pos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::arena_bool;
    use crate::plays::ListArena;
    use std::sync::Arc;

    #[test]
    fn negation_play_rendering_golden() {
        let list = ListArena::new(vec![Arc::new(arena_bool()), Arc::new(arena_bool())]);
        let p = Seq {
            moves: vec![(1, 0), (0, 0), (0, 1), (1, 2)],
            justs: vec![0, 1, 2, 1],
        };
        let expected = "      q @0\nq @1\nt @2\n      f @1\n";
        assert_eq!(render_seq(&list, &p), expected);
    }

    #[test]
    fn empty_renders_empty() {
        let list = ListArena::new(vec![Arc::new(arena_bool())]);
        assert_eq!(render_seq(&list, &Seq::empty()), "");
    }
}
