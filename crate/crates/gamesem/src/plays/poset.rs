//! Prefix posets of sequences as finite categories.

use super::Seq;
use fincat::category::{CatRef, CategoryBuilder, FinCategory};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum PosetError {
    #[error("play list is not prefix-closed: missing prefix of element {index}")]
    NotPrefixClosed { index: usize },
    #[error("duplicate sequence at index {index}")]
    Duplicate { index: usize },
}

/// The prefix poset on the given sequences as a category: objects in the
/// given order, one morphism q → p per prefix pair.
pub fn prefix_category(seqs: &[Seq]) -> FinCategory {
    let mut b = CategoryBuilder::new();
    for (i, s) in seqs.iter().enumerate() {
        b.add_object(format!("#{i}:{}", seq_label(s)));
    }
    let index: HashMap<&Seq, usize> = seqs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    // prefixes present in the object set, per object (ascending length,
    // ending with the object itself)
    let prefixes_of: Vec<Vec<usize>> = seqs
        .iter()
        .map(|p| {
            (0..=p.len())
                .filter_map(|len| index.get(&p.prefix(len)).copied())
                .collect()
        })
        .collect();
    let mut mor_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (j, pres) in prefixes_of.iter().enumerate() {
        for &i in pres {
            let m = b.add_mor(i, j, format!("{i}<={j}"));
            mor_of.insert((i, j), m);
            if i == j {
                b.set_id(i, m);
            }
        }
    }
    for (j, pres) in prefixes_of.iter().enumerate() {
        for &i in pres {
            // compose r ≤ i ≤ j for r a kept prefix of i
            for &r in &prefixes_of[i] {
                b.set_comp(mor_of[&(i, j)], mor_of[&(r, i)], mor_of[&(r, j)]);
            }
        }
    }
    b.build()
}

fn seq_label(s: &Seq) -> String {
    s.moves
        .iter()
        .zip(&s.justs)
        .map(|(&(c, m), &j)| format!("{c}.{m}@{j}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Prefix poset with a closure check: every prefix of a member that passes
/// `is_object` must itself be a member.
pub fn prefix_poset(
    seqs: &[Seq],
    is_object: impl Fn(&Seq) -> bool,
) -> Result<CatRef, PosetError> {
    let set: std::collections::HashSet<&Seq> = seqs.iter().collect();
    if set.len() != seqs.len() {
        let index = (0..seqs.len())
            .find(|&i| seqs[i + 1..].contains(&seqs[i]))
            .unwrap();
        return Err(PosetError::Duplicate { index });
    }
    for (index, s) in seqs.iter().enumerate() {
        for len in 0..s.len() {
            let pref = s.prefix(len);
            if is_object(&pref) && !set.contains(&pref) {
                return Err(PosetError::NotPrefixClosed { index });
            }
        }
    }
    Ok(Arc::new(prefix_category(seqs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{arena_bool, arena_o};
    use crate::plays::enumerate::enumerate_layer;
    use crate::plays::ListArena;
    use fincat::category::validate_category;
    use std::sync::Arc as A;

    #[test]
    fn single_epsilon_gives_terminal() {
        let c = prefix_category(&[Seq::empty()]);
        assert!(validate_category(&c).is_empty());
        assert_eq!(c.n_objects(), 1);
        assert_eq!(c.n_mors(), 1);
    }

    #[test]
    fn o_o_bound_2_is_two_chain() {
        let list = ListArena::new(vec![A::new(arena_o()), A::new(arena_o())]);
        let (plays, _) = enumerate_layer(&list, 2);
        let c = prefix_category(&plays);
        assert!(validate_category(&c).is_empty());
        assert_eq!(c.n_objects(), 2);
        assert_eq!(c.n_mors(), 3);
    }

    #[test]
    fn bool_bool_bound_2_is_root_with_three_covers() {
        let list = ListArena::new(vec![A::new(arena_bool()), A::new(arena_bool())]);
        let (plays, _) = enumerate_layer(&list, 2);
        let c = prefix_category(&plays);
        assert!(validate_category(&c).is_empty());
        assert_eq!(c.n_objects(), 4);
        // ε ≤ each of the three plays plus identities
        assert_eq!(c.n_mors(), 4 + 3);
    }

    #[test]
    fn closure_check_fires() {
        let list = ListArena::new(vec![A::new(arena_bool()), A::new(arena_bool())]);
        let (plays, _) = enumerate_layer(&list, 4);
        // drop ε: no longer prefix-closed
        let broken: Vec<Seq> = plays.iter().skip(1).cloned().collect();
        let res = prefix_poset(&broken, |s| s.len() % 2 == 0);
        assert!(res.is_err());
    }
}
