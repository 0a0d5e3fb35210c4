//! Seeded, reproducible generation of small categories and presheaves for
//! randomized law suites. All generation is driven by a caller-supplied
//! splittable integer stream so suites are deterministic per seed.

use crate::category::{poset_category, CatRef, FinCategory};
use crate::presheaf::{Elem, Presheaf};
use std::sync::Arc;

/// A tiny deterministic RNG (xorshift*), so the kernel crate does not need a
/// rand dependency. Streams are reproducible across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix {
            state: seed.wrapping_add(0x9E3779B97F4A7C15),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n.max(1) as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

/// A random poset category on up to `max_objects` objects: a random DAG's
/// reachability order.
pub fn random_poset(rng: &mut SplitMix, max_objects: usize) -> FinCategory {
    let n = 1 + rng.below(max_objects);
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.chance(2, 5) {
                leq[i][j] = true;
            }
        }
    }
    // transitive closure
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    poset_category((0..n).map(|i| format!("p{i}")).collect(), |a, b| leq[a][b])
}

/// A random presheaf as a coproduct of representables plus optionally the
/// terminal presheaf; always functorial by construction.
pub fn random_presheaf(rng: &mut SplitMix, base: &CatRef) -> Presheaf {
    if base.n_objects() == 0 {
        return Presheaf::empty(base.clone());
    }
    let mut parts: Vec<Presheaf> = Vec::new();
    let n_parts = rng.below(4);
    for _ in 0..n_parts {
        parts.push(Presheaf::representable(
            base.clone(),
            rng.below(base.n_objects()),
        ));
    }
    if rng.chance(1, 3) {
        parts.push(Presheaf::terminal(base.clone()));
    }
    if parts.is_empty() {
        return Presheaf::empty(base.clone());
    }
    let refs: Vec<&Presheaf> = parts.iter().collect();
    let mut x = Presheaf::coproduct(&refs);
    relabel(&mut x, rng);
    x
}

/// On forests (posets where every non-minimal object has a unique immediate
/// predecessor in the order) arbitrary presheaves can be generated freely.
/// Here: arbitrary set-valued presheaf on a prefix-forest given by a parent
/// map, with carriers and restriction maps drawn at random.
pub fn random_forest_presheaf(
    rng: &mut SplitMix,
    base: &CatRef,
    parent: &[Option<usize>],
    max_fibre: usize,
) -> Presheaf {
    let n = base.n_objects();
    let mut sizes: Vec<usize> = (0..n).map(|_| rng.below(max_fibre + 1)).collect();
    // restriction maps X(child) → X(parent) need a non-empty parent whenever
    // the child is non-empty; zero out below empty ancestors (root-down).
    for o in 0..n {
        let mut chain = Vec::new();
        let mut cur = Some(o);
        while let Some(c) = cur {
            chain.push(c);
            cur = parent[c];
        }
        for w in chain.windows(2).rev() {
            let (child, par) = (w[0], w[1]);
            if sizes[par] == 0 {
                sizes[child] = 0;
            }
        }
    }
    let mut cover: Vec<Vec<usize>> = vec![Vec::new(); n];
    for o in 0..n {
        if let Some(p) = parent[o] {
            cover[o] = (0..sizes[o]).map(|_| rng.below(sizes[p].max(1))).collect();
        }
    }
    // composite restriction along the unique path
    let restrict_to = |mut from: usize, to: usize, mut x: usize| -> usize {
        while from != to {
            x = cover[from][x];
            from = parent[from].expect("to must be an ancestor of from");
        }
        x
    };
    let action: Vec<Vec<usize>> = base
        .morphisms()
        .map(|m| {
            let (a, b) = (base.src(m), base.dst(m));
            (0..sizes[b]).map(|x| restrict_to(b, a, x)).collect()
        })
        .collect();
    Presheaf {
        base: base.clone(),
        carriers: sizes
            .iter()
            .map(|&s| (0..s).map(|i| Elem::Nat(i as u64)).collect())
            .collect(),
        action,
    }
}

fn relabel(x: &mut Presheaf, rng: &mut SplitMix) {
    let tag = rng.next_u64() % 1000;
    for c in &mut x.carriers {
        for e in c.iter_mut() {
            *e = Elem::pair(Elem::Nat(tag), e.clone());
        }
    }
}

/// The fixed corpus of small categories used by the exhaustive kernel suites.
pub fn corpus() -> Vec<CatRef> {
    use crate::category::*;
    vec![
        Arc::new(terminal()),
        Arc::new(chain(2)),
        Arc::new(chain(3)),
        Arc::new(discrete(2)),
        Arc::new(discrete(3)),
        Arc::new(parallel_pair()),
        Arc::new(z2_group()),
        Arc::new(poset_category(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            // commutative square poset: a ≤ b, a ≤ c, b ≤ d, c ≤ d
            |x, y| x == y || (x == 0 && y > 0) || (y == 3 && x < 3),
        )),
        Arc::new(poset_category(
            vec!["x".into(), "y".into(), "z".into()],
            // cospan x → z ← y
            |a, b| a == b || (a != 2 && b == 2),
        )),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;

    #[test]
    fn random_posets_validate() {
        let mut rng = SplitMix::new(7);
        for _ in 0..20 {
            let c = random_poset(&mut rng, 5);
            assert!(validate_category(&c).is_empty());
        }
    }

    #[test]
    fn random_presheaves_validate() {
        let mut rng = SplitMix::new(11);
        for base in corpus() {
            for _ in 0..5 {
                let x = random_presheaf(&mut rng, &base);
                assert!(x.is_valid());
            }
        }
    }

    #[test]
    fn determinism_per_seed() {
        let mk = || {
            let mut rng = SplitMix::new(42);
            let c: CatRef = Arc::new(random_poset(&mut rng, 5));
            let x = random_presheaf(&mut rng, &c);
            (c, x)
        };
        let (c1, x1) = mk();
        let (c2, x2) = mk();
        assert_eq!(*c1, *c2);
        assert_eq!(x1.carriers, x2.carriers);
        assert_eq!(x1.action, x2.action);
    }
}
