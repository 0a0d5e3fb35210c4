//! A finite-category kernel: explicit categories, functors, set-valued
//! presheaves, Kan extensions, discrete fibrations, exact squares and the
//! constructions needed to state and check categorical laws by brute force.
//!
//! Everything here is exhaustively checkable: all mappings are dense tables
//! over integer ids, all operations are pure, and all enumerations follow a
//! canonical deterministic order so results are reproducible.

pub mod boolean;
pub mod category;
pub mod construct;
pub mod fibration;
pub mod functor;
pub mod generate;
pub mod kan;
pub mod laxcolim;
pub mod presheaf;
pub mod square;

pub use category::{
    chain, discrete, empty, parallel_pair, poset_category, terminal, validate_category,
    CatRef, CategoryBuilder, FinCategory, MorId, ObjId,
};
pub use functor::{all_functors, same_category, FunctorData};
pub use kan::{lan, ran, restrict, UnionFind};
pub use presheaf::{find_iso, isomorphic, Elem, NatTrans, Presheaf, PresheafIso};

pub use boolean::{bool_lan, bool_ran, bool_ran_commutes, booleanise, is_boolean};
pub use fibration::{cartesian_lift, elements, is_discrete_fibration, sing, FibrationWitness};
pub use laxcolim::{cocomma_square, lax_colimit_span, LaxColimit};
pub use square::{
    check_distributive, comma_category, is_exact, local_pushforward_square, pullback_category,
    Square,
};
