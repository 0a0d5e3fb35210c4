//! Game-semantics engine: arenas, justified sequences and plays, game
//! settings with machine-checked axioms, strategies with three composition
//! routes, innocence machinery, and the Blass non-example.

pub mod arena;
pub mod constraints;
pub mod plays;
