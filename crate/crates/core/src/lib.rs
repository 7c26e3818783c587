//! Exact enumeration of Young tableaux with walls and of tree-child networks.
//!
//! The tables in [`wall_tables`] are the fast path. Every other module
//! recomputes the same numbers another way: semi-closed sums
//! ([`closed_forms`]), generating functions ([`series_engine`]), brute-force
//! linear extensions ([`poset_lab`]) and network counts ([`tree_child`]).

pub mod closed_forms;
pub mod error;
pub mod exact_arith;
pub mod memo;
pub mod poset_lab;
pub mod series_engine;
pub mod tree_child;
pub mod wall_tables;

pub use error::{Error, Result};
pub use exact_arith::{Int, Nat, Rational};
