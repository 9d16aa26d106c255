//! Finite loops, their coordinatized 3-nets, and the direction preserving
//! collineation groups of those nets.
//!
//! The crate is organized bottom-up:
//!
//! - [`perm`] and [`group`]: exact permutation group machinery for groups of
//!   a few hundred elements (closure, commutators, Frattini subgroups,
//!   abelian invariants, isomorphism testing, subgroup enumeration).
//! - [`loops`]: loops as normalized Latin squares, with nuclei, identity
//!   checks, isotopes, isomorphism and canonical forms, the builtin order-8
//!   Bol loops `B1` and `B2`, and a plain-text table format.
//! - [`maps`]: automorphisms, pseudo-automorphisms and their companions, and
//!   the group generated by left translations.
//! - [`net`]: the 3-net of a loop, its direction preserving collineations,
//!   Bol reflections and structure reports.
//! - [`search`]: exhaustive enumeration of small left Bol loops.
//! - [`verify`]: the claim registry and reports behind the command-line tool.
//!
//! Permutations act on the right throughout: `a * b` applies `a` first.

pub mod error;
pub mod group;
pub mod loops;
pub mod maps;
pub mod net;
pub mod perm;
pub mod search;
pub mod verify;

pub use error::{GroupError, LoopError, NetError, ParseError, SearchError};
pub use group::GeneratedGroup;
pub use loops::LoopTable;
pub use perm::Permutation;
