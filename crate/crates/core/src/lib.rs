//! Equivalences, preorders and quotients for parity games.
//!
//! Every relation is available both as a fixpoint computation over the game
//! graph ([`equivalences`]) and through its characterizing two-player game
//! ([`simgames`]), so each can be checked against the other.

pub mod dot;
pub mod equivalences;
pub mod forcing;
pub mod game;
pub mod lattice;
pub mod pgsolver;
pub mod quotient;
pub mod random;
pub mod relation;
pub mod simgames;
pub mod solver;
pub mod vertex_set;

pub use game::{reward_leq, GameError, ParityGame, Player, Priority, Vertex, WinningRegions};
pub use vertex_set::VertexSet;
