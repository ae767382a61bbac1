//! Parity game solving, and Büchi solving for simulation game arenas.

mod arena;
mod buchi;
mod zielonka;

pub use arena::{Arena, ArenaError, Expansion, Role};
pub use buchi::{arena_as_parity_game, buchi_rank, duplicator_strategy, solve_buchi, BuchiRanks};
pub use zielonka::{solve_zielonka, winner_equivalent};
