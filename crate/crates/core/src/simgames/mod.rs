//! The game characterizations of the simulation and bisimulation relations,
//! encoded as explicit Büchi arenas and solved with the solver module.
//!
//! Each round of a (bi)simulation game is spelled out with one intermediate
//! position per move, following the move order of [`move_order`].

mod coincidence;
mod delayed;
mod direct;
mod gstut;
mod obligation;
mod rounds;

use thiserror::Error;

use crate::relation::RelationError;

pub use coincidence::{coincidence_check, Notion};
pub use delayed::{build_delayed_sim_arena, delayed_sim, wf_rank_check, DelayedPosition};
pub use direct::{
    build_direct_sim_arena, build_governed_bisim_arena, direct_sim_game, governed_bisim_game,
    PairPosition,
};
pub use gstut::{build_gstut_arena, gstut_game_relation, gstut_via_game, Challenge, GstutPosition};
pub use obligation::{gamma, gamma_even, gamma_odd, Bias, Obligation};
pub use rounds::{move_order, Move, Side};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimGameError {
    #[error("game winning set is not an equivalence: {0}")]
    Inconsistent(RelationError),
}
