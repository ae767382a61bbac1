//! Fixpoint computations of the simulation preorders and bisimulation
//! equivalences on a single game.

mod bisimulation;
mod delayed;
mod simulation;
mod stuttering;

pub use bisimulation::{governed_bisim, strong_bisim};
pub use delayed::{wf_delayed_sim, WellFoundedDelayed};
pub use simulation::{direct_sim, direct_transfer, equivalence_from_preorder, strong_direct_sim};
pub use stuttering::{gstut_bisim, is_gstut_bisimulation, refine_stuttering, stut_bisim};

use crate::game::ParityGame;
use crate::relation::Partition;
use crate::solver::solve_zielonka;

/// Winner equivalence: the partition into the two winning regions.
pub fn winner_partition(game: &ParityGame) -> Partition {
    let regions = solve_zielonka(game);
    let labels: Vec<_> = game.vertices().map(|v| regions.winner(v)).collect();
    Partition::from_labels(&labels)
}
