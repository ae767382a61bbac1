//! Quotient games: one vertex per equivalence class.
//!
//! Quotient vertices are numbered by ascending least original member, so the
//! output is reproducible.

mod direct;
mod iso;
mod structural;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::equivalences::{
    direct_sim, equivalence_from_preorder, governed_bisim, gstut_bisim, strong_bisim, stut_bisim,
};
use crate::game::ParityGame;
use crate::relation::Partition;
use crate::solver::solve_zielonka;

pub use direct::{max_successors, min_successors, quotient_direct_sim};
pub use iso::{automorphism_partition, iso_check, isomorphic_vertices, IsoError, MAX_ISO_VERTICES};
pub use structural::{
    quotient_governed_bisim, quotient_gstut, quotient_strong_bisim, quotient_stut,
};

/// The equivalences a game can be quotiented by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivalenceKind {
    StrongBisim,
    GovernedBisim,
    StutBisim,
    GstutBisim,
    DirectSim,
}

impl EquivalenceKind {
    pub const ALL: [EquivalenceKind; 5] = [
        EquivalenceKind::StrongBisim,
        EquivalenceKind::GovernedBisim,
        EquivalenceKind::StutBisim,
        EquivalenceKind::GstutBisim,
        EquivalenceKind::DirectSim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EquivalenceKind::StrongBisim => "strong-bisim",
            EquivalenceKind::GovernedBisim => "governed-bisim",
            EquivalenceKind::StutBisim => "stut",
            EquivalenceKind::GstutBisim => "gstut",
            EquivalenceKind::DirectSim => "direct-sim",
        }
    }

    /// The equivalence classes of `game`.
    pub fn partition(self, game: &ParityGame) -> Partition {
        match self {
            EquivalenceKind::StrongBisim => strong_bisim(game),
            EquivalenceKind::GovernedBisim => governed_bisim(game),
            EquivalenceKind::StutBisim => stut_bisim(game),
            EquivalenceKind::GstutBisim => gstut_bisim(game),
            EquivalenceKind::DirectSim => equivalence_from_preorder(&direct_sim(game))
                .expect("direct simulation is a preorder"),
        }
    }
}

impl fmt::Display for EquivalenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error(
    "unknown equivalence '{0}'; supported: strong-bisim, governed-bisim, stut, gstut, direct-sim"
)]
pub struct UnknownEquivalence(pub String);

impl FromStr for EquivalenceKind {
    type Err = UnknownEquivalence;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EquivalenceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownEquivalence(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub quotient: ParityGame,
    /// `class_map[v]` is the quotient vertex of original vertex `v`.
    pub class_map: Vec<usize>,
    pub kind: EquivalenceKind,
}

impl QuotientResult {
    /// The sidecar class map: one `<original-id> <class-id>` line per vertex.
    pub fn class_map_text(&self) -> String {
        self.class_map
            .iter()
            .enumerate()
            .map(|(v, c)| format!("{v} {c}\n"))
            .collect()
    }
}

pub fn quotient(game: &ParityGame, kind: EquivalenceKind) -> QuotientResult {
    match kind {
        EquivalenceKind::StrongBisim => quotient_strong_bisim(game),
        EquivalenceKind::GovernedBisim => quotient_governed_bisim(game),
        EquivalenceKind::StutBisim => quotient_stut(game),
        EquivalenceKind::GstutBisim => quotient_gstut(game),
        EquivalenceKind::DirectSim => quotient_direct_sim(game),
    }
}

/// True iff every vertex is won by the same player as its quotient vertex.
pub fn verify_preservation(game: &ParityGame, result: &QuotientResult) -> bool {
    if result.class_map.len() != game.vertex_count() {
        return false;
    }
    let original = solve_zielonka(game);
    let reduced = solve_zielonka(&result.quotient);
    game.vertices()
        .all(|v| original.winner(v) == reduced.winner(result.class_map[v]))
}

/// True iff every vertex is related to its quotient vertex by the defining
/// equivalence, computed on the disjoint union of the game and its quotient.
pub fn equivalent_to_original(game: &ParityGame, result: &QuotientResult) -> bool {
    if result.class_map.len() != game.vertex_count() {
        return false;
    }
    let union = game.disjoint_union(&result.quotient);
    let classes = result.kind.partition(&union);
    let n = game.vertex_count();
    game.vertices()
        .all(|v| classes.same_class(v, n + result.class_map[v]))
}
