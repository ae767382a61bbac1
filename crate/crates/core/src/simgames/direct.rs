use crate::game::{ParityGame, Vertex};
use crate::relation::{Partition, RelationKind, VertexRelation};
use crate::solver::{solve_buchi, Arena, Expansion, Role};

use super::rounds::{advance, move_order, Move};
use super::SimGameError;

/// Positions of the direct simulation and governed bisimulation games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairPosition {
    /// Start of a round in configuration `(v, w)`. In the governed game
    /// Spoiler first picks an orientation here.
    Config(Vertex, Vertex),
    /// A round about to start from the oriented pair `(u0, u1)`.
    Oriented(Vertex, Vertex),
    /// The first move of a round has been made; `pending` is the second.
    Half {
        left: Vertex,
        right: Vertex,
        pending: Move,
    },
    /// Duplicator has reached a pair with different priorities.
    Lost,
}

/// The direct simulation game: a safety game in which Duplicator must keep
/// the priorities of both tokens equal.
pub fn build_direct_sim_arena(game: &ParityGame) -> Arena<PairPosition> {
    build(game, false)
}

/// The governed bisimulation game: as the direct simulation game, with
/// Spoiler choosing the orientation of the pair at the start of each round.
pub fn build_governed_bisim_arena(game: &ParityGame) -> Arena<PairPosition> {
    build(game, true)
}

fn build(game: &ParityGame, symmetric: bool) -> Arena<PairPosition> {
    let roots: Vec<_> = game
        .vertices()
        .flat_map(|v| game.vertices().map(move |w| PairPosition::Config(v, w)))
        .collect();
    Arena::explore(roots, |&position| match position {
        PairPosition::Config(v, w) if game.priority(v) != game.priority(w) => Expansion {
            owner: Role::Duplicator,
            accepting: false,
            successors: vec![PairPosition::Lost],
        },
        PairPosition::Config(v, w) if symmetric => Expansion {
            owner: Role::Spoiler,
            accepting: true,
            successors: vec![PairPosition::Oriented(v, w), PairPosition::Oriented(w, v)],
        },
        PairPosition::Config(u0, u1) | PairPosition::Oriented(u0, u1) => {
            let [first, second] = move_order(game, u0, u1);
            Expansion {
                owner: first.role,
                accepting: true,
                successors: advance(game, u0, u1, first.side)
                    .map(|(left, right)| PairPosition::Half {
                        left,
                        right,
                        pending: second,
                    })
                    .collect(),
            }
        }
        PairPosition::Half {
            left,
            right,
            pending,
        } => Expansion {
            owner: pending.role,
            accepting: true,
            successors: advance(game, left, right, pending.side)
                .map(|(t0, t1)| PairPosition::Config(t0, t1))
                .collect(),
        },
        PairPosition::Lost => Expansion {
            owner: Role::Duplicator,
            accepting: false,
            successors: vec![PairPosition::Lost],
        },
    })
}

fn won_pairs(game: &ParityGame, arena: &Arena<PairPosition>, kind: RelationKind) -> VertexRelation {
    let won = solve_buchi(arena);
    VertexRelation::from_fn(game.vertex_count(), kind, |v, w| {
        let p = arena
            .position(&PairPosition::Config(v, w))
            .expect("every pair is a root");
        won.contains(p)
    })
}

/// `v ⊑_d w` iff Duplicator wins the direct simulation game from `(v, w)`.
pub fn direct_sim_game(game: &ParityGame) -> VertexRelation {
    won_pairs(game, &build_direct_sim_arena(game), RelationKind::Preorder)
}

/// The partition of pairs won by Duplicator in the governed bisimulation game.
pub fn governed_bisim_game(game: &ParityGame) -> Result<Partition, SimGameError> {
    let relation = won_pairs(
        game,
        &build_governed_bisim_arena(game),
        RelationKind::Equivalence,
    );
    Partition::from_equivalence(&relation).map_err(SimGameError::Inconsistent)
}
