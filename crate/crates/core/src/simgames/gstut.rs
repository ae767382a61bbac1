use crate::game::{ParityGame, Vertex};
use crate::relation::{Partition, RelationKind, VertexRelation};
use crate::solver::{solve_buchi, Arena, Expansion, Role};

use super::rounds::{advance, move_order, Move, Side};
use super::SimGameError;

/// The challenge component of a governed stuttering configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Challenge {
    /// Duplicator answered a move by not moving.
    Dagger,
    /// Duplicator made progress in the last round.
    Met,
    /// Spoiler is challenged to repeat its move on `side` to `target`.
    Issued { side: Side, target: Vertex },
}

/// Positions of the governed stuttering bisimulation game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GstutPosition {
    /// Start of a round in configuration `((v, w), c)`.
    Config { v: Vertex, w: Vertex, c: Challenge },
    /// Spoiler chose the orientation `(u0, u1)`; `swapped` records whether
    /// `u0 = w` rather than `u0 = v`.
    Oriented {
        u0: Vertex,
        u1: Vertex,
        swapped: bool,
        c: Challenge,
    },
    /// The first move was made, moving `side` to `to`.
    Half {
        u0: Vertex,
        u1: Vertex,
        swapped: bool,
        c: Challenge,
        first: Move,
        to: Vertex,
        pending: Move,
    },
    /// Both moves were made; Duplicator picks the next configuration.
    /// `spoiler_moved` tells for each side whether Spoiler moved it.
    Choice {
        u0: Vertex,
        u1: Vertex,
        t0: Vertex,
        t1: Vertex,
        swapped: bool,
        c: Challenge,
        spoiler_moved: [bool; 2],
    },
    /// Duplicator has reached a pair with different priorities.
    Lost,
}

/// The challenge after Duplicator rolls back the move on one side:
/// `issued` is the challenge to repeat that move, `spoiler_moved` tells
/// whether Spoiler made it, and `same` whether the rolled-back vertex is the
/// one at that side of the configuration the round started from.
fn rollback(c: Challenge, issued: Challenge, spoiler_moved: bool, same: bool) -> Challenge {
    let open = matches!(c, Challenge::Dagger | Challenge::Met) || c == issued;
    if spoiler_moved && same && open {
        issued
    } else if !same || (spoiler_moved && !open) {
        Challenge::Met
    } else {
        Challenge::Dagger
    }
}

/// The governed stuttering bisimulation game as a Büchi arena: Duplicator
/// must keep priorities equal and reach challenge `✓` infinitely often.
pub fn build_gstut_arena(game: &ParityGame) -> Arena<GstutPosition> {
    let roots: Vec<_> = game
        .vertices()
        .flat_map(|v| {
            game.vertices().map(move |w| GstutPosition::Config {
                v,
                w,
                c: Challenge::Met,
            })
        })
        .collect();
    Arena::explore(roots, |&position| match position {
        GstutPosition::Config { v, w, .. } if game.priority(v) != game.priority(w) => Expansion {
            owner: Role::Duplicator,
            accepting: false,
            successors: vec![GstutPosition::Lost],
        },
        GstutPosition::Config { v, w, c } => {
            let mut successors = vec![GstutPosition::Oriented {
                u0: v,
                u1: w,
                swapped: false,
                c,
            }];
            if v != w {
                successors.push(GstutPosition::Oriented {
                    u0: w,
                    u1: v,
                    swapped: true,
                    c,
                });
            }
            Expansion {
                owner: Role::Spoiler,
                accepting: c == Challenge::Met,
                successors,
            }
        }
        GstutPosition::Oriented { u0, u1, swapped, c } => {
            let [first, pending] = move_order(game, u0, u1);
            Expansion {
                owner: first.role,
                accepting: false,
                successors: advance(game, u0, u1, first.side)
                    .map(|(l, r)| GstutPosition::Half {
                        u0,
                        u1,
                        swapped,
                        c,
                        first,
                        to: if first.side == Side::Left { l } else { r },
                        pending,
                    })
                    .collect(),
            }
        }
        GstutPosition::Half {
            u0,
            u1,
            swapped,
            c,
            first,
            to,
            pending,
        } => {
            let (left, right) = match first.side {
                Side::Left => (to, u1),
                Side::Right => (u0, to),
            };
            let mut spoiler_moved = [false; 2];
            for m in [first, pending] {
                spoiler_moved[m.side as usize] = m.role == Role::Spoiler;
            }
            Expansion {
                owner: pending.role,
                accepting: false,
                successors: advance(game, left, right, pending.side)
                    .map(|(t0, t1)| GstutPosition::Choice {
                        u0,
                        u1,
                        t0,
                        t1,
                        swapped,
                        c,
                        spoiler_moved,
                    })
                    .collect(),
            }
        }
        GstutPosition::Choice {
            u0,
            u1,
            t0,
            t1,
            swapped,
            c,
            spoiler_moved,
        } => {
            let left = rollback(
                c,
                Challenge::Issued {
                    side: Side::Left,
                    target: t0,
                },
                spoiler_moved[0],
                !swapped,
            );
            let right = rollback(
                c,
                Challenge::Issued {
                    side: Side::Right,
                    target: t1,
                },
                spoiler_moved[1],
                !swapped,
            );
            Expansion {
                owner: Role::Duplicator,
                accepting: false,
                successors: vec![
                    GstutPosition::Config {
                        v: t0,
                        w: t1,
                        c: Challenge::Met,
                    },
                    GstutPosition::Config {
                        v: u0,
                        w: t1,
                        c: left,
                    },
                    GstutPosition::Config {
                        v: t0,
                        w: u1,
                        c: right,
                    },
                ],
            }
        }
        GstutPosition::Lost => Expansion {
            owner: Role::Duplicator,
            accepting: false,
            successors: vec![GstutPosition::Lost],
        },
    })
}

/// Pairs `(v, w)` for which Duplicator wins from `((v, w), ✓)`.
pub fn gstut_game_relation(game: &ParityGame) -> VertexRelation {
    let arena = build_gstut_arena(game);
    let won = solve_buchi(&arena);
    VertexRelation::from_fn(game.vertex_count(), RelationKind::Equivalence, |v, w| {
        let p = arena
            .position(&GstutPosition::Config {
                v,
                w,
                c: Challenge::Met,
            })
            .expect("every pair is a root");
        won.contains(p)
    })
}

/// Governed stuttering bisimilarity decided by the game.
pub fn gstut_via_game(game: &ParityGame) -> Result<Partition, SimGameError> {
    Partition::from_equivalence(&gstut_game_relation(game)).map_err(SimGameError::Inconsistent)
}
