use crate::equivalences::direct_transfer;
use crate::game::{ParityGame, Vertex};
use crate::relation::{RelationKind, VertexRelation};
use crate::solver::{buchi_rank, duplicator_strategy, solve_buchi, Arena, Expansion, Role};

use super::obligation::{Bias, Obligation};
use super::rounds::{advance, move_order, Move};

/// Positions of the delayed simulation game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DelayedPosition {
    /// Start of a round in `(v, w)` with pending obligation `k`.
    Config { v: Vertex, w: Vertex, k: Obligation },
    /// The first move of the round has been made; `pending` is the second.
    Half {
        left: Vertex,
        right: Vertex,
        k: Obligation,
        pending: Move,
    },
}

impl DelayedPosition {
    /// The configuration in which `v ⊑ w` is decided.
    pub fn query(game: &ParityGame, bias: Bias, v: Vertex, w: Vertex) -> Self {
        DelayedPosition::Config {
            v,
            w,
            k: bias.update(game.priority(v), game.priority(w), Obligation::Met),
        }
    }
}

/// The delayed simulation game as a Büchi arena: Duplicator wins iff the
/// obligation is `✓` infinitely often. Only positions reachable from the
/// query configurations are built.
pub fn build_delayed_sim_arena(game: &ParityGame, bias: Bias) -> Arena<DelayedPosition> {
    let roots: Vec<_> = game
        .vertices()
        .flat_map(|v| {
            game.vertices()
                .map(move |w| DelayedPosition::query(game, bias, v, w))
        })
        .collect();
    Arena::explore(roots, |&position| match position {
        DelayedPosition::Config { v, w, k } => {
            let [first, second] = move_order(game, v, w);
            Expansion {
                owner: first.role,
                accepting: k == Obligation::Met,
                successors: advance(game, v, w, first.side)
                    .map(|(left, right)| DelayedPosition::Half {
                        left,
                        right,
                        k,
                        pending: second,
                    })
                    .collect(),
            }
        }
        DelayedPosition::Half {
            left,
            right,
            k,
            pending,
        } => Expansion {
            owner: pending.role,
            accepting: false,
            successors: advance(game, left, right, pending.side)
                .map(|(v, w)| DelayedPosition::Config {
                    v,
                    w,
                    k: bias.update(game.priority(v), game.priority(w), k),
                })
                .collect(),
        },
    })
}

/// Delayed simulation with the given obligation update, decided by the game.
pub fn delayed_sim(game: &ParityGame, bias: Bias) -> VertexRelation {
    let arena = build_delayed_sim_arena(game, bias);
    let won = solve_buchi(&arena);
    VertexRelation::from_fn(game.vertex_count(), RelationKind::Preorder, |v, w| {
        let p = arena
            .position(&DelayedPosition::query(game, bias, v, w))
            .expect("queries are roots");
        won.contains(p)
    })
}

/// Extracts Büchi ranks from the solved delayed simulation arena and checks
/// that they witness a well-founded delayed simulation:
///
/// - following Duplicator's rank-decreasing strategy, one round from a won
///   configuration with a pending obligation always ends in a won
///   configuration of strictly smaller rank, and from a `✓` configuration in
///   a won configuration;
/// - the won configurations, ordered by rank, satisfy the transfer
///   conditions of a well-founded delayed simulation.
pub fn wf_rank_check(game: &ParityGame, bias: Bias) -> bool {
    let arena = build_delayed_sim_arena(game, bias);
    let won = solve_buchi(&arena);
    let ranks = buchi_rank(&arena, &won);
    let strategy = duplicator_strategy(&arena, &won, &ranks);

    let next_configs = |p: usize| -> Vec<usize> {
        let choose = |q: usize| -> Vec<usize> {
            match arena.owner(q) {
                Role::Spoiler => arena.successors(q).to_vec(),
                Role::Duplicator => strategy[q].into_iter().collect(),
            }
        };
        choose(p).into_iter().flat_map(choose).collect()
    };

    for (p, position) in arena.payloads() {
        let DelayedPosition::Config { v, w, k } = *position else {
            continue;
        };
        let Ok(rank) = ranks.rank(p) else { continue };
        let after = next_configs(p);
        if after.is_empty() {
            return false;
        }
        for q in after {
            match ranks.rank(q) {
                Ok(r) if k == Obligation::Met || r < rank => {}
                _ => return false,
            }
        }
        let transfer = direct_transfer(game, v, w, |v2, w2| {
            let l = bias.update(game.priority(v2), game.priority(w2), k);
            let q = arena
                .position(&DelayedPosition::Config { v: v2, w: w2, k: l })
                .expect("successor configurations are materialized");
            match ranks.rank(q) {
                Ok(r) => k == Obligation::Met || r < rank,
                Err(_) => false,
            }
        });
        if !transfer {
            return false;
        }
    }
    true
}
