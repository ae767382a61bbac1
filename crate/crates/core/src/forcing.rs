//! Attractors and the forcing, divergence and one-step predicates.
//!
//! `forces(i, v, U, T)` holds when player `i` can make every play from `v`
//! reach `T` while only visiting `U` before that. This is exactly membership
//! of the attractor restricted to `U`.

use std::collections::VecDeque;

use crate::game::{ParityGame, Player, Vertex};
use crate::vertex_set::VertexSet;

/// Attractor layer of a vertex: `Finite(n)` if it enters the attractor in
/// round `n`, `Infinite` if it never does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

/// Layered attractor computation by backward breadth-first search. Vertices
/// are discovered in nondecreasing layer order, so the first layer assigned
/// to a vertex is its least one.
pub fn attractor_layers(
    game: &ParityGame,
    player: Player,
    within: &VertexSet,
    target: &VertexSet,
) -> Vec<Distance> {
    let n = game.vertex_count();
    let mut layer = vec![Distance::Infinite; n];
    let mut remaining: Vec<usize> = game.vertices().map(|v| game.successors(v).len()).collect();
    let mut queue = VecDeque::new();
    for v in target.iter() {
        layer[v] = Distance::Finite(0);
        queue.push_back(v);
    }
    while let Some(x) = queue.pop_front() {
        let Distance::Finite(d) = layer[x] else {
            unreachable!()
        };
        for &p in game.predecessors(x) {
            if layer[p].is_finite() || !within.contains(p) {
                continue;
            }
            let attracted = if game.owner(p) == player {
                true
            } else {
                remaining[p] -= 1;
                remaining[p] == 0
            };
            if attracted {
                layer[p] = Distance::Finite(d + 1);
                queue.push_back(p);
            }
        }
    }
    layer
}

/// The attractor of `target` for `player`, restricted to paths through `within`.
pub fn attractor(
    game: &ParityGame,
    player: Player,
    within: &VertexSet,
    target: &VertexSet,
) -> VertexSet {
    let layers = attractor_layers(game, player, within, target);
    VertexSet::from_vertices(
        game.vertex_count(),
        game.vertices().filter(|&v| layers[v].is_finite()),
    )
}

/// The round in which `v` enters the attractor.
pub fn attractor_rank(
    game: &ParityGame,
    player: Player,
    within: &VertexSet,
    target: &VertexSet,
    v: Vertex,
) -> Distance {
    attractor_layers(game, player, within, target)[v]
}

pub fn forces(
    game: &ParityGame,
    player: Player,
    v: Vertex,
    within: &VertexSet,
    target: &VertexSet,
) -> bool {
    attractor(game, player, within, target).contains(v)
}

/// The vertices from which `player` keeps every play inside `within` forever.
pub fn divergence_region(game: &ParityGame, player: Player, within: &VertexSet) -> VertexSet {
    attractor(game, player.opponent(), within, &within.complement()).complement()
}

pub fn diverges(game: &ParityGame, player: Player, v: Vertex, within: &VertexSet) -> bool {
    !forces(game, player.opponent(), v, within, &within.complement())
}

/// One controlled step into `target`: some successor if `player` owns `v`,
/// all successors otherwise.
pub fn steps(game: &ParityGame, player: Player, v: Vertex, target: &VertexSet) -> bool {
    steps_by(game, player, v, |w| target.contains(w))
}

/// [`steps`] with the target given as a predicate.
pub fn steps_by(
    game: &ParityGame,
    player: Player,
    v: Vertex,
    mut target: impl FnMut(Vertex) -> bool,
) -> bool {
    if game.owner(v) == player {
        game.successors(v).iter().any(|&w| target(w))
    } else {
        game.successors(v).iter().all(|&w| target(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Player::{Even, Odd};

    /// Four vertices: 0 Odd -> 2, 1 Even -> {2, 3}, 2 Odd loop, 3 Even loop.
    fn sample() -> ParityGame {
        ParityGame::new(
            vec![1, 1, 1, 0],
            vec![Odd, Even, Odd, Even],
            vec![vec![2], vec![2, 3], vec![2], vec![3]],
        )
        .unwrap()
    }

    #[test]
    fn attractor_of_sink() {
        let g = sample();
        let all = VertexSet::full(4);
        let t = VertexSet::singleton(4, 3);
        assert_eq!(
            attractor(&g, Even, &all, &t).iter().collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert_eq!(attractor_rank(&g, Even, &all, &t, 3), Distance::Finite(0));
        assert_eq!(attractor_rank(&g, Even, &all, &t, 1), Distance::Finite(1));
        assert_eq!(attractor_rank(&g, Even, &all, &t, 0), Distance::Infinite);
        assert_eq!(
            attractor(&g, Odd, &all, &t).iter().collect::<Vec<_>>(),
            vec![3]
        );
    }

    #[test]
    fn empty_constraint_yields_target() {
        let g = sample();
        let t = VertexSet::from_vertices(4, [2]);
        assert_eq!(attractor(&g, Odd, &VertexSet::empty(4), &t), t);
    }

    #[test]
    fn one_step_moves() {
        let g = sample();
        assert!(steps(&g, Even, 1, &VertexSet::singleton(4, 3)));
        assert!(!steps(&g, Even, 0, &VertexSet::singleton(4, 3)));
        for v in g.vertices() {
            for p in Player::BOTH {
                assert!(steps(&g, p, v, &VertexSet::full(4)));
            }
        }
    }

    #[test]
    fn self_loop_diverges_for_both() {
        let g = sample();
        let u = VertexSet::singleton(4, 2);
        assert!(diverges(&g, Even, 2, &u));
        assert!(diverges(&g, Odd, 2, &u));
        assert!(!diverges(&g, Even, 1, &VertexSet::singleton(4, 1)));
        assert_eq!(divergence_region(&g, Odd, &u), u);
    }
}
