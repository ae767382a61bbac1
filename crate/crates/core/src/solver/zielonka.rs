use std::collections::VecDeque;

use crate::game::{ParityGame, Player, Vertex, WinningRegions};
use crate::vertex_set::VertexSet;

/// Solves a parity game with Zielonka's recursive algorithm.
pub fn solve_zielonka(game: &ParityGame) -> WinningRegions {
    let [even, odd] = Zielonka { game }.solve(VertexSet::full(game.vertex_count()));
    debug_assert!(even.is_disjoint(&odd));
    debug_assert_eq!(even.len() + odd.len(), game.vertex_count());
    WinningRegions {
        won_by_even: even,
        won_by_odd: odd,
    }
}

/// True iff `v` and `w` are won by the same player.
pub fn winner_equivalent(game: &ParityGame, v: Vertex, w: Vertex) -> bool {
    let regions = solve_zielonka(game);
    regions.winner(v) == regions.winner(w)
}

struct Zielonka<'a> {
    game: &'a ParityGame,
}

impl Zielonka<'_> {
    /// Winning regions of the subgame induced by `sub`, indexed by player.
    fn solve(&self, sub: VertexSet) -> [VertexSet; 2] {
        let n = self.game.vertex_count();
        if sub.is_empty() {
            return [VertexSet::empty(n), VertexSet::empty(n)];
        }
        let d = sub
            .iter()
            .map(|v| self.game.priority(v))
            .min()
            .expect("non-empty subgame");
        let player = Player::of_priority(d);
        let top = VertexSet::from_vertices(n, sub.iter().filter(|&v| self.game.priority(v) == d));
        let a = self.attractor(&sub, player, &top);
        let mut won = self.solve(sub.difference(&a));
        if won[player.opponent().index()].is_empty() {
            let mut result = [VertexSet::empty(n), VertexSet::empty(n)];
            result[player.index()] = sub;
            return result;
        }
        let b = self.attractor(&sub, player.opponent(), &won[player.opponent().index()]);
        won = self.solve(sub.difference(&b));
        won[player.opponent().index()].union_with(&b);
        won
    }

    /// Attractor inside the subgame `sub`, ignoring edges that leave it.
    fn attractor(&self, sub: &VertexSet, player: Player, target: &VertexSet) -> VertexSet {
        let game = self.game;
        let mut attr = target.clone();
        let mut remaining: Vec<usize> = game
            .vertices()
            .map(|v| {
                game.successors(v)
                    .iter()
                    .filter(|&&w| sub.contains(w))
                    .count()
            })
            .collect();
        let mut queue: VecDeque<Vertex> = target.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &p in game.predecessors(x) {
                if !sub.contains(p) || attr.contains(p) {
                    continue;
                }
                let attracted = if game.owner(p) == player {
                    true
                } else {
                    remaining[p] -= 1;
                    remaining[p] == 0
                };
                if attracted {
                    attr.insert(p);
                    queue.push_back(p);
                }
            }
        }
        attr
    }
}
