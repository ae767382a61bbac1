use std::collections::VecDeque;

use crate::game::{ParityGame, Player};
use crate::solver::arena::{Arena, ArenaError, Role};
use crate::vertex_set::VertexSet;

/// Positions from which Duplicator can visit the accepting positions
/// infinitely often: the greatest `Z` with `Z = Attr(accepting ∩ CPre(Z))`.
pub fn solve_buchi<P>(arena: &Arena<P>) -> VertexSet {
    let mut z = VertexSet::full(arena.len());
    loop {
        let next = attractor_layers(arena, &recurrence_base(arena, &z)).0;
        if next == z {
            return z;
        }
        z = next;
    }
}

/// Attractor ranks of Duplicator-won positions.
///
/// Rank 0 marks accepting won positions; a non-accepting won position of
/// rank `r` is forced into rank below `r` in one step. Following
/// [`duplicator_strategy`] from a position of rank `r` therefore reaches an
/// accepting position within `r` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchiRanks {
    rank: Vec<Option<usize>>,
}

impl BuchiRanks {
    pub fn rank(&self, position: usize) -> Result<usize, ArenaError> {
        self.rank
            .get(position)
            .copied()
            .flatten()
            .ok_or(ArenaError::NotWon(position))
    }

    pub fn ranks(&self) -> &[Option<usize>] {
        &self.rank
    }
}

/// Layer indices of the final attractor round of [`solve_buchi`], given the
/// Duplicator-won set it returned.
pub fn buchi_rank<P>(arena: &Arena<P>, won: &VertexSet) -> BuchiRanks {
    let (_, layers) = attractor_layers(arena, &recurrence_base(arena, won));
    let rank = (0..arena.len())
        .map(|p| if won.contains(p) { layers[p] } else { None })
        .collect();
    BuchiRanks { rank }
}

/// A memoryless Duplicator strategy on won positions: from a non-accepting
/// position move to a successor of smaller rank, from an accepting position
/// stay inside the won set.
pub fn duplicator_strategy<P>(
    arena: &Arena<P>,
    won: &VertexSet,
    ranks: &BuchiRanks,
) -> Vec<Option<usize>> {
    (0..arena.len())
        .map(|p| {
            if arena.owner(p) != Role::Duplicator || !won.contains(p) {
                return None;
            }
            let r = ranks.rank(p).ok()?;
            arena.successors(p).iter().copied().find(|&q| {
                if r == 0 {
                    won.contains(q)
                } else {
                    ranks.rank(q).is_ok_and(|rq| rq < r)
                }
            })
        })
        .collect()
}

/// The arena as a parity game: Duplicator plays Even, accepting positions get
/// priority 0 and all others priority 1.
pub fn arena_as_parity_game<P>(arena: &Arena<P>) -> ParityGame {
    let priority = (0..arena.len())
        .map(|p| if arena.is_accepting(p) { 0 } else { 1 })
        .collect();
    let owner = (0..arena.len())
        .map(|p| match arena.owner(p) {
            Role::Duplicator => Player::Even,
            Role::Spoiler => Player::Odd,
        })
        .collect();
    let successors = (0..arena.len())
        .map(|p| arena.successors(p).to_vec())
        .collect();
    ParityGame::new(priority, owner, successors).expect("arenas are total")
}

/// Accepting positions from which Duplicator can stay in `z` for one step.
fn recurrence_base<P>(arena: &Arena<P>, z: &VertexSet) -> VertexSet {
    let mut base = VertexSet::empty(arena.len());
    for p in arena.accepting().iter() {
        let succ = arena.successors(p);
        let ok = match arena.owner(p) {
            Role::Duplicator => succ.iter().any(|&q| z.contains(q)),
            Role::Spoiler => succ.iter().all(|&q| z.contains(q)),
        };
        if ok {
            base.insert(p);
        }
    }
    base
}

/// Duplicator's attractor of `target` together with the layer of each member.
fn attractor_layers<P>(arena: &Arena<P>, target: &VertexSet) -> (VertexSet, Vec<Option<usize>>) {
    let n = arena.len();
    let mut attr = target.clone();
    let mut layer = vec![None; n];
    let mut remaining: Vec<usize> = (0..n).map(|p| arena.successors(p).len()).collect();
    let mut queue = VecDeque::new();
    for p in target.iter() {
        layer[p] = Some(0);
        queue.push_back(p);
    }
    while let Some(q) = queue.pop_front() {
        let d = layer[q].expect("queued positions have a layer");
        for &p in arena.predecessors(q) {
            if attr.contains(p) {
                continue;
            }
            let attracted = match arena.owner(p) {
                Role::Duplicator => true,
                Role::Spoiler => {
                    remaining[p] -= 1;
                    remaining[p] == 0
                }
            };
            if attracted {
                attr.insert(p);
                layer[p] = Some(d + 1);
                queue.push_back(p);
            }
        }
    }
    (attr, layer)
}
