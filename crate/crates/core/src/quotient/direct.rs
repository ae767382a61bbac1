use std::collections::BTreeSet;

use super::{EquivalenceKind, QuotientResult};
use crate::equivalences::{direct_sim, equivalence_from_preorder};
use crate::game::{ParityGame, Player, Vertex};
use crate::relation::{Partition, VertexRelation};
use crate::vertex_set::VertexSet;

/// The successors of `v` that are minimal under `preorder`: nothing strictly
/// below them among the successors of `v`.
pub fn min_successors(game: &ParityGame, preorder: &VertexRelation, v: Vertex) -> VertexSet {
    extremal_successors(game, v, |a, b| preorder.contains(a, b))
}

/// The successors of `v` that are maximal under `preorder`.
pub fn max_successors(game: &ParityGame, preorder: &VertexRelation, v: Vertex) -> VertexSet {
    extremal_successors(game, v, |a, b| preorder.contains(b, a))
}

/// Successors `s` such that every successor `u` with `below(u, s)` also has
/// `below(s, u)`.
fn extremal_successors(
    game: &ParityGame,
    v: Vertex,
    below: impl Fn(Vertex, Vertex) -> bool,
) -> VertexSet {
    let succ = game.successors(v);
    VertexSet::from_vertices(
        game.vertex_count(),
        succ.iter()
            .copied()
            .filter(|&s| succ.iter().all(|&u| !below(u, s) || below(s, u))),
    )
}

fn class_set(partition: &Partition, set: &VertexSet) -> BTreeSet<usize> {
    set.iter().map(|v| partition.class_of(v)).collect()
}

/// The quotient under direct simulation equivalence. Successors that are
/// strictly dominated (little brothers) are dropped before forming edges.
///
/// # Panics
///
/// Panics if the classes of minimal or maximal successors disagree within an
/// equivalence class, which would mean the simulation is computed wrongly.
pub fn quotient_direct_sim(game: &ParityGame) -> QuotientResult {
    let preorder = direct_sim(game);
    let partition = equivalence_from_preorder(&preorder).expect("direct simulation is a preorder");
    let mut priority = Vec::with_capacity(partition.len());
    let mut owner = Vec::with_capacity(partition.len());
    let mut successors = Vec::with_capacity(partition.len());
    for class in partition.classes() {
        let mins: Vec<(Vertex, BTreeSet<usize>)> = class
            .iter()
            .map(|v| {
                (
                    v,
                    class_set(&partition, &min_successors(game, &preorder, v)),
                )
            })
            .collect();
        let maxs: Vec<(Vertex, BTreeSet<usize>)> = class
            .iter()
            .map(|v| {
                (
                    v,
                    class_set(&partition, &max_successors(game, &preorder, v)),
                )
            })
            .collect();
        let odd_min: Vec<&BTreeSet<usize>> = mins
            .iter()
            .filter(|(v, _)| game.owner(*v) == Player::Odd)
            .map(|(_, s)| s)
            .collect();
        let even_max: Vec<&BTreeSet<usize>> = maxs
            .iter()
            .filter(|(v, _)| game.owner(*v) == Player::Even)
            .map(|(_, s)| s)
            .collect();
        assert!(
            odd_min.windows(2).all(|w| w[0] == w[1]),
            "minimal successor classes differ inside class {class:?}"
        );
        assert!(
            even_max.windows(2).all(|w| w[0] == w[1]),
            "maximal successor classes differ inside class {class:?}"
        );
        if let (Some(&odd), Some(&even)) = (odd_min.first(), even_max.first()) {
            assert!(
                odd == even && odd.len() == 1,
                "mixed class {class:?} does not have a unique successor class"
            );
        }

        priority.push(class.iter().map(|v| game.priority(v)).min().unwrap());
        let odd_only = even_max.is_empty();
        owner.push(if odd_only && odd_min.iter().all(|s| s.len() > 1) {
            Player::Odd
        } else {
            Player::Even
        });
        let targets = if odd_only { odd_min[0] } else { even_max[0] };
        successors.push(targets.iter().copied().collect());
    }
    QuotientResult {
        quotient: ParityGame::new(priority, owner, successors)
            .expect("every class has a successor class"),
        class_map: partition.class_map().to_vec(),
        kind: EquivalenceKind::DirectSim,
    }
}
