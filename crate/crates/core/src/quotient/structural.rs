use std::collections::BTreeSet;

use super::{EquivalenceKind, QuotientResult};
use crate::equivalences::{governed_bisim, gstut_bisim, strong_bisim, stut_bisim};
use crate::forcing::{attractor, divergence_region, steps};
use crate::game::{ParityGame, Player, Priority};
use crate::relation::Partition;
use crate::vertex_set::VertexSet;

/// The quotient under governed bisimilarity: a class owned solely by Odd
/// vertices that each reach more than one class stays Odd, every other class
/// goes to Even; `C → C'` iff every member has a successor in `C'`.
pub fn quotient_governed_bisim(game: &ParityGame) -> QuotientResult {
    let partition = governed_bisim(game);
    let result = one_step_quotient(game, &partition, false);
    finish(result, &partition, EquivalenceKind::GovernedBisim)
}

/// The quotient under strong bisimilarity, whose classes are owner-uniform.
pub fn quotient_strong_bisim(game: &ParityGame) -> QuotientResult {
    let partition = strong_bisim(game);
    let result = one_step_quotient(game, &partition, true);
    finish(result, &partition, EquivalenceKind::StrongBisim)
}

/// The quotient under governed stuttering bisimilarity. `C` has a self-loop
/// iff one player can keep every member inside `C` forever, and `C → C'`
/// for `C' ≠ C` iff one player can force every member into `C'` while
/// staying in `C`.
pub fn quotient_gstut(game: &ParityGame) -> QuotientResult {
    let partition = gstut_bisim(game);
    let result = stuttering_quotient(game, &partition, false);
    finish(result, &partition, EquivalenceKind::GstutBisim)
}

/// The quotient under stuttering bisimilarity, whose classes are owner-uniform.
pub fn quotient_stut(game: &ParityGame) -> QuotientResult {
    let partition = stut_bisim(game);
    let result = stuttering_quotient(game, &partition, true);
    finish(result, &partition, EquivalenceKind::StutBisim)
}

struct Parts {
    priority: Vec<Priority>,
    owner: Vec<Player>,
    successors: Vec<Vec<usize>>,
}

fn finish(parts: Parts, partition: &Partition, kind: EquivalenceKind) -> QuotientResult {
    QuotientResult {
        quotient: ParityGame::new(parts.priority, parts.owner, parts.successors)
            .expect("quotient of a total game is total"),
        class_map: partition.class_map().to_vec(),
        kind,
    }
}

fn class_priority(game: &ParityGame, class: &VertexSet) -> Priority {
    class.iter().map(|v| game.priority(v)).min().unwrap()
}

fn common_owner(game: &ParityGame, class: &VertexSet) -> Player {
    let first = game.owner(class.first().unwrap());
    assert!(
        class.iter().all(|v| game.owner(v) == first),
        "class {class:?} mixes owners"
    );
    first
}

fn one_step_quotient(game: &ParityGame, partition: &Partition, keep_owner: bool) -> Parts {
    let mut parts = Parts {
        priority: Vec::new(),
        owner: Vec::new(),
        successors: Vec::new(),
    };
    for class in partition.classes() {
        let reached: Vec<BTreeSet<usize>> = class
            .iter()
            .map(|v| {
                game.successors(v)
                    .iter()
                    .map(|&w| partition.class_of(w))
                    .collect()
            })
            .collect();
        parts.priority.push(class_priority(game, class));
        let all_odd = class.iter().all(|v| game.owner(v) == Player::Odd);
        parts.owner.push(if keep_owner {
            common_owner(game, class)
        } else if all_odd && reached.iter().all(|r| r.len() > 1) {
            Player::Odd
        } else {
            Player::Even
        });
        let mut common = reached[0].clone();
        for r in &reached[1..] {
            common.retain(|c| r.contains(c));
        }
        parts.successors.push(common.into_iter().collect());
    }
    parts
}

fn stuttering_quotient(game: &ParityGame, partition: &Partition, keep_owner: bool) -> Parts {
    let mut parts = Parts {
        priority: Vec::new(),
        owner: Vec::new(),
        successors: Vec::new(),
    };
    for (c, class) in partition.classes().iter().enumerate() {
        let diverges_all = |p: Player| class.is_subset(&divergence_region(game, p, class));
        let mut targets: Vec<usize> = class
            .iter()
            .flat_map(|v| game.successors(v).iter().map(|&w| partition.class_of(w)))
            .filter(|&d| d != c)
            .collect();
        targets.sort_unstable();
        targets.dedup();

        let mut successors = Vec::new();
        if Player::BOTH.into_iter().any(diverges_all) {
            successors.push(c);
        }
        for &d in &targets {
            let target = partition.class(d);
            if Player::BOTH
                .into_iter()
                .any(|p| class.is_subset(&attractor(game, p, class, target)))
            {
                successors.push(d);
            }
        }
        successors.sort_unstable();

        parts.priority.push(class_priority(game, class));
        let escapes = || {
            targets.iter().any(|&d| {
                let target = partition.class(d);
                class.iter().any(|v| steps(game, Player::Even, v, target))
            })
        };
        parts.owner.push(if keep_owner {
            common_owner(game, class)
        } else if diverges_all(Player::Even) || escapes() {
            Player::Even
        } else {
            Player::Odd
        });
        parts.successors.push(successors);
    }
    parts
}
