use crate::forcing::{attractor, divergence_region};
use crate::game::{ParityGame, Player};
use crate::relation::Partition;
use crate::vertex_set::VertexSet;

/// Governed stuttering bisimilarity, by signature refinement starting from
/// the priority partition.
pub fn gstut_bisim(game: &ParityGame) -> Partition {
    let labels: Vec<_> = game.vertices().map(|v| game.priority(v)).collect();
    refine_to_fixpoint(game, Partition::from_labels(&labels))
}

/// Stuttering bisimilarity: as [`gstut_bisim`], but vertices of different
/// owners start in different classes.
pub fn stut_bisim(game: &ParityGame) -> Partition {
    let labels: Vec<_> = game
        .vertices()
        .map(|v| (game.priority(v), game.owner(v)))
        .collect();
    refine_to_fixpoint(game, Partition::from_labels(&labels))
}

fn refine_to_fixpoint(game: &ParityGame, mut partition: Partition) -> Partition {
    loop {
        let next = refine_stuttering(game, &partition);
        if next.len() == partition.len() {
            return next;
        }
        partition = next;
    }
}

/// Per-vertex abilities relative to the vertex's own class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Signature {
    class: usize,
    /// `(player, class)` pairs such that the player can force the play from
    /// the vertex into that other class while staying in its own class.
    forces: Vec<(Player, usize)>,
    /// Whether each player can keep the play inside the class forever.
    diverges: [bool; 2],
}

/// One refinement pass: splits every class by the signatures of its members.
pub fn refine_stuttering(game: &ParityGame, partition: &Partition) -> Partition {
    let n = game.vertex_count();
    let mut signatures: Vec<Signature> = game
        .vertices()
        .map(|v| Signature {
            class: partition.class_of(v),
            forces: Vec::new(),
            diverges: [false; 2],
        })
        .collect();
    for (c, class) in partition.classes().iter().enumerate() {
        let mut targets: Vec<usize> = class
            .iter()
            .flat_map(|v| game.successors(v).iter().map(|&w| partition.class_of(w)))
            .filter(|&d| d != c)
            .collect();
        targets.sort_unstable();
        targets.dedup();
        for player in Player::BOTH {
            for v in divergence_region(game, player, class).iter() {
                signatures[v].diverges[player.index()] = true;
            }
            for &d in &targets {
                let attr = attractor(game, player, class, partition.class(d));
                for v in class.iter().filter(|&v| attr.contains(v)) {
                    signatures[v].forces.push((player, d));
                }
            }
        }
    }
    for s in &mut signatures {
        s.forces.sort_unstable();
    }
    debug_assert_eq!(signatures.len(), n);
    Partition::from_labels(&signatures)
}

/// Checks that `partition` is a governed stuttering bisimulation: related
/// vertices have equal priorities, every move into another class can be
/// forced by the mover from every related vertex through the class, and
/// divergence is matched by every related vertex.
pub fn is_gstut_bisimulation(game: &ParityGame, partition: &Partition) -> bool {
    partition.classes().iter().all(|class| {
        let first = class.first().expect("classes are non-empty");
        if class
            .iter()
            .any(|v| game.priority(v) != game.priority(first))
        {
            return false;
        }
        let divergence = Player::BOTH.map(|p| divergence_region(game, p, class));
        if divergence
            .iter()
            .any(|d| !d.intersection(class).is_empty() && !class.is_subset(d))
        {
            return false;
        }
        let mut force_cache: Vec<Option<[VertexSet; 2]>> = vec![None; partition.len()];
        let own = partition.class_of(first);
        class.iter().all(|v| {
            game.successors(v).iter().all(|&u| {
                let d = partition.class_of(u);
                if d == own {
                    return true;
                }
                let sets = force_cache[d].get_or_insert_with(|| {
                    Player::BOTH.map(|p| attractor(game, p, class, partition.class(d)))
                });
                class.is_subset(&sets[game.owner(v).index()])
            })
        })
    })
}
