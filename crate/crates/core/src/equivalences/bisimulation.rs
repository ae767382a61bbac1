use crate::game::ParityGame;
use crate::relation::{Partition, RelationKind, VertexRelation};

/// Governed bisimilarity: the largest symmetric relation in which related
/// vertices have equal priorities, every move is matched by a related move,
/// and vertices of different owners have all their successors related.
pub fn governed_bisim(game: &ParityGame) -> Partition {
    let n = game.vertex_count();
    let mut relation = VertexRelation::from_fn(n, RelationKind::Equivalence, |v, w| {
        game.priority(v) == game.priority(w)
    });
    let holds = |r: &VertexRelation, v: usize, w: usize| {
        let matched = |a: usize, b: usize| {
            game.successors(a)
                .iter()
                .all(|&a2| game.successors(b).iter().any(|&b2| r.contains(a2, b2)))
        };
        let cross = game.owner(v) == game.owner(w)
            || game
                .successors(v)
                .iter()
                .all(|&v2| game.successors(w).iter().all(|&w2| r.contains(v2, w2)));
        cross && matched(v, w) && matched(w, v)
    };
    loop {
        let mut changed = false;
        for v in 0..n {
            for w in relation.row(v).clone().iter().filter(|&w| w > v) {
                if !holds(&relation, v, w) {
                    relation.remove(v, w);
                    relation.remove(w, v);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Partition::from_equivalence(&relation).expect("governed bisimilarity is an equivalence")
}

/// Strong bisimilarity: governed bisimilarity restricted to vertices with the
/// same owner, computed by partition refinement on successor classes.
pub fn strong_bisim(game: &ParityGame) -> Partition {
    let labels: Vec<_> = game
        .vertices()
        .map(|v| (game.priority(v), game.owner(v)))
        .collect();
    let mut partition = Partition::from_labels(&labels);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = game
            .vertices()
            .map(|v| {
                let mut classes: Vec<usize> = game
                    .successors(v)
                    .iter()
                    .map(|&w| partition.class_of(w))
                    .collect();
                classes.sort_unstable();
                classes.dedup();
                (partition.class_of(v), classes)
            })
            .collect();
        let next = Partition::from_labels(&signatures);
        if next.len() == partition.len() {
            return next;
        }
        partition = next;
    }
}
