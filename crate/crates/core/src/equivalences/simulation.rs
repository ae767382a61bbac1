use crate::forcing::steps_by;
use crate::game::{ParityGame, Player, Vertex};
use crate::relation::{Partition, RelationError, RelationKind, VertexRelation};

/// The greatest direct simulation `≤_d`.
pub fn direct_sim(game: &ParityGame) -> VertexRelation {
    greatest_direct_sim(game, |v, w| game.priority(v) == game.priority(w))
}

/// The greatest direct simulation that only relates vertices with the same owner.
pub fn strong_direct_sim(game: &ParityGame) -> VertexRelation {
    greatest_direct_sim(game, |v, w| {
        game.priority(v) == game.priority(w) && game.owner(v) == game.owner(w)
    })
}

/// The kernel `R ∩ R⁻¹` of a preorder, as a partition.
pub fn equivalence_from_preorder(relation: &VertexRelation) -> Result<Partition, RelationError> {
    let mut preorder = relation.clone();
    if preorder.kind() == RelationKind::Equivalence {
        preorder =
            VertexRelation::from_fn(relation.vertex_count(), RelationKind::Preorder, |v, w| {
                relation.contains(v, w)
            });
    }
    preorder.validate()?;
    Partition::from_equivalence(&preorder.symmetric_part())
}

/// Whether Duplicator, playing from `w`, can answer every move from `v`
/// with a pair accepted by `related`: each successor of an Even `v` must be
/// matched, and for an Odd `v` some successor must be matchable.
pub fn direct_transfer(
    game: &ParityGame,
    v: Vertex,
    w: Vertex,
    mut related: impl FnMut(Vertex, Vertex) -> bool,
) -> bool {
    let succ = game.successors(v);
    match game.owner(v) {
        Player::Even => succ
            .iter()
            .all(|&v2| steps_by(game, Player::Even, w, |w2| related(v2, w2))),
        Player::Odd => steps_by(game, Player::Even, w, |w2| {
            succ.iter().any(|&v2| related(v2, w2))
        }),
    }
}

fn greatest_direct_sim(
    game: &ParityGame,
    initial: impl FnMut(Vertex, Vertex) -> bool,
) -> VertexRelation {
    let n = game.vertex_count();
    let mut relation = VertexRelation::from_fn(n, RelationKind::Preorder, initial);
    loop {
        let mut changed = false;
        for v in 0..n {
            for w in relation.row(v).clone().iter() {
                if !direct_transfer(game, v, w, |a, b| relation.contains(a, b)) {
                    relation.remove(v, w);
                    changed = true;
                }
            }
        }
        if !changed {
            return relation;
        }
    }
}
