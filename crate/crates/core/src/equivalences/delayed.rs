use crate::game::{ParityGame, Priority, Vertex};
use crate::relation::{RelationKind, VertexRelation};
use crate::simgames::{Bias, Obligation};
use crate::vertex_set::VertexSet;

use super::simulation::direct_transfer;

/// The largest well-founded delayed simulation, as a relation over triples
/// `(v, w, k)`, computed without building a game arena.
///
/// Triples with `k = ✓` only need their successor triples to be related;
/// triples with a pending obligation must reach them through a well-founded
/// descent. This is the nested fixpoint `νX. μY. F(X, Y)` where
/// `✓`-triples are checked against `X` and all others against `Y`.
pub struct WellFoundedDelayed<'a> {
    game: &'a ParityGame,
    bias: Bias,
    obligations: Vec<Obligation>,
    related: VertexSet,
}

impl<'a> WellFoundedDelayed<'a> {
    pub fn compute(game: &'a ParityGame, bias: Bias) -> Self {
        let mut priorities: Vec<Priority> = game.vertices().map(|v| game.priority(v)).collect();
        priorities.sort_unstable();
        priorities.dedup();
        let mut obligations: Vec<Obligation> =
            priorities.into_iter().map(Obligation::Pending).collect();
        obligations.push(Obligation::Met);
        let n = game.vertex_count();
        let total = n * n * obligations.len();
        let mut this = Self {
            game,
            bias,
            obligations,
            related: VertexSet::full(total),
        };
        loop {
            let mut progress = VertexSet::empty(total);
            loop {
                let next = this.step(&this.related, &progress);
                if next == progress {
                    break;
                }
                progress = next;
            }
            if progress == this.related {
                return this;
            }
            this.related = progress;
        }
    }

    /// Whether `v R[k] w` in the largest well-founded delayed simulation.
    pub fn related(&self, v: Vertex, w: Vertex, k: Obligation) -> bool {
        self.related.contains(self.index(v, w, k))
    }

    /// The preorder `v ≤ w iff v R[γ(v, w, ✓)] w`.
    pub fn preorder(&self) -> VertexRelation {
        let g = self.game;
        VertexRelation::from_fn(g.vertex_count(), RelationKind::Preorder, |v, w| {
            let k = self
                .bias
                .update(g.priority(v), g.priority(w), Obligation::Met);
            self.related(v, w, k)
        })
    }

    fn index(&self, v: Vertex, w: Vertex, k: Obligation) -> usize {
        let n = self.game.vertex_count();
        let slot = match k {
            Obligation::Met => self.obligations.len() - 1,
            Obligation::Pending(p) => self
                .obligations
                .binary_search(&Obligation::Pending(p))
                .expect("obligations are priorities of the game"),
        };
        (slot * n + v) * n + w
    }

    fn step(&self, outer: &VertexSet, inner: &VertexSet) -> VertexSet {
        let g = self.game;
        let n = g.vertex_count();
        let mut next = VertexSet::empty(outer.universe());
        for &k in &self.obligations {
            let target = if k == Obligation::Met { outer } else { inner };
            for v in 0..n {
                for w in 0..n {
                    let ok = direct_transfer(g, v, w, |v2, w2| {
                        let l = self.bias.update(g.priority(v2), g.priority(w2), k);
                        target.contains(self.index(v2, w2, l))
                    });
                    if ok {
                        next.insert(self.index(v, w, k));
                    }
                }
            }
        }
        next
    }
}

/// The well-founded delayed simulation preorder for the given update.
pub fn wf_delayed_sim(game: &ParityGame, bias: Bias) -> VertexRelation {
    WellFoundedDelayed::compute(game, bias).preorder()
}
