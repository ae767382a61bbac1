//! Binary relations on vertices and partitions of the vertex set.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::game::Vertex;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Preorder,
    Equivalence,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("relation is not reflexive at {0}")]
    NotReflexive(Vertex),
    #[error("relation is not transitive: {0} R {1} and {1} R {2} but not {0} R {2}")]
    NotTransitive(Vertex, Vertex, Vertex),
    #[error("relation is not symmetric: {0} R {1} but not {1} R {0}")]
    NotSymmetric(Vertex, Vertex),
    #[error("partition is malformed: {0}")]
    MalformedPartition(String),
}

/// A relation `R ⊆ V × V` stored as one bit row per vertex: row `v` is `vR`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexRelation {
    rows: Vec<VertexSet>,
    kind: RelationKind,
}

impl VertexRelation {
    pub fn empty(n: usize, kind: RelationKind) -> Self {
        Self {
            rows: vec![VertexSet::empty(n); n],
            kind,
        }
    }

    pub fn identity(n: usize, kind: RelationKind) -> Self {
        Self {
            rows: (0..n).map(|v| VertexSet::singleton(n, v)).collect(),
            kind,
        }
    }

    pub fn from_fn(
        n: usize,
        kind: RelationKind,
        mut related: impl FnMut(Vertex, Vertex) -> bool,
    ) -> Self {
        Self {
            rows: (0..n)
                .map(|v| VertexSet::from_vertices(n, (0..n).filter(|&w| related(v, w))))
                .collect(),
            kind,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    pub fn contains(&self, v: Vertex, w: Vertex) -> bool {
        self.rows[v].contains(w)
    }

    pub fn insert(&mut self, v: Vertex, w: Vertex) -> bool {
        self.rows[v].insert(w)
    }

    pub fn remove(&mut self, v: Vertex, w: Vertex) -> bool {
        self.rows[v].remove(w)
    }

    /// The set `vR = { w | v R w }`.
    pub fn row(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    /// Number of related pairs.
    pub fn size(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(v, row)| row.iter().map(move |w| (v, w)))
    }

    pub fn is_subset(&self, other: &VertexRelation) -> bool {
        self.rows.len() == other.rows.len()
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(b))
    }

    /// `R ∩ R⁻¹` as an equivalence relation.
    pub fn symmetric_part(&self) -> VertexRelation {
        let n = self.vertex_count();
        Self::from_fn(n, RelationKind::Equivalence, |v, w| {
            self.contains(v, w) && self.contains(w, v)
        })
    }

    /// Checks the laws implied by the kind tag.
    pub fn validate(&self) -> Result<(), RelationError> {
        let n = self.vertex_count();
        for v in 0..n {
            if !self.contains(v, v) {
                return Err(RelationError::NotReflexive(v));
            }
        }
        for u in 0..n {
            for v in self.rows[u].iter() {
                if !self.rows[v].is_subset(&self.rows[u]) {
                    let w = self.rows[v].difference(&self.rows[u]).first().unwrap();
                    return Err(RelationError::NotTransitive(u, v, w));
                }
            }
        }
        if self.kind == RelationKind::Equivalence {
            for (v, w) in self.pairs() {
                if !self.contains(w, v) {
                    return Err(RelationError::NotSymmetric(v, w));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for VertexRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VertexRelation")
            .field("kind", &self.kind)
            .field("pairs", &self.pairs().collect::<Vec<_>>())
            .finish()
    }
}

/// A partition of `0..n` into non-empty classes. Classes are numbered in
/// ascending order of their least vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<VertexSet>,
}

impl Partition {
    /// Groups vertices with equal labels; `labels[v]` is the label of `v`.
    pub fn from_labels<L: Eq + Hash>(labels: &[L]) -> Self {
        let n = labels.len();
        let mut ids: HashMap<&L, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(n);
        let mut classes: Vec<VertexSet> = Vec::new();
        for (v, label) in labels.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(label).or_insert(next);
            if id == classes.len() {
                classes.push(VertexSet::empty(n));
            }
            classes[id].insert(v);
            class_of.push(id);
        }
        Self { class_of, classes }
    }

    /// Each vertex in its own class.
    pub fn discrete(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    /// All vertices in one class.
    pub fn trivial(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// The classes of an equivalence relation.
    pub fn from_equivalence(relation: &VertexRelation) -> Result<Self, RelationError> {
        let mut sym = relation.clone();
        sym.kind = RelationKind::Equivalence;
        sym.validate()?;
        let n = relation.vertex_count();
        let labels: Vec<usize> = (0..n)
            .map(|v| relation.row(v).first().expect("reflexive"))
            .collect();
        Ok(Self::from_labels(&labels))
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class(&self, index: usize) -> &VertexSet {
        &self.classes[index]
    }

    /// The class containing `v`.
    pub fn class_containing(&self, v: Vertex) -> &VertexSet {
        &self.classes[self.class_of[v]]
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn same_class(&self, v: Vertex, w: Vertex) -> bool {
        self.class_of[v] == self.class_of[w]
    }

    /// True iff every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.classes.iter().all(|c| {
                let first = c.first().expect("classes are non-empty");
                c.iter().all(|v| other.same_class(first, v))
            })
    }

    /// A pair `(v, w)` related here but not in `other`, if any.
    pub fn separated_pair(&self, other: &Partition) -> Option<(Vertex, Vertex)> {
        self.classes.iter().find_map(|c| {
            let first = c.first()?;
            c.iter()
                .find(|&v| !other.same_class(first, v))
                .map(|v| (first, v))
        })
    }

    pub fn to_relation(&self) -> VertexRelation {
        VertexRelation::from_fn(self.vertex_count(), RelationKind::Equivalence, |v, w| {
            self.same_class(v, w)
        })
    }

    pub fn validate(&self) -> Result<(), RelationError> {
        let n = self.vertex_count();
        let mut seen = VertexSet::empty(n);
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(RelationError::MalformedPartition(format!(
                    "class {i} is empty"
                )));
            }
            if !class.is_disjoint(&seen) {
                return Err(RelationError::MalformedPartition(format!(
                    "class {i} overlaps an earlier class"
                )));
            }
            seen.union_with(class);
            if class.iter().any(|v| self.class_of[v] != i) {
                return Err(RelationError::MalformedPartition(format!(
                    "class {i} disagrees with the class index"
                )));
            }
        }
        if seen.len() != n {
            return Err(RelationError::MalformedPartition(
                "classes do not cover every vertex".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.classes.iter()).finish()
    }
}
