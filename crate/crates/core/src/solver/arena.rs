use std::collections::HashMap;
use std::collections::VecDeque;
use std::hash::Hash;

use thiserror::Error;

use crate::vertex_set::VertexSet;

/// The two players of a simulation or bisimulation game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Spoiler,
    Duplicator,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArenaError {
    #[error("position {0} has no successors")]
    NoSuccessors(usize),
    #[error("position {position} has successor {successor}, which is not a position")]
    DanglingSuccessor { position: usize, successor: usize },
    #[error("position {0} is not won by Duplicator")]
    NotWon(usize),
    #[error("position data have inconsistent lengths")]
    LengthMismatch,
}

/// How a position of an arena under construction looks: its owner, whether
/// it is accepting, and the positions it leads to.
pub struct Expansion<P> {
    pub owner: Role,
    pub accepting: bool,
    pub successors: Vec<P>,
}

/// An explicit turn-based game graph with a Büchi acceptance set. Each
/// position carries a payload describing what it encodes.
#[derive(Clone, Debug)]
pub struct Arena<P> {
    owner: Vec<Role>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
    accepting: VertexSet,
    payload: Vec<P>,
    index: HashMap<P, usize>,
}

impl<P: Clone + Eq + Hash> Arena<P> {
    /// Builds the part of an arena reachable from `roots`, discovering
    /// positions breadth first. Roots receive the lowest indices, in order.
    pub fn explore(
        roots: impl IntoIterator<Item = P>,
        mut expand: impl FnMut(&P) -> Expansion<P>,
    ) -> Self {
        let mut index: HashMap<P, usize> = HashMap::new();
        let mut payload: Vec<P> = Vec::new();
        let mut queue = VecDeque::new();
        for root in roots {
            if !index.contains_key(&root) {
                index.insert(root.clone(), payload.len());
                queue.push_back(payload.len());
                payload.push(root);
            }
        }
        let mut owner = Vec::new();
        let mut successors = Vec::new();
        let mut accepting = Vec::new();
        while let Some(pos) = queue.pop_front() {
            debug_assert_eq!(pos, owner.len());
            let expansion = expand(&payload[pos]);
            assert!(
                !expansion.successors.is_empty(),
                "arena position without successors"
            );
            let mut succ = Vec::with_capacity(expansion.successors.len());
            for p in expansion.successors {
                let id = match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        let id = payload.len();
                        index.insert(p.clone(), id);
                        payload.push(p);
                        queue.push_back(id);
                        id
                    }
                };
                succ.push(id);
            }
            succ.sort_unstable();
            succ.dedup();
            owner.push(expansion.owner);
            accepting.push(expansion.accepting);
            successors.push(succ);
        }
        let n = payload.len();
        let accepting = VertexSet::from_vertices(n, (0..n).filter(|&p| accepting[p]));
        Self::assemble(owner, successors, accepting, payload, index)
    }

    /// An arena from explicit data, validating totality and edge targets.
    pub fn from_parts(
        owner: Vec<Role>,
        successors: Vec<Vec<usize>>,
        accepting: &[usize],
        payload: Vec<P>,
    ) -> Result<Self, ArenaError> {
        let n = owner.len();
        if successors.len() != n || payload.len() != n {
            return Err(ArenaError::LengthMismatch);
        }
        for (p, succ) in successors.iter().enumerate() {
            if succ.is_empty() {
                return Err(ArenaError::NoSuccessors(p));
            }
            if let Some(&q) = succ.iter().find(|&&q| q >= n) {
                return Err(ArenaError::DanglingSuccessor {
                    position: p,
                    successor: q,
                });
            }
        }
        if let Some(&q) = accepting.iter().find(|&&q| q >= n) {
            return Err(ArenaError::DanglingSuccessor {
                position: q,
                successor: q,
            });
        }
        let index = payload
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let successors = successors
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let accepting = VertexSet::from_vertices(n, accepting.iter().copied());
        Ok(Self::assemble(owner, successors, accepting, payload, index))
    }

    fn assemble(
        owner: Vec<Role>,
        successors: Vec<Vec<usize>>,
        accepting: VertexSet,
        payload: Vec<P>,
        index: HashMap<P, usize>,
    ) -> Self {
        let mut predecessors = vec![Vec::new(); owner.len()];
        for (p, succ) in successors.iter().enumerate() {
            for &q in succ {
                predecessors[q].push(p);
            }
        }
        Self {
            owner,
            successors,
            predecessors,
            accepting,
            payload,
            index,
        }
    }

    /// Index of the position carrying `payload`, if it was materialized.
    pub fn position(&self, payload: &P) -> Option<usize> {
        self.index.get(payload).copied()
    }
}

impl<P> Arena<P> {
    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    pub fn owner(&self, position: usize) -> Role {
        self.owner[position]
    }

    pub fn successors(&self, position: usize) -> &[usize] {
        &self.successors[position]
    }

    pub fn predecessors(&self, position: usize) -> &[usize] {
        &self.predecessors[position]
    }

    pub fn accepting(&self) -> &VertexSet {
        &self.accepting
    }

    pub fn is_accepting(&self, position: usize) -> bool {
        self.accepting.contains(position)
    }

    pub fn payload(&self, position: usize) -> &P {
        &self.payload[position]
    }

    pub fn payloads(&self) -> impl Iterator<Item = (usize, &P)> {
        self.payload.iter().enumerate()
    }
}
