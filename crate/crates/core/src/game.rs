//! The parity game model and the reward order on priorities.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Vertex = usize;
pub type Priority = u32;

/// One of the two players. Even wins a play whose least infinitely recurring
/// priority is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player that benefits from seeing `priority` infinitely often.
    pub fn of_priority(priority: Priority) -> Player {
        if priority.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    pub const BOTH: [Player; 2] = [Player::Even, Player::Odd];
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => write!(f, "even"),
            Player::Odd => write!(f, "odd"),
        }
    }
}

/// The reward order: `reward_leq(n, m)` holds when `m` is at least as good
/// for Even as `n`. Small even priorities are best for Even, small odd
/// priorities are best for Odd.
pub fn reward_leq(n: Priority, m: Priority) -> bool {
    match (n.is_multiple_of(2), m.is_multiple_of(2)) {
        (true, false) => true,
        (true, true) => n <= m,
        (false, false) => m <= n,
        (false, true) => false,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("game has no vertices")]
    Empty,
    #[error("vertex {0} has no successors")]
    NoSuccessors(Vertex),
    #[error("vertex {vertex} has successor {successor}, which is not a vertex")]
    DanglingSuccessor { vertex: Vertex, successor: Vertex },
    #[error("vertex data have inconsistent lengths")]
    LengthMismatch,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex id {vertex}")]
    DuplicateVertex { line: usize, vertex: Vertex },
    #[error("vertex ids are not contiguous: vertex {0} is missing")]
    MissingVertex(Vertex),
    #[error("invalid out-degree range {lo}..={hi} for {vertices} vertices")]
    DegreeRange {
        lo: usize,
        hi: usize,
        vertices: usize,
    },
}

/// A parity game with a total edge relation over the vertices `0..n`.
///
/// Successor lists are sorted ascending and free of duplicates, so every
/// algorithm iterating over them is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityGame {
    priority: Vec<Priority>,
    owner: Vec<Player>,
    successors: Vec<Vec<Vertex>>,
    predecessors: Vec<Vec<Vertex>>,
    labels: Vec<Option<String>>,
}

impl ParityGame {
    /// Builds a game, sorting and deduplicating successor lists. Fails when the
    /// game is empty, a vertex has no successors or a successor is out of range.
    pub fn new(
        priority: Vec<Priority>,
        owner: Vec<Player>,
        successors: Vec<Vec<Vertex>>,
    ) -> Result<Self, GameError> {
        let n = priority.len();
        let labels = vec![None; n];
        Self::with_labels(priority, owner, successors, labels)
    }

    pub fn with_labels(
        priority: Vec<Priority>,
        owner: Vec<Player>,
        mut successors: Vec<Vec<Vertex>>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, GameError> {
        let n = priority.len();
        if owner.len() != n || successors.len() != n || labels.len() != n {
            return Err(GameError::LengthMismatch);
        }
        if n == 0 {
            return Err(GameError::Empty);
        }
        let mut predecessors = vec![Vec::new(); n];
        for (v, succ) in successors.iter_mut().enumerate() {
            succ.sort_unstable();
            succ.dedup();
            if succ.is_empty() {
                return Err(GameError::NoSuccessors(v));
            }
            for &w in succ.iter() {
                if w >= n {
                    return Err(GameError::DanglingSuccessor {
                        vertex: v,
                        successor: w,
                    });
                }
                predecessors[w].push(v);
            }
        }
        Ok(Self {
            priority,
            owner,
            successors,
            predecessors,
            labels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.priority.len()
    }

    pub fn vertices(&self) -> Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn priority(&self, v: Vertex) -> Priority {
        self.priority[v]
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owner[v]
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.successors[v]
    }

    /// Predecessors of `v` in ascending order.
    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.predecessors[v]
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.successors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_priority(&self) -> Priority {
        self.priority.iter().copied().max().unwrap_or(0)
    }

    pub fn has_edge(&self, v: Vertex, w: Vertex) -> bool {
        self.successors[v].binary_search(&w).is_ok()
    }

    /// All vertices owned by `player`.
    pub fn owned_by(&self, player: Player) -> VertexSet {
        VertexSet::from_vertices(
            self.vertex_count(),
            self.vertices().filter(|&v| self.owner[v] == player),
        )
    }

    /// The game with the vertices of `self` followed by those of `other`,
    /// whose indices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &ParityGame) -> ParityGame {
        let offset = self.vertex_count();
        let mut priority = self.priority.clone();
        priority.extend_from_slice(&other.priority);
        let mut owner = self.owner.clone();
        owner.extend_from_slice(&other.owner);
        let mut successors = self.successors.clone();
        successors.extend(
            other
                .successors
                .iter()
                .map(|s| s.iter().map(|&w| w + offset).collect()),
        );
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        ParityGame::with_labels(priority, owner, successors, labels)
            .expect("union of two total games is total")
    }
}

impl fmt::Debug for ParityGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ParityGame {{")?;
        for v in self.vertices() {
            writeln!(
                f,
                "  {v}: priority {} owner {} -> {:?}",
                self.priority[v], self.owner[v], self.successors[v]
            )?;
        }
        write!(f, "}}")
    }
}

/// The winner partition of a solved game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinningRegions {
    pub won_by_even: VertexSet,
    pub won_by_odd: VertexSet,
}

impl WinningRegions {
    pub fn winner(&self, v: Vertex) -> Player {
        if self.won_by_even.contains(v) {
            Player::Even
        } else {
            Player::Odd
        }
    }

    pub fn region(&self, player: Player) -> &VertexSet {
        match player {
            Player::Even => &self.won_by_even,
            Player::Odd => &self.won_by_odd,
        }
    }
}
