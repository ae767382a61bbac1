//! Exact isomorphism search for small games.
//!
//! Vertices are first colored by iterated refinement on priority, owner and
//! the colors of successors and predecessors; the backtracking search then
//! only pairs vertices of equal color.

use std::collections::HashMap;

use thiserror::Error;

use crate::game::{ParityGame, Vertex};
use crate::relation::Partition;

/// Largest game accepted by the isomorphism search.
pub const MAX_ISO_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("isomorphism search is limited to {MAX_ISO_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// True iff a bijection between the two games preserves priorities, owners
/// and edges.
pub fn iso_check(g1: &ParityGame, g2: &ParityGame) -> Result<bool, IsoError> {
    guard(g1)?;
    guard(g2)?;
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok(Search::new(g1, g2, None).run())
}

/// True iff some isomorphism from `g1` to `g2` maps `v` to `w`.
pub fn isomorphic_vertices(
    g1: &ParityGame,
    v: Vertex,
    g2: &ParityGame,
    w: Vertex,
) -> Result<bool, IsoError> {
    guard(g1)?;
    guard(g2)?;
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok(Search::new(g1, g2, Some((v, w))).run())
}

/// The orbits of the automorphism group: `v` and `w` share a class iff some
/// automorphism maps `v` to `w`.
#[allow(clippy::needless_range_loop)]
pub fn automorphism_partition(game: &ParityGame) -> Result<Partition, IsoError> {
    guard(game)?;
    let n = game.vertex_count();
    let mut orbit: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if orbit[v] != v {
            continue;
        }
        for w in v + 1..n {
            if orbit[w] == w && Search::new(game, game, Some((v, w))).run() {
                orbit[w] = v;
            }
        }
    }
    Ok(Partition::from_labels(&orbit))
}

fn guard(game: &ParityGame) -> Result<(), IsoError> {
    if game.vertex_count() > MAX_ISO_VERTICES {
        Err(IsoError::TooLarge(game.vertex_count()))
    } else {
        Ok(())
    }
}

struct Search<'a> {
    g1: &'a ParityGame,
    g2: &'a ParityGame,
    color1: Vec<usize>,
    color2: Vec<usize>,
    /// Vertices of `g1` in the order they are assigned.
    order: Vec<Vertex>,
    map: Vec<Option<Vertex>>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g1: &'a ParityGame, g2: &'a ParityGame, pinned: Option<(Vertex, Vertex)>) -> Self {
        let (color1, color2) = refine_colors(g1, g2, pinned);
        let mut order: Vec<Vertex> = g1.vertices().collect();
        let mut class_size: HashMap<usize, usize> = HashMap::new();
        for &c in &color1 {
            *class_size.entry(c).or_default() += 1;
        }
        order.sort_by_key(|&v| (class_size[&color1[v]], color1[v], v));
        Self {
            g1,
            g2,
            color1,
            color2,
            order,
            map: vec![None; g1.vertex_count()],
            used: vec![false; g2.vertex_count()],
        }
    }

    fn run(&mut self) -> bool {
        let mut histogram: HashMap<usize, isize> = HashMap::new();
        for &c in &self.color1 {
            *histogram.entry(c).or_default() += 1;
        }
        for &c in &self.color2 {
            *histogram.entry(c).or_default() -= 1;
        }
        histogram.values().all(|&d| d == 0) && self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&a) = self.order.get(depth) else {
            return true;
        };
        for b in self.g2.vertices() {
            if self.used[b] || self.color2[b] != self.color1[a] || !self.consistent(a, b) {
                continue;
            }
            self.map[a] = Some(b);
            self.used[b] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[a] = None;
            self.used[b] = false;
        }
        false
    }

    /// Whether mapping `a` to `b` agrees on edges with every earlier choice.
    fn consistent(&self, a: Vertex, b: Vertex) -> bool {
        if self.g1.has_edge(a, a) != self.g2.has_edge(b, b) {
            return false;
        }
        self.g1.vertices().all(|x| match self.map[x] {
            None => true,
            Some(y) => {
                self.g1.has_edge(a, x) == self.g2.has_edge(b, y)
                    && self.g1.has_edge(x, a) == self.g2.has_edge(y, b)
            }
        })
    }
}

/// Stable colors for both games under a shared numbering, so that equal
/// colors across the games are comparable.
fn refine_colors(
    g1: &ParityGame,
    g2: &ParityGame,
    pinned: Option<(Vertex, Vertex)>,
) -> (Vec<usize>, Vec<usize>) {
    let n1 = g1.vertex_count();
    let games = [g1, g2];
    let vertex = |i: usize| if i < n1 { (0, i) } else { (1, i - n1) };
    let total = n1 + g2.vertex_count();
    let initial: Vec<(u32, u8, bool)> = (0..total)
        .map(|i| {
            let (g, v) = vertex(i);
            let pin = pinned.is_some_and(|(a, b)| if g == 0 { v == a } else { v == b });
            let owner = games[g].owner(v).index() as u8;
            (games[g].priority(v), owner, pin)
        })
        .collect();
    let mut colors = renumber(&initial);
    let mut count = distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..total)
            .map(|i| {
                let (g, v) = vertex(i);
                let offset = if g == 0 { 0 } else { n1 };
                let mut out: Vec<usize> = games[g]
                    .successors(v)
                    .iter()
                    .map(|&w| colors[w + offset])
                    .collect();
                let mut inc: Vec<usize> = games[g]
                    .predecessors(v)
                    .iter()
                    .map(|&w| colors[w + offset])
                    .collect();
                out.sort_unstable();
                inc.sort_unstable();
                (colors[i], out, inc)
            })
            .collect();
        let next = renumber(&signatures);
        let next_count = distinct(&next);
        colors = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    let color2 = colors.split_off(n1);
    (colors, color2)
}

/// Replaces each signature by a small integer; equal signatures share one.
fn renumber<T: Ord + Clone>(signatures: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = signatures.to_vec();
    sorted.sort();
    sorted.dedup();
    signatures
        .iter()
        .map(|s| sorted.binary_search(s).unwrap())
        .collect()
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
