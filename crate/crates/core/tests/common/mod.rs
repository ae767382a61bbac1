//! Fixtures, game corpora and brute-force oracles shared by the test targets.

#![allow(dead_code)]

pub mod criteria;

use std::path::PathBuf;

use pgreduce_core::pgsolver::parse_pgsolver;
use pgreduce_core::random::random_game;
use pgreduce_core::{ParityGame, Player, Priority};

pub fn fixture(name: &str) -> ParityGame {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "fixtures",
        &format!("{name}.pg"),
    ]
    .iter()
    .collect();
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_pgsolver(&bytes).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub const FIXTURES: [&str; 7] = [
    "fake_divergence",
    "direct_sim",
    "delayed_sim",
    "governed_bisim",
    "strong_minimal",
    "cycle_and_loop",
    "even_bias",
];

pub fn all_fixtures() -> Vec<(&'static str, ParityGame)> {
    FIXTURES.iter().map(|&name| (name, fixture(name))).collect()
}

/// Calls `visit` on every total game with `n` vertices, priorities in
/// `0..=max_priority` and out-degrees in `1..=max_degree`.
///
/// With `up_to_isomorphism`, only one game per isomorphism class is visited:
/// the one whose `(priority, owner)` labels are nondecreasing in the vertex
/// index and whose successor masks are lexicographically least among all
/// label-preserving renumberings.
pub fn for_each_game(
    n: usize,
    max_priority: Priority,
    max_degree: usize,
    up_to_isomorphism: bool,
    mut visit: impl FnMut(&ParityGame),
) {
    let successor_masks: Vec<u32> = (1u32..(1 << n))
        .filter(|m| m.count_ones() as usize <= max_degree)
        .collect();
    let labels: Vec<(Priority, Player)> = (0..=max_priority)
        .flat_map(|p| Player::BOTH.map(|o| (p, o)))
        .collect();
    let mut label_choice = vec![0usize; n];
    loop {
        let sorted = label_choice.windows(2).all(|w| w[0] <= w[1]);
        if !up_to_isomorphism || sorted {
            let priority: Vec<Priority> = label_choice.iter().map(|&l| labels[l].0).collect();
            let owner: Vec<Player> = label_choice.iter().map(|&l| labels[l].1).collect();
            let renumberings = if up_to_isomorphism {
                label_preserving_permutations(&label_choice)
            } else {
                Vec::new()
            };
            let mut succ_choice = vec![0usize; n];
            let mut masks = vec![0u32; n];
            loop {
                for (m, &c) in masks.iter_mut().zip(&succ_choice) {
                    *m = successor_masks[c];
                }
                if renumberings.iter().all(|p| !permuted_is_smaller(&masks, p)) {
                    let successors = masks
                        .iter()
                        .map(|&m| (0..n).filter(|&w| m >> w & 1 == 1).collect())
                        .collect();
                    let game =
                        ParityGame::new(priority.clone(), owner.clone(), successors).unwrap();
                    visit(&game);
                }
                if !advance(&mut succ_choice, successor_masks.len()) {
                    break;
                }
            }
        }
        if !advance(&mut label_choice, labels.len()) {
            break;
        }
    }
}

/// Every non-identity permutation of `0..labels.len()` that only swaps
/// vertices with equal labels. `labels` must be sorted.
fn label_preserving_permutations(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut perms = vec![(0..labels.len()).collect::<Vec<_>>()];
    let mut start = 0;
    while start < labels.len() {
        let mut end = start;
        while end < labels.len() && labels[end] == labels[start] {
            end += 1;
        }
        let mut next = Vec::new();
        for p in &perms {
            for run in permutations(&p[start..end]) {
                let mut q = p.clone();
                q[start..end].copy_from_slice(&run);
                next.push(q);
            }
        }
        perms = next;
        start = end;
    }
    perms.retain(|p| p.iter().enumerate().any(|(i, &x)| i != x));
    perms
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Whether renumbering vertex `v` to `perm[v]` yields a lexicographically
/// smaller mask vector.
fn permuted_is_smaller(masks: &[u32], perm: &[usize]) -> bool {
    let mut permuted = [0u32; 32];
    for (v, &m) in masks.iter().enumerate() {
        let mut image = 0u32;
        let mut rest = m;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            image |= 1 << perm[w];
        }
        permuted[perm[v]] = image;
    }
    permuted[..masks.len()] < *masks
}

/// Odometer step; false once every digit has wrapped around.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every total game with at most 3 vertices, out-degree at most 2 and
/// priorities at most 2.
pub fn small_corpus() -> Vec<ParityGame> {
    let mut games = Vec::new();
    for n in 1..=3 {
        for_each_game(n, 2, 2, false, |g| games.push(g.clone()));
    }
    games
}

/// `count` seeded random games with 1 to 8 vertices.
pub fn random_corpus(count: u64) -> Vec<ParityGame> {
    (0..count)
        .map(|seed| {
            let n = 1 + (seed % 8) as usize;
            let max_priority = (seed % 4) as Priority;
            random_game(n, max_priority, 1..=n.min(3), seed).unwrap()
        })
        .collect()
}

/// The coincidence corpus: all small games plus 200 random ones.
pub fn full_corpus() -> Vec<ParityGame> {
    let mut games = small_corpus();
    games.extend(random_corpus(200));
    games
}

/// A game as successor bitmasks, for brute-force strategy enumeration.
pub struct Masks {
    pub n: usize,
    pub succ: Vec<u32>,
    pub priority: Vec<Priority>,
    pub owner: Vec<Player>,
}

impl Masks {
    pub fn new(game: &ParityGame) -> Self {
        Self {
            n: game.vertex_count(),
            succ: game
                .vertices()
                .map(|v| game.successors(v).iter().fold(0, |m, &w| m | 1 << w))
                .collect(),
            priority: game.vertices().map(|v| game.priority(v)).collect(),
            owner: game.vertices().map(|v| game.owner(v)).collect(),
        }
    }

    /// Calls `visit` with the successor masks of every memoryless strategy
    /// of `player`, the opponent keeping all its moves.
    pub fn for_each_strategy(&self, player: Player, mut visit: impl FnMut(&[u32])) {
        let mut graph = self.succ.clone();
        self.choose(player, 0, &mut graph, &mut visit);
    }

    fn choose(
        &self,
        player: Player,
        v: usize,
        graph: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32]),
    ) {
        if v == self.n {
            visit(graph);
            return;
        }
        if self.owner[v] != player {
            self.choose(player, v + 1, graph, visit);
            return;
        }
        let mut rest = self.succ[v];
        while rest != 0 {
            let w = rest.trailing_zeros();
            rest &= rest - 1;
            graph[v] = 1 << w;
            self.choose(player, v + 1, graph, visit);
        }
        graph[v] = self.succ[v];
    }

    /// Vertices from which some path in `graph` reaches a cycle whose least
    /// priority is won by `player`.
    pub fn can_reach_cycle_for(&self, graph: &[u32], player: Player) -> u32 {
        let mut good_cycles = 0u32;
        for u in 0..self.n {
            if Player::of_priority(self.priority[u]) != player {
                continue;
            }
            let allowed: u32 = (0..self.n)
                .filter(|&x| self.priority[x] >= self.priority[u])
                .fold(0, |m, x| m | 1 << x);
            // Is u reachable from its own successors inside `allowed`?
            let mut seen = 0u32;
            let mut frontier = graph[u] & allowed;
            while frontier != 0 {
                seen |= frontier;
                let mut next = 0u32;
                let mut f = frontier;
                while f != 0 {
                    let x = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= graph[x] & allowed;
                }
                frontier = next & !seen;
            }
            if seen & 1 << u != 0 {
                good_cycles |= 1 << u;
            }
        }
        self.backward_closure(graph, good_cycles)
    }

    fn backward_closure(&self, graph: &[u32], target: u32) -> u32 {
        let mut reach = target;
        loop {
            let grown = (0..self.n)
                .filter(|&x| graph[x] & reach != 0)
                .fold(reach, |m, x| m | 1 << x);
            if grown == reach {
                return reach;
            }
            reach = grown;
        }
    }

    /// The vertices `player` wins with some memoryless strategy: those where
    /// the opponent cannot reach a cycle it wins in the restricted graph.
    pub fn memoryless_region(&self, player: Player) -> u32 {
        let all = if self.n == 32 {
            u32::MAX
        } else {
            (1 << self.n) - 1
        };
        let mut region = 0u32;
        self.for_each_strategy(player, |graph| {
            region |= all & !self.can_reach_cycle_for(graph, player.opponent());
        });
        region
    }
}

pub fn mask_of(set: &pgreduce_core::VertexSet) -> u32 {
    set.iter().fold(0, |m, v| m | 1 << v)
}
