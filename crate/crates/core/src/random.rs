//! Seeded random game generation.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{GameError, ParityGame, Player, Priority};

/// A game with `vertices` vertices, priorities uniform in `0..=max_priority`,
/// uniform owners and an out-degree drawn uniformly from `degree`, with
/// successors sampled without replacement. The same arguments always yield
/// the same game.
pub fn random_game(
    vertices: usize,
    max_priority: Priority,
    degree: RangeInclusive<usize>,
    seed: u64,
) -> Result<ParityGame, GameError> {
    let (lo, hi) = (*degree.start(), *degree.end());
    if vertices == 0 {
        return Err(GameError::Empty);
    }
    if lo == 0 || lo > hi || hi > vertices {
        return Err(GameError::DegreeRange { lo, hi, vertices });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut priority = Vec::with_capacity(vertices);
    let mut owner = Vec::with_capacity(vertices);
    let mut successors = Vec::with_capacity(vertices);
    for _ in 0..vertices {
        priority.push(rng.gen_range(0..=max_priority));
        owner.push(if rng.gen_bool(0.5) {
            Player::Odd
        } else {
            Player::Even
        });
        let d = rng.gen_range(lo..=hi);
        successors.push(sample(&mut rng, vertices, d).into_vec());
    }
    ParityGame::new(priority, owner, successors)
}
