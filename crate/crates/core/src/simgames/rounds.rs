use crate::game::{ParityGame, Player, Vertex};
use crate::solver::Role;

/// The two sides of a configuration: the left vertex is simulated by the
/// right one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A single move in a round: who moves the token on which side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub role: Role,
    pub side: Side,
}

/// The order of moves in a round from `(u0, u1)`, determined by the owners:
///
/// | owner u0 | owner u1 | first move        | second move       |
/// |----------|----------|-------------------|-------------------|
/// | Even     | Even     | Spoiler on u0     | Duplicator on u1  |
/// | Even     | Odd      | Spoiler on u0     | Spoiler on u1     |
/// | Odd      | Even     | Duplicator on u1  | Duplicator on u0  |
/// | Odd      | Odd      | Spoiler on u1     | Duplicator on u0  |
pub fn move_order(game: &ParityGame, u0: Vertex, u1: Vertex) -> [Move; 2] {
    use Role::{Duplicator, Spoiler};
    use Side::{Left, Right};
    let mv = |role, side| Move { role, side };
    match (game.owner(u0), game.owner(u1)) {
        (Player::Even, Player::Even) => [mv(Spoiler, Left), mv(Duplicator, Right)],
        (Player::Even, Player::Odd) => [mv(Spoiler, Left), mv(Spoiler, Right)],
        (Player::Odd, Player::Even) => [mv(Duplicator, Right), mv(Duplicator, Left)],
        (Player::Odd, Player::Odd) => [mv(Spoiler, Right), mv(Duplicator, Left)],
    }
}

/// All pairs reachable by moving the token on `side`.
pub(crate) fn advance(
    game: &ParityGame,
    left: Vertex,
    right: Vertex,
    side: Side,
) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    let (from, moved_left) = match side {
        Side::Left => (left, true),
        Side::Right => (right, false),
    };
    game.successors(from)
        .iter()
        .map(move |&t| if moved_left { (t, right) } else { (left, t) })
}
