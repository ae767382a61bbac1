//! Graphviz export: Even vertices are diamonds, Odd vertices are boxes.

use std::fmt::Write;

use crate::game::{ParityGame, Player};

pub fn to_dot(game: &ParityGame) -> String {
    let mut out = String::from("digraph game {\n");
    for v in game.vertices() {
        let shape = match game.owner(v) {
            Player::Even => "diamond",
            Player::Odd => "box",
        };
        writeln!(
            out,
            "  {v} [shape={shape}, label=\"{v}:{}\"];",
            game.priority(v)
        )
        .unwrap();
    }
    for v in game.vertices() {
        for w in game.successors(v) {
            writeln!(out, "  {v} -> {w};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
