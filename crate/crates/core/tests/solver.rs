mod common;

use common::criteria::solver_agrees;
use common::{all_fixtures, for_each_game, random_corpus};
use pgreduce_core::random::random_game;
use pgreduce_core::simgames::{
    build_delayed_sim_arena, build_direct_sim_arena, build_governed_bisim_arena, build_gstut_arena,
    Bias,
};
use pgreduce_core::solver::{arena_as_parity_game, solve_buchi, solve_zielonka, Arena};
use pgreduce_core::ParityGame;

#[test]
fn zielonka_matches_strategy_enumeration_up_to_three_vertices() {
    for n in 1..=3 {
        for_each_game(n, 3, 3, false, |g| solver_agrees(g).unwrap());
    }
}

#[test]
fn zielonka_matches_strategy_enumeration_on_random_games() {
    for seed in 0..300 {
        let n = 1 + (seed % 10) as usize;
        let g = random_game(n, 6, 1..=n.min(3), seed).unwrap();
        solver_agrees(&g).unwrap();
    }
}

fn buchi_matches_parity<P>(arena: &Arena<P>) {
    let as_parity = arena_as_parity_game(arena);
    assert_eq!(solve_buchi(arena), solve_zielonka(&as_parity).won_by_even);
}

#[test]
fn buchi_solver_matches_parity_encoding() {
    let mut games: Vec<ParityGame> = all_fixtures().into_iter().map(|(_, g)| g).collect();
    games.extend(random_corpus(60));
    for g in &games {
        buchi_matches_parity(&build_direct_sim_arena(g));
        buchi_matches_parity(&build_governed_bisim_arena(g));
        buchi_matches_parity(&build_gstut_arena(g));
        for bias in Bias::ALL {
            buchi_matches_parity(&build_delayed_sim_arena(g, bias));
        }
    }
}

#[test]
fn single_even_loop() {
    let g = ParityGame::new(vec![0], vec![pgreduce_core::Player::Even], vec![vec![0]]).unwrap();
    let r = solve_zielonka(&g);
    assert_eq!(r.won_by_even.len(), 1);
    assert!(r.won_by_odd.is_empty());
}
