//! The exhaustive game enumerator visits exactly one game per isomorphism class.

mod common;

use std::collections::HashSet;

use common::for_each_game;
use pgreduce_core::quotient::iso_check;
use pgreduce_core::ParityGame;

/// The least `(labels, successor masks)` encoding over all renumberings.
fn canonical_form(game: &ParityGame) -> Vec<(u32, usize, u32)> {
    let n = game.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(u32, usize, u32)>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut code = vec![(0, 0, 0); n];
        for v in 0..n {
            let mask = game.successors(v).iter().fold(0u32, |m, &w| m | 1 << p[w]);
            code[p[v]] = (game.priority(v), game.owner(v).index(), mask);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap()
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

#[test]
fn one_game_per_isomorphism_class() {
    for n in 1..=3 {
        let mut all_classes = HashSet::new();
        for_each_game(n, 2, 2, false, |g| {
            all_classes.insert(canonical_form(g));
        });
        let mut visited = HashSet::new();
        let mut count = 0;
        for_each_game(n, 2, 2, true, |g| {
            count += 1;
            visited.insert(canonical_form(g));
        });
        assert_eq!(count, visited.len(), "duplicate class for n = {n}");
        assert_eq!(visited, all_classes, "missing class for n = {n}");
    }
}

#[test]
fn canonical_forms_agree_with_iso_check() {
    let mut games = Vec::new();
    for_each_game(2, 1, 2, false, |g| games.push(g.clone()));
    for a in &games {
        for b in &games {
            assert_eq!(
                canonical_form(a) == canonical_form(b),
                iso_check(a, b).unwrap()
            );
        }
    }
}
