//! Corpus-wide checks. Each returns the first counterexample as an error.

use pgreduce_core::equivalences::{
    direct_sim, equivalence_from_preorder, governed_bisim, gstut_bisim, strong_bisim,
    strong_direct_sim, wf_delayed_sim,
};
use pgreduce_core::forcing::{attractor, attractor_layers, diverges, forces, Distance};
use pgreduce_core::lattice::{RelationBundle, INCLUSIONS};
use pgreduce_core::pgsolver::serialize_pgsolver;
use pgreduce_core::quotient::{
    automorphism_partition, equivalent_to_original, iso_check, quotient, verify_preservation,
    EquivalenceKind,
};
use pgreduce_core::random::random_game;
use pgreduce_core::simgames::{coincidence_check, delayed_sim, wf_rank_check, Bias, Notion};
use pgreduce_core::solver::solve_zielonka;
use pgreduce_core::{ParityGame, Player, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{all_fixtures, fixture, for_each_game, mask_of, Masks};

pub type Outcome = Result<(), String>;

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Outcome {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn describe(game: &ParityGame) -> String {
    serialize_pgsolver(game)
}

/// The three equivalences with a unique quotient.
pub const QUOTIENT_KINDS: [EquivalenceKind; 3] = [
    EquivalenceKind::DirectSim,
    EquivalenceKind::GovernedBisim,
    EquivalenceKind::GstutBisim,
];

pub fn direct_sim_caption() -> Outcome {
    let g = fixture("direct_sim");
    let r = direct_sim(&g);
    for (v, w) in [(0, 1), (0, 2), (2, 0), (0, 0), (1, 1), (2, 2), (3, 3)] {
        ensure(r.contains(v, w), || format!("expected v{v} below v{w}"))?;
    }
    ensure(!r.contains(1, 0), || "v1 must not be below v0".into())
}

pub fn delayed_sim_caption() -> Outcome {
    let g = fixture("delayed_sim");
    let n = g.vertex_count();
    let by_game = delayed_sim(&g, Bias::None);
    let by_fixpoint = wf_delayed_sim(&g, Bias::None);
    ensure(by_game.size() == n * n, || {
        format!("game-based relation {by_game:?}")
    })?;
    ensure(by_fixpoint.size() == n * n, || {
        format!("fixpoint relation {by_fixpoint:?}")
    })
}

pub fn governed_bisim_caption() -> Outcome {
    let g = fixture("governed_bisim");
    let governed = governed_bisim(&g);
    let direct = equivalence_from_preorder(&direct_sim(&g)).unwrap();
    let strong_direct = equivalence_from_preorder(&strong_direct_sim(&g)).unwrap();
    ensure(governed.same_class(2, 3), || {
        "v2, v3 not governed bisimilar".into()
    })?;
    ensure(direct.same_class(0, 1) && direct.same_class(0, 6), || {
        format!("v0, v1, v6 not direct simulation equivalent: {direct:?}")
    })?;
    ensure(
        governed.same_class(0, 6) && !strong_direct.same_class(0, 6),
        || "v0, v6 must be governed bisimilar but not strong direct equivalent".into(),
    )?;
    ensure(
        strong_direct.same_class(0, 1) && !governed.same_class(0, 1),
        || "v0, v1 must be strong direct equivalent but not governed bisimilar".into(),
    )
}

pub fn fake_divergence_caption() -> Outcome {
    let g = fixture("fake_divergence");
    let classes = gstut_bisim(&g);
    let zero = VertexSet::from_vertices(5, [0, 1, 3, 4]);
    ensure(classes.class_containing(0) == &zero, || {
        format!("class of v0 is {:?}", classes.class_containing(0))
    })?;
    for v in zero.iter() {
        for p in Player::BOTH {
            ensure(!diverges(&g, p, v, &zero), || {
                format!("{p} can keep v{v} among the priority-0 vertices")
            })?;
        }
    }
    Ok(())
}

pub fn strong_minimal_caption() -> Outcome {
    let g = fixture("strong_minimal");
    let strong = strong_bisim(&g);
    ensure(strong.len() == g.vertex_count(), || {
        format!("strong classes {strong:?}")
    })?;
    // Vertices 1 and 2 are the caption's v2 and v3.
    ensure(governed_bisim(&g).same_class(1, 2), || {
        "v2, v3 not governed bisimilar".into()
    })
}

pub fn cycle_and_loop_example() -> Outcome {
    let union = fixture("cycle_and_loop");
    let strong = strong_bisim(&union);
    ensure(strong.len() == 1, || format!("strong classes {strong:?}"))?;
    let orbits = automorphism_partition(&union).unwrap();
    ensure(!orbits.same_class(0, 2) && !orbits.same_class(1, 2), || {
        format!("cycle and loop vertices share an orbit: {orbits:?}")
    })?;
    let cycle = ParityGame::new(vec![0, 0], vec![Player::Even; 2], vec![vec![1], vec![0]]).unwrap();
    let looped = ParityGame::new(vec![0], vec![Player::Even], vec![vec![0]]).unwrap();
    ensure(!iso_check(&cycle, &looped).unwrap(), || {
        "cycle isomorphic to loop".into()
    })
}

pub fn figure_claims() -> Vec<(&'static str, Outcome)> {
    vec![
        ("direct simulation caption", direct_sim_caption()),
        ("delayed simulation caption", delayed_sim_caption()),
        ("governed bisimulation caption", governed_bisim_caption()),
        ("fake divergence caption", fake_divergence_caption()),
        (
            "strong bisimulation minimality caption",
            strong_minimal_caption(),
        ),
        ("cycle versus loop", cycle_and_loop_example()),
    ]
}

pub fn coincidence(corpus: &[ParityGame]) -> Outcome {
    for game in corpus {
        for notion in Notion::ALL {
            ensure(coincidence_check(game, notion), || {
                format!("{notion} differs on\n{}", describe(game))
            })?;
        }
    }
    Ok(())
}

pub fn lattice_inclusions(corpus: &[ParityGame]) -> Outcome {
    for game in corpus {
        let bundle = RelationBundle::compute(game).map_err(|e| e.to_string())?;
        for verdict in bundle.check_inclusions() {
            ensure(verdict.holds(), || {
                format!(
                    "{} violated by {:?} on\n{}",
                    verdict.edge_name(),
                    verdict.violation,
                    describe(game)
                )
            })?;
        }
    }
    Ok(())
}

/// Every inclusion of the lattice is strict on some fixture.
pub fn lattice_strictness() -> Outcome {
    let bundles: Vec<(&str, RelationBundle)> = all_fixtures()
        .into_iter()
        .map(|(name, g)| (name, RelationBundle::compute(&g).unwrap()))
        .collect();
    for (finer, coarser) in INCLUSIONS {
        ensure(
            bundles
                .iter()
                .any(|(_, b)| b.get(coarser).separated_pair(b.get(finer)).is_some()),
            || format!("no fixture separates {finer} from {coarser}"),
        )?;
    }
    Ok(())
}

pub fn quotient_correctness(corpus: &[ParityGame], kinds: &[EquivalenceKind]) -> Outcome {
    for game in corpus {
        for &kind in kinds {
            let result = quotient(game, kind);
            let q = &result.quotient;
            let classes = kind.partition(game);
            ensure(
                result.class_map == classes.class_map()
                    && q.vertex_count() == classes.len()
                    && q.vertices().all(|c| !q.successors(c).is_empty()),
                || format!("{kind} quotient is malformed on\n{}", describe(game)),
            )?;
            ensure(equivalent_to_original(game, &result), || {
                format!("{kind} quotient not equivalent to\n{}", describe(game))
            })?;
            ensure(verify_preservation(game, &result), || {
                format!("{kind} quotient changes winners of\n{}", describe(game))
            })?;
            let again = quotient(q, kind);
            ensure(iso_check(&again.quotient, q).unwrap(), || {
                format!("{kind} quotient is not idempotent on\n{}", describe(game))
            })?;
        }
    }
    Ok(())
}

/// Brute-force forcing: some memoryless strategy of `player` makes every
/// play from `v` reach `target` within `bound` steps, staying in `within`
/// before. `bound = None` means any finite number of steps.
pub fn forces_by_strategies(
    masks: &Masks,
    player: Player,
    v: usize,
    within: u32,
    target: u32,
    bound: Option<usize>,
) -> bool {
    let mut found = false;
    masks.for_each_strategy(player, |graph| {
        if found {
            return;
        }
        let mut done = target;
        for _ in 0..bound.unwrap_or(masks.n + 1) {
            let next = (0..masks.n)
                .filter(|&x| within >> x & 1 == 1 && graph[x] & !done == 0)
                .fold(done, |m, x| m | 1 << x);
            if next == done {
                break;
            }
            done = next;
        }
        found |= done >> v & 1 == 1;
    });
    found
}

/// Brute-force divergence: some memoryless strategy keeps every play from
/// `v` inside `within`.
pub fn diverges_by_strategies(masks: &Masks, player: Player, v: usize, within: u32) -> bool {
    let mut found = false;
    masks.for_each_strategy(player, |graph| {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = graph[x] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        found |= seen & !within == 0;
    });
    found
}

fn set_of(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// The forcing lemmas on one random game of at most 6 vertices with random
/// constraint and target sets.
pub fn forcing_lemmas(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=6);
    let game = random_game(n, 3, 1..=n.min(3), seed).unwrap();
    let masks = Masks::new(&game);
    let all = (1u32 << n) - 1;
    let u_mask = rng.gen::<u32>() & all;
    let t_mask = rng.gen::<u32>() & all;
    let t2_mask = rng.gen::<u32>() & all;
    let (u, t, t2) = (set_of(n, u_mask), set_of(n, t_mask), set_of(n, t2_mask));
    let full = VertexSet::full(n);
    let fail = |what: &str| format!("{what} (seed {seed}) on\n{}", describe(&game));

    for p in Player::BOTH {
        let q = p.opponent();
        let attr = attractor(&game, p, &u, &t);
        let layers = attractor_layers(&game, p, &u, &t);
        let attr_t2 = attractor(&game, p, &u, &t2);
        let big = t.union(&t2);
        let attr_big = attractor(&game, p, &u, &big);
        ensure(attr.is_subset(&attr_big), || {
            fail("attractor is not monotone")
        })?;
        ensure(attractor(&game, p, &u, &attr) == attr, || {
            fail("attractor not idempotent")
        })?;

        for (v, layer) in layers.iter().enumerate() {
            // Memoryless forcing coincides with attractor membership, also
            // layer by layer.
            let brute = forces_by_strategies(&masks, p, v, u_mask, t_mask, None);
            ensure(brute == attr.contains(v), || {
                fail("forcing differs from attractor")
            })?;
            for bound in 0..=n {
                let bounded = forces_by_strategies(&masks, p, v, u_mask, t_mask, Some(bound));
                let layered = matches!(layer, Distance::Finite(d) if *d <= bound);
                ensure(bounded == layered, || {
                    fail("bounded forcing differs from layers")
                })?;
            }

            // One player forces T or the other forces its complement.
            ensure(
                forces(&game, p, v, &u, &t) || forces(&game, q, v, &u, &t.complement()),
                || fail("neither player forces"),
            )?;

            // Opposed forcing targets overlap or touch the constraint.
            if forces(&game, p, v, &u, &t) && forces(&game, q, v, &u, &t2) {
                let touch = t
                    .iter()
                    .any(|a| t2.iter().any(|b| a == b || u.contains(a) || u.contains(b)));
                ensure(touch, || fail("opposed forcing targets are unrelated"))?;
            }

            // Divergence is the failure of the opponent to leave.
            let div = diverges(&game, p, v, &u);
            ensure(div == !forces(&game, q, v, &u, &u.complement()), || {
                fail("divergence is not the dual of escaping")
            })?;
            ensure(div == diverges_by_strategies(&masks, p, v, u_mask), || {
                fail("divergence differs from brute force")
            })?;

            // Forcing composes.
            if attr.contains(v) && t.iter().all(|x| attr_t2.contains(x)) {
                ensure(attr_t2.contains(v), || fail("forcing does not compose"))?;
            }

            // Forcing out of U needs a player exit or an unavoidable exit.
            if !t.contains(v) && attr.contains(v) {
                let exits: Vec<usize> = u
                    .iter()
                    .filter(|&x| game.successors(x).iter().any(|&y| t.contains(y)))
                    .collect();
                let ok = exits.iter().any(|&x| game.owner(x) == p)
                    || exits
                        .iter()
                        .any(|&x| game.successors(x).iter().all(|&y| t.contains(y)));
                ensure(ok, || fail("forcing without an exit"))?;
            }

            // Shrinking the target to the part reachable from U keeps
            // forcing, provided U and T are disjoint.
            let closed = u.iter().all(|x| {
                game.successors(x)
                    .iter()
                    .all(|&y| u.contains(y) || t2.contains(y))
            });
            if u.contains(v) && u.is_disjoint(&t) && t2.is_subset(&t) && closed && attr.contains(v)
            {
                ensure(attr_t2.contains(v), || fail("restricted exit lemma fails"))?;
            }
        }
        ensure(
            attractor(&game, p, &full, &t).is_subset(&attractor(&game, p, &full, &big)),
            || fail("unconstrained attractor is not monotone"),
        )?;
    }
    Ok(())
}

pub fn forcing_suite(seeds: std::ops::Range<u64>) -> Outcome {
    for seed in seeds {
        forcing_lemmas(seed)?;
    }
    Ok(())
}

pub fn wf_ranks(corpus: &[ParityGame]) -> Outcome {
    for game in corpus {
        for bias in Bias::ALL {
            ensure(wf_rank_check(game, bias), || {
                format!("rank witness fails for {bias:?} on\n{}", describe(game))
            })?;
        }
    }
    Ok(())
}

/// Compares the solver with memoryless strategy enumeration for both players.
pub fn solver_agrees(game: &ParityGame) -> Outcome {
    let masks = Masks::new(game);
    let regions = solve_zielonka(game);
    let even = masks.memoryless_region(Player::Even);
    let odd = masks.memoryless_region(Player::Odd);
    ensure(
        mask_of(&regions.won_by_even) == even && mask_of(&regions.won_by_odd) == odd,
        || {
            format!(
                "solver says even {:?} odd {:?}, strategies say {even:#b} {odd:#b} on\n{}",
                regions.won_by_even,
                regions.won_by_odd,
                describe(game)
            )
        },
    )
}

/// Exhaustive solver check over games of out-degree at most 2, one per
/// isomorphism class: up to 4 vertices with priorities up to 4, which covers
/// every priority pattern, and 5 vertices with priorities 0 and 1.
/// Returns the number of games checked.
pub fn solver_oracle() -> Result<u64, String> {
    let mut checked = 0u64;
    let mut outcome = Ok(());
    let scopes: [(usize, u32); 5] = [(1, 4), (2, 4), (3, 4), (4, 4), (5, 1)];
    for (n, max_priority) in scopes {
        for_each_game(n, max_priority, 2, true, |g| {
            if outcome.is_ok() {
                checked += 1;
                outcome = solver_agrees(g);
            }
        });
        outcome.clone()?;
    }
    Ok(checked)
}
