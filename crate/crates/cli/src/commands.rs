use std::path::{Path, PathBuf};
use std::thread;

use pgreduce_core::dot::to_dot;
use pgreduce_core::lattice::{EdgeVerdict, Relation, RelationBundle};
use pgreduce_core::pgsolver::{parse_pgsolver, serialize_pgsolver};
use pgreduce_core::quotient::{
    equivalent_to_original, quotient, verify_preservation, EquivalenceKind,
};
use pgreduce_core::random::random_game;
use pgreduce_core::relation::Partition;
use pgreduce_core::simgames::{coincidence_check, Notion};
use pgreduce_core::solver::solve_zielonka;
use pgreduce_core::{ParityGame, Vertex, VertexSet};
use serde_json::{json, Value};

use crate::report::{digest, Report};
use crate::{parse_equiv, parse_relation, CliError, Command, Common};

pub fn run(command: &Command, common: &Common, argv: Vec<String>) -> Result<Report, CliError> {
    let mut report = Report::new(argv, common.timings);
    let dot_game = match command {
        Command::Solve { input } => solve(&mut report, input)?,
        Command::Minimize {
            input,
            equiv,
            out,
            map,
        } => minimize(&mut report, input, equiv, out, map.as_deref())?,
        Command::Compare { input, v, w } => compare(&mut report, input, v, w)?,
        Command::LatticeCheck {
            inputs,
            random,
            seeds,
            max_priority,
            corrupt,
        } => {
            let games = match random {
                Some(n) => random_games(*n, *max_priority, *seeds)?,
                None => read_games(&mut report, inputs)?,
            };
            let corrupt = corrupt.as_deref().map(parse_relation).transpose()?;
            lattice_check(&mut report, games, corrupt, common.dot.is_some())?
        }
        Command::Verify { input, equiv } => {
            let kinds = match equiv {
                Some(name) => vec![parse_equiv(name)?],
                None => EquivalenceKind::ALL.to_vec(),
            };
            if common.dot.is_some() && kinds.len() > 1 {
                return Err(CliError::Usage("--dot with verify needs --equiv".into()));
            }
            verify(&mut report, input, &kinds)?
        }
        Command::Random {
            seed,
            vertices,
            max_priority,
            degree,
            out,
        } => generate(
            &mut report,
            *seed,
            *vertices,
            *max_priority,
            degree,
            out.as_deref(),
        )?,
    };
    if let (Some(path), Some(game)) = (&common.dot, dot_game) {
        write_file(path, &to_dot(&game))?;
    }
    Ok(report)
}

fn read_input(path: &Path) -> Result<(ParityGame, Vec<u8>), CliError> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let game =
        parse_pgsolver(&bytes).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok((game, bytes))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_one(report: &mut Report, path: &Path) -> Result<ParityGame, CliError> {
    let (game, bytes) = read_input(path)?;
    report.input_digest = Some(digest([bytes.as_slice()]));
    report.sizes.push(("vertices".into(), game.vertex_count()));
    report.sizes.push(("edges".into(), game.edge_count()));
    Ok(game)
}

fn id_list(set: &VertexSet) -> String {
    set.iter().map(|v| format!(" {v}")).collect()
}

fn solve(report: &mut Report, input: &Path) -> Result<Option<ParityGame>, CliError> {
    let game = read_one(report, input)?;
    let regions = report.timed("solve", || solve_zielonka(&game));
    report.line(format!("even:{}", id_list(&regions.won_by_even)));
    report.line(format!("odd:{}", id_list(&regions.won_by_odd)));
    report.extra.push((
        "even".into(),
        json!(regions.won_by_even.iter().collect::<Vec<_>>()),
    ));
    report.extra.push((
        "odd".into(),
        json!(regions.won_by_odd.iter().collect::<Vec<_>>()),
    ));
    Ok(Some(game))
}

fn minimize(
    report: &mut Report,
    input: &Path,
    equiv: &str,
    out: &Path,
    map: Option<&Path>,
) -> Result<Option<ParityGame>, CliError> {
    let kind = parse_equiv(equiv)?;
    let game = read_one(report, input)?;
    let result = report.timed("quotient", || quotient(&game, kind));
    let q = &result.quotient;
    write_file(out, &serialize_pgsolver(q))?;
    if let Some(map) = map {
        write_file(map, &result.class_map_text())?;
    }
    report.line(format!(
        "original: {} vertices, {} edges",
        game.vertex_count(),
        game.edge_count()
    ));
    report.line(format!(
        "quotient: {} vertices, {} edges",
        q.vertex_count(),
        q.edge_count()
    ));
    report
        .sizes
        .push(("quotient_vertices".into(), q.vertex_count()));
    report.sizes.push(("quotient_edges".into(), q.edge_count()));
    report.classes.push((kind.name().into(), q.vertex_count()));
    report
        .extra
        .push(("class_map".into(), json!(result.class_map)));
    Ok(Some(result.quotient))
}

fn parse_vertex(game: &ParityGame, id: &str) -> Result<Vertex, CliError> {
    id.parse::<Vertex>()
        .ok()
        .filter(|&v| v < game.vertex_count())
        .ok_or_else(|| {
            CliError::Usage(format!(
                "'{id}' is not a vertex id (the game has vertices 0..{})",
                game.vertex_count()
            ))
        })
}

fn compare(
    report: &mut Report,
    input: &Path,
    v: &str,
    w: &str,
) -> Result<Option<ParityGame>, CliError> {
    let game = read_one(report, input)?;
    let (v, w) = (parse_vertex(&game, v)?, parse_vertex(&game, w)?);
    let bundle = report
        .timed("relations", || RelationBundle::compute(&game))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut related = serde_json::Map::new();
    for relation in Relation::ALL {
        let yes = bundle.related(relation, v, w);
        report.line(format!("{relation}: {}", if yes { "yes" } else { "no" }));
        report
            .classes
            .push((relation.name().into(), bundle.get(relation).len()));
        related.insert(relation.name().into(), Value::Bool(yes));
    }
    report.extra.push(("pair".into(), json!([v, w])));
    report
        .extra
        .push(("related".into(), Value::Object(related)));
    Ok(Some(game))
}

fn read_games(
    report: &mut Report,
    inputs: &[PathBuf],
) -> Result<Vec<(String, ParityGame)>, CliError> {
    if inputs.is_empty() {
        return Err(CliError::Usage(
            "lattice-check needs input files or --random".into(),
        ));
    }
    let mut games = Vec::new();
    let mut contents = Vec::new();
    for path in inputs {
        let (game, bytes) = read_input(path)?;
        games.push((path.display().to_string(), game));
        contents.push(bytes);
    }
    report.input_digest = Some(digest(contents.iter().map(Vec::as_slice)));
    Ok(games)
}

fn random_games(
    n: usize,
    max_priority: u32,
    seeds: u64,
) -> Result<Vec<(String, ParityGame)>, CliError> {
    (0..seeds)
        .map(|seed| {
            random_game(n, max_priority, 1..=n.clamp(1, 3), seed)
                .map(|g| (format!("seed {seed}"), g))
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

struct GameCheck {
    edges: Vec<EdgeVerdict>,
    coincidence: Vec<bool>,
}

fn check_game(game: &ParityGame, corrupt: Option<Relation>) -> Result<GameCheck, String> {
    let mut bundle = RelationBundle::compute(game).map_err(|e| e.to_string())?;
    if let Some(relation) = corrupt {
        bundle.set(relation, Partition::trivial(game.vertex_count()));
    }
    Ok(GameCheck {
        edges: bundle.check_inclusions(),
        coincidence: Notion::ALL
            .iter()
            .map(|&n| coincidence_check(game, n))
            .collect(),
    })
}

/// Checks every game, spreading them over worker threads; results come
/// back in input order.
fn check_all(
    games: &[(String, ParityGame)],
    corrupt: Option<Relation>,
) -> Vec<Result<GameCheck, String>> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = games.len().div_ceil(workers).max(1);
    thread::scope(|scope| {
        let handles: Vec<_> = games
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|(_, g)| check_game(g, corrupt))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn lattice_check(
    report: &mut Report,
    games: Vec<(String, ParityGame)>,
    corrupt: Option<Relation>,
    wants_dot: bool,
) -> Result<Option<ParityGame>, CliError> {
    if wants_dot && games.len() != 1 {
        return Err(CliError::Usage(
            "--dot with lattice-check needs exactly one game".into(),
        ));
    }
    let results = report.timed("check", || check_all(&games, corrupt));
    let mut checks = Vec::with_capacity(results.len());
    for ((label, _), result) in games.iter().zip(results) {
        checks.push(result.map_err(|e| CliError::Usage(format!("{label}: {e}")))?);
    }
    report.sizes.push(("games".into(), games.len()));

    let edge_count = checks.first().map_or(0, |c| c.edges.len());
    for i in 0..edge_count {
        let name = checks[0].edges[i].edge_name();
        let violation = games
            .iter()
            .zip(&checks)
            .find_map(|((label, _), c)| c.edges[i].violation.map(|(v, w)| (label, v, w)));
        report.verdict(name, violation.is_none());
        if let Some((label, v, w)) = violation {
            report.line(format!("      {label}: {v} and {w} violate the inclusion"));
        }
    }
    for (i, notion) in Notion::ALL.iter().enumerate() {
        let failing = games
            .iter()
            .zip(&checks)
            .find(|(_, c)| !c.coincidence[i])
            .map(|((label, _), _)| label);
        report.verdict(format!("coincidence {notion}"), failing.is_none());
        if let Some(label) = failing {
            report.line(format!("      {label}: game and fixpoint disagree"));
        }
    }
    let passed = report.verdicts.iter().filter(|(_, p)| *p).count();
    report.line(format!(
        "{passed} of {} checks passed on {} games",
        report.verdicts.len(),
        games.len()
    ));
    Ok(if wants_dot {
        games.into_iter().next().map(|(_, g)| g)
    } else {
        None
    })
}

fn verify(
    report: &mut Report,
    input: &Path,
    kinds: &[EquivalenceKind],
) -> Result<Option<ParityGame>, CliError> {
    let game = read_one(report, input)?;
    let mut last = None;
    for &kind in kinds {
        let result = report.timed(kind.name(), || quotient(&game, kind));
        let preserved = verify_preservation(&game, &result);
        let equivalent = equivalent_to_original(&game, &result);
        report
            .classes
            .push((kind.name().into(), result.quotient.vertex_count()));
        report.verdict(format!("{kind} winners-preserved"), preserved);
        report.verdict(format!("{kind} equivalent-to-original"), equivalent);
        last = Some(result.quotient);
    }
    Ok(last)
}

fn parse_degree(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--degree expects lo:hi, got '{text}'"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ))
}

fn generate(
    report: &mut Report,
    seed: u64,
    vertices: usize,
    max_priority: u32,
    degree: &str,
    out: Option<&Path>,
) -> Result<Option<ParityGame>, CliError> {
    let (lo, hi) = parse_degree(degree)?;
    let game = random_game(vertices, max_priority, lo..=hi, seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let text = serialize_pgsolver(&game);
    report.input_digest = Some(digest([text.as_bytes()]));
    report.sizes.push(("vertices".into(), game.vertex_count()));
    report.sizes.push(("edges".into(), game.edge_count()));
    match out {
        Some(path) => {
            write_file(path, &text)?;
            report.line(format!(
                "wrote {} vertices to {}",
                game.vertex_count(),
                path.display()
            ));
        }
        None => {
            report.lines.extend(text.lines().map(str::to_string));
            report.extra.push(("game".into(), Value::String(text)));
        }
    }
    Ok(Some(game))
}
