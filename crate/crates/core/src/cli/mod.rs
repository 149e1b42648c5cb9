//! Command-line front end.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 resource ceiling.

pub mod movefile;
pub mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::beatty::{count_formula, enumerate_ornament_pairs, BeattyError, BeattyPair};
use crate::catalog::{self, CatalogError};
use crate::engine::{
    detect_periodicity, iterate_star, limit_game, solve_kd, solve_with, star_kd, EngineError, Pos,
    PrefixStatus, SolveOptions, DEFAULT_MEM_LIMIT,
};
use crate::game::{GameError, GameSpec, Resolved};
use crate::suites::{self, SuiteOutcome};
use crate::wythoff::{self, Conjecture, WythoffError};

#[derive(Parser, Debug)]
#[command(name = "starlab", version, about = "Solve subtraction games on two piles and compute their duals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the solver (1 disables parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Solver memory ceiling in bytes; K, M and G suffixes are binary.
    #[arg(long, global = true, value_parser = parse_size)]
    mem_limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
    Ascii,
}

#[derive(Args, Debug, Clone)]
struct GameArgs {
    /// Game name, e.g. wythoff, wstar, mouse-trap, subsided:3, ornament:2/3:0, nim:3.
    #[arg(long)]
    game: Option<String>,
    /// Read the moves from a file (text "x y", CSV "x,y" or JSON).
    #[arg(long)]
    moves_file: Option<PathBuf>,
    /// Add the mirror image of every move from the file.
    #[arg(long)]
    symmetric: bool,
    /// Largest coordinate of the window.
    #[arg(long, default_value_t = 100)]
    bound: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// P-positions of a game.
    Solve(GameArgs),
    /// Moves of a game on the window.
    Moves(GameArgs),
    /// Moves of the dual game, applying the dual `--iterations` times.
    Star {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Iterate the double dual until the window repeats.
    Limit {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 30)]
        iterations: usize,
    },
    /// Check solver output against known results.
    Verify(VerifyArgs),
    /// Leading P-positions of the dual of Wythoff Nim with Zeckendorf codings.
    Table1 {
        #[arg(long, default_value_t = 80)]
        count: usize,
        /// Window to solve; must settle the requested rows.
        #[arg(long, default_value_t = 128)]
        bound: u32,
    },
    /// Complementary Beatty pairs with modulus denominator C.
    Ornaments {
        #[arg(long = "class")]
        class: i128,
    },
    /// Search the P-positions for period vectors.
    Periodicity {
        #[command(flatten)]
        game: GameArgs,
        /// Smallest coordinate of the points that must be covered.
        #[arg(long, default_value_t = 1)]
        threshold: u32,
    },
    /// Compare the diagonal conjectures for the dual of Wythoff Nim with the solver.
    Conjecture {
        #[arg(value_enum)]
        which: Which,
        #[arg(long, default_value_t = 2000)]
        bound: u32,
    },
    /// SVG scatter plot of the P-positions.
    Plot {
        #[command(flatten)]
        game: GameArgs,
        /// Also draw the moves.
        #[arg(long)]
        show_moves: bool,
        /// Omit the lines of slope φ and 1/φ.
        #[arg(long)]
        no_guides: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    C1,
    C2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    WstarFamilies,
    ParityFilter,
    Mousetrap,
    Subsided,
    Nimstar,
    Permutation,
    Complementarity,
    Lemmas,
    ConstrainedMouse,
    Periodicity,
    Conjectures,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long)]
    bound: Option<u32>,
    /// Number of piles for nimstar.
    #[arg(long)]
    piles: Option<usize>,
    /// Denominator for subsided, largest denominator for complementarity.
    #[arg(long)]
    q: Option<u32>,
    /// k for constrained-mouse.
    #[arg(long)]
    k: Option<u32>,
    /// Number of random games for permutation.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

fn parse_size(text: &str) -> Result<u64, String> {
    let t = text.trim();
    let (num, mul) = match t.char_indices().last() {
        Some((i, 'K' | 'k')) => (&t[..i], 1u64 << 10),
        Some((i, 'M' | 'm')) => (&t[..i], 1 << 20),
        Some((i, 'G' | 'g')) => (&t[..i], 1 << 30),
        _ => (t, 1),
    };
    num.parse::<u64>()
        .ok()
        .and_then(|n| n.checked_mul(mul))
        .ok_or_else(|| format!("'{text}' is not a size"))
}

enum Failure {
    Usage(String),
    Resource(String),
    Mismatch,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Mismatch => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::Resource(e.to_string())
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Engine(e) => e.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        match e {
            GameError::Engine(e) => e.into(),
            GameError::Catalog(e) => e.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<WythoffError> for Failure {
    fn from(e: WythoffError) -> Self {
        match e {
            WythoffError::Engine(e) => e.into(),
            WythoffError::Uncertified { .. } => Failure::Usage(format!("{e}; raise --bound")),
        }
    }
}

impl From<BeattyError> for Failure {
    fn from(e: BeattyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Failure::Resource(format!("cannot start {n} threads: {e}"))),
        },
        None => execute(&cli),
    };
    let (text, status) = match result {
        Ok((text, passed)) => (text, if passed { 0 } else { Failure::Mismatch.code() }),
        Err(f) => {
            let code = f.code();
            if let Failure::Usage(m) | Failure::Resource(m) = f {
                let _ = writeln!(err, "error: {m}");
            }
            return code;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    status
}

type Output = Result<(String, bool), Failure>;

fn execute(cli: &Cli) -> Output {
    let opts = SolveOptions {
        mem_limit: cli.mem_limit.unwrap_or(DEFAULT_MEM_LIMIT),
        parallel: cli.threads != Some(1),
    };
    let fmt = cli.format;
    match &cli.command {
        Command::Solve(g) => cmd_solve(g, fmt, &opts),
        Command::Moves(g) => cmd_moves(g, 0, fmt, &opts),
        Command::Star { game, iterations } => cmd_moves(game, *iterations, fmt, &opts),
        Command::Limit { game, iterations } => cmd_limit(game, *iterations, fmt, &opts),
        Command::Verify(v) => cmd_verify(v, fmt, &opts),
        Command::Table1 { count, bound } => cmd_table1(*count, *bound, fmt, &opts),
        Command::Ornaments { class } => cmd_ornaments(*class, fmt),
        Command::Periodicity { game, threshold } => cmd_periodicity(game, *threshold, fmt, &opts),
        Command::Conjecture { which, bound } => cmd_conjecture(*which, *bound, fmt, &opts),
        Command::Plot {
            game,
            show_moves,
            no_guides,
        } => cmd_plot(game, *show_moves, !*no_guides, fmt, &opts),
    }
}

fn pick(fmt: Option<Format>, default: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let f = fmt.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(Failure::Usage(format!("{command} does not support --format {name}")))
    }
}

fn game_spec(g: &GameArgs) -> Result<GameSpec, Failure> {
    match (&g.game, &g.moves_file) {
        (Some(name), Some(_)) if name != "custom" => {
            Err(Failure::Usage("give either --game or --moves-file, not both".into()))
        }
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let file = movefile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(GameSpec::Custom {
                moves: file.moves,
                symmetric: g.symmetric || file.symmetric.unwrap_or(false),
            })
        }
        (Some(name), None) => name.parse().map_err(Failure::from),
        (None, None) => Err(Failure::Usage("missing --game or --moves-file".into())),
    }
}

fn planar_json(key: &str, game: &GameSpec, bound: u32, points: &[Pos]) -> String {
    let pts: Vec<[u32; 2]> = points.iter().map(|&(x, y)| [x, y]).collect();
    output::json(&json!({ "game": game.to_string(), "bound": bound, key: pts }))
}

fn plot(title: &str, bound: u32, p: &[Pos], moves: &[Pos], guides: bool) -> String {
    output::Plot {
        title,
        bound,
        p_positions: p,
        moves,
        guides,
    }
    .render()
}

fn cmd_solve(g: &GameArgs, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let game = game_spec(g)?;
    let bound = g.bound;
    let title = format!("P-positions of {game} to {bound}");
    let text = match game.resolve(bound, opts)? {
        Resolved::Planar(moves) => {
            let p = solve_with(&moves, bound, opts)?.p_positions();
            match pick(fmt, Format::Csv, &[Format::Csv, Format::Json, Format::Ascii, Format::Svg], "solve")? {
                Format::Csv => output::csv_points(&p),
                Format::Json => planar_json("p_positions", &game, bound, &p),
                Format::Ascii => output::ascii_points(&title, p.iter().map(|&(x, y)| [x, y])),
                Format::Svg => plot(&title, bound, &p, &[], true),
            }
        }
        Resolved::Piles(moves) => {
            let p = solve_kd(&moves, moves.bounds())?.p_positions();
            kd_text(&game, bound, moves.dim(), "p_positions", &title, &p, fmt)?
        }
        Resolved::Blocking(rules) => {
            let p = catalog::constrained_mouse_solve(&rules, bound);
            match pick(fmt, Format::Csv, &[Format::Csv, Format::Json, Format::Ascii, Format::Svg], "solve")? {
                Format::Csv => output::csv_points(&p),
                Format::Json => planar_json("p_positions", &game, bound, &p),
                Format::Ascii => output::ascii_points(&title, p.iter().map(|&(x, y)| [x, y])),
                Format::Svg => plot(&title, bound, &p, &[], false),
            }
        }
    };
    Ok((text, true))
}

fn kd_text(
    game: &GameSpec,
    bound: u32,
    dim: usize,
    key: &str,
    title: &str,
    points: &[Vec<u32>],
    fmt: Option<Format>,
) -> Result<String, Failure> {
    Ok(match pick(fmt, Format::Csv, &[Format::Csv, Format::Json, Format::Ascii], "a pile game")? {
        Format::Csv => output::csv_points_kd(points, dim),
        Format::Json => output::json(&json!({ "game": game.to_string(), "bound": bound, key: points })),
        _ => output::ascii_points(title, points),
    })
}

/// Moves of the game after `iterations` applications of the dual.
fn cmd_moves(g: &GameArgs, iterations: usize, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let game = game_spec(g)?;
    let bound = g.bound;
    let title = match iterations {
        0 => format!("moves of {game} to {bound}"),
        1 => format!("moves of the dual of {game} to {bound}"),
        k => format!("moves of the {k}-fold dual of {game} to {bound}"),
    };
    let text = match game.resolve(bound, opts)? {
        Resolved::Planar(moves) => {
            let m = iterate_star(&moves, iterations, opts)?;
            let m = m.as_slice();
            match pick(fmt, Format::Csv, &[Format::Csv, Format::Json, Format::Ascii, Format::Svg], "moves")? {
                Format::Csv => output::csv_points(m),
                Format::Json => planar_json("moves", &game, bound, m),
                Format::Ascii => output::ascii_points(&title, m.iter().map(|&(x, y)| [x, y])),
                Format::Svg => plot(&title, bound, &[], m, false),
            }
        }
        Resolved::Piles(mut moves) => {
            for _ in 0..iterations {
                moves = star_kd(&solve_kd(&moves, moves.bounds())?);
            }
            let m: Vec<Vec<u32>> = moves.iter().map(<[u32]>::to_vec).collect();
            kd_text(&game, bound, moves.dim(), "moves", &title, &m, fmt)?
        }
        Resolved::Blocking(_) => {
            return Err(Failure::Usage(format!("{game} is defined by blocking rules, not a move set")));
        }
    };
    Ok((text, true))
}

fn cmd_limit(g: &GameArgs, iterations: usize, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let game = game_spec(g)?;
    let moves = game.planar_moves(g.bound, opts)?;
    let (_, rep) = limit_game(&moves, iterations, opts)?;
    let index = |s: &PrefixStatus| match s {
        PrefixStatus::Stable(k) => Some(*k),
        PrefixStatus::Unsettled => None,
    };
    let text = match pick(fmt, Format::Ascii, &[Format::Ascii, Format::Csv, Format::Json], "limit")? {
        Format::Csv => {
            let mut s = String::from("n,index\n");
            for (n, st) in rep.prefixes.iter().enumerate() {
                s += &format!("{n},{}\n", index(st).map_or(String::new(), |k| k.to_string()));
            }
            s
        }
        Format::Json => output::json(&json!({
            "game": game.to_string(),
            "bound": rep.bound,
            "steps": rep.steps,
            "cycle": rep.cycle.map(|(start, period)| json!({ "start": start, "period": period })),
            "converged": rep.converged(),
            "prefix_index": rep.prefixes.iter().map(index).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!("game {game}, window {}, {} double-dual steps\n", rep.bound, rep.steps);
            s += &match rep.cycle {
                Some((start, period)) => format!("iterates repeat from step {start} with period {period}\n"),
                None => "no repeat found; indices below are tentative\n".to_string(),
            };
            // runs of equal status over column prefixes
            let mut start = 0;
            for n in 1..=rep.prefixes.len() {
                if n == rep.prefixes.len() || rep.prefixes[n] != rep.prefixes[start] {
                    let what = index(&rep.prefixes[start]).map_or("unsettled".to_string(), |k| format!("stable from step {k}"));
                    s += &format!("prefixes {start}..={}: {what}\n", n - 1);
                    start = n;
                }
            }
            s
        }
    };
    Ok((text, true))
}

fn default_suite_bound(suite: Suite) -> u32 {
    match suite {
        Suite::WstarFamilies | Suite::ParityFilter => 3000,
        Suite::Mousetrap => 600,
        Suite::Subsided => 400,
        Suite::Complementarity => 10_000,
        Suite::ConstrainedMouse => 60,
        Suite::Conjectures => 2000,
        _ => 0,
    }
}

fn run_suite(suite: Suite, v: &VerifyArgs, opts: &SolveOptions) -> Result<Vec<SuiteOutcome>, Failure> {
    let bound = v.bound.unwrap_or_else(|| default_suite_bound(suite));
    Ok(vec![match suite {
        Suite::WstarFamilies => suites::wstar_families(bound, opts)?,
        Suite::ParityFilter => suites::trailing_zero_filter(bound, opts)?,
        Suite::Mousetrap => suites::mousetrap(bound, opts)?,
        Suite::Subsided => {
            let qs: Vec<u32> = v.q.map_or_else(|| (2..=6).collect(), |q| vec![q]);
            suites::subsided(&qs, bound, opts)?
        }
        Suite::Nimstar => {
            let cases = match (v.piles, v.bound) {
                (Some(k), b) => vec![(k, b.unwrap_or(if k >= 4 { 16 } else { 32 }))],
                (None, Some(b)) => vec![(2, b), (3, b), (4, b)],
                (None, None) => vec![(2, 32), (3, 32), (4, 16)],
            };
            suites::nimstar(&cases)?
        }
        Suite::Permutation => suites::permutation(v.count.unwrap_or(25), v.seed, 30, opts)?,
        Suite::Complementarity => suites::complementarity(i128::from(v.q.unwrap_or(12)), i128::from(bound)),
        Suite::Lemmas => suites::lemmas_suite(),
        Suite::ConstrainedMouse => suites::constrained_mouse(v.k.unwrap_or(3), bound)?,
        Suite::Periodicity => suites::periodicity(opts)?,
        Suite::Conjectures => suites::conjectures(bound, opts)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::value_variants().iter().filter(|&&s| s != Suite::All && s != Suite::ParityFilter) {
                all.extend(run_suite(*s, &VerifyArgs { bound: None, ..*v }, opts)?);
            }
            return Ok(all);
        }
    }])
}

fn cmd_verify(v: &VerifyArgs, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let outcomes = run_suite(v.suite, v, opts)?;
    let passed = outcomes.iter().all(|o| o.passed);
    let text = match pick(fmt, Format::Ascii, &[Format::Ascii, Format::Json], "verify")? {
        Format::Json => output::json(&json!(outcomes
            .iter()
            .map(|o| json!({ "suite": o.name, "passed": o.passed, "lines": o.lines }))
            .collect::<Vec<_>>())),
        _ => {
            let mut s = String::new();
            for o in &outcomes {
                s += &format!("{} {}\n", if o.passed { "PASS" } else { "FAIL" }, o.name);
                for l in &o.lines {
                    s += &format!("  {l}\n");
                }
            }
            s
        }
    };
    Ok((text, passed))
}

fn cmd_table1(count: usize, bound: u32, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let table = wythoff::solve_wstar(bound, opts)?;
    let rows = wythoff::table1(&table, count)?;
    let text = match pick(fmt, Format::Ascii, &[Format::Ascii, Format::Csv, Format::Json], "table1")? {
        Format::Csv => {
            let mut s = String::from("n,a,a_fib,b,b_fib\n");
            for r in &rows {
                s += &format!("{},{},{},{},{}\n", r.n, r.a, r.a_fib, r.b, r.b_fib);
            }
            s
        }
        Format::Json => output::json(&json!(rows
            .iter()
            .map(|r| json!({ "n": r.n, "a": r.a, "a_fib": r.a_fib.to_string(), "b": r.b, "b_fib": r.b_fib.to_string() }))
            .collect::<Vec<_>>())),
        _ => {
            let mut cells = vec![["n", "a_n", "fib.repr.", "b_n", "fib.repr."].map(String::from).to_vec()];
            cells.extend(rows.iter().map(|r| {
                vec![r.n.to_string(), r.a.to_string(), r.a_fib.to_string(), r.b.to_string(), r.b_fib.to_string()]
            }));
            output::columns(&cells)
        }
    };
    Ok((text, true))
}

fn pair_label(p: &BeattyPair) -> String {
    format!("{}/{}:{}", p.alpha().numer(), p.q(), (p.delta() * p.q()).to_integer())
}

fn cmd_ornaments(class: i128, fmt: Option<Format>) -> Output {
    let pairs = enumerate_ornament_pairs(class)?;
    let count = count_formula(class)?;
    let text = match pick(fmt, Format::Ascii, &[Format::Ascii, Format::Csv, Format::Json], "ornaments")? {
        Format::Csv => {
            let mut s = String::from("p,q,t,alpha,delta,beta,gamma\n");
            for p in &pairs {
                s += &format!(
                    "{},{},{},{},{},{},{}\n",
                    p.alpha().numer(),
                    p.q(),
                    (p.delta() * p.q()).to_integer(),
                    p.alpha(),
                    p.delta(),
                    p.beta(),
                    p.gamma()
                );
            }
            s
        }
        Format::Json => output::json(&json!({
            "class": class,
            "enumerated": pairs.len(),
            "formula": count.formula.to_string(),
            "pairs": pairs.iter().map(|p| json!({
                "game": format!("ornament:{}", pair_label(p)),
                "alpha": p.alpha().to_string(),
                "delta": p.delta().to_string(),
                "beta": p.beta().to_string(),
                "gamma": p.gamma().to_string(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let s = format!(
                "# class {class}: {} pairs enumerated; C(phi(C)+1)/2 = {}\n",
                pairs.len(),
                count.formula
            );
            let mut cells = vec![["game", "alpha", "delta", "beta", "gamma", "a_1..", "b_1.."].map(String::from).to_vec()];
            for p in &pairs {
                let terms = |first| (1..=6).map(|n| p.term(first, n).to_string()).collect::<Vec<_>>().join(" ");
                cells.push(vec![
                    format!("ornament:{}", pair_label(p)),
                    p.alpha().to_string(),
                    p.delta().to_string(),
                    p.beta().to_string(),
                    p.gamma().to_string(),
                    terms(true),
                    terms(false),
                ]);
            }
            s + &output::columns(&cells)
        }
    };
    Ok((text, true))
}

fn cmd_periodicity(g: &GameArgs, threshold: u32, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let game = game_spec(g)?;
    let moves = game.planar_moves(g.bound, opts)?;
    let p = solve_with(&moves, g.bound, opts)?.p_positions();
    let r = detect_periodicity(&p, g.bound, threshold);
    let text = match pick(fmt, Format::Ascii, &[Format::Ascii, Format::Json], "periodicity")? {
        Format::Json => output::json(&json!({
            "game": game.to_string(),
            "bound": g.bound,
            "threshold": threshold,
            "periodic": r.is_periodic(),
            "vectors": r.vectors.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
            "cover": r.cover.iter().map(|&((x, y), n)| json!({ "vector": [x, y], "points": n })).collect::<Vec<_>>(),
            "core": r.core,
            "uncovered": r.uncovered,
        })),
        _ => {
            let mut s = format!("game {game}, window {}, {} core points\n", g.bound, r.core);
            if r.is_periodic() {
                s += &format!("periodic with {} vector(s):", r.fold());
                for (x, y) in &r.vectors {
                    s += &format!(" ({x},{y})");
                }
                s.push('\n');
            } else {
                s += &format!("no cover by at most 8 vectors; {} core points left uncovered\n", r.uncovered);
            }
            s
        }
    };
    Ok((text, true))
}

fn cmd_conjecture(which: Which, bound: u32, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    let table = wythoff::solve_wstar(bound, opts)?;
    let c = match which {
        Which::C1 => Conjecture::C1,
        Which::C2 => Conjecture::C2,
    };
    let r = wythoff::explore_conjecture(c, &table);
    let name = if which == Which::C1 { "c1" } else { "c2" };
    let text = match pick(fmt, Format::Ascii, &[Format::Ascii, Format::Json], "conjecture")? {
        Format::Json => output::json(&json!({
            "conjecture": name,
            "bound": bound,
            "checked": r.checked,
            "agree": r.agree,
            "disagreements": r.disagreements.iter().map(|&((x, y), p)| json!({ "position": [x, y], "p": p })).collect::<Vec<_>>(),
            "conflicting": r.conflicting,
            "conflicting_p": r.conflicting_p,
            "unpredicted": r.unpredicted,
            "unpredicted_p": r.unpredicted_p,
        })),
        _ => {
            let mut s = format!("{name} to {bound}: {} predictions, {} agree\n", r.checked, r.agree);
            for ((x, y), p) in &r.disagreements {
                s += &format!("  ({x},{y}) is {} against the prediction\n", if *p { "P" } else { "N" });
            }
            if c == Conjecture::C2 {
                s += &format!(
                    "{} diagonal values predicted both P and N ({} are P)\n{} diagonal values without prediction ({} are P)\n",
                    r.conflicting, r.conflicting_p, r.unpredicted, r.unpredicted_p
                );
            }
            s
        }
    };
    Ok((text, true))
}

fn cmd_plot(g: &GameArgs, show_moves: bool, guides: bool, fmt: Option<Format>, opts: &SolveOptions) -> Output {
    pick(fmt, Format::Svg, &[Format::Svg], "plot")?;
    let game = game_spec(g)?;
    let moves = game.planar_moves(g.bound, opts)?;
    let p = solve_with(&moves, g.bound, opts)?.p_positions();
    let shown: &[Pos] = if show_moves { moves.as_slice() } else { &[] };
    let title = format!("P-positions of {game} to {}", g.bound);
    Ok((plot(&title, g.bound, &p, shown, guides), true))
}
