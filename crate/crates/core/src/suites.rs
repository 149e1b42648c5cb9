//! Verification suites: solver output checked against closed forms.
//!
//! Each suite returns a pass flag and human-readable lines; the CLI prints
//! them and maps failure to a nonzero exit status.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::beatty::{brute_check_pair, count_formula, enumerate_ornament_pairs, BeattyPair};
use crate::catalog::{self, BlockingRules, CatalogError};
use crate::engine::{
    detect_periodicity, is_involution_game, is_permutation_game, iterate_star, limit_game, solve_with, EngineError,
    MoveSet, SolveOptions,
};
use crate::numeration::{fib, lemmas, TrailingZeroTable};
use crate::wythoff::{self, Conjecture};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        SuiteOutcome {
            name: name.to_string(),
            passed: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.lines.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, line: String) {
        self.lines.push(format!("info {line}"));
    }
}

fn show<T: std::fmt::Debug>(items: &[T], max: usize) -> String {
    let shown: Vec<String> = items.iter().take(max).map(|i| format!("{i:?}")).collect();
    let more = if items.len() > max { format!(" (+{} more)", items.len() - max) } else { String::new() };
    format!("[{}]{more}", shown.join(", "))
}

/// The eight `W⋆` families and the trailing-zero filter on one solve.
pub fn wstar_families(bound: u32, opts: &SolveOptions) -> Result<SuiteOutcome, EngineError> {
    let mut out = SuiteOutcome::new("wstar-families");
    let table = wythoff::solve_wstar(bound, opts)?;
    let rep = wythoff::verify_families(&table);
    for (family, tally) in &rep.families {
        let bad: Vec<_> = tally.violations.iter().map(|v| (v.n, v.position)).collect();
        out.check(
            bad.is_empty(),
            format!(
                "family {family}: {} positions checked, {} not P{}",
                tally.checked,
                bad.len(),
                if bad.is_empty() {
                    String::new()
                } else {
                    format!(" (n, position) {}; holds from n = {}", show(&bad, 8), tally.holds_from())
                }
            ),
        );
    }
    out.check(
        rep.filter_failures.is_empty(),
        format!(
            "trailing-zero filter: {} non-terminal P-positions, {} failures {}",
            rep.nonterminal_p,
            rep.filter_failures.len(),
            show(&rep.filter_failures, 8)
        ),
    );
    Ok(out)
}

/// Only the trailing-zero filter on the `W⋆` P-positions.
pub fn trailing_zero_filter(bound: u32, opts: &SolveOptions) -> Result<SuiteOutcome, EngineError> {
    let mut out = SuiteOutcome::new("trailing-zero-filter");
    let rep = wythoff::verify_families(&wythoff::solve_wstar(bound, opts)?);
    out.check(
        rep.filter_failures.is_empty(),
        format!(
            "{} non-terminal P-positions to {bound}, {} with a coordinate of odd trailing-zero parity {}",
            rep.nonterminal_p,
            rep.filter_failures.len(),
            show(&rep.filter_failures, 8)
        ),
    );
    Ok(out)
}

pub fn mousetrap(bound: u32, opts: &SolveOptions) -> Result<SuiteOutcome, CatalogError> {
    let mut out = SuiteOutcome::new("mousetrap");
    let cmp = catalog::verify_mousetrap(bound, opts)?;
    out.check(
        cmp.matches(),
        format!(
            "P-set equals the Mouse set to {bound}: unexpected {} missing {}",
            show(&cmp.unexpected, 6),
            show(&cmp.missing, 6)
        ),
    );
    out.check(
        catalog::mousetrap_is_dual(bound, opts)?,
        format!("starred Mouse base game equals the closed-form moves to {bound}"),
    );
    Ok(out)
}

pub fn subsided(qs: &[u32], bound: u32, opts: &SolveOptions) -> Result<SuiteOutcome, CatalogError> {
    let mut out = SuiteOutcome::new("subsided");
    for &q in qs {
        let cmp = catalog::verify_subsided(q, bound, opts)?;
        out.check(
            cmp.matches(),
            format!(
                "q={q} bound {bound}: unexpected {} missing {}",
                show(&cmp.unexpected, 6),
                show(&cmp.missing, 6)
            ),
        );
    }
    Ok(out)
}

pub fn nimstar(cases: &[(usize, u32)]) -> Result<SuiteOutcome, CatalogError> {
    let mut out = SuiteOutcome::new("nimstar");
    for &(k, bound) in cases {
        let rep = catalog::verify_nim_duality(k, bound)?;
        out.check(
            rep.p_mismatches.is_empty(),
            format!(
                "{k} piles to {bound}: P-set is 'at most one nonempty pile' ({} mismatches of {})",
                rep.p_mismatches.len(),
                rep.positions
            ),
        );
        out.check(rep.double_dual_is_nim, format!("{k} piles to {bound}: dual of the dual is Nim"));
        out.check(
            rep.bad_winning_moves.is_empty(),
            format!(
                "{k} piles to {bound}: winning move legal and terminal ({} failures)",
                rep.bad_winning_moves.len()
            ),
        );
    }
    Ok(out)
}

/// Moves `(i, σ(i))` of a uniformly random permutation of `1..=window`.
pub fn random_permutation_game(window: u32, rng: &mut impl Rng) -> MoveSet {
    let mut sigma: Vec<u32> = (1..=window).collect();
    sigma.shuffle(rng);
    MoveSet::new(window, (1..=window).zip(sigma), false)
}

/// A random involution of `1..=window` as a symmetric move set.
pub fn random_involution_game(window: u32, rng: &mut impl Rng) -> MoveSet {
    let mut free: Vec<u32> = (1..=window).collect();
    free.shuffle(rng);
    let mut moves = Vec::new();
    while let Some(x) = free.pop() {
        if !free.is_empty() && rng.gen_bool(0.7) {
            let y = free.swap_remove(rng.gen_range(0..free.len()));
            moves.push((x, y));
        } else {
            moves.push((x, x));
        }
    }
    MoveSet::new(window, moves, true)
}

/// Double-star closure and limits of random permutation and involution games.
pub fn permutation(games: usize, seed: u64, max_iter: usize, opts: &SolveOptions) -> Result<SuiteOutcome, EngineError> {
    let mut out = SuiteOutcome::new("permutation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0;
    for g in 0..games {
        let window = rng.gen_range(30..=60);
        let involution = g % 2 == 1;
        let moves = if involution {
            random_involution_game(window, &mut rng)
        } else {
            random_permutation_game(window, &mut rng)
        };
        let kind = if involution { "involution" } else { "permutation" };
        let input_ok = if involution {
            is_involution_game(&moves, window).holds()
        } else {
            is_permutation_game(&moves, window).holds()
        };
        let twice = iterate_star(&moves, 2, opts)?;
        let perm = is_permutation_game(&twice, window);
        let inv = is_involution_game(&twice, window);
        let closure_ok = input_ok && perm.holds() && (!involution || inv.holds());
        let (_, rep) = limit_game(&moves, max_iter, opts)?;
        if let Some(k) = rep.max_index() {
            worst = worst.max(k);
        }
        out.check(
            closure_ok && rep.converged(),
            format!(
                "game {g} ({kind}, window {window}): double star {:?}, limit {}",
                if involution { inv } else { perm },
                match (rep.converged(), rep.cycle) {
                    (true, Some((start, period))) => format!("settles by step {start}, period {period}"),
                    _ => format!("not settled after {} steps", rep.steps),
                }
            ),
        );
    }
    out.note(format!("largest per-prefix stabilization index: {worst}"));
    Ok(out)
}

/// Closed-form complementarity against brute force, and the class counts.
pub fn complementarity(q_max: i128, bound: i128) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("complementarity");
    let mut tested = 0;
    let mut mismatches = Vec::new();
    for q in 2..=q_max {
        for p in (1..q).filter(|&p| num_integer::gcd(p, q) == 1) {
            for t in -q..=2 * q {
                let pair = BeattyPair::from_offset_index(p, q, t).expect("valid modulus");
                tested += 1;
                if pair.is_complementary() != brute_check_pair(&pair, bound) {
                    mismatches.push((p, q, t));
                }
            }
        }
    }
    out.check(
        mismatches.is_empty(),
        format!("closed form vs brute force at {bound}: {tested} pairs, mismatches (p,q,t) {}", show(&mismatches, 8)),
    );
    for (q, want) in [(2, 1usize), (3, 3)] {
        let got = enumerate_ornament_pairs(q).map(|v| v.len()).unwrap_or(0);
        out.check(got == want, format!("class {q}: {got} pairs enumerated, expected {want}"));
    }
    for c in 2..=q_max.min(12) {
        if let Ok(cnt) = count_formula(c) {
            out.note(format!("class {c}: enumerated {}, C(φ(C)+1)/2 = {}", cnt.enumerated, cnt.formula));
        }
    }
    out
}

/// The numeration lemmas on their default ranges.
pub fn lemmas_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("lemmas");
    let table = TrailingZeroTable::new(fib(40).expect("small") as usize + 1);
    let reports = [
        lemmas::parity_invariance(100_000, 8, 1),
        lemmas::wythoff_codings(5000),
        lemmas::fib_minus_one(20, &table),
        lemmas::fib_minus_x(20, &table),
        lemmas::t_minus_x(20),
        lemmas::fibrule(80),
        lemmas::golden_bounds(40, &lemmas::GoldenBoundsPlan::default()),
    ];
    for r in reports {
        out.check(
            r.holds(),
            format!("{}: {} cases, {} counterexamples {}", r.name, r.checked, r.counterexample_count, show(&r.counterexamples, 3)),
        );
    }
    out
}

pub fn constrained_mouse(k: u32, bound: u32) -> Result<SuiteOutcome, CatalogError> {
    let mut out = SuiteOutcome::new("constrained-mouse");
    let rules = BlockingRules::new(k)?;
    let got = catalog::constrained_mouse_solve(&rules, bound);
    if k == 3 {
        let want: Vec<_> = catalog::mouse_p_set(bound).into_iter().collect();
        let extra: Vec<_> = got.iter().filter(|p| want.binary_search(p).is_err()).collect();
        let missing: Vec<_> = want.iter().filter(|p| got.binary_search(p).is_err()).collect();
        out.check(
            extra.is_empty() && missing.is_empty(),
            format!("k=3 secured set equals the Mouse set to {bound}: extra {} missing {}", show(&extra, 6), show(&missing, 6)),
        );
    } else {
        out.note(format!("k={k}: {} secured positions to {bound} (no closed form known)", got.len()));
    }
    Ok(out)
}

/// Period vectors of the Mouse, subsided and `W⋆` P-sets.
pub fn periodicity(opts: &SolveOptions) -> Result<SuiteOutcome, CatalogError> {
    let mut out = SuiteOutcome::new("periodicity");
    let mouse = solve_with(&catalog::mousetrap_moves(400), 400, opts)?.p_positions();
    let r = detect_periodicity(&mouse, 400, 1);
    let ok = r.fold() == 2 && r.vectors.contains(&(3, 6)) && r.vectors.contains(&(6, 3));
    out.check(ok, format!("Mouse trap to 400: vectors {:?}", r.vectors));
    let sub = solve_with(&catalog::subsided_moves(3, 400)?, 400, opts)?.p_positions();
    let r = detect_periodicity(&sub, 400, 1);
    out.check(r.vectors.contains(&(3, 3)), format!("subsided q=3 to 400: vectors {:?}", r.vectors));
    let ws = wythoff::solve_wstar(2000, opts)?.p_positions();
    let r = detect_periodicity(&ws, 2000, 1);
    out.note(format!(
        "W* to 2000: {} (core {}, uncovered {})",
        if r.is_periodic() { format!("vectors {:?}", r.vectors) } else { "no covering vector set".into() },
        r.core,
        r.uncovered
    ));
    Ok(out)
}

/// Agreement counts of the two `W⋆` conjectures; never fails.
pub fn conjectures(bound: u32, opts: &SolveOptions) -> Result<SuiteOutcome, EngineError> {
    let mut out = SuiteOutcome::new("conjectures");
    let table = wythoff::solve_wstar(bound, opts)?;
    for (name, which) in [("c1", Conjecture::C1), ("c2", Conjecture::C2)] {
        let r = wythoff::explore_conjecture(which, &table);
        out.note(format!(
            "{name} to {bound}: {} predictions, {} agree, disagreements {}",
            r.checked,
            r.agree,
            show(&r.disagreements, 6)
        ));
        if which == Conjecture::C2 {
            out.note(format!(
                "{name}: {} values predicted both ways ({} P), {} unpredicted ({} P)",
                r.conflicting, r.conflicting_p, r.unpredicted, r.unpredicted_p
            ));
        }
    }
    Ok(out)
}
