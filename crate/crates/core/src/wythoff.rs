//! Wythoff Nim `W`, its dual `W⋆`, and the Fibonacci families of P-positions
//! of `W⋆`.

use std::fmt;

use thiserror::Error;

use crate::beatty::{golden, Side};
use crate::engine::{solve_with, EngineError, MoveSet, PnTable, Pos, SolveOptions};
use crate::numeration::{ends_even, fib, zeckendorf, FibWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WythoffError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("bound {bound} certifies only {available} table rows, {requested} requested")]
    Uncertified { bound: u32, available: usize, requested: usize },
}

fn a_(n: u32) -> u32 {
    golden(n as u128, Side::A).unwrap() as u32
}

fn b_(n: u32) -> u32 {
    golden(n as u128, Side::B).unwrap() as u32
}

/// P-test for Wythoff Nim.
pub fn is_wythoff_p(x: u128, y: u128) -> bool {
    let (x, y) = (x.min(y), x.max(y));
    golden(y - x, Side::A).is_ok_and(|a| a == x)
}

/// Pairs `(A_n, B_n)`, `n >= 1`, with `B_n <= bound`.
pub fn wythoff_pairs(bound: u32) -> Vec<Pos> {
    (1..).map(|n| (a_(n), b_(n))).take_while(|&(_, b)| b <= bound).collect()
}

/// The other member of the Wythoff pair containing `a >= 1`.
pub fn partner(a: u32) -> u32 {
    assert!(a >= 1);
    let a128 = a as u128;
    // ⌊a/φ⌋ = ⌊aφ⌋ - a, and A-values sit at n = ⌊a/φ⌋ or one more
    let n0 = (golden(a128, Side::A).unwrap() - a128) as u32;
    for n in n0.saturating_sub(1)..=n0 + 1 {
        if n >= 1 && a_(n) == a {
            return b_(n);
        }
    }
    // otherwise a = B_n with n near a/φ² = a - a/φ
    let m0 = a - n0;
    (m0.saturating_sub(2)..=m0 + 2)
        .find(|&n| n >= 1 && b_(n) == a)
        .map(a_)
        .expect("every positive integer lies in exactly one Wythoff sequence")
}

pub fn wythoff_moves(bound: u32) -> MoveSet {
    MoveSet::new(bound, (1..=bound).flat_map(|x| [(0, x), (x, 0), (x, x)]), false)
}

pub fn wstar_moves(bound: u32) -> MoveSet {
    MoveSet::new(bound, wythoff_pairs(bound), true)
}

pub fn solve_wstar(bound: u32, opts: &SolveOptions) -> Result<PnTable, EngineError> {
    solve_with(&wstar_moves(bound), bound, opts)
}

/// The eight closed-form families of P-positions of `W⋆`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::I,
        Family::II,
        Family::III,
        Family::IV,
        Family::V,
        Family::VI,
        Family::VII,
        Family::VIII,
    ];

    /// The family's position at index `n`, before the positivity filter.
    pub fn position(self, n: usize) -> (i128, i128) {
        let odd = fib(2 * n - 1).unwrap() as i128;
        let even = fib(2 * n).unwrap() as i128;
        match self {
            Family::I => (even - 1, even - 1),
            Family::II => (odd, even - 1),
            Family::III => (odd, even - 4),
            Family::IV => (odd, even - 9),
            Family::V => (odd + 1, even - 1),
            Family::VI => (odd + 3, even - 1),
            Family::VII => (odd + 4, even - 1),
            Family::VIII => (odd + 6, even - 1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
            Family::IV => "iv",
            Family::V => "v",
            Family::VI => "vi",
            Family::VII => "vii",
            Family::VIII => "viii",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyPosition {
    pub family: Family,
    pub n: usize,
    pub position: Pos,
}

/// Every family member for `1 <= n <= n_max` with both coordinates positive,
/// followed by its mirror image when that differs.
pub fn family_positions(n_max: usize) -> Vec<FamilyPosition> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for family in Family::ALL {
            let (x, y) = family.position(n);
            if x <= 0 || y <= 0 || x > u32::MAX as i128 || y > u32::MAX as i128 {
                continue;
            }
            let (x, y) = (x as u32, y as u32);
            out.push(FamilyPosition {
                family,
                n,
                position: (x, y),
            });
            if x != y {
                out.push(FamilyPosition {
                    family,
                    n,
                    position: (y, x),
                });
            }
        }
    }
    out
}

/// Necessary condition for a non-terminal P-position of `W⋆`: both
/// coordinates end in an even number of zeros.
pub fn parity_filter(x: u32, y: u32) -> bool {
    ends_even(x as u128) && ends_even(y as u128)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyTally {
    pub checked: usize,
    pub violations: Vec<FamilyPosition>,
}

impl FamilyTally {
    /// Smallest `n` from which every checked member of the family is P.
    pub fn holds_from(&self) -> usize {
        self.violations.iter().map(|v| v.n + 1).max().unwrap_or(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub bound: u32,
    pub families: Vec<(Family, FamilyTally)>,
    /// Non-terminal P-positions that fail the trailing-zero filter.
    pub filter_failures: Vec<Pos>,
    pub nonterminal_p: usize,
}

impl FamilyReport {
    pub fn violations(&self) -> impl Iterator<Item = &FamilyPosition> {
        self.families.iter().flat_map(|(_, t)| &t.violations)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    pub fn checked(&self) -> usize {
        self.families.iter().map(|(_, t)| t.checked).sum()
    }
}

/// Checks every family member inside the window against a solved `W⋆`
/// table, along with the trailing-zero filter on all non-terminal
/// P-positions.
pub fn verify_families(table: &PnTable) -> FamilyReport {
    let bound = table.bound();
    let mut n_max = 1;
    while fib(2 * n_max + 1).is_ok_and(|f| f <= bound as u128 + 9) {
        n_max += 1;
    }
    let mut families: Vec<(Family, FamilyTally)> = Family::ALL.iter().map(|&f| (f, FamilyTally::default())).collect();
    for fp in family_positions(n_max) {
        let (x, y) = fp.position;
        if x > bound || y > bound {
            continue;
        }
        let tally = &mut families[fp.family as usize].1;
        tally.checked += 1;
        if !table.is_p(x, y) {
            tally.violations.push(fp);
        }
    }
    let mut filter_failures = Vec::new();
    let mut nonterminal_p = 0;
    for (x, y) in table.p_positions() {
        if x > 0 && y > 0 {
            nonterminal_p += 1;
            if !parity_filter(x, y) {
                filter_failures.push((x, y));
            }
        }
    }
    FamilyReport {
        bound,
        families,
        filter_failures,
        nonterminal_p,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub n: usize,
    pub a: u32,
    pub a_fib: FibWord,
    pub b: u32,
    pub b_fib: FibWord,
}

/// Number of leading rows of the P-position table that a `W⋆` solve at
/// `bound` settles. Column `a` has no P-position at or above its Wythoff
/// partner, since the move `(a, partner)` reaches an axis; the column is
/// complete once `partner - 1` fits in the window.
pub fn certified_rows(table: &PnTable) -> Vec<Pos> {
    let bound = table.bound();
    let mut out = Vec::new();
    for a in 1..=bound {
        let top = partner(a).saturating_sub(1);
        if top > bound {
            break;
        }
        out.extend((a..=top).filter(|&b| table.is_p(a, b)).map(|b| (a, b)));
    }
    out
}

/// The first `count` P-positions `(a, b)` of `W⋆` with `0 < a <= b`, in
/// lexicographic order, with Zeckendorf codings.
pub fn table1(table: &PnTable, count: usize) -> Result<Vec<Table1Row>, WythoffError> {
    let rows = certified_rows(table);
    if rows.len() < count {
        return Err(WythoffError::Uncertified {
            bound: table.bound(),
            available: rows.len(),
            requested: count,
        });
    }
    Ok(rows
        .into_iter()
        .take(count)
        .enumerate()
        .map(|(i, (a, b))| Table1Row {
            n: i + 1,
            a,
            a_fib: zeckendorf(a as u128),
            b,
            b_fib: zeckendorf(b as u128),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    C1,
    C2,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub checked: usize,
    pub agree: usize,
    /// Positions where prediction and table differ, with the prediction.
    pub disagreements: Vec<(Pos, bool)>,
    /// Positions predicted both P and N, and how many of them are P.
    pub conflicting: usize,
    pub conflicting_p: usize,
    /// Positions with no prediction, and how many of them are P.
    pub unpredicted: usize,
    pub unpredicted_p: usize,
}

impl ConjectureReport {
    fn record(&mut self, p: Pos, predicted_p: bool, table: &PnTable) {
        self.checked += 1;
        if table.is_p(p.0, p.1) == predicted_p {
            self.agree += 1;
        } else {
            self.disagreements.push((p, predicted_p));
        }
    }
}

/// Which of the four diagonal classes `i` falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalClass {
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    pub s4: bool,
}

impl DiagonalClass {
    pub fn of(i: u32) -> Self {
        let z = zeckendorf(i as u128);
        DiagonalClass {
            s1: [3, 8, 11, 21, 32].contains(&i),
            s2: [129, 362].contains(&i),
            s3: i != 19 && z.has_suffix("101001"),
            s4: z.has_suffix("1"),
        }
    }

    /// P is predicted on `(S1 ∪ S4) \ (S2 ∪ S3)` and N on
    /// `ℕ \ (S1 ∪ S2 ∪ S3)`. The two overlap on the rest of `S4`, and `S2 ∪ S3`
    /// gets neither.
    pub fn prediction(&self) -> Prediction {
        let p = (self.s1 || self.s4) && !(self.s2 || self.s3);
        let n = !(self.s1 || self.s2 || self.s3);
        match (p, n) {
            (true, false) => Prediction::P,
            (false, true) => Prediction::N,
            (true, true) => Prediction::Conflict,
            (false, false) => Prediction::Open,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    P,
    N,
    Conflict,
    Open,
}

/// Compares a conjectured family of P-positions with a solved `W⋆` table.
pub fn explore_conjecture(which: Conjecture, table: &PnTable) -> ConjectureReport {
    let bound = table.bound();
    let mut rep = ConjectureReport::default();
    match which {
        Conjecture::C1 => {
            let pairs = wythoff_pairs(bound);
            for n in 3.. {
                let odd = fib(2 * n - 1).unwrap();
                let even = fib(2 * n).unwrap();
                if odd > bound as u128 {
                    break;
                }
                let lim = fib(2 * n - 4).unwrap();
                for &(a, b) in &pairs {
                    let (a, b) = (a as u128, b as u128);
                    if a + b <= lim && a + b + 1 < even && even - 1 <= bound as u128 {
                        rep.record((odd as u32, (even - 1 - a - b) as u32), true, table);
                    }
                    if a <= lim && odd + a <= bound as u128 && even - 1 <= bound as u128 {
                        rep.record(((odd + a) as u32, (even - 1) as u32), true, table);
                    }
                }
            }
        }
        Conjecture::C2 => {
            for i in 1..=bound {
                let is_p = table.is_p(i, i);
                match DiagonalClass::of(i).prediction() {
                    Prediction::P => rep.record((i, i), true, table),
                    Prediction::N => rep.record((i, i), false, table),
                    Prediction::Conflict => {
                        rep.conflicting += 1;
                        rep.conflicting_p += usize::from(is_p);
                    }
                    Prediction::Open => {
                        rep.unpredicted += 1;
                        rep.unpredicted_p += usize::from(is_p);
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wstar(bound: u32) -> PnTable {
        solve_wstar(bound, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn wythoff_p_test() {
        assert!(is_wythoff_p(0, 0));
        assert!(is_wythoff_p(6, 10));
        assert!(is_wythoff_p(10, 6));
        assert!(!is_wythoff_p(0, 5));
        assert!(!is_wythoff_p(6, 11));
    }

    #[test]
    fn wythoff_p_matches_solver() {
        let t = solve_with(&wythoff_moves(300), 300, &SolveOptions::default()).unwrap();
        for x in 0..=300 {
            for y in 0..=300 {
                assert_eq!(t.is_p(x, y), is_wythoff_p(x as u128, y as u128), "({x},{y})");
            }
        }
    }

    #[test]
    fn move_sets() {
        assert_eq!(
            wstar_moves(11).as_slice(),
            &[(1, 2), (2, 1), (3, 5), (4, 7), (5, 3), (6, 10), (7, 4), (10, 6)]
        );
        assert_eq!(wstar_moves(2).as_slice(), &[(1, 2), (2, 1)]);
        let w = wythoff_moves(2);
        for m in [(2, 2), (0, 1), (1, 0), (0, 2), (2, 0), (1, 1)] {
            assert!(w.contains(m));
        }
    }

    #[test]
    fn partners() {
        for (a, b) in wythoff_pairs(5000) {
            assert_eq!(partner(a), b);
            assert_eq!(partner(b), a);
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(Family::I.position(3), (12, 12));
        assert_eq!(Family::II.position(4), (21, 33));
        assert_eq!(Family::V.position(3), (9, 12));
        let ps = family_positions(2);
        assert!(ps.iter().all(|p| p.position.0 > 0 && p.position.1 > 0));
        assert!(ps.iter().any(|p| p.position == (1, 2) && p.family == Family::V));
    }

    #[test]
    fn trailing_zero_filter() {
        assert!(parity_filter(8, 12));
        assert!(!parity_filter(1, 2));
        assert!(parity_filter(3, 3));
    }

    #[test]
    fn table_rows() {
        let t = wstar(128);
        let rows = table1(&t, 80).unwrap();
        assert_eq!((rows[2].a, rows[2].b), (3, 4));
        assert_eq!(rows[2].a_fib.to_string(), "100");
        assert_eq!(rows[2].b_fib.to_string(), "101");
        assert_eq!((rows[40].a, rows[40].b), (33, 33));
        assert_eq!(rows[40].a_fib.to_string(), "1010101");
        assert_eq!((rows[79].a, rows[79].b), (59, 67));
        assert_eq!(rows[79].a_fib.to_string(), "100000101");
        assert_eq!(rows[79].b_fib.to_string(), "100010101");
        assert!(matches!(table1(&wstar(20), 80), Err(WythoffError::Uncertified { .. })));
    }

    #[test]
    fn no_pair_on_the_golden_lines() {
        let t = wstar(1000);
        for (a, b) in wythoff_pairs(1000) {
            assert!(!t.is_p(a, b) && !t.is_p(b, a));
        }
    }

    #[test]
    fn terminal_positions() {
        let t = wstar(500);
        for x in 0..=500 {
            assert!(t.is_p(0, x) && t.is_p(x, 0));
        }
    }

    #[test]
    fn diagonal_classes() {
        assert_eq!(DiagonalClass::of(3).prediction(), Prediction::P);
        assert_eq!(DiagonalClass::of(4).prediction(), Prediction::Conflict);
        assert_eq!(DiagonalClass::of(5).prediction(), Prediction::N);
        assert_eq!(DiagonalClass::of(74).prediction(), Prediction::Open);
        let c = DiagonalClass::of(19);
        assert!(!c.s3 && c.s4);
        assert!(DiagonalClass::of(129).s2);
        assert_eq!(DiagonalClass::of(129).prediction(), Prediction::Open);
    }
}
