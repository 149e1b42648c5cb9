//! The star operator, its iteration and the limit of even iterates.

use super::moves::MoveSet;
use super::table::{solve_with, PnTable};
use super::{EngineError, SolveOptions};

/// Moves of the starred game: the nonzero P-positions of `table`.
pub fn star(table: &PnTable) -> MoveSet {
    MoveSet::new(table.bound(), table.p_positions(), false)
}

/// `k` rounds of solve-then-star on the move set's own window.
pub fn iterate_star(moves: &MoveSet, k: usize, opts: &SolveOptions) -> Result<MoveSet, EngineError> {
    let mut cur = moves.clone();
    for _ in 0..k {
        cur = star(&solve_with(&cur, cur.bound(), opts)?);
    }
    Ok(cur)
}

/// Smallest column on which two move sets differ, if any.
pub fn first_diff_column(a: &MoveSet, b: &MoveSet) -> Option<u32> {
    let (a, b) = (a.as_slice(), b.as_slice());
    for i in 0..a.len().max(b.len()) {
        match (a.get(i), b.get(i)) {
            (Some(p), Some(q)) if p == q => continue,
            (Some(p), Some(q)) => return Some(p.0.min(q.0)),
            (Some(p), None) | (None, Some(p)) => return Some(p.0),
            (None, None) => unreachable!(),
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixStatus {
    /// Columns `<= n` agree for every even iterate from this index on.
    Stable(usize),
    /// The iterates keep changing on these columns.
    Unsettled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitReport {
    pub bound: u32,
    /// Number of double-star steps computed.
    pub steps: usize,
    /// `(start, period)` once an iterate repeats an earlier one. On a window
    /// the sequence is deterministic, so a repeat settles every prefix.
    pub cycle: Option<(usize, usize)>,
    /// Status of each column prefix `0..=bound`.
    pub prefixes: Vec<PrefixStatus>,
}

impl LimitReport {
    /// Every prefix has settled and the sequence provably repeats.
    pub fn converged(&self) -> bool {
        self.cycle.is_some() && self.prefixes.iter().all(|s| matches!(s, PrefixStatus::Stable(_)))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.prefixes
            .iter()
            .map(|s| match s {
                PrefixStatus::Stable(k) => Some(*k),
                PrefixStatus::Unsettled => None,
            })
            .try_fold(0, |m, k| k.map(|k| m.max(k)))
    }
}

/// Iterates `G, G**, G****, ...` on the window and reports, per column
/// prefix, the index from which the iterates agree.
pub fn limit_game(moves: &MoveSet, max_iter: usize, opts: &SolveOptions) -> Result<(MoveSet, LimitReport), EngineError> {
    let mut history = vec![moves.clone()];
    let mut cycle = None;
    for _ in 0..max_iter {
        let next = iterate_star(history.last().unwrap(), 2, opts)?;
        if let Some(j) = history.iter().position(|h| *h == next) {
            cycle = Some((j, history.len() - j));
            break;
        }
        history.push(next);
    }
    let steps = history.len() - 1 + usize::from(cycle.is_some());
    // d[i]: first column where iterate i and its successor differ
    let mut diffs: Vec<Option<u32>> = history.windows(2).map(|w| first_diff_column(&w[0], &w[1])).collect();
    if let Some((j, _)) = cycle {
        diffs.push(first_diff_column(history.last().unwrap(), &history[j]));
    }
    let cycle_start = cycle.map(|(j, _)| j);
    let bound = moves.bound();
    let prefixes = (0..=bound)
        .map(|n| {
            let last_change = diffs.iter().rposition(|d| d.is_some_and(|c| c <= n));
            match (last_change, cycle_start) {
                (None, _) => PrefixStatus::Stable(0),
                (Some(i), Some(j)) if i >= j => PrefixStatus::Unsettled,
                (Some(i), Some(_)) => PrefixStatus::Stable(i + 1),
                // no repeat seen: only agreement up to the last iterate is known
                (Some(i), None) if i + 1 < diffs.len() => PrefixStatus::Stable(i + 1),
                (Some(_), None) => PrefixStatus::Unsettled,
            }
        })
        .collect();
    let report = LimitReport {
        bound,
        steps,
        cycle,
        prefixes,
    };
    Ok((history.pop().unwrap(), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::solve;

    fn diagonal_plus(bound: u32) -> MoveSet {
        MoveSet::new(bound, (1..=bound).map(|i| (i, i)).chain([(1, 2)]), false)
    }

    #[test]
    fn star_of_nim_is_diagonal() {
        let nim = MoveSet::new(10, (1..=10).map(|x| (0, x)), true);
        let s = star(&solve(&nim, 10).unwrap());
        assert_eq!(s, MoveSet::new(10, (1..=10).map(|x| (x, x)), false));
    }

    #[test]
    fn star_of_trivial_table_is_empty() {
        // every nonzero position reaches 0 in one move
        let all = MoveSet::new(5, (0..=5).flat_map(|x| (0..=5).map(move |y| (x, y))), false);
        assert!(star(&solve(&all, 5).unwrap()).is_empty());
    }

    #[test]
    fn zero_iterations_is_identity() {
        let m = diagonal_plus(30);
        assert_eq!(iterate_star(&m, 0, &SolveOptions::default()).unwrap(), m);
    }

    #[test]
    fn double_star_drops_the_extra_move() {
        let got = iterate_star(&diagonal_plus(30), 2, &SolveOptions::default()).unwrap();
        assert_eq!(got, MoveSet::new(30, (1..=30).map(|i| (i, i)), false));
    }

    #[test]
    fn limit_of_diagonal_plus() {
        let (h, r) = limit_game(&diagonal_plus(30), 30, &SolveOptions::default()).unwrap();
        assert_eq!(h, MoveSet::new(30, (1..=30).map(|i| (i, i)), false));
        assert!(r.converged());
        assert_eq!(r.cycle, Some((1, 1)));
        // column 0 holds no move in either game
        assert_eq!(r.prefixes[0], PrefixStatus::Stable(0));
        assert!(r.prefixes[1..].iter().all(|s| *s == PrefixStatus::Stable(1)));
    }

    #[test]
    fn diff_column() {
        let a = MoveSet::new(9, [(1, 1), (2, 5), (4, 4)], false);
        let b = MoveSet::new(9, [(1, 1), (3, 5), (4, 4)], false);
        assert_eq!(first_diff_column(&a, &b), Some(2));
        assert_eq!(first_diff_column(&a, &a), None);
        let c = MoveSet::new(9, [(1, 1), (2, 5)], false);
        assert_eq!(first_diff_column(&a, &c), Some(4));
    }
}
