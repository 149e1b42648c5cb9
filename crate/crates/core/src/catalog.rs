//! Games with closed-form answers: the Mouse trap, the subsided ornament
//! games, Nim and its dual, and the constrained k-Mouse.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::beatty::BeattyPair;
use crate::engine::{solve_kd, solve_with, star, star_kd, EngineError, KMoveSet, MoveSet, Pos, SolveOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("parameter out of range: {0}")]
    Parameter(String),
}

/// `(⌊3i/2⌋, 3i - 1)`, the `i`-th P-pair of the Mouse game.
pub fn mouse_pair(i: u32) -> Pos {
    assert!(i >= 1);
    (3 * i / 2, 3 * i - 1)
}

fn mouse_a(i: u32) -> u32 {
    mouse_pair(i).0
}

/// P-positions of the Mouse game on the window: every pair, its mirror, and 0.
pub fn mouse_p_set(bound: u32) -> BTreeSet<Pos> {
    let mut out = BTreeSet::from([(0, 0)]);
    for i in 1.. {
        let (a, b) = mouse_pair(i);
        if a > bound {
            break;
        }
        if b <= bound {
            out.insert((a, b));
            out.insert((b, a));
        }
    }
    out
}

/// The base game whose moves are the Mouse pairs, `{{a_i, b_i}}`.
pub fn mouse_base_moves(bound: u32) -> MoveSet {
    MoveSet::new(bound, (1..=bound).map(mouse_pair), true)
}

/// The five move families of the Mouse trap, closed form.
///
/// The odd-index family runs over `n <= m <= 2n - 1`. Stopping at
/// `m < 2n - 1` drops the moves `(3n - 2, 6n - 5)`, starting with `(7, 13)`,
/// and the game then has P-positions outside the Mouse set; see
/// [`mousetrap_moves_short`].
pub fn mousetrap_moves(bound: u32) -> MoveSet {
    trap_moves(bound, 0)
}

/// The trap moves with the odd-index family cut at `m < 2n - 1`.
pub fn mousetrap_moves_short(bound: u32) -> MoveSet {
    trap_moves(bound, 1)
}

fn trap_moves(bound: u32, odd_cut: u32) -> MoveSet {
    let mut m: Vec<Pos> = vec![(1, 1), (3, 3), (3, 4), (4, 4), (4, 7), (6, 6), (6, 7), (6, 10)];
    // a_{2n} = 3n and a_{2n-1} = 3n - 2, so index ranges stop once a > bound
    let top = bound / 3 + 2;
    for n in 3..=top {
        for mm in n..(2 * n - odd_cut) {
            m.push((mouse_a(2 * n - 1), mouse_a(2 * mm - 1)));
        }
        for mm in n..(2 * n - 2) {
            m.push((mouse_a(2 * n), mouse_a(2 * mm)));
        }
        m.push((mouse_a(2 * n), mouse_a(4 * n - 1)));
        m.push((mouse_a(2 * n), mouse_a(4 * n - 3)));
    }
    m.extend((1..=bound).map(|x| (0, x)));
    MoveSet::new(bound, m, true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetComparison {
    pub bound: u32,
    /// Solver P-positions missing from the expected set.
    pub unexpected: Vec<Pos>,
    /// Expected positions the solver marks N.
    pub missing: Vec<Pos>,
}

impl SetComparison {
    pub fn new(bound: u32, got: &[Pos], expected: &BTreeSet<Pos>) -> Self {
        let got_set: BTreeSet<Pos> = got.iter().copied().collect();
        SetComparison {
            bound,
            unexpected: got_set.difference(expected).copied().collect(),
            missing: expected.difference(&got_set).copied().collect(),
        }
    }

    pub fn matches(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

pub fn verify_mousetrap(bound: u32, opts: &SolveOptions) -> Result<SetComparison, CatalogError> {
    let t = solve_with(&mousetrap_moves(bound), bound, opts)?;
    Ok(SetComparison::new(bound, &t.p_positions(), &mouse_p_set(bound)))
}

/// Whether starring the Mouse base game reproduces the closed-form trap moves.
pub fn mousetrap_is_dual(bound: u32, opts: &SolveOptions) -> Result<bool, CatalogError> {
    let dual = star(&solve_with(&mouse_base_moves(bound), bound, opts)?);
    Ok(dual == mousetrap_moves(bound))
}

fn check_q(q: u32) -> Result<(), CatalogError> {
    if q < 2 {
        return Err(CatalogError::Parameter(format!("q must be at least 2, got {q}")));
    }
    Ok(())
}

/// `{{⌊(qn - 1)/(q - 1)⌋, qn}}`.
pub fn subsided_moves(q: u32, bound: u32) -> Result<MoveSet, CatalogError> {
    check_q(q)?;
    let pairs = (1..=bound / q).map(|n| ((q * n - 1) / (q - 1), q * n));
    Ok(MoveSet::new(bound, pairs, true))
}

/// The `(q-1)×(q-1)` blocks `(qn + s, qn + t)`, the axes and 0.
pub fn subsided_expected_p(q: u32, bound: u32) -> Result<BTreeSet<Pos>, CatalogError> {
    check_q(q)?;
    let mut out = BTreeSet::new();
    for x in 0..=bound {
        out.insert((0, x));
        out.insert((x, 0));
    }
    for n in 0..=bound / q {
        for s in 1..q {
            for t in 1..q {
                let p = (q * n + s, q * n + t);
                if p.0 <= bound && p.1 <= bound {
                    out.insert(p);
                }
            }
        }
    }
    Ok(out)
}

pub fn verify_subsided(q: u32, bound: u32, opts: &SolveOptions) -> Result<SetComparison, CatalogError> {
    let t = solve_with(&subsided_moves(q, bound)?, bound, opts)?;
    Ok(SetComparison::new(bound, &t.p_positions(), &subsided_expected_p(q, bound)?))
}

/// Moves `{{a_n, b_n}}` of the base game of a Beatty pair.
pub fn beatty_moves(pair: &BeattyPair, bound: u32) -> MoveSet {
    let b = bound as i128;
    let mut out = Vec::new();
    for n in 1.. {
        let (x, y) = (pair.term(true, n), pair.term(false, n));
        if x > b && y > b {
            break;
        }
        if x >= 0 && y >= 0 && x <= b && y <= b {
            out.push((x as u32, y as u32));
        }
    }
    MoveSet::new(bound, out, true)
}

/// Moves of the ornament game of a complementary pair, obtained by starring
/// its base game.
pub fn ornament_game(pair: &BeattyPair, bound: u32, opts: &SolveOptions) -> Result<MoveSet, CatalogError> {
    if !pair.is_complementary() {
        return Err(CatalogError::Parameter(format!("pair is not complementary: {pair}")));
    }
    Ok(star(&solve_with(&beatty_moves(pair, bound), bound, opts)?))
}

fn check_piles(k: usize) -> Result<(), CatalogError> {
    if !(1..=crate::engine::MAX_KD_DIM).contains(&k) {
        return Err(CatalogError::Parameter(format!("pile count must be 1..=4, got {k}")));
    }
    Ok(())
}

fn all_tuples(k: usize, bound: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (bound as usize + 1).pow(k as u32);
    (0..total).map(move |mut i| {
        let mut v = vec![0u32; k];
        for c in v.iter_mut().rev() {
            *c = (i % (bound as usize + 1)) as u32;
            i /= bound as usize + 1;
        }
        v
    })
}

/// Tuples with exactly one nonzero pile.
pub fn nim_moves(k: usize, bound: u32) -> Result<KMoveSet, CatalogError> {
    check_piles(k)?;
    let moves = (0..k).flat_map(|a| {
        (1..=bound).map(move |x| {
            let mut m = vec![0; k];
            m[a] = x;
            m
        })
    });
    Ok(KMoveSet::new(vec![bound; k], moves))
}

/// Nonzero tuples with Nim-sum zero.
pub fn nimstar_moves(k: usize, bound: u32) -> Result<KMoveSet, CatalogError> {
    check_piles(k)?;
    let moves = all_tuples(k, bound).filter(|v| v.iter().fold(0, |s, &x| s ^ x) == 0);
    Ok(KMoveSet::new(vec![bound; k], moves))
}

/// A Nim-dual move leaving at most one nonempty pile, or `None` when at most
/// one pile is nonempty already.
///
/// With Nim-sum `X` of the position: if `X = 0` the whole position is a move.
/// Otherwise a pile `j` holding the leading bit of `X` keeps
/// `x_j - (X ⊕ x_j)` tokens while every other pile is emptied; the removed
/// vector has Nim-sum `(X ⊕ x_j) ⊕ (X ⊕ x_j) = 0`.
pub fn nimstar_winning_move(position: &[u32]) -> Option<Vec<u32>> {
    if position.iter().filter(|&&x| x > 0).count() < 2 {
        return None;
    }
    let x = position.iter().fold(0, |s, &v| s ^ v);
    if x == 0 {
        return Some(position.to_vec());
    }
    let lead = 1 << (31 - x.leading_zeros());
    let j = position.iter().position(|&v| v & lead != 0).expect("some pile carries the leading bit");
    let mut m = position.to_vec();
    m[j] = x ^ position[j];
    Some(m)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NimDualityReport {
    pub piles: usize,
    pub bound: u32,
    /// Positions where the dual's P-status disagrees with "at most one nonempty pile".
    pub p_mismatches: Vec<Vec<u32>>,
    /// Whether starring the dual recovers Nim's moves.
    pub double_dual_is_nim: bool,
    /// Positions where the winning-move construction failed.
    pub bad_winning_moves: Vec<Vec<u32>>,
    pub positions: usize,
}

impl NimDualityReport {
    pub fn holds(&self) -> bool {
        self.p_mismatches.is_empty() && self.double_dual_is_nim && self.bad_winning_moves.is_empty()
    }
}

pub fn verify_nim_duality(k: usize, bound: u32) -> Result<NimDualityReport, CatalogError> {
    let dual = nimstar_moves(k, bound)?;
    let t = solve_kd(&dual, &vec![bound; k])?;
    let mut rep = NimDualityReport {
        piles: k,
        bound,
        double_dual_is_nim: star_kd(&t) == nim_moves(k, bound)?,
        ..Default::default()
    };
    for pos in all_tuples(k, bound) {
        rep.positions += 1;
        let nonempty = pos.iter().filter(|&&x| x > 0).count();
        if t.is_p(&pos) != (nonempty <= 1) {
            rep.p_mismatches.push(pos.clone());
        }
        let ok = match nimstar_winning_move(&pos) {
            None => nonempty <= 1,
            Some(m) => {
                dual.contains(&m)
                    && m.iter().zip(&pos).all(|(a, b)| a <= b)
                    && m.iter().zip(&pos).filter(|(a, b)| b > a).count() <= 1
            }
        };
        if !ok {
            rep.bad_winning_moves.push(pos);
        }
    }
    Ok(rep)
}

/// Rules of the constrained k-Mouse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockingRules {
    pub k: u32,
    /// Nonzero positions the mover may block; `k - 2` in the game proper.
    pub allowance: usize,
    /// Whether 0 may be blocked on top of the allowance when it is reached
    /// by a blockable move.
    pub block_zero: bool,
}

impl BlockingRules {
    pub fn new(k: u32) -> Result<Self, CatalogError> {
        if k < 3 {
            return Err(CatalogError::Parameter(format!("k must be at least 3, got {k}")));
        }
        Ok(BlockingRules {
            k,
            allowance: k as usize - 2,
            block_zero: true,
        })
    }
}

/// Moves of k-Wythoff Nim: Nim moves and `(i, j)` with `i, j > 0`, `|i - j| < k`.
pub fn k_wythoff_moves(k: u32, bound: u32) -> MoveSet {
    let mut m = Vec::new();
    for i in 1..=bound {
        m.push((i, 0));
        m.push((0, i));
        let lo = i.saturating_sub(k - 1).max(1);
        let hi = (i + k - 1).min(bound);
        m.extend((lo..=hi).map(|j| (i, j)));
    }
    MoveSet::new(bound, m, false)
}

/// The secured P-set of the constrained k-Mouse on `[0, bound]²`.
///
/// A position is secured when the player who just moved there can block
/// every secured option: all of them must be reached by blockable moves
/// (both coordinates positive and `0 < |i - j| < k`), and apart from a free
/// block on 0 there may be at most `allowance` of them.
pub fn constrained_mouse_solve(rules: &BlockingRules, bound: u32) -> Vec<Pos> {
    let k = rules.k as i64;
    let mut secured: Vec<Pos> = Vec::new();
    for x in 0..=bound {
        for y in 0..=bound {
            let mut blocks = 0usize;
            let mut ok = true;
            for &(px, py) in &secured {
                if px > x || py > y {
                    continue;
                }
                let (i, j) = ((x - px) as i64, (y - py) as i64);
                let nim = (i == 0) != (j == 0);
                let diag = i > 0 && j > 0 && (i - j).abs() < k;
                if !nim && !diag {
                    continue;
                }
                if nim || i == j {
                    ok = false;
                    break;
                }
                if (px, py) == (0, 0) && rules.block_zero {
                    continue;
                }
                blocks += 1;
                if blocks > rules.allowance {
                    ok = false;
                    break;
                }
            }
            if ok {
                secured.push((x, y));
            }
        }
    }
    secured
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::solve;

    #[test]
    fn mouse_pairs() {
        assert_eq!(mouse_pair(1), (1, 2));
        assert_eq!(mouse_pair(3), (4, 8));
        assert_eq!(mouse_pair(4), (6, 11));
    }

    #[test]
    fn trap_move_families() {
        let m = mousetrap_moves(40);
        for p in [(1, 1), (6, 10), (10, 6), (9, 16), (16, 9), (9, 13), (7, 7), (0, 5), (5, 0)] {
            assert!(m.contains(p), "{p:?}");
        }
    }

    #[test]
    fn short_odd_family_breaks_the_trap() {
        let short = mousetrap_moves_short(60);
        assert!(!short.contains((7, 13)));
        assert!(mousetrap_moves(60).contains((7, 13)));
        let t = solve(&short, 60).unwrap();
        assert!(t.is_p(7, 13));
        assert!(!mouse_p_set(60).contains(&(7, 13)));
    }

    #[test]
    fn trap_small_window() {
        let t = solve(&mousetrap_moves(12), 12).unwrap();
        let upper: Vec<Pos> = t.p_positions().into_iter().filter(|&(x, y)| x < y).collect();
        assert_eq!(upper, vec![(1, 2), (3, 5), (4, 8), (6, 11)]);
        assert!(t.is_p(0, 0));
        assert!((1..=12).all(|x| !t.is_p(0, x)));
    }

    #[test]
    fn subsided_examples() {
        let m = subsided_moves(2, 20).unwrap();
        assert!(m.contains((1, 2)) && m.contains((2, 1)) && m.contains((19, 20)));
        let m3 = subsided_moves(3, 20).unwrap();
        assert!(m3.contains((1, 3)) && m3.contains((2, 6)) && m3.contains((6, 2)));
        let e = subsided_expected_p(3, 20).unwrap();
        for p in [(4, 4), (4, 5), (5, 4), (5, 5)] {
            assert!(e.contains(&p));
        }
        assert!(subsided_moves(1, 10).is_err());
    }

    #[test]
    fn subsided_q2_is_odd_diagonal() {
        let e = subsided_expected_p(2, 30).unwrap();
        let inner: Vec<Pos> = e.iter().copied().filter(|&(x, y)| x > 0 && y > 0).collect();
        assert_eq!(inner, (0..15).map(|n| (2 * n + 1, 2 * n + 1)).collect::<Vec<_>>());
    }

    #[test]
    fn nim_dual_moves() {
        let m = nimstar_moves(2, 10).unwrap();
        assert_eq!(m.len(), 10);
        assert!((1..=10).all(|x| m.contains(&[x, x])));
        let m3 = nimstar_moves(3, 4).unwrap();
        assert!(m3.contains(&[1, 2, 3]));
        assert!(!m3.contains(&[1, 1, 1]));
    }

    #[test]
    fn winning_moves() {
        assert_eq!(nimstar_winning_move(&[1, 2, 3]), Some(vec![1, 2, 3]));
        assert_eq!(nimstar_winning_move(&[1, 2, 2]), Some(vec![0, 2, 2]));
        assert_eq!(nimstar_winning_move(&[0, 0, 5]), None);
        assert_eq!(nimstar_winning_move(&[7, 0, 0, 0]), None);
    }

    #[test]
    fn blocking_basics() {
        let rules = BlockingRules::new(3).unwrap();
        let p = constrained_mouse_solve(&rules, 12);
        assert!(p.contains(&(0, 0)));
        assert!(p.contains(&(1, 2)));
        assert!(!p.contains(&(1, 1)));
        assert!(BlockingRules::new(2).is_err());
    }

    #[test]
    fn no_blocking_is_k_wythoff() {
        let rules = BlockingRules {
            k: 3,
            allowance: 0,
            block_zero: false,
        };
        let got = constrained_mouse_solve(&rules, 40);
        let want = solve(&k_wythoff_moves(3, 40), 40).unwrap().p_positions();
        assert_eq!(got, want);
    }

    #[test]
    fn beatty_base_moves() {
        let pair = BeattyPair::from_offset_index(2, 3, 0).unwrap();
        assert_eq!(beatty_moves(&pair, 30), mouse_base_moves(30));
    }
}
