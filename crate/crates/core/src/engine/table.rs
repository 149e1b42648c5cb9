//! Packed-bit P/N tables and the two-dimensional solver.
//!
//! Rows are indexed by the first coordinate and packed 64 positions per
//! word. Every move `(i, j)` with `i > 0` reads a finished row, so row `x`
//! collects its N-mask as the OR of `P-row(x - i) << j` over all moves. Moves
//! `(0, j)` stay inside the row and are resolved by a left-to-right sweep.

use rayon::prelude::*;

use super::moves::{MoveSet, Pos};
use super::{EngineError, SolveOptions};

/// Bits of `src` shifted up by `shift` positions and ORed into `dst`.
#[inline]
pub(crate) fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    if ws >= dst.len() {
        return;
    }
    if bs == 0 {
        for (d, s) in dst[ws..].iter_mut().zip(src) {
            *d |= *s;
        }
    } else {
        dst[ws] |= src[0] << bs;
        for w in ws + 1..dst.len() {
            dst[w] |= (src[w - ws] << bs) | (src[w - ws - 1] >> (64 - bs));
        }
    }
}

/// Solved P/N classification of `[0, bound]²`.
#[derive(Clone, PartialEq, Eq)]
pub struct PnTable {
    bound: u32,
    stride: usize,
    bits: Vec<u64>,
    moves: MoveSet,
}

impl std::fmt::Debug for PnTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PnTable")
            .field("bound", &self.bound)
            .field("p_count", &self.count_p())
            .field("moves", &self.moves.len())
            .finish()
    }
}

impl PnTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn moves(&self) -> &MoveSet {
        &self.moves
    }

    #[inline]
    pub fn is_p(&self, x: u32, y: u32) -> bool {
        assert!(x <= self.bound && y <= self.bound, "({x},{y}) outside window {}", self.bound);
        let (x, y) = (x as usize, y as usize);
        self.bits[x * self.stride + y / 64] >> (y % 64) & 1 == 1
    }

    /// `Some(is_p)` inside the window, `None` outside.
    pub fn get(&self, x: u32, y: u32) -> Option<bool> {
        (x <= self.bound && y <= self.bound).then(|| self.is_p(x, y))
    }

    /// Packed row `x`; bit `y` set iff `(x, y)` is P.
    pub fn row(&self, x: u32) -> &[u64] {
        let x = x as usize;
        &self.bits[x * self.stride..(x + 1) * self.stride]
    }

    pub fn count_p(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All P-positions in lexicographic order.
    pub fn p_positions(&self) -> Vec<Pos> {
        let mut out = Vec::with_capacity(self.count_p());
        for x in 0..=self.bound {
            for (w, &word) in self.row(x).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    out.push((x, (w * 64 + b) as u32));
                    word &= word - 1;
                }
            }
        }
        out
    }

    /// The same table cut down to a smaller window.
    pub fn restrict(&self, bound: u32) -> PnTable {
        let bound = bound.min(self.bound);
        let n = bound as usize + 1;
        let stride = n.div_ceil(64);
        let mut bits = vec![0u64; n * stride];
        for x in 0..n {
            let src = self.row(x as u32);
            bits[x * stride..(x + 1) * stride].copy_from_slice(&src[..stride]);
            bits[(x + 1) * stride - 1] &= last_word_mask(n);
        }
        PnTable {
            bound,
            stride,
            bits,
            moves: self.moves.restrict(bound),
        }
    }
}

fn last_word_mask(n: usize) -> u64 {
    if n % 64 == 0 {
        !0
    } else {
        (1u64 << (n % 64)) - 1
    }
}

/// Moves sharing a first coordinate `i > 0`.
struct Group {
    i: usize,
    js: Vec<usize>,
    /// Bitset of `js`, kept when the group is large enough that iterating
    /// the P-bits of the source row can be cheaper.
    jbits: Option<Vec<u64>>,
}

const JBITS_MIN: usize = 16;
const PAR_WORK: usize = 1 << 16;

/// Bytes the solver will allocate for a window and move count.
pub fn estimate_bytes(bound: u32, moves: usize) -> u64 {
    let n = bound as u64 + 1;
    let stride = n.div_ceil(64);
    // table + N-mask + zero-column + move groups (worst case every group has a bitset)
    n * stride * 8 + 2 * stride * 8 + moves as u64 * 16 + (moves as u64).min(n) * stride * 8
}

pub fn solve(moves: &MoveSet, bound: u32) -> Result<PnTable, EngineError> {
    solve_with(moves, bound, &SolveOptions::default())
}

/// P/N table of the game with `moves` on `[0, bound]²`.
pub fn solve_with(moves: &MoveSet, bound: u32, opts: &SolveOptions) -> Result<PnTable, EngineError> {
    let moves = moves.restrict(bound);
    let estimate = estimate_bytes(bound, moves.len());
    if estimate > opts.mem_limit {
        return Err(EngineError::MemoryCeiling {
            estimate,
            limit: opts.mem_limit,
        });
    }
    let n = bound as usize + 1;
    let stride = n.div_ceil(64);

    let mut zero_col = vec![0u64; stride];
    let mut has_zero_col = false;
    let mut groups: Vec<Group> = Vec::new();
    for (i, j) in moves.iter() {
        let (i, j) = (i as usize, j as usize);
        if i == 0 {
            zero_col[j / 64] |= 1 << (j % 64);
            has_zero_col = true;
            continue;
        }
        match groups.last_mut() {
            Some(g) if g.i == i => g.js.push(j),
            _ => groups.push(Group {
                i,
                js: vec![j],
                jbits: None,
            }),
        }
    }
    for g in groups.iter_mut().filter(|g| g.js.len() >= JBITS_MIN) {
        let mut b = vec![0u64; stride];
        for &j in &g.js {
            b[j / 64] |= 1 << (j % 64);
        }
        g.jbits = Some(b);
    }

    let mut bits = vec![0u64; n * stride];
    let mut row_pop = vec![0u32; n];
    let mut nmask = vec![0u64; stride];
    let last = last_word_mask(n);
    for x in 0..n {
        let active = &groups[..groups.partition_point(|g| g.i <= x)];
        nmask.fill(0);
        let work = active.len() * stride;
        if opts.parallel && work >= PAR_WORK && active.len() >= 64 {
            let chunk = active.len().div_ceil(rayon::current_num_threads() * 4).max(16);
            let partial = active
                .par_chunks(chunk)
                .map(|gs| {
                    let mut m = vec![0u64; stride];
                    accumulate(&mut m, gs, &bits, &row_pop, x, stride);
                    m
                })
                .reduce(
                    || vec![0u64; stride],
                    |mut a, b| {
                        a.iter_mut().zip(&b).for_each(|(a, b)| *a |= b);
                        a
                    },
                );
            nmask.copy_from_slice(&partial);
        } else {
            accumulate(&mut nmask, active, &bits, &row_pop, x, stride);
        }

        let row = &mut bits[x * stride..(x + 1) * stride];
        if !has_zero_col {
            for (r, m) in row.iter_mut().zip(&nmask) {
                *r = !m;
            }
        } else {
            let mut y = 0usize;
            while y < n {
                let w = y / 64;
                let free = !nmask[w] & (!0u64 << (y % 64));
                if free == 0 {
                    y = (w + 1) * 64;
                    continue;
                }
                let b = w * 64 + free.trailing_zeros() as usize;
                if b >= n {
                    break;
                }
                row[w] |= 1 << (b % 64);
                or_shifted(&mut nmask, &zero_col, b);
                y = b + 1;
            }
        }
        row[stride - 1] &= last;
        row_pop[x] = row.iter().map(|w| w.count_ones()).sum();
    }
    Ok(PnTable {
        bound,
        stride,
        bits,
        moves,
    })
}

fn accumulate(nmask: &mut [u64], groups: &[Group], bits: &[u64], row_pop: &[u32], x: usize, stride: usize) {
    for (k, g) in groups.iter().enumerate() {
        let src_x = x - g.i;
        let pop = row_pop[src_x] as usize;
        if pop == 0 {
            continue;
        }
        let src = &bits[src_x * stride..(src_x + 1) * stride];
        match &g.jbits {
            Some(jb) if pop < g.js.len() => {
                for (w, &word) in src.iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let b = word.trailing_zeros() as usize;
                        or_shifted(nmask, jb, w * 64 + b);
                        word &= word - 1;
                    }
                }
            }
            _ => {
                for &j in &g.js {
                    or_shifted(nmask, src, j);
                }
            }
        }
        if k % 32 == 31 && nmask.iter().all(|&w| w == !0) {
            return;
        }
    }
}

/// Whether some move fits inside `p`, i.e. `p` is not terminal.
pub fn has_option(moves: &MoveSet, p: Pos) -> bool {
    moves.prefix(p.0).iter().any(|&(_, j)| j <= p.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(bound: u32, f: impl Fn(u32, u32) -> bool) -> Vec<Pos> {
        let mut out = Vec::new();
        for x in 0..=bound {
            for y in 0..=bound {
                if f(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    #[test]
    fn shifted_or() {
        let mut d = vec![0u64; 3];
        or_shifted(&mut d, &[1, 0, 1 << 63], 65);
        assert_eq!(d, vec![0, 2, 0]);
        let mut d = vec![0u64; 2];
        or_shifted(&mut d, &[1 << 63, 0], 1);
        assert_eq!(d, vec![0, 1]);
        let mut d = vec![0u64; 2];
        or_shifted(&mut d, &[1, 0], 200);
        assert_eq!(d, vec![0, 0]);
    }

    #[test]
    fn diagonal_game() {
        let m = MoveSet::new(10, (1..=10).map(|x| (x, x)), false);
        let t = solve(&m, 10).unwrap();
        assert_eq!(t.p_positions(), set(10, |x, y| x.min(y) == 0));
    }

    #[test]
    fn two_pile_nim() {
        let m = MoveSet::new(10, (1..=10).map(|x| (0, x)), true);
        let t = solve(&m, 10).unwrap();
        assert_eq!(t.p_positions(), set(10, |x, y| x == y));
    }

    #[test]
    fn wythoff_start() {
        let m = MoveSet::new(20, (1..=20).flat_map(|x| [(0, x), (x, 0), (x, x)]), false);
        let t = solve(&m, 20).unwrap();
        let upper: Vec<Pos> = t.p_positions().into_iter().filter(|&(x, y)| x < y).collect();
        assert_eq!(&upper[..4], &[(1, 2), (3, 5), (4, 7), (6, 10)]);
        assert!(t.is_p(0, 0));
    }

    #[test]
    fn large_groups_use_bitsets() {
        // every column holds many moves so the bitset path runs
        let m = MoveSet::new(200, (1..=200).flat_map(|x| (0..=200).filter(move |y| (x + y) % 3 == 0).map(move |y| (x, y))), false);
        let t = solve(&m, 200).unwrap();
        let serial = solve_with(&m, 200, &SolveOptions { parallel: false, ..Default::default() }).unwrap();
        assert_eq!(t, serial);
        // brute check of the recursion
        for x in 0..=200u32 {
            for y in 0..=200u32 {
                let has_p_option = m.iter().any(|(i, j)| i <= x && j <= y && t.is_p(x - i, y - j));
                assert_eq!(t.is_p(x, y), !has_p_option, "({x},{y})");
            }
        }
    }

    #[test]
    fn memory_ceiling() {
        let m = MoveSet::empty(100_000);
        let opts = SolveOptions {
            mem_limit: 1 << 20,
            ..Default::default()
        };
        assert!(matches!(solve_with(&m, 100_000, &opts), Err(EngineError::MemoryCeiling { .. })));
    }

    #[test]
    fn restrict_matches_direct_solve() {
        let m = MoveSet::new(90, (1..=90).flat_map(|x| [(0, x), (x, 0), (x, x)]), false);
        let big = solve(&m, 90).unwrap();
        for b in [0, 1, 17, 63, 64, 65, 89] {
            assert_eq!(big.restrict(b), solve(&m, b).unwrap(), "bound {b}");
        }
    }

    #[test]
    fn terminal_detection() {
        let m = MoveSet::new(10, [(1, 2), (2, 1)], false);
        assert!(!has_option(&m, (1, 1)));
        assert!(has_option(&m, (1, 2)));
        assert!(has_option(&m, (3, 1)));
        assert!(!has_option(&m, (0, 9)));
    }
}
