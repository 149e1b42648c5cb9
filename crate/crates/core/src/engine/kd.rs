//! The solver for `k` piles.
//!
//! Positions are visited in lexicographic order. Each P-position pushes the
//! N-mark forward along every move, which only needs the P-positions found
//! so far.

use super::moves::KMoveSet;
use super::{EngineError, MAX_KD_AXIS, MAX_KD_DIM};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTable {
    bounds: Vec<u32>,
    strides: Vec<usize>,
    p: Vec<u64>,
}

impl KTable {
    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    fn index(&self, pos: &[u32]) -> usize {
        pos.iter().zip(&self.strides).map(|(&c, &s)| c as usize * s).sum()
    }

    pub fn is_p(&self, pos: &[u32]) -> bool {
        assert_eq!(pos.len(), self.dim());
        assert!(pos.iter().zip(&self.bounds).all(|(c, b)| c <= b), "{pos:?} outside window");
        let i = self.index(pos);
        self.p[i / 64] >> (i % 64) & 1 == 1
    }

    /// All P-positions in lexicographic order.
    pub fn p_positions(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut pos = vec![0u32; self.dim()];
        loop {
            if self.is_p(&pos) {
                out.push(pos.clone());
            }
            if !advance(&mut pos, &self.bounds) {
                return out;
            }
        }
    }

    pub fn count_p(&self) -> usize {
        self.p.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Next position in lexicographic order (last axis fastest).
fn advance(pos: &mut [u32], bounds: &[u32]) -> bool {
    for a in (0..pos.len()).rev() {
        if pos[a] < bounds[a] {
            pos[a] += 1;
            return true;
        }
        pos[a] = 0;
    }
    false
}

pub fn solve_kd(moves: &KMoveSet, bounds: &[u32]) -> Result<KTable, EngineError> {
    let k = bounds.len();
    if k == 0 || k > MAX_KD_DIM {
        return Err(EngineError::DimensionCeiling { dim: k, max: MAX_KD_DIM });
    }
    if let Some((axis, &bound)) = bounds.iter().enumerate().find(|(_, &b)| b > MAX_KD_AXIS) {
        return Err(EngineError::BoundCeiling {
            axis,
            bound,
            max: MAX_KD_AXIS,
        });
    }
    if moves.dim() != k {
        return Err(EngineError::DimensionCeiling { dim: moves.dim(), max: k });
    }
    let mut strides = vec![1usize; k];
    for a in (0..k - 1).rev() {
        strides[a] = strides[a + 1] * (bounds[a + 1] as usize + 1);
    }
    let total = strides[0] * (bounds[0] as usize + 1);
    let words = total.div_ceil(64);
    let mut n = vec![0u64; words];
    let mut p = vec![0u64; words];

    let ms: Vec<(&[u32], usize)> = moves
        .iter()
        .filter(|m| m.iter().zip(bounds).all(|(c, b)| c <= b))
        .map(|m| (m, m.iter().zip(&strides).map(|(&c, &s)| c as usize * s).sum()))
        .collect();

    let mut pos = vec![0u32; k];
    let mut idx = 0usize;
    loop {
        if n[idx / 64] >> (idx % 64) & 1 == 0 {
            p[idx / 64] |= 1 << (idx % 64);
            for &(m, off) in &ms {
                if pos.iter().zip(m).zip(bounds).all(|((&c, &d), &b)| c + d <= b) {
                    let t = idx + off;
                    n[t / 64] |= 1 << (t % 64);
                }
            }
        }
        if !advance(&mut pos, bounds) {
            break;
        }
        idx += 1;
    }
    Ok(KTable {
        bounds: bounds.to_vec(),
        strides,
        p,
    })
}

/// Moves of the starred game: the nonzero P-positions.
pub fn star_kd(table: &KTable) -> KMoveSet {
    KMoveSet::new(table.bounds.clone(), table.p_positions())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nim(k: usize, b: u32) -> KMoveSet {
        let mut all = Vec::new();
        for a in 0..k {
            for x in 1..=b {
                let mut m = vec![0; k];
                m[a] = x;
                all.push(m);
            }
        }
        KMoveSet::new(vec![b; k], all)
    }

    #[test]
    fn single_pile() {
        let t = solve_kd(&KMoveSet::new(vec![10], (1..=10).map(|x| vec![x])), &[10]).unwrap();
        assert_eq!(t.p_positions(), vec![vec![0]]);
    }

    #[test]
    fn three_pile_nim() {
        let t = solve_kd(&nim(3, 8), &[8, 8, 8]).unwrap();
        let ps = t.p_positions();
        assert!(ps.iter().all(|v| v[0] ^ v[1] ^ v[2] == 0));
        let expected = (0..=8u32)
            .flat_map(|a| (0..=8u32).map(move |b| (a, b)))
            .filter(|&(a, b)| a ^ b <= 8)
            .count();
        assert_eq!(ps.len(), expected);
    }

    #[test]
    fn two_d_agrees_with_row_solver() {
        use crate::engine::{solve, MoveSet};
        let m = MoveSet::new(30, (1..=30).flat_map(|x| [(0, x), (x, 0), (x, x), (x, 2 * x)]), false);
        let t2 = solve(&m, 30).unwrap();
        let tk = solve_kd(&KMoveSet::from(&m), &[30, 30]).unwrap();
        let a: Vec<Vec<u32>> = t2.p_positions().into_iter().map(|(x, y)| vec![x, y]).collect();
        assert_eq!(a, tk.p_positions());
    }

    #[test]
    fn ceilings() {
        assert!(matches!(
            solve_kd(&KMoveSet::new(vec![2; 5], []), &[2; 5]),
            Err(EngineError::DimensionCeiling { .. })
        ));
        assert!(matches!(
            solve_kd(&KMoveSet::new(vec![65], []), &[65]),
            Err(EngineError::BoundCeiling { .. })
        ));
    }
}
