//! Arithmetic-progression structure in a P-set.
//!
//! A vector `v` covers a point `p` when `p + n·v` stays in the set for every
//! `n` that keeps it inside the window. The set is periodic with fold `k`
//! when `k` vectors cover every core point (both coordinates at least the
//! threshold and at most half the window). Candidates come from differences
//! between each core point and its nearby lexicographic successors.

use std::collections::{BTreeMap, HashSet};

use super::moves::Pos;

const SUCCESSORS: usize = 256;
pub const DEFAULT_MAX_FOLD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityReport {
    /// Vectors of a full cover, empty when no cover within the fold limit exists.
    pub vectors: Vec<Pos>,
    /// Greedy cover found, with the number of core points each vector added.
    pub cover: Vec<(Pos, usize)>,
    pub core: usize,
    pub uncovered: usize,
}

impl PeriodicityReport {
    pub fn is_periodic(&self) -> bool {
        !self.vectors.is_empty()
    }

    pub fn fold(&self) -> usize {
        self.vectors.len()
    }
}

fn covers(set: &HashSet<Pos>, p: Pos, v: Pos, window: u32) -> bool {
    let (mut x, mut y) = (p.0 + v.0, p.1 + v.1);
    while x <= window && y <= window {
        if !set.contains(&(x, y)) {
            return false;
        }
        x += v.0;
        y += v.1;
    }
    true
}

pub fn detect_periodicity(pset: &[Pos], window: u32, threshold: u32) -> PeriodicityReport {
    detect_periodicity_with(pset, window, threshold, DEFAULT_MAX_FOLD)
}

pub fn detect_periodicity_with(pset: &[Pos], window: u32, threshold: u32, max_fold: usize) -> PeriodicityReport {
    let mut sorted: Vec<Pos> = pset.iter().copied().filter(|&(x, y)| x <= window && y <= window).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let set: HashSet<Pos> = sorted.iter().copied().collect();
    let half = window / 2;
    let reach = (window / 4).max(1);

    let core: Vec<usize> = (0..sorted.len())
        .filter(|&i| {
            let (x, y) = sorted[i];
            x >= threshold && y >= threshold && x <= half && y <= half
        })
        .collect();

    // vector -> core points it covers
    let mut cands: BTreeMap<Pos, Vec<usize>> = BTreeMap::new();
    for (ci, &i) in core.iter().enumerate() {
        let p = sorted[i];
        for &q in sorted[i + 1..].iter().take_while(|q| q.0 <= p.0 + reach).take(SUCCESSORS) {
            if q.0 > p.0 && q.1 > p.1 && q.1 - p.1 <= reach {
                let v = (q.0 - p.0, q.1 - p.1);
                if covers(&set, p, v, window) {
                    cands.entry(v).or_default().push(ci);
                }
            }
        }
    }

    let mut covered = vec![false; core.len()];
    let mut left = core.len();
    let mut cover = Vec::new();
    while left > 0 && cover.len() < max_fold {
        let best = cands
            .iter()
            .map(|(&v, pts)| (pts.iter().filter(|&&c| !covered[c]).count(), v))
            .filter(|&(gain, _)| gain > 0)
            .max_by(|a, b| {
                let na = a.1 .0 as u64 * a.1 .0 as u64 + a.1 .1 as u64 * a.1 .1 as u64;
                let nb = b.1 .0 as u64 * b.1 .0 as u64 + b.1 .1 as u64 * b.1 .1 as u64;
                a.0.cmp(&b.0).then(nb.cmp(&na)).then(b.1.cmp(&a.1))
            });
        let Some((gain, v)) = best else { break };
        for &c in &cands[&v] {
            covered[c] = true;
        }
        left -= gain;
        cover.push((v, gain));
    }
    let vectors = if left == 0 && !core.is_empty() {
        cover.iter().map(|&(v, _)| v).collect()
    } else {
        Vec::new()
    };
    PeriodicityReport {
        vectors,
        cover,
        core: core.len(),
        uncovered: left,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_progression() {
        let ps: Vec<Pos> = (1..=100).map(|i| (2 * i, 3 * i)).collect();
        let r = detect_periodicity(&ps, 300, 1);
        assert_eq!(r.vectors, vec![(2, 3)]);
    }

    #[test]
    fn two_fold_mirror() {
        let ps: Vec<Pos> = (1..=100).flat_map(|i| [(i, 2 * i), (2 * i, i)]).collect();
        let r = detect_periodicity(&ps, 200, 1);
        assert_eq!(r.fold(), 2);
        assert!(r.vectors.contains(&(1, 2)) && r.vectors.contains(&(2, 1)));
    }

    #[test]
    fn irregular_set_is_not_periodic() {
        let ps: Vec<Pos> = (1..60u32).map(|i| (i * i / 3 + i, i * i / 2 + 2 * i)).collect();
        let r = detect_periodicity(&ps, 2000, 1);
        assert!(!r.is_periodic());
        assert!(r.uncovered > 0);
    }
}
