use std::fmt;

/// A board position or move vector in two dimensions.
pub type Pos = (u32, u32);

/// A finite move set, sorted lexicographically and duplicate-free, holding
/// every move whose coordinates are all at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveSet {
    bound: u32,
    moves: Vec<Pos>,
}

impl MoveSet {
    /// Collects moves, dropping the zero vector and anything outside the
    /// window. With `symmetric` set each `(x, y)` also contributes `(y, x)`.
    pub fn new(bound: u32, moves: impl IntoIterator<Item = Pos>, symmetric: bool) -> Self {
        let mut out = Vec::new();
        for (x, y) in moves {
            if (x, y) == (0, 0) || x > bound || y > bound {
                continue;
            }
            out.push((x, y));
            if symmetric && x != y {
                out.push((y, x));
            }
        }
        out.sort_unstable();
        out.dedup();
        MoveSet { bound, moves: out }
    }

    pub fn empty(bound: u32) -> Self {
        MoveSet {
            bound,
            moves: Vec::new(),
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn as_slice(&self) -> &[Pos] {
        &self.moves
    }

    pub fn iter(&self) -> impl Iterator<Item = Pos> + '_ {
        self.moves.iter().copied()
    }

    pub fn contains(&self, m: Pos) -> bool {
        self.moves.binary_search(&m).is_ok()
    }

    /// The moves valid inside a smaller window.
    pub fn restrict(&self, bound: u32) -> MoveSet {
        MoveSet::new(bound.min(self.bound), self.iter(), false)
    }

    /// Moves in columns `x <= n`.
    pub fn prefix(&self, n: u32) -> &[Pos] {
        let end = self.moves.partition_point(|&(x, _)| x <= n);
        &self.moves[..end]
    }

    pub fn union(&self, other: &MoveSet) -> MoveSet {
        MoveSet::new(
            self.bound.min(other.bound),
            self.iter().chain(other.iter()),
            false,
        )
    }
}

impl fmt::Display for MoveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.moves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "}}")
    }
}

/// Moves on `k` piles, each a `k`-vector, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KMoveSet {
    dim: usize,
    bounds: Vec<u32>,
    moves: Vec<Vec<u32>>,
}

impl KMoveSet {
    /// Drops zero vectors, vectors of the wrong length and vectors outside
    /// `bounds`.
    pub fn new(bounds: Vec<u32>, moves: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let dim = bounds.len();
        let mut out: Vec<Vec<u32>> = moves
            .into_iter()
            .filter(|m| {
                m.len() == dim && m.iter().any(|&c| c != 0) && m.iter().zip(&bounds).all(|(c, b)| c <= b)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        KMoveSet {
            dim,
            bounds,
            moves: out,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.moves.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.moves.binary_search_by(|v| v.as_slice().cmp(m)).is_ok()
    }
}

impl From<&MoveSet> for KMoveSet {
    fn from(m: &MoveSet) -> Self {
        KMoveSet::new(vec![m.bound(); 2], m.iter().map(|(x, y)| vec![x, y]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_input() {
        let m = MoveSet::new(5, [(2, 1), (0, 0), (1, 2), (6, 1), (2, 1), (3, 3)], false);
        assert_eq!(m.as_slice(), &[(1, 2), (2, 1), (3, 3)]);
        let s = MoveSet::new(5, [(1, 2), (3, 3)], true);
        assert_eq!(s.as_slice(), &[(1, 2), (2, 1), (3, 3)]);
        assert_eq!(s.prefix(1), &[(1, 2)]);
        assert_eq!(s.prefix(0), &[] as &[Pos]);
        assert_eq!(s.restrict(2).as_slice(), &[(1, 2), (2, 1)]);
    }

    #[test]
    fn k_moves_filter() {
        let m = KMoveSet::new(vec![4, 4, 4], vec![vec![0, 0, 0], vec![1, 2, 3], vec![5, 0, 0], vec![1, 2]]);
        assert_eq!(m.len(), 1);
        assert!(m.contains(&[1, 2, 3]));
    }
}
