//! Permutation and involution checks on a finite window.

use std::fmt;

use super::moves::{MoveSet, Pos};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// A move with a zero coordinate.
    AxisMove(Pos),
    /// Two moves in the same column `x`.
    SharedRow(Pos, Pos),
    /// Two moves with the same second coordinate.
    SharedColumn(Pos, Pos),
    /// A move whose mirror image is missing.
    Asymmetric(Pos),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::AxisMove((x, y)) => write!(f, "move ({x},{y}) lies on an axis"),
            Witness::SharedRow(a, b) | Witness::SharedColumn(a, b) => {
                write!(f, "moves ({},{}) and ({},{}) share a line", a.0, a.1, b.0, b.1)
            }
            Witness::Asymmetric((x, y)) => write!(f, "move ({x},{y}) has no mirror ({y},{x})"),
        }
    }
}

/// Existence of a move in every row can't be settled on a window, so a
/// passing check reports how many lines still lack one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowCheck {
    HoldsOnWindow { rows_missing: usize, cols_missing: usize },
    Violated(Witness),
}

impl WindowCheck {
    pub fn holds(&self) -> bool {
        matches!(self, WindowCheck::HoldsOnWindow { .. })
    }
}

pub fn is_permutation_game(moves: &MoveSet, bound: u32) -> WindowCheck {
    let n = bound as usize + 1;
    let mut by_x: Vec<Option<Pos>> = vec![None; n];
    let mut by_y: Vec<Option<Pos>> = vec![None; n];
    for m @ (x, y) in moves.iter().filter(|&(x, y)| x <= bound && y <= bound) {
        if x == 0 || y == 0 {
            return WindowCheck::Violated(Witness::AxisMove(m));
        }
        if let Some(o) = by_x[x as usize] {
            return WindowCheck::Violated(Witness::SharedRow(o, m));
        }
        if let Some(o) = by_y[y as usize] {
            return WindowCheck::Violated(Witness::SharedColumn(o, m));
        }
        by_x[x as usize] = Some(m);
        by_y[y as usize] = Some(m);
    }
    WindowCheck::HoldsOnWindow {
        rows_missing: by_x[1..].iter().filter(|m| m.is_none()).count(),
        cols_missing: by_y[1..].iter().filter(|m| m.is_none()).count(),
    }
}

pub fn is_involution_game(moves: &MoveSet, bound: u32) -> WindowCheck {
    let check = is_permutation_game(moves, bound);
    if !check.holds() {
        return check;
    }
    moves
        .iter()
        .filter(|&(x, y)| x <= bound && y <= bound)
        .find(|&(x, y)| !moves.contains((y, x)))
        .map_or(check, |m| WindowCheck::Violated(Witness::Asymmetric(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_by_construction() {
        let sigma: Vec<u32> = (1..=40).map(|i| (i * 7) % 41).collect();
        let m = MoveSet::new(40, sigma.iter().enumerate().map(|(i, &s)| (i as u32 + 1, s)), false);
        assert_eq!(
            is_permutation_game(&m, 40),
            WindowCheck::HoldsOnWindow {
                rows_missing: 0,
                cols_missing: 0
            }
        );
    }

    #[test]
    fn nim_has_axis_moves() {
        let m = MoveSet::new(10, (1..=10).map(|x| (0, x)), true);
        assert!(matches!(is_permutation_game(&m, 10), WindowCheck::Violated(Witness::AxisMove(_))));
    }

    #[test]
    fn involution_needs_symmetry() {
        let m = MoveSet::new(10, [(1, 2)], false);
        assert!(is_permutation_game(&m, 10).holds());
        assert_eq!(is_involution_game(&m, 10), WindowCheck::Violated(Witness::Asymmetric((1, 2))));
        let d = MoveSet::new(10, (1..=10).map(|i| (i, i)), false);
        assert!(is_involution_game(&d, 10).holds());
    }

    #[test]
    fn shared_lines() {
        let m = MoveSet::new(10, [(1, 2), (1, 3)], false);
        assert!(matches!(is_permutation_game(&m, 10), WindowCheck::Violated(Witness::SharedRow(..))));
        let m = MoveSet::new(10, [(1, 3), (2, 3)], false);
        assert!(matches!(is_permutation_game(&m, 10), WindowCheck::Violated(Witness::SharedColumn(..))));
    }
}
