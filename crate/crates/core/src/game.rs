//! Named games and their resolution to move sets.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::beatty::BeattyPair;
use crate::catalog::{self, BlockingRules, CatalogError};
use crate::engine::{EngineError, KMoveSet, MoveSet, Pos, SolveOptions};
use crate::wythoff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("unknown game '{0}'")]
    Unknown(String),
    #[error("bad parameter in '{spec}': {reason}")]
    Parameter { spec: String, reason: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameSpec {
    /// Wythoff Nim.
    Wythoff,
    /// The dual of Wythoff Nim: moves are the Wythoff pairs.
    WStar,
    /// The closed-form Mouse trap.
    MouseTrap,
    /// The game whose moves are the Mouse pairs.
    Mouse,
    /// Base game of the subsided ornament family.
    Subsided(u32),
    /// The ornament game: the dual of a Beatty base game.
    Ornament(BeattyPair),
    /// The base game `{{a_n, b_n}}` of a Beatty pair.
    Beatty(BeattyPair),
    /// Nim on `k` piles.
    Nim(usize),
    /// The dual of Nim on `k` piles.
    NimStar(usize),
    /// Nim moves plus `(i, j)` with `|i - j| < k`.
    KWythoff(u32),
    /// The constrained k-Mouse blocking game.
    ConstrainedMouse(u32),
    /// Moves `(x, x)`.
    Diagonal,
    /// An explicit move list.
    Custom { moves: Vec<Pos>, symmetric: bool },
}

/// A game made concrete on a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolved {
    Planar(MoveSet),
    Piles(KMoveSet),
    Blocking(BlockingRules),
}

fn param<T: FromStr>(spec: &str, text: &str) -> Result<T, GameError> {
    text.parse().map_err(|_| GameError::Parameter {
        spec: spec.to_string(),
        reason: format!("cannot read '{text}' as a number"),
    })
}

/// `p/q:t`
fn parse_pair(spec: &str, text: &str) -> Result<BeattyPair, GameError> {
    let bad = |reason: &str| GameError::Parameter {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    let (frac, t) = text.split_once(':').ok_or_else(|| bad("expected p/q:t"))?;
    let (p, q) = frac.split_once('/').ok_or_else(|| bad("expected p/q:t"))?;
    let (p, q): (i128, i128) = (param(spec, p)?, param(spec, q)?);
    if p < 1 || p >= q || num_integer::gcd(p, q) != 1 {
        return Err(bad("need 0 < p < q with gcd(p, q) = 1"));
    }
    let pair = BeattyPair::from_offset_index(p, q, param(spec, t)?)
        .map_err(|e| bad(&e.to_string()))?;
    if !pair.is_complementary() {
        return Err(bad("the pair is not complementary"));
    }
    Ok(pair)
}

impl FromStr for GameSpec {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let need = || {
            arg.ok_or_else(|| GameError::Parameter {
                spec: s.to_string(),
                reason: "missing parameter".into(),
            })
        };
        let spec = match name {
            "wythoff" => GameSpec::Wythoff,
            "wstar" => GameSpec::WStar,
            "mouse-trap" | "mousetrap" => GameSpec::MouseTrap,
            "mouse" => GameSpec::Mouse,
            "diagonal" => GameSpec::Diagonal,
            "subsided" => GameSpec::Subsided(param(s, need()?)?),
            "ornament" => GameSpec::Ornament(parse_pair(s, need()?)?),
            "beatty" => GameSpec::Beatty(parse_pair(s, need()?)?),
            "nim" => GameSpec::Nim(arg.map_or(Ok(2), |a| param(s, a))?),
            "nimstar" => GameSpec::NimStar(arg.map_or(Ok(2), |a| param(s, a))?),
            "k-wythoff" => GameSpec::KWythoff(param(s, need()?)?),
            "constrained-mouse" => GameSpec::ConstrainedMouse(arg.map_or(Ok(3), |a| param(s, a))?),
            _ => return Err(GameError::Unknown(s.to_string())),
        };
        if !matches!(name, "ornament" | "beatty") && arg.is_some_and(|a| a.contains(':')) {
            return Err(GameError::Parameter {
                spec: s.to_string(),
                reason: "too many parameters".into(),
            });
        }
        Ok(spec)
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pair = |p: &BeattyPair| format!("{}/{}:{}", p.alpha().numer(), p.q(), (p.delta() * p.q()).to_integer());
        match self {
            GameSpec::Wythoff => write!(f, "wythoff"),
            GameSpec::WStar => write!(f, "wstar"),
            GameSpec::MouseTrap => write!(f, "mouse-trap"),
            GameSpec::Mouse => write!(f, "mouse"),
            GameSpec::Subsided(q) => write!(f, "subsided:{q}"),
            GameSpec::Ornament(p) => write!(f, "ornament:{}", pair(p)),
            GameSpec::Beatty(p) => write!(f, "beatty:{}", pair(p)),
            GameSpec::Nim(k) => write!(f, "nim:{k}"),
            GameSpec::NimStar(k) => write!(f, "nimstar:{k}"),
            GameSpec::KWythoff(k) => write!(f, "k-wythoff:{k}"),
            GameSpec::ConstrainedMouse(k) => write!(f, "constrained-mouse:{k}"),
            GameSpec::Diagonal => write!(f, "diagonal"),
            GameSpec::Custom { .. } => write!(f, "custom"),
        }
    }
}

impl GameSpec {
    /// The game's moves, or its rules for the blocking game, on `[0, bound]`.
    pub fn resolve(&self, bound: u32, opts: &SolveOptions) -> Result<Resolved, GameError> {
        let planar = |m: MoveSet| Ok(Resolved::Planar(m));
        match self {
            GameSpec::Wythoff => planar(wythoff::wythoff_moves(bound)),
            GameSpec::WStar => planar(wythoff::wstar_moves(bound)),
            GameSpec::MouseTrap => planar(catalog::mousetrap_moves(bound)),
            GameSpec::Mouse => planar(catalog::mouse_base_moves(bound)),
            GameSpec::Subsided(q) => planar(catalog::subsided_moves(*q, bound)?),
            GameSpec::Ornament(p) => planar(catalog::ornament_game(p, bound, opts)?),
            GameSpec::Beatty(p) => planar(catalog::beatty_moves(p, bound)),
            GameSpec::KWythoff(k) => planar(catalog::k_wythoff_moves(*k, bound)),
            GameSpec::Diagonal => planar(MoveSet::new(bound, (1..=bound).map(|x| (x, x)), false)),
            GameSpec::Custom { moves, symmetric } => planar(MoveSet::new(bound, moves.iter().copied(), *symmetric)),
            GameSpec::Nim(k) => Ok(Resolved::Piles(catalog::nim_moves(*k, bound)?)),
            GameSpec::NimStar(k) => Ok(Resolved::Piles(catalog::nimstar_moves(*k, bound)?)),
            GameSpec::ConstrainedMouse(k) => Ok(Resolved::Blocking(BlockingRules::new(*k)?)),
        }
    }

    /// Planar move set, or an error for pile and blocking games.
    pub fn planar_moves(&self, bound: u32, opts: &SolveOptions) -> Result<MoveSet, GameError> {
        match self.resolve(bound, opts)? {
            Resolved::Planar(m) => Ok(m),
            _ => Err(GameError::Parameter {
                spec: self.to_string(),
                reason: "this command needs a two-coordinate game given by its moves".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("wythoff".parse::<GameSpec>().unwrap(), GameSpec::Wythoff);
        assert_eq!("mousetrap".parse::<GameSpec>().unwrap(), GameSpec::MouseTrap);
        assert_eq!("subsided:3".parse::<GameSpec>().unwrap(), GameSpec::Subsided(3));
        assert_eq!("nim:3".parse::<GameSpec>().unwrap(), GameSpec::Nim(3));
        assert_eq!("nim".parse::<GameSpec>().unwrap(), GameSpec::Nim(2));
        assert!(matches!("bogus".parse::<GameSpec>(), Err(GameError::Unknown(_))));
        assert!("subsided:x".parse::<GameSpec>().is_err());
        assert!("subsided".parse::<GameSpec>().is_err());
        assert!("subsided:3:4".parse::<GameSpec>().is_err());
    }

    #[test]
    fn ornament_round_trip() {
        let g: GameSpec = "ornament:3/4:-1".parse().unwrap();
        assert_eq!(g.to_string(), "ornament:3/4:-1");
        let h: GameSpec = g.to_string().parse().unwrap();
        assert_eq!(g, h);
        assert!("ornament:2/4:0".parse::<GameSpec>().is_err());
    }

    #[test]
    fn ornament_of_mouse_is_trap() {
        let g: GameSpec = "ornament:2/3:0".parse().unwrap();
        let o = SolveOptions::default();
        assert_eq!(g.planar_moves(200, &o).unwrap(), GameSpec::MouseTrap.planar_moves(200, &o).unwrap());
    }
}
