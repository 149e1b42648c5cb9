//! P/N solving, the star operator and window predicates.

pub mod kd;
pub mod moves;
pub mod periodicity;
pub mod predicates;
pub mod star;
pub mod table;

pub use kd::{solve_kd, star_kd, KTable};
pub use moves::{KMoveSet, MoveSet, Pos};
pub use periodicity::{detect_periodicity, PeriodicityReport};
pub use predicates::{is_involution_game, is_permutation_game, WindowCheck, Witness};
pub use star::{iterate_star, limit_game, star, LimitReport, PrefixStatus};
pub use table::{has_option, solve, solve_with, PnTable};

use thiserror::Error;

pub const DEFAULT_MEM_LIMIT: u64 = 2 << 30;
pub const MAX_KD_DIM: usize = 4;
pub const MAX_KD_AXIS: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("solving needs about {estimate} bytes, above the limit of {limit} bytes")]
    MemoryCeiling { estimate: u64, limit: u64 },
    #[error("dimension {dim} exceeds the maximum of {max}")]
    DimensionCeiling { dim: usize, max: usize },
    #[error("bound {bound} on axis {axis} exceeds the maximum of {max}")]
    BoundCeiling { axis: usize, bound: u32, max: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub mem_limit: u64,
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mem_limit: DEFAULT_MEM_LIMIT,
            parallel: true,
        }
    }
}
