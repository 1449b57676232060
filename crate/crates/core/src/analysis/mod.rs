//! Hyperbolicity parameters, BFS orderings and cycle fillings.

mod bfs;
mod filling;
mod hyperbolicity;

pub use bfs::{bfs_order, is_distance_preserving, BfsOrder};
pub use filling::{fill_cycle, replay, DiscFilling, Move};
pub use hyperbolicity::{
    hyperbolicity_delta, interval_thinness, max_isometric_grid_side, verify_hyperbolicity_bounds,
    BoundCheck, CheckStatus, HyperbolicityReport, DEFAULT_GRID_CAP, DELTA_LE_LINEAR, KAPPA_LE_DELTA,
    MU_LE_FOUR_DELTA, MU_LE_FOUR_DELTA_PLUS_ONE, NU_LE_TWO_KAPPA_PLUS_MU,
};
