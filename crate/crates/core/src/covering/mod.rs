//! Covers by sets that meet hyperplanes (or spheres) in few points, and the
//! structured sets Z whose translates escape them.
//!
//! Everything here is finite and exact: multiplicities are counted by
//! grouping points on the exact offset u·p or quadrance ‖p − c‖².

mod assignment;
mod difference;
mod drizzle;
mod escape;
mod project;
mod pullback;
mod verify;
mod zset;

pub use assignment::{LiftedPoint, PointAssignment, Side, SprayPoint};
pub use difference::{difference_avoiding_set, is_difference_avoiding, nonzero_differences};
pub use drizzle::{drizzle_index_bound, greedy_drizzle_assign, moment_point, DirectionStream};
pub use escape::{capacity_cover, escape_search, witness_is_valid, EscapeOutcome, Grid};
pub use project::{project_assignment, ProjectedAssignment};
pub use pullback::{pullback_drizzle_cover, quadrance_for_offset, SprayCover};
pub use verify::{verify_hyperplane_cover, verify_spray_cover, CoverKind, CoverReport, PartReport};
pub use zset::{
    base_sizes, escape_zset, z_set_base, z_set_inductive, z_set_line, z_set_linear, ZNode, ZSet,
};
