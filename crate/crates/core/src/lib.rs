//! Exact-arithmetic geometry of sprays in ℚ^d.
//!
//! * [`exact`]: rationals, vectors, matrices, flats, general position.
//! * [`sphere`]: sphere/hyperplane and sphere/sphere intersections, chains,
//!   enclosing spheres, infinite-intersection witnesses, mesh.
//! * [`duality`]: the map Φ from the upper half-space to squared-distance
//!   coordinates, and how it turns spheres into hyperplanes.
//! * [`covering`]: greedy drizzle covers, difference-avoiding sets, Z-sets,
//!   escape search and exact cover audits.
//! * [`cli`]: JSON front end behind the `spraylab` binary.
//! * [`fixtures`]: the worked examples and their golden files.

pub mod cli;
pub mod covering;
pub mod duality;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod sample;
pub mod sphere;

pub use error::{Error, Result};
