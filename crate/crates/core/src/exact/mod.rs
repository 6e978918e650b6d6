//! Exact linear algebra over ℚ.

pub mod affine;
pub mod matrix;
pub mod position;
pub mod rational;
pub mod vector;

pub use affine::{affine_span, AffineSubspace, Flat, Hyperplane};
pub use matrix::{LinearSolution, QMatrix};
pub use position::{
    is_general_position_points, is_general_position_vectors, is_well_placed, IncrementalPosition,
    WellPlaced,
};
pub use rational::Rational;
pub use vector::QVector;
