//! Φ: ℍ^d → E^d, x ↦ (‖x − c₁‖², …, ‖x − c_d‖²) for centers on the base
//! hyperplane x_d = 0.
//!
//! Every quantity is a rational function of (base, height²), so points of the
//! half-space are stored by their squared height and no root is taken.
//! Spheres around the basis centers become the axis hyperplanes wᵢ = ρ and
//! spheres around an extra center q become hyperplanes orthogonal to a
//! direction u ∈ 𝒰(q).

mod config;
mod ivan;
mod phi;
mod transform;

pub use config::{CenterConfig, HPoint, RadiiVector};
pub use ivan::{
    center_of_direction, directions_from_centers, dual_directions, in_u_space, ivan_coefficients,
    ivan_residual, ivan_residual_h, normalize_direction, sphere_image_basis, sphere_image_extra,
    u_space, DualDirection,
};
pub use phi::{phi, phi_inverse, phi_inverse_closed, solve_radii};
pub use transform::basis_change;
