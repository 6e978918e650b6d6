use num_traits::Signed;

use super::config::{CenterConfig, HPoint, RadiiVector};
use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::exact::QVector;

/// Φ(x) = (‖x − c₁‖², …, ‖x − c_d‖²).
pub fn phi(cfg: &CenterConfig, x: &HPoint) -> Result<RadiiVector> {
    if x.base().dim() != cfg.d() - 1 {
        return Err(Error::DimensionMismatch {
            expected: cfg.d() - 1,
            got: x.base().dim(),
        });
    }
    Ok(RadiiVector(QVector::new(
        cfg.feet()
            .iter()
            .map(|p| x.base().dist_sq(p) + x.height_sq())
            .collect(),
    )))
}

/// Solves for the base point and the squared height without any root:
/// the differences rᵢ − r₁ are linear in the base, and the height follows
/// from r₁. Does not check the sign of the height.
pub fn solve_radii(cfg: &CenterConfig, r: &RadiiVector) -> Result<(QVector, Rational)> {
    let r = r.r();
    if r.dim() != cfg.d() {
        return Err(Error::DimensionMismatch {
            expected: cfg.d(),
            got: r.dim(),
        });
    }
    let feet = cfg.feet();
    let p1_sq = feet[0].norm_sq();
    // −2(pᵢ − p₁)·b = rᵢ − r₁ − ‖pᵢ‖² + ‖p₁‖²
    let rhs = QVector::new(
        (1..cfg.d())
            .map(|i| &r[i] - &r[0] - feet[i].norm_sq() + &p1_sq)
            .collect(),
    );
    let base = cfg.diff_inverse().mul_vec(&rhs);
    let height_sq = &r[0] - base.dist_sq(&feet[0]);
    Ok((base, height_sq))
}

/// Φ⁻¹ on E^d; `NotInE` when the vector has no preimage in the open
/// upper half-space.
pub fn phi_inverse(cfg: &CenterConfig, r: &RadiiVector) -> Result<HPoint> {
    if r.r().coords().iter().any(|c| !c.is_positive()) {
        return Err(Error::NotInE);
    }
    let (base, height_sq) = solve_radii(cfg, r)?;
    if !height_sq.is_positive() {
        return Err(Error::NotInE);
    }
    HPoint::new(base, height_sq)
}

/// Φ⁻¹ extended to the closure: also accepts images of base-hyperplane
/// points (height 0).
pub fn phi_inverse_closed(cfg: &CenterConfig, r: &RadiiVector) -> Result<(QVector, Rational)> {
    let (base, height_sq) = solve_radii(cfg, r)?;
    if height_sq.is_negative() {
        return Err(Error::NotInE);
    }
    Ok((base, height_sq))
}
