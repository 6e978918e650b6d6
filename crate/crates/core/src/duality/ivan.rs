use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::config::{on_base, CenterConfig, HPoint};
use crate::error::{Error, Result};
use crate::exact::position::vectors_violation;
use crate::exact::rational::{self, Rational};
use crate::exact::{Hyperplane, QMatrix, QVector};

/// A dependency u of the basis centers seen from an extra center q, with
/// the coefficients that make
/// Σ uᵢ‖x − pᵢ‖² + b‖x − q‖² + c = 0 hold identically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualDirection {
    pub u: QVector,
    #[serde(with = "rational")]
    pub b: Rational,
    #[serde(with = "rational")]
    pub c: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_index: Option<usize>,
}

fn u_matrix(cfg: &CenterConfig, q: &QVector) -> Result<QMatrix> {
    let q = on_base(cfg.d(), q.clone())?.truncate_last();
    let cols: Vec<QVector> = cfg.feet().iter().map(|p| p - &q).collect();
    QMatrix::from_columns(&cols)
}

/// 𝒰(q) = {u : Σ uᵢ(pᵢ − q) = 0}, as the reduced-echelon null space basis
/// with each leading coordinate scaled to 1.
pub fn u_space(cfg: &CenterConfig, q: &QVector) -> Result<Vec<QVector>> {
    Ok(u_matrix(cfg, q)?
        .null_space()
        .iter()
        .map(QVector::normalized_leading)
        .collect())
}

pub fn in_u_space(cfg: &CenterConfig, q: &QVector, u: &QVector) -> Result<bool> {
    if u.dim() != cfg.d() {
        return Err(Error::DimensionMismatch {
            expected: cfg.d(),
            got: u.dim(),
        });
    }
    Ok(u_matrix(cfg, q)?.mul_vec(u).is_zero())
}

/// b = −Σuᵢ and c = −Σuᵢ(‖pᵢ‖² − ‖q‖²).
pub fn ivan_coefficients(cfg: &CenterConfig, q: &QVector, u: &QVector) -> Result<DualDirection> {
    if u.is_zero() || !in_u_space(cfg, q, u)? {
        return Err(Error::NotInUSpace);
    }
    let q_sq = on_base(cfg.d(), q.clone())?.norm_sq();
    let b = -u.sum();
    let c = -cfg
        .feet()
        .iter()
        .zip(u.coords())
        .fold(rational::zero(), |acc, (p, ui)| {
            acc + ui * (p.norm_sq() - &q_sq)
        });
    Ok(DualDirection {
        u: u.clone(),
        b,
        c,
        extra_index: None,
    })
}

/// Left side of the Ivan identity at a point of the base space ℚ^{d−1}.
pub fn ivan_residual(cfg: &CenterConfig, q: &QVector, dd: &DualDirection, x: &QVector) -> Rational {
    let q = q.coords()[..cfg.d() - 1].to_vec();
    let q = QVector::new(q);
    let s = cfg
        .feet()
        .iter()
        .zip(dd.u.coords())
        .fold(rational::zero(), |acc, (p, ui)| acc + ui * x.dist_sq(p));
    s + &dd.b * x.dist_sq(&q) + &dd.c
}

/// Same identity at a point of the upper half-space.
pub fn ivan_residual_h(
    cfg: &CenterConfig,
    q: &QVector,
    dd: &DualDirection,
    x: &HPoint,
) -> Rational {
    let q = on_base(cfg.d(), q.clone()).expect("center on the base hyperplane");
    let s = cfg
        .basis_centers()
        .iter()
        .zip(dd.u.coords())
        .fold(rational::zero(), |acc, (c, ui)| {
            acc + ui * x.dist_sq_to_base_point(c)
        });
    s + &dd.b * x.dist_sq_to_base_point(&q) + &dd.c
}

/// H_i(ρ) = {w : wᵢ = ρ}, the image of the sphere of quadrance ρ around the
/// i-th basis center (0-based).
pub fn sphere_image_basis(cfg: &CenterConfig, i: usize, rho: &Rational) -> Result<Hyperplane> {
    if i >= cfg.d() {
        return Err(Error::Invalid(format!("basis index {i} out of range")));
    }
    if !rho.is_positive() {
        return Err(Error::Invalid("quadrance must be positive".into()));
    }
    Ok(Hyperplane::axis(cfg.d(), i, rho.clone()))
}

/// L(u, k) = {r : u·r + b·k + c = 0}, the image of the sphere of quadrance k
/// around extra center j.
pub fn sphere_image_extra(
    cfg: &CenterConfig,
    j: usize,
    dd: &DualDirection,
    k: &Rational,
) -> Result<Hyperplane> {
    let q = cfg
        .extra_centers()
        .get(j)
        .ok_or_else(|| Error::Invalid(format!("extra index {j} out of range")))?;
    if !k.is_positive() {
        return Err(Error::Invalid("quadrance must be positive".into()));
    }
    let check = ivan_coefficients(cfg, q, &dd.u)?;
    if check.b != dd.b || check.c != dd.c {
        return Err(Error::Invalid(
            "b and c do not match u for this center".into(),
        ));
    }
    Hyperplane::new(dd.u.clone(), -(&dd.b * k + &dd.c))
}

/// Rescales to coordinate sum 1, or first nonzero coordinate 1 when the
/// sum vanishes.
pub fn normalize_direction(u: &QVector) -> QVector {
    let s = u.sum();
    if s.is_zero() {
        u.normalized_leading()
    } else {
        u.scale(&s.recip())
    }
}

/// The point q = Σuᵢpᵢ / Σuᵢ of the base hyperplane with u ∈ 𝒰(q).
pub fn center_of_direction(cfg: &CenterConfig, u: &QVector) -> Result<QVector> {
    let s = u.sum();
    if s.is_zero() {
        return Err(Error::DirectionWithoutCenter);
    }
    let mut acc = QVector::zeros(cfg.d() - 1);
    for (p, ui) in cfg.feet().iter().zip(u.coords()) {
        acc = acc.add_scaled(ui, p);
    }
    Ok(acc.scale(&s.recip()).extended(rational::zero()))
}

/// e₁..e_d for the basis centers followed by one normalized uⱼ ∈ 𝒰(cⱼ) per
/// extra center; the whole list is certified to be in general position.
pub fn directions_from_centers(cfg: &CenterConfig) -> Result<Vec<QVector>> {
    let d = cfg.d();
    let all: Vec<QVector> = cfg
        .basis_centers()
        .iter()
        .chain(cfg.extra_centers())
        .map(QVector::truncate_last)
        .collect();
    let well_placed =
        crate::exact::position::points_violation(&all, &crate::exact::AffineSubspace::full(d - 1))?;
    if well_placed.is_some() {
        return Err(Error::CentersNotWellPlaced);
    }
    let mut dirs: Vec<QVector> = (0..d).map(|i| QVector::basis(d, i)).collect();
    for q in cfg.extra_centers() {
        let basis = u_space(cfg, q)?;
        if basis.len() != 1 {
            return Err(Error::GeneralPositionCertificateFailed);
        }
        dirs.push(normalize_direction(&basis[0]));
    }
    if vectors_violation(&dirs, d)?.is_some() {
        return Err(Error::GeneralPositionCertificateFailed);
    }
    Ok(dirs)
}

/// Dual directions with coefficients for every extra center.
pub fn dual_directions(cfg: &CenterConfig) -> Result<Vec<DualDirection>> {
    let dirs = directions_from_centers(cfg)?;
    cfg.extra_centers()
        .iter()
        .zip(&dirs[cfg.d()..])
        .enumerate()
        .map(|(j, (q, u))| {
            let mut dd = ivan_coefficients(cfg, q, u)?;
            dd.extra_index = Some(j);
            Ok(dd)
        })
        .collect()
}
