use num_traits::{Signed, Zero};

use super::kernel::{cut_along_normal, intersect_pair};
use super::Sphere;
use crate::error::{Error, Result};
use crate::exact::position::points_violation;
use crate::exact::rational::Rational;
use crate::exact::{affine_span, AffineSubspace, Flat, QVector};

fn common_ambient(spheres: &[Sphere]) -> Result<&AffineSubspace> {
    let first = spheres.first().ok_or(Error::EmptyInput)?;
    if spheres.iter().any(|s| !s.ambient.same_set(&first.ambient)) {
        return Err(Error::AmbientMismatch);
    }
    Ok(&first.ambient)
}

fn check_centers(centers: &[QVector], ambient: &AffineSubspace) -> Result<()> {
    match points_violation(centers, ambient)? {
        Some(_) => Err(Error::CentersNotGeneralPosition),
        None => Ok(()),
    }
}

/// Intersection of k ≤ d spheres with centers in general position.
///
/// The last two spheres are replaced by their intersection inside the
/// radical hyperplane H, and the remaining spheres by their sections with H;
/// projection keeps the centers in general position, so this repeats until
/// one sphere is left, living in a flat of dimension d − (k − 1). The first
/// empty stage is returned as is.
pub fn intersect_chain(spheres: &[Sphere]) -> Result<Sphere> {
    let ambient = common_ambient(spheres)?;
    if spheres.len() > ambient.dim() {
        return Err(Error::TooManySpheres {
            spheres: spheres.len(),
            dim: ambient.dim(),
        });
    }
    let centers: Vec<QVector> = spheres.iter().map(|s| s.center.clone()).collect();
    check_centers(&centers, ambient)?;
    if let Some(empty) = spheres.iter().find(|s| s.quadrance.is_negative()) {
        return Ok(empty.clone());
    }
    let mut stage: Vec<Sphere> = spheres.to_vec();
    while stage.len() > 1 {
        let b = stage.pop().expect("len > 1");
        let a = stage.pop().expect("len > 1");
        let (h, joined) = intersect_pair(&a, &b)?;
        if joined.quadrance.is_negative() {
            return Ok(joined);
        }
        let nsq = h.normal().norm_sq();
        let mut next = Vec::with_capacity(stage.len() + 1);
        for s in &stage {
            let cut = cut_along_normal(s, h.normal(), h.offset(), &nsq, &joined.ambient);
            if cut.quadrance.is_negative() {
                return Ok(cut);
            }
            next.push(cut);
        }
        next.push(joined);
        stage = next;
    }
    Ok(stage.pop().expect("one sphere left"))
}

/// A sphere centered at `extra_center` (in the span K of the chain centers)
/// that contains the whole chain intersection. Its quadrance is
/// ‖extra_center − c‖² + q for the chain result (c, q); the chain flat is
/// orthogonal to K, so every chain point has exactly that squared distance.
/// When the chain is empty the containment is vacuous.
pub fn enclose_from_dependent_center(spheres: &[Sphere], extra_center: &QVector) -> Result<Sphere> {
    let ambient = common_ambient(spheres)?;
    let centers: Vec<QVector> = spheres.iter().map(|s| s.center.clone()).collect();
    let span = affine_span(&centers)?;
    if extra_center.dim() != span.ambient_dim() || !span.contains(extra_center) {
        return Err(Error::CenterNotInSpan);
    }
    let chain = intersect_chain(spheres)?;
    let q = extra_center.dist_sq(&chain.center) + &chain.quadrance;
    Sphere::new(ambient.clone(), extra_center.clone(), q)
}

/// Quadrances q₁..q_{k−1} that, together with `seed` for the last center,
/// make the chain intersection a nondegenerate sphere of dimension
/// d − (k − 1) ≥ 2.
///
/// Each step picks q_{k−1} = q_k + ‖c_{k−1} − c_k‖², which puts the pair's
/// intersection at c_k with quadrance q_k, then recurses on the projected
/// centers and lifts their quadrances back by the squared projection distance.
pub fn make_nondegenerate_chain(centers: &[QVector], seed: &Rational) -> Result<Vec<Rational>> {
    let first = centers.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    if centers.len() >= d {
        return Err(Error::TooManyCenters {
            centers: centers.len(),
            dim: d,
        });
    }
    if !seed.is_positive() {
        return Err(Error::Invalid("seed quadrance must be positive".into()));
    }
    check_centers(centers, &AffineSubspace::full(d))?;
    Ok(chain_quadrances(centers, seed))
}

fn chain_quadrances(centers: &[QVector], seed: &Rational) -> Vec<Rational> {
    let k = centers.len();
    if k == 1 {
        return Vec::new();
    }
    let a = &centers[k - 2];
    let b = &centers[k - 1];
    let n = b - a;
    let nsq = n.norm_sq();
    let offset = n.dot(b);
    let mut projected = Vec::with_capacity(k - 1);
    let mut lifts = Vec::with_capacity(k - 2);
    for c in &centers[..k - 2] {
        let gap = n.dot(c) - &offset;
        projected.push(c.add_scaled(&-(&gap / &nsq), &n));
        lifts.push(&gap * &gap / &nsq);
    }
    projected.push(b.clone());
    let mut out: Vec<Rational> = chain_quadrances(&projected, seed)
        .into_iter()
        .zip(lifts)
        .map(|(q, h)| q + h)
        .collect();
    out.push(seed + nsq);
    debug_assert!(out.iter().all(|q| !q.is_zero()));
    out
}
